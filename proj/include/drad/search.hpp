#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drad/group.hpp"
#include "drad/subset.hpp"

namespace drad {

/// One inverse pair {g, g^-1} outside H with low < high by index. A DRAD
/// set contains exactly one element of every such pair.
struct InversePair {
  ElementIndex low, high;
  friend bool operator==(const InversePair&, const InversePair&) = default;
};

/// (|G| - |H|)/2 pairs, ascending by the smaller index. Throws
/// InvolutionOutsideH when some g = g^-1 lies outside H, and BadSubgroup
/// when H is not a normal subgroup of order sqrt|G|.
std::vector<InversePair> inverse_pairs(const GroupTable& g, const SubsetBits& h);

struct SearchOptions {
  std::optional<std::size_t> limit;
  /// Per-coset running count never exceeds h/2 and can still reach it.
  bool prune_balance = true;
  /// Partial difference counts never exceed lambda.
  bool prune_lambda = true;
  unsigned threads = 1;
  /// Wall-clock budget in seconds; the search stops and reports
  /// complete = false when it runs out.
  std::optional<double> time_budget;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t balance_prunes = 0;
  std::uint64_t lambda_prunes = 0;
  std::uint64_t witnesses = 0;
  double elapsed_seconds = 0;
  bool complete = true;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchResult {
  /// Sorted; each D passes is_drad.
  std::vector<SubsetBits> witnesses;
  SearchStats stats;
};

/// Exhaustive backtracking over the inverse-pair choices. Pairs are grouped
/// by coset (in cosets() order) so the balance prune fires early. Without a
/// limit the result is the full set of DRAD difference sets for (G, H); the
/// output never depends on the thread count.
SearchResult search_drad(const GroupTable& g, const SubsetBits& h, const SearchOptions& opts = {});

enum class CensusSource { Witness, NoCandidateH, ExhaustedSearch, BudgetExceeded };
std::string to_string(CensusSource s);

struct CensusTarget {
  SubsetBits h;
  SearchResult result;
};

struct CensusEntry {
  std::string group;
  std::vector<CensusTarget> targets;  // one per candidate H
  CensusSource source = CensusSource::NoCandidateH;

  bool has_witness() const { return source == CensusSource::Witness; }
};

/// Runs candidate_subgroups() and search_drad() over every group.
std::vector<CensusEntry> census(const std::vector<GroupTable>& groups, const SearchOptions& opts = {});

}  // namespace drad
