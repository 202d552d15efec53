#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drad/characters.hpp"
#include "drad/gf2.hpp"
#include "drad/group.hpp"
#include "drad/search.hpp"
#include "drad/subset.hpp"

namespace drad {

enum class CertKind { InvolutionIndex, CharacterField, ParityInfeasible, BoolRingUnit, ExhaustedSearch, NoCandidateH };
std::string_view to_string(CertKind k);
std::optional<CertKind> parse_cert_kind(std::string_view s);

/// A character as it is written into certificates.
struct CharacterImages {
  std::uint32_t n = 1;
  std::vector<std::pair<std::string, std::uint32_t>> images;
  friend bool operator==(const CharacterImages&, const CharacterImages&) = default;
};

/// Where one parity row comes from, plus the row itself. Character rows are
/// one power-basis coordinate of sum eps_g chi(g) = (h/2) i reduced mod 2;
/// coset rows say |D ∩ Hc| = h/2 mod 2.
struct ParityRow {
  enum class Source { Character, Coset };
  Source source = Source::Coset;
  CharacterImages character;   // Character rows
  std::uint32_t coordinate = 0;
  ElementIndex coset_rep = 0;  // Coset rows: smallest element of the coset
  BitRow row;
  bool rhs = false;
  friend bool operator==(const ParityRow&, const ParityRow&) = default;
};

struct ObstructionCert {
  CertKind kind = CertKind::NoCandidateH;
  std::string group;
  /// The subgroup the claim is about. For InvolutionIndex this is the
  /// subgroup generated by the involutions; empty for NoCandidateH.
  SubsetBits h;
  std::optional<CharacterImages> character;  // CharacterField
  std::optional<std::uint32_t> conductor;    // CharacterField
  std::size_t variables = 0;                 // ParityInfeasible
  std::vector<ParityRow> rows;               // ParityInfeasible: rows summing to 0 = 1
  SubsetBits y;                              // BoolRingUnit: the subgroup Z_k sums over
  std::vector<ElementIndex> unit_combination;  // BoolRingUnit: sum of Z_k over these k is 1
  std::uint64_t search_nodes = 0;            // ExhaustedSearch
  std::string conclusion;

  friend bool operator==(const ObstructionCert&, const ObstructionCert&) = default;
};

/// Fires when the involutions generate a subgroup larger than sqrt|G|.
std::optional<ObstructionCert> involution_obstruction(const GroupTable& g);

/// Fires when some nonprincipal linear character vanishes on H and has
/// conductor m with 4 not dividing m. Reports the largest such m (first in
/// linear_characters() order on ties).
std::optional<ObstructionCert> lemma_test(const GroupTable& g, const SubsetBits& h);

struct ParityBuild {
  std::vector<InversePair> pairs;  // variable v is eps of pairs[v].low
  Gf2System system;
  std::vector<ParityRow> recipes;  // parallel to system.rows
};

/// The mod-2 system: one row per power-basis coordinate of every vanishing
/// nonprincipal character with 4 | n, then one row per nontrivial coset.
ParityBuild build_parity_system(const GroupTable& g, const SubsetBits& h);

/// Fires when the parity system has no solution.
std::optional<ObstructionCert> parity_obstruction(const GroupTable& g, const SubsetBits& h);

/// The variable assignment (one bit per inverse pair) encoding D.
std::vector<std::uint8_t> pair_assignment(const std::vector<InversePair>& pairs, const SubsetBits& d);

ObstructionCert no_candidate_cert(const GroupTable& g);
ObstructionCert exhausted_search_cert(const GroupTable& g, const SubsetBits& h, const SearchStats& stats);

/// Re-checks a certificate against G using only its payload. Returns a
/// description of the failure, or nullopt when the certificate holds.
std::optional<std::string> revalidate(const ObstructionCert& cert, const GroupTable& g);

}  // namespace drad
