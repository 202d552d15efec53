#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drad/group.hpp"
#include "drad/subset.hpp"

namespace drad {

struct DesignParams {
  std::uint64_t h, v, k, lambda;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// v = h^2, k = h(h-1)/2, lambda = h(h-2)/4. Throws BadSubgroupOrder unless
/// h is even and at least 4.
DesignParams drad_params(std::uint64_t h);

/// counts[g] = #{(a,b) in D x D : a b^-1 = g}.
std::vector<std::uint64_t> difference_multiset(const GroupTable& g, const SubsetBits& d);

/// The common count over g != 1 when it is constant.
std::optional<std::uint64_t> is_difference_set(const GroupTable& g, const SubsetBits& d);

enum class DradClause { None, DisjointInverse, ComplementIsH, CosetBalance, Lambda };
std::string_view to_string(DradClause c);

struct DradVerdict {
  bool is_diffset = false;
  std::optional<std::uint64_t> lambda;  // set when D is a difference set
  bool disjoint_inverse = false;
  bool complement_is_h = false;
  /// |D ∩ Hg| for every coset in cosets() order (index 0 is H itself).
  std::vector<std::size_t> coset_balance;
  bool balanced = false;
  bool accepted = false;
  DradClause first_failure = DradClause::None;
};

/// Evaluates every clause; the first failure is reported in the fixed
/// order disjoint, complement, balance, lambda. Throws BadSubgroup when H
/// is not a normal subgroup with |H|^2 = |G|.
DradVerdict is_drad(const GroupTable& g, const SubsetBits& h, const SubsetBits& d);

/// Normal subgroups of order sqrt|G| that contain every involution. An
/// empty result already rules out DRAD sets on G. Throws NotSquareOrder.
std::vector<SubsetBits> candidate_subgroups(const GroupTable& g);

/// Integer square root when n is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

// ---------------------------------------------------------------------------
// Witness files:
//   order <n>
//   group <name>
//   H: <indices>
//   D: <indices>

struct WitnessFile {
  std::size_t order = 0;
  std::string group;
  std::vector<ElementIndex> h;
  std::vector<ElementIndex> d;
  friend bool operator==(const WitnessFile&, const WitnessFile&) = default;
};

/// Throws ParseError with the offending line number.
WitnessFile parse_witness(std::istream& in);
void write_witness(std::ostream& out, const WitnessFile& w);

}  // namespace drad
