#pragma once

#include <cstdint>
#include <vector>

#include "drad/group.hpp"
#include "drad/subset.hpp"

namespace drad {

/// Elements g != 1 with g^2 = 1.
SubsetBits involutions(const GroupTable& g);

/// Smallest subgroup containing s (and the identity).
SubsetBits subgroup_generated(const GroupTable& g, const SubsetBits& s);

bool is_subgroup(const GroupTable& g, const SubsetBits& s);
bool is_normal(const GroupTable& g, const SubsetBits& s);

/// Conjugacy classes ordered by smallest member; the class of 1 comes first.
std::vector<SubsetBits> conjugacy_classes(const GroupTable& g);

/// All normal subgroups of order m, ascending in SubsetBits order.
std::vector<SubsetBits> normal_subgroups_of_order(const GroupTable& g, std::size_t m);

/// All normal subgroups of order m that contain `base` (which must itself be
/// a normal subgroup). Enumerated by a DFS that adjoins whole conjugacy
/// classes in increasing order and takes the generated subgroup.
std::vector<SubsetBits> normal_subgroups_containing(const GroupTable& g, const SubsetBits& base, std::size_t m);

/// Right cosets Hg: H first, the rest by their smallest element. Throws
/// NotASubgroup.
std::vector<SubsetBits> cosets(const GroupTable& g, const SubsetBits& h);

SubsetBits commutator_subgroup(const GroupTable& g);
SubsetBits center(const GroupTable& g);

/// G/N for normal N. coset_of[g] is the quotient index of gN; quotient
/// index 0 is N itself.
struct Quotient {
  GroupTable table;
  std::vector<ElementIndex> coset_of;
};
Quotient quotient(const GroupTable& g, const SubsetBits& normal);

/// Invariant factors d1 | d2 | ... of a finite abelian group (empty for
/// the trivial group). Throws InvalidArgument when g is not abelian.
std::vector<std::uint64_t> abelian_invariants(const GroupTable& g);

bool is_abelian(const GroupTable& g);

}  // namespace drad
