#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drad/cyclotomic.hpp"
#include "drad/group.hpp"
#include "drad/subset.hpp"

namespace drad {

/// A linear character chi(g) = zeta_n^{values[g]}, with n the exact order
/// of the image (n = 1 for the principal character).
struct LinChar {
  std::uint32_t n = 1;
  std::vector<std::uint32_t> values;
  /// Exponents at the group's named generators, in generator order.
  std::vector<std::pair<std::string, std::uint32_t>> images;

  bool principal() const { return n == 1; }
  CycInt value(ElementIndex g) const { return CycInt::zeta_power(n, values[g]); }

  friend bool operator==(const LinChar&, const LinChar&) = default;
};

/// All |G/G'| linear characters: principal first, the rest ordered by
/// their generator images. Built from the quotient by the commutator
/// subgroup.
std::vector<LinChar> linear_characters(const GroupTable& g);

/// Rebuilds a character from its generator images; nullopt if the images
/// do not define a homomorphism.
std::optional<LinChar> character_from_images(const GroupTable& g, std::uint32_t n,
                                             const std::vector<std::pair<std::string, std::uint32_t>>& images);

/// sum_{g in s} chi(g), exactly.
CycInt char_sum(const LinChar& chi, const SubsetBits& s);

}  // namespace drad
