#pragma once

#include <random>
#include <string>
#include <vector>

#include "drad/group.hpp"

namespace drad::testing {

/// Z/n with generator "a" = 1.
inline GroupTable cyclic(std::size_t n) {
  std::vector<ElementIndex> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<ElementIndex>((a + b) % n);
  std::vector<NamedElement> gens;
  if (n > 1) gens.push_back({"a", 1});
  return GroupTable("C" + std::to_string(n), n, std::move(mul), std::move(gens));
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x0dd5eed);
  return r;
}

inline ElementIndex random_element(const GroupTable& g) {
  return std::uniform_int_distribution<ElementIndex>(0, static_cast<ElementIndex>(g.order() - 1))(rng());
}

}  // namespace drad::testing
