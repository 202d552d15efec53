#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drad/subset.hpp"

namespace drad {

struct NamedElement {
  std::string name;
  ElementIndex index = 0;

  friend bool operator==(const NamedElement&, const NamedElement&) = default;
};

/// An exact finite group given by its full Cayley table. Index 0 is the
/// identity. Immutable once built.
class GroupTable {
 public:
  /// `mul` is row-major: mul[a * order + b] = a*b. The constructor checks
  /// that 0 is a two-sided identity and every row and column is a
  /// permutation, then derives the inverse table. Associativity is checked
  /// separately by check_group_axioms().
  GroupTable(std::string name, std::size_t order, std::vector<ElementIndex> mul,
             std::vector<NamedElement> generators);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  std::span<const NamedElement> generators() const noexcept { return generators_; }
  /// Throws InvalidArgument when no generator carries that name.
  ElementIndex generator(std::string_view name) const;

  ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept { return mul_[a * order_ + b]; }
  ElementIndex inv(ElementIndex a) const noexcept { return inv_[a]; }
  /// g^by = by^-1 g by.
  ElementIndex conj(ElementIndex g, ElementIndex by) const noexcept { return mul(mul(inv(by), g), by); }
  /// [a,b] = a^-1 b^-1 a b.
  ElementIndex commutator(ElementIndex a, ElementIndex b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  ElementIndex power(ElementIndex g, std::int64_t n) const;
  std::size_t element_order(ElementIndex g) const;

  /// Product of a word of elements, left to right.
  ElementIndex product(std::initializer_list<ElementIndex> word) const;

  SubsetBits empty_subset() const { return SubsetBits(order_); }
  SubsetBits all() const { return SubsetBits::full(order_); }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<ElementIndex> mul_;
  std::vector<ElementIndex> inv_;
  std::vector<NamedElement> generators_;
};

/// Checks identity, inverses, associativity and that the generators
/// generate. Associativity is exhaustive up to order 200 and sampled with
/// 10^6 random triples above that. Returns a description of the first
/// failure, or nullopt.
std::optional<std::string> check_group_axioms(const GroupTable& g, std::uint64_t seed = 0x5eed);

inline constexpr std::size_t kFullAssociativityLimit = 200;
inline constexpr std::size_t kSampledAssociativityTriples = 1'000'000;

// ---------------------------------------------------------------------------
// Presentation families of order 4p^2.

enum class Family { G4, G11, G13, G14, G15, G16 };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

bool is_prime(std::uint64_t n);

/// Smallest positive f with f^2 = -1 mod p^k (k = 1 or 2). Throws
/// NoSquareRootOfMinusOne when p = 3 mod 4.
std::uint64_t find_f(std::uint64_t p, int k);

struct FamilySpec {
  Family family;
  std::uint64_t p;
  /// Square root of -1 mod p (mod p^2 for G4); absent for G11 and G13.
  std::optional<std::uint64_t> f;

  /// Fills f with find_f() where the family needs it.
  static FamilySpec make(Family family, std::uint64_t p);

  /// Exponent modulus of the normal abelian part: p^2 for G4, else p.
  std::uint64_t modulus() const { return family == Family::G4 ? p * p : p; }
  /// Number of exponent coordinates: 1 for G4 (x only), 2 otherwise (x, y).
  int rank() const { return family == Family::G4 ? 1 : 2; }

  /// z^-1 (a,b) z as an exponent vector.
  std::pair<std::uint64_t, std::uint64_t> action(std::uint64_t a, std::uint64_t b) const;
  /// z^-w (a,b) z^w, i.e. the action applied w times (w taken mod 4).
  std::pair<std::uint64_t, std::uint64_t> action_pow(std::uint64_t a, std::uint64_t b, int w) const;

  /// idx = w + 4(j + p i) (rank 2) or w + 4 i (G4).
  ElementIndex index(std::uint64_t i, std::uint64_t j, std::uint64_t w) const;
  struct Coords {
    std::uint64_t i, j, w;
    friend bool operator==(const Coords&, const Coords&) = default;
  };
  Coords coords(ElementIndex g) const;

  /// "G15(5)"
  std::string group_name() const;
};

/// Builds the group x^i y^j z^w with product (v,w)(v',c) = (v + a^-w(v'), w+c).
/// Validates f, rejects non-prime p, and rejects families whose required
/// square root of -1 does not exist for p.
GroupTable make_family(const FamilySpec& spec);

}  // namespace drad
