#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drad/group.hpp"
#include "drad/obstruction.hpp"
#include "drad/search.hpp"
#include "drad/subset.hpp"

namespace drad {

using VarId = std::uint32_t;
/// Sorted, distinct variable ids; the empty monomial is the constant 1.
using Monomial = std::vector<VarId>;

/// Element of F2[eps]/(eps^2 - eps): a set of monomials, kept sorted.
class BoolPoly {
 public:
  BoolPoly() = default;
  static BoolPoly one();
  static BoolPoly var(VarId v);
  /// Canonicalises: sorts and dedups each monomial, cancels repeats in pairs.
  static BoolPoly from_monomials(std::vector<Monomial> monos);

  const std::vector<Monomial>& monomials() const noexcept { return monos_; }
  std::size_t size() const noexcept { return monos_.size(); }
  bool is_zero() const noexcept { return monos_.empty(); }
  bool is_one() const noexcept { return monos_.size() == 1 && monos_[0].empty(); }
  std::size_t degree() const noexcept;

  BoolPoly& operator+=(const BoolPoly& o);
  friend BoolPoly operator+(BoolPoly a, const BoolPoly& b) { return a += b; }
  friend BoolPoly operator*(const BoolPoly& a, const BoolPoly& b);
  friend bool operator==(const BoolPoly&, const BoolPoly&) = default;

 private:
  std::vector<Monomial> monos_;
};

/// Products and sums give up above this many monomials (PolyTooLarge).
inline constexpr std::size_t kMaxMonomials = 4'000'000;

std::string to_string(const BoolPoly& p);

/// Throws MissingVariable when some variable has no entry.
bool eval_at(const BoolPoly& p, const std::vector<std::uint8_t>& assignment);

/// eps_g in R: 0 on H, a variable on the smaller index of each inverse
/// pair, one plus that variable on the larger.
class VarMap {
 public:
  enum class Kind : std::uint8_t { Zero, Var, OnePlusVar };
  struct Entry {
    Kind kind;
    VarId var;
  };
  /// Throws InvolutionOutsideH / BadSubgroup as inverse_pairs() does.
  VarMap(const GroupTable& g, const SubsetBits& h);

  const Entry& operator[](ElementIndex g) const { return entries_[g]; }
  std::size_t variables() const noexcept { return pairs_.size(); }
  const std::vector<InversePair>& pairs() const noexcept { return pairs_; }
  const SubsetBits& h() const noexcept { return h_; }

 private:
  SubsetBits h_;
  std::vector<InversePair> pairs_;
  std::vector<Entry> entries_;
};

BoolPoly eps(const VarMap& vm, ElementIndex g);

/// E_k = sum_h eps(kh) eps(h), the coefficient of k in D D^-1 minus lambda
/// (lambda is even and vanishes mod 2). Throws IdentityK for k = 1.
BoolPoly E_poly(const GroupTable& g, const VarMap& vm, ElementIndex k);
/// Z_k = sum_{u in Y} E_{uk}. Throws IdentityK if some uk = 1.
BoolPoly Z_poly(const GroupTable& g, const VarMap& vm, const SubsetBits& y, ElementIndex k);
/// Sigma_Y(g) = sum_{u in Y} eps(ug).
BoolPoly sigma_Y(const GroupTable& g, const VarMap& vm, const SubsetBits& y, ElementIndex elem);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::size_t monomials = 0;  // size of the left-hand side
  double seconds = 0;
};

struct G15Replay {
  std::uint64_t p = 0;
  std::size_t variables = 0;
  /// Z_1..Z_6 as canonical polynomials.
  std::vector<BoolPoly> z;
  BoolPoly total;
  std::vector<IdentityCheck> checks;
  ObstructionCert cert;
  double seconds = 0;
};

/// Rebuilds G15(p) with H = <y,z^2>, N = <x,y,z^2> and verifies the chain of
/// identities ending in Z_x + Z_{xz^2} + Z_{x^{p2}z^2} = 1. With
/// check_lemmas the sweep over Sigma_Y, the closed forms for Z_4..Z_6 and
/// the dual pairing on G \ N are checked too. Throws BadPrime unless
/// p = 1 mod 4, IdentityViolation naming the first failed identity.
G15Replay replay_g15(std::uint64_t p, bool check_lemmas = true);

/// Smallest-first search over subsets of reps (size at most limit) for
/// sum Z_k = 1. Returns the first hit in lexicographic order.
std::optional<std::vector<ElementIndex>> find_unit_combination(const GroupTable& g, const SubsetBits& h,
                                                               const SubsetBits& y,
                                                               const std::vector<ElementIndex>& reps,
                                                               std::size_t limit);

}  // namespace drad
