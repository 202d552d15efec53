#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace drad {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_poly(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

/// Does Q(zeta_m) contain i = sqrt(-1)? Equivalent to 4 | m.
bool field_contains_i(std::uint32_t m);

/// An element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
class CycInt {
 public:
  /// Zero in Z[zeta_n].
  explicit CycInt(std::uint32_t n);

  static CycInt integer(std::uint32_t n, std::int64_t v);
  /// zeta_n^e, reduced (e taken mod n).
  static CycInt zeta_power(std::uint32_t n, std::int64_t e);

  std::uint32_t conductor() const noexcept { return n_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  /// Arithmetic throws ConductorMismatch when conductors differ.
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt operator-() const;
  CycInt scaled(std::int64_t k) const;

  friend bool operator==(const CycInt& a, const CycInt& b) { return a.n_ == b.n_ && a.coeffs_ == b.coeffs_; }

 private:
  struct Basis;
  static std::shared_ptr<const Basis> basis_for(std::uint32_t n);
  void check(const CycInt& o) const;

  std::uint32_t n_;
  std::shared_ptr<const Basis> basis_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace drad
