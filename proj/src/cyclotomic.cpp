#include "drad/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "drad/error.hpp"

namespace drad {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of a by a monic divisor b.
Poly divide_exact(Poly a, const Poly& b) {
  const auto db = b.size() - 1;
  if (a.size() < b.size()) throw Error(ErrorCode::InvalidArgument, "bad cyclotomic division");
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const auto c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic division not exact");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic_poly(0)");
  static std::mutex mu;
  static std::map<std::uint32_t, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) num = divide_exact(num, cyclotomic_poly(d));
  std::lock_guard lock(mu);
  cache.emplace(n, num);
  return num;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool field_contains_i(std::uint32_t m) { return m % 4 == 0; }

struct CycInt::Basis {
  std::uint32_t n;
  std::size_t phi;
  Poly modulus;                     // Phi_n, monic
  std::vector<Poly> power_reduced;  // zeta^e for e in [0, 2n)
};

std::shared_ptr<const CycInt::Basis> CycInt::basis_for(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const Basis>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto b = std::make_shared<Basis>();
  b->n = n;
  b->modulus = cyclotomic_poly(n);
  b->phi = b->modulus.size() - 1;
  // zeta^{e+1} = zeta * zeta^e, folding the top coefficient with Phi_n.
  Poly cur(b->phi, 0);
  if (b->phi == 0) throw Error(ErrorCode::InvalidArgument, "degenerate cyclotomic basis");
  cur[0] = 1;
  for (std::uint32_t e = 0; e < 2 * n; ++e) {
    b->power_reduced.push_back(cur);
    Poly next(b->phi, 0);
    const auto top = cur[b->phi - 1];
    for (std::size_t i = b->phi - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < b->phi; ++i) next[i] -= top * b->modulus[i];
    cur = std::move(next);
  }
  std::lock_guard lock(mu);
  auto [it, _] = cache.emplace(n, std::move(b));
  return it->second;
}

CycInt::CycInt(std::uint32_t n) : n_(n), basis_(basis_for(n)), coeffs_(basis_->phi, 0) {}

CycInt CycInt::integer(std::uint32_t n, std::int64_t v) {
  CycInt c(n);
  c.coeffs_[0] = v;
  return c;
}

CycInt CycInt::zeta_power(std::uint32_t n, std::int64_t e) {
  CycInt c(n);
  const auto r = static_cast<std::size_t>(((e % n) + n) % n);
  c.coeffs_ = c.basis_->power_reduced[r];
  return c;
}

bool CycInt::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

void CycInt::check(const CycInt& o) const {
  if (o.n_ != n_)
    throw Error(ErrorCode::ConductorMismatch, std::to_string(n_) + " vs " + std::to_string(o.n_));
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check(b);
  const auto phi = a.basis_->phi;
  CycInt out(a.n_);
  // Products zeta^i * zeta^j with i + j < 2 phi <= 2n use the power table.
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const auto c = a.coeffs_[i] * b.coeffs_[j];
      const auto& red = a.basis_->power_reduced[i + j];
      for (std::size_t t = 0; t < phi; ++t) out.coeffs_[t] += c * red[t];
    }
  }
  return out;
}

CycInt CycInt::operator-() const { return scaled(-1); }

CycInt CycInt::scaled(std::int64_t k) const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

}  // namespace drad
