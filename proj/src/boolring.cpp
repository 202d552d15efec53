#include "drad/boolring.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/subgroups.hpp"

namespace drad {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxMonomials)
    throw Error(ErrorCode::PolyTooLarge, std::to_string(n) + " monomials exceeds the cap of " +
                                             std::to_string(kMaxMonomials));
}

// Sorts the monomial list and cancels equal monomials in pairs.
std::vector<Monomial> cancel_pairs(std::vector<Monomial> monos) {
  std::sort(monos.begin(), monos.end());
  std::vector<Monomial> out;
  out.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size();) {
    std::size_t j = i;
    while (j < monos.size() && monos[j] == monos[i]) ++j;
    if ((j - i) & 1) out.push_back(std::move(monos[i]));
    i = j;
  }
  return out;
}

Monomial merge_union(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

// Appends the monomials of eps_a * eps_b.
void push_product(std::vector<Monomial>& out, const VarMap::Entry& a, const VarMap::Entry& b) {
  if (a.kind == VarMap::Kind::Zero || b.kind == VarMap::Kind::Zero) return;
  const bool ca = a.kind == VarMap::Kind::OnePlusVar;
  const bool cb = b.kind == VarMap::Kind::OnePlusVar;
  if (ca && cb) out.push_back({});
  if (ca) out.push_back({b.var});
  if (cb) out.push_back({a.var});
  if (a.var == b.var) out.push_back({a.var});
  else out.push_back({std::min(a.var, b.var), std::max(a.var, b.var)});
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

BoolPoly BoolPoly::one() {
  BoolPoly p;
  p.monos_.push_back({});
  return p;
}

BoolPoly BoolPoly::var(VarId v) {
  BoolPoly p;
  p.monos_.push_back({v});
  return p;
}

BoolPoly BoolPoly::from_monomials(std::vector<Monomial> monos) {
  check_size(monos.size());
  for (auto& m : monos) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  BoolPoly p;
  p.monos_ = cancel_pairs(std::move(monos));
  return p;
}

std::size_t BoolPoly::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& m : monos_) d = std::max(d, m.size());
  return d;
}

BoolPoly& BoolPoly::operator+=(const BoolPoly& o) {
  std::vector<Monomial> out;
  out.reserve(monos_.size() + o.monos_.size());
  std::set_symmetric_difference(monos_.begin(), monos_.end(), o.monos_.begin(), o.monos_.end(),
                                std::back_inserter(out));
  monos_ = std::move(out);
  return *this;
}

BoolPoly operator*(const BoolPoly& a, const BoolPoly& b) {
  check_size(a.size() * b.size());
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& ma : a.monos_)
    for (const auto& mb : b.monos_) out.push_back(merge_union(ma, mb));
  BoolPoly p;
  p.monos_ = cancel_pairs(std::move(out));
  return p;
}

std::string to_string(const BoolPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& m : p.monomials()) {
    if (!s.empty()) s += " + ";
    if (m.empty()) {
      s += "1";
      continue;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += "*";
      s += "e" + std::to_string(m[i]);
    }
  }
  return s;
}

bool eval_at(const BoolPoly& p, const std::vector<std::uint8_t>& assignment) {
  bool acc = false;
  for (const auto& m : p.monomials()) {
    bool term = true;
    for (auto v : m) {
      if (v >= assignment.size()) throw Error(ErrorCode::MissingVariable, "no value for e" + std::to_string(v));
      term = term && assignment[v];
    }
    acc = acc != term;
  }
  return acc;
}

VarMap::VarMap(const GroupTable& g, const SubsetBits& h)
    : h_(h), pairs_(inverse_pairs(g, h)), entries_(g.order(), Entry{Kind::Zero, 0}) {
  for (VarId v = 0; v < pairs_.size(); ++v) {
    entries_[pairs_[v].low] = {Kind::Var, v};
    entries_[pairs_[v].high] = {Kind::OnePlusVar, v};
  }
}

BoolPoly eps(const VarMap& vm, ElementIndex g) {
  const auto& e = vm[g];
  switch (e.kind) {
    case VarMap::Kind::Zero: return {};
    case VarMap::Kind::Var: return BoolPoly::var(e.var);
    case VarMap::Kind::OnePlusVar: return BoolPoly::one() + BoolPoly::var(e.var);
  }
  return {};
}

namespace {

void check_lambda_even(const VarMap& vm) {
  const auto params = drad_params(vm.h().count());
  if (params.lambda % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "lambda = " + std::to_string(params.lambda) + " is odd");
}

// Monomials of sum_{u in Y} sum_{h in S} eps(u k h) eps(h).
void push_z_terms(std::vector<Monomial>& out, const GroupTable& g, const VarMap& vm, const SubsetBits& y,
                  ElementIndex k, const SubsetBits& s) {
  y.for_each([&](ElementIndex u) {
    const auto uk = g.mul(u, k);
    if (uk == 0) throw Error(ErrorCode::IdentityK, "E_k is undefined at k = 1");
    s.for_each([&](ElementIndex h) { push_product(out, vm[g.mul(uk, h)], vm[h]); });
  });
}

}  // namespace

BoolPoly E_poly(const GroupTable& g, const VarMap& vm, ElementIndex k) {
  if (k == 0) throw Error(ErrorCode::IdentityK, "E_k is undefined at k = 1");
  check_lambda_even(vm);
  std::vector<Monomial> out;
  for (ElementIndex h = 0; h < g.order(); ++h) push_product(out, vm[g.mul(k, h)], vm[h]);
  return BoolPoly::from_monomials(std::move(out));
}

BoolPoly Z_poly(const GroupTable& g, const VarMap& vm, const SubsetBits& y, ElementIndex k) {
  check_lambda_even(vm);
  std::vector<Monomial> out;
  push_z_terms(out, g, vm, y, k, g.all());
  return BoolPoly::from_monomials(std::move(out));
}

BoolPoly sigma_Y(const GroupTable& g, const VarMap& vm, const SubsetBits& y, ElementIndex elem) {
  std::vector<Monomial> out;
  y.for_each([&](ElementIndex u) {
    const auto& e = vm[g.mul(u, elem)];
    if (e.kind == VarMap::Kind::Zero) return;
    if (e.kind == VarMap::Kind::OnePlusVar) out.push_back({});
    out.push_back({e.var});
  });
  return BoolPoly::from_monomials(std::move(out));
}

G15Replay replay_g15(std::uint64_t p, bool check_lemmas) {
  if (!is_prime(p) || p % 4 != 1)
    throw Error(ErrorCode::BadPrime, "the G15 replay needs a prime p = 1 mod 4, got " + std::to_string(p));
  const auto t_start = Clock::now();
  const auto spec = FamilySpec::make(Family::G15, p);
  const auto g = make_family(spec);
  const auto x = g.generator("x"), y = g.generator("y"), z = g.generator("z");
  const auto z2 = g.mul(z, z);
  auto gen = [&](std::initializer_list<ElementIndex> s) {
    return subgroup_generated(g, SubsetBits::from_indices(g.order(), std::vector<ElementIndex>(s)));
  };
  const auto H = gen({y, z2});
  const auto N = gen({x, y, z2});
  const auto Y = gen({y});
  const VarMap vm(g, H);
  const auto p2 = static_cast<std::int64_t>((p - 1) / 2);
  // x^a z^{2w}
  auto elem = [&](std::int64_t a, int w) { return g.mul(g.power(x, a), g.power(z2, w)); };
  const std::array<ElementIndex, 3> ks = {x, elem(1, 1), elem(p2, 1)};

  G15Replay rep;
  rep.p = p;
  rep.variables = vm.variables();
  auto record = [&](std::string name, const BoolPoly& lhs, bool holds, Clock::time_point t0) {
    rep.checks.push_back({std::move(name), holds, lhs.size(), since(t0)});
  };

  // Z_1..Z_3 over G \ N, Z_4..Z_6 over N \ H.
  const auto outside_n = g.all() - N;
  const auto n_minus_h = N - H;
  for (int part = 0; part < 2; ++part)
    for (auto k : ks) {
      std::vector<Monomial> out;
      push_z_terms(out, g, vm, Y, k, part == 0 ? outside_n : n_minus_h);
      rep.z.push_back(BoolPoly::from_monomials(std::move(out)));
    }

  auto t0 = Clock::now();
  record("Z1 = 1", rep.z[0], rep.z[0].is_one(), t0);
  record("Z2 = 0", rep.z[1], rep.z[1].is_zero(), t0);
  record("Z3 = 0", rep.z[2], rep.z[2].is_zero(), t0);

  const BoolPoly one = BoolPoly::one();
  if (check_lemmas) {
    // The dual pairing: P = {x^a y^b z} and P^-1 split G \ N, and the
    // P-half summed with its dual gives sum_i (1 + eps(y^i k h) + eps(h)).
    t0 = Clock::now();
    SubsetBits P(g.order());
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) P.insert(spec.index(a, b, 1));
    SubsetBits Pinv(g.order());
    P.for_each([&](ElementIndex h) { Pinv.insert(g.inv(h)); });
    bool ok = (P & Pinv).empty() && (P | Pinv) == outside_n;
    BoolPoly paired_all;
    for (std::size_t j = 0; j < ks.size() && ok; ++j) {
      const auto k = ks[j];
      std::vector<Monomial> out;
      P.for_each([&](ElementIndex h) {
        Y.for_each([&](ElementIndex u) {
          const auto w = g.mul(g.mul(u, k), h);
          // The dual (w^-1, h^-1) must again have the shape (y^j k h^-1, h^-1).
          const auto yj = g.mul(g.inv(w), g.inv(g.mul(k, g.inv(h))));
          if (!Y.contains(yj)) ok = false;
          out.push_back({});
          if (const auto& e = vm[w]; e.kind != VarMap::Kind::Zero) {
            if (e.kind == VarMap::Kind::OnePlusVar) out.push_back({});
            out.push_back({e.var});
          }
          if (const auto& e = vm[h]; e.kind != VarMap::Kind::Zero) {
            if (e.kind == VarMap::Kind::OnePlusVar) out.push_back({});
            out.push_back({e.var});
          }
        });
      });
      const auto paired = BoolPoly::from_monomials(std::move(out));
      ok = ok && paired == rep.z[j];
      paired_all += paired;
    }
    record("dual pairing on G \\ N matches Z1, Z2, Z3", paired_all, ok, t0);

    t0 = Clock::now();
    bool inv_sum = true, on_h = true, product = true;
    std::size_t biggest = 0;
    for (ElementIndex a = 0; a < g.order(); ++a) {
      const auto s = sigma_Y(g, vm, Y, a);
      const auto si = sigma_Y(g, vm, Y, g.inv(a));
      if (H.contains(a)) on_h = on_h && s.is_zero();
      else inv_sum = inv_sum && (s + si) == one;
      const auto prod = s * si;
      biggest = std::max(biggest, s.size());
      product = product && prod.is_zero();
    }
    rep.checks.push_back({"Sigma_Y(g) + Sigma_Y(g^-1) = 1 for all g outside H", inv_sum, biggest, since(t0)});
    rep.checks.push_back({"Sigma_Y(h) = 0 for all h in H", on_h, biggest, since(t0)});
    rep.checks.push_back({"Sigma_Y(g) Sigma_Y(g^-1) = 0 for all g", product, biggest, since(t0)});

    auto sy = [&](std::int64_t a, int w) { return sigma_Y(g, vm, Y, elem(a, w)); };
    t0 = Clock::now();
    const auto z4 = sy(1, 0) + sy(p2, 0) + sy(1, 1) + sy(p2, 1);
    record("Z4 closed form", rep.z[3], z4 == rep.z[3], t0);

    t0 = Clock::now();
    BoolPoly z5 = one;
    for (std::int64_t a = 1; a <= static_cast<std::int64_t>(p) - 2; ++a) z5 += sy(a, 0) + sy(a + 1, 1);
    record("Z5 closed form", rep.z[4], z5 == rep.z[4], t0);

    t0 = Clock::now();
    BoolPoly z6 = one + sy(p2, 1);
    for (std::int64_t a = 1; a <= p2; ++a) z6 += sy(a, 0) + sy(a + p2, 1);
    for (std::int64_t a = 1; a <= p2; ++a) z6 += sy(a + 1 + p2, 0) + sy(a, 1);
    record("Z6 closed form", rep.z[5], z6 == rep.z[5], t0);
  }

  t0 = Clock::now();
  const auto z456 = rep.z[3] + rep.z[4] + rep.z[5];
  record("Z4 + Z5 + Z6 = 0", z456, z456.is_zero(), t0);

  t0 = Clock::now();
  bool split = true;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const auto full = Z_poly(g, vm, Y, ks[j]);
    split = split && full == rep.z[j] + rep.z[j + 3];
    rep.total += full;
  }
  record("Z_k splits as the G \\ N part plus the N \\ H part", rep.total, split, t0);
  t0 = Clock::now();
  record("Z_x + Z_xz^2 + Z_x^p2z^2 = 1", rep.total, rep.total.is_one(), t0);

  rep.cert.kind = CertKind::BoolRingUnit;
  rep.cert.group = g.name();
  rep.cert.h = H;
  rep.cert.y = Y;
  rep.cert.unit_combination.assign(ks.begin(), ks.end());
  rep.cert.conclusion = "Z_x + Z_xz^2 + Z_x^" + std::to_string(p2) +
                        "z^2 = 1 modulo the relations, so the E_k cannot all vanish";
  rep.seconds = since(t_start);

  for (const auto& c : rep.checks)
    if (!c.holds) throw Error(ErrorCode::IdentityViolation, c.name + " fails for p = " + std::to_string(p));
  return rep;
}

std::optional<std::vector<ElementIndex>> find_unit_combination(const GroupTable& g, const SubsetBits& h,
                                                               const SubsetBits& y,
                                                               const std::vector<ElementIndex>& reps,
                                                               std::size_t limit) {
  if (reps.empty()) return std::nullopt;
  const VarMap vm(g, h);
  std::vector<std::optional<BoolPoly>> cache(reps.size());
  auto z_of = [&](std::size_t i) -> const BoolPoly& {
    if (!cache[i]) cache[i] = Z_poly(g, vm, y, reps[i]);
    return *cache[i];
  };
  std::vector<std::size_t> pick;
  std::optional<std::vector<ElementIndex>> found;
  std::function<bool(std::size_t, std::size_t, const BoolPoly&)> rec =
      [&](std::size_t start, std::size_t size, const BoolPoly& acc) -> bool {
    if (pick.size() == size) {
      if (!acc.is_one()) return false;
      found.emplace();
      for (auto i : pick) found->push_back(reps[i]);
      return true;
    }
    for (std::size_t i = start; i < reps.size(); ++i) {
      pick.push_back(i);
      if (rec(i + 1, size, acc + z_of(i))) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= std::min(limit, reps.size()); ++size)
    if (rec(0, size, BoolPoly{})) return found;
  return std::nullopt;
}

}  // namespace drad
