#include <doctest.h>

#include <random>

#include "drad/boolring.hpp"
#include "drad/catalog.hpp"
#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/search.hpp"
#include "drad/subgroups.hpp"
#include "helpers.hpp"

using namespace drad;
using drad::testing::random_element;
using drad::testing::rng;

namespace {

BoolPoly random_poly(VarId vars) {
  std::uniform_int_distribution<int> terms(0, 6), deg(0, 3);
  std::uniform_int_distribution<VarId> var(0, vars - 1);
  std::vector<Monomial> monos;
  for (int t = terms(rng()); t > 0; --t) {
    Monomial m;
    for (int d = deg(rng()); d > 0; --d) m.push_back(var(rng()));
    monos.push_back(std::move(m));
  }
  return BoolPoly::from_monomials(std::move(monos));
}

std::vector<std::uint8_t> random_assignment(std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> a(n);
  for (auto& b : a) b = coin(rng());
  return a;
}

SubsetBits generated(const GroupTable& g, std::initializer_list<ElementIndex> els) {
  auto s = g.empty_subset();
  for (auto e : els) s.insert(e);
  return subgroup_generated(g, s);
}

SubsetBits from_assignment(const VarMap& vm, const std::vector<std::uint8_t>& a, std::size_t order) {
  SubsetBits d(order);
  for (std::size_t v = 0; v < vm.pairs().size(); ++v) d.insert(a[v] ? vm.pairs()[v].low : vm.pairs()[v].high);
  return d;
}

}  // namespace

TEST_CASE("boolean ring relations") {
  const auto x = BoolPoly::var(0), y = BoolPoly::var(1), one = BoolPoly::one();
  CHECK(x * x == x);
  CHECK(((one + x) * x).is_zero());
  CHECK((one + one).is_zero());
  CHECK((x + y) * (x + y) == x + y);
  CHECK(to_string(one + x * y) == "1 + e0*e1");
  CHECK(to_string(BoolPoly{}) == "0");
  CHECK((x * y).degree() == 2);
  CHECK(BoolPoly::from_monomials({{3, 1, 3}, {1, 3}}).is_zero());
}

TEST_CASE("every element is idempotent") {
  for (int t = 0; t < 1000; ++t) {
    const auto p = random_poly(8);
    CHECK(p * p == p);
    CHECK((p + p).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int t = 0; t < 1000; ++t) {
    const auto p = random_poly(10), q = random_poly(10);
    const auto a = random_assignment(10);
    CHECK(eval_at(p + q, a) == (eval_at(p, a) != eval_at(q, a)));
    CHECK(eval_at(p * q, a) == (eval_at(p, a) && eval_at(q, a)));
  }
  CHECK_THROWS_AS(eval_at(BoolPoly::var(5), std::vector<std::uint8_t>(3)), Error);
  try {
    eval_at(BoolPoly::var(5), std::vector<std::uint8_t>(3));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingVariable);
  }
}

TEST_CASE("monomial cap") {
  std::vector<Monomial> a, b;
  for (VarId v = 0; v < 2001; ++v) {
    a.push_back({v});
    b.push_back({v + 5000});
  }
  const auto pa = BoolPoly::from_monomials(a), pb = BoolPoly::from_monomials(b);
  try {
    (void)(pa * pb);
    FAIL("expected PolyTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PolyTooLarge);
  }
}

TEST_CASE("E_k counts |D ∩ k^-1 D| mod 2") {
  const auto g = make_family(FamilySpec::make(Family::G15, 5));
  const auto h = generated(g, {g.generator("y"), g.power(g.generator("z"), 2)});
  const VarMap vm(g, h);
  CHECK(vm.variables() == 45);
  try {
    (void)E_poly(g, vm, 0);
    FAIL("expected IdentityK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityK);
  }
  for (int t = 0; t < 200; ++t) {
    const auto a = random_assignment(vm.variables());
    const auto d = from_assignment(vm, a, g.order());
    ElementIndex k = 0;
    while (k == 0) k = random_element(g);
    std::size_t count = 0;
    d.for_each([&](ElementIndex x) { count += d.contains(g.mul(k, x)); });
    CHECK(eval_at(E_poly(g, vm, k), a) == (count % 2 == 1));
    // eps evaluates to membership.
    const auto e = random_element(g);
    CHECK(eval_at(eps(vm, e), a) == d.contains(e));
  }
}

TEST_CASE("E_k vanishes on genuine witnesses") {
  for (const auto& g : load_catalog(16)) {
    for (const auto& h : candidate_subgroups(g)) {
      const VarMap vm(g, h);
      for (const auto& d : search_drad(g, h).witnesses) {
        std::vector<std::uint8_t> a(vm.variables());
        for (std::size_t v = 0; v < a.size(); ++v) a[v] = d.contains(vm.pairs()[v].low);
        for (ElementIndex k = 1; k < g.order(); ++k) CHECK_FALSE(eval_at(E_poly(g, vm, k), a));
      }
    }
  }
}

TEST_CASE("Z and Sigma_Y") {
  const auto g = make_family(FamilySpec::make(Family::G15, 5));
  const auto y = g.generator("y"), x = g.generator("x"), z = g.generator("z");
  const auto h = generated(g, {y, g.power(z, 2)});
  const auto Y = generated(g, {y});
  const VarMap vm(g, h);
  // Z_k is the sum of E over the coset Yk.
  BoolPoly manual;
  Y.for_each([&](ElementIndex u) { manual += E_poly(g, vm, g.mul(u, x)); });
  CHECK(Z_poly(g, vm, Y, x) == manual);
  CHECK(Z_poly(g, vm, Y, x) == Z_poly(g, vm, Y, g.mul(y, x)));
  CHECK_THROWS_AS(Z_poly(g, vm, Y, y), Error);

  for (ElementIndex e = 0; e < g.order(); ++e) {
    const auto s = sigma_Y(g, vm, Y, e), si = sigma_Y(g, vm, Y, g.inv(e));
    if (h.contains(e)) CHECK(s.is_zero());
    else CHECK((s + si).is_one());
    CHECK(sigma_Y(g, vm, Y, g.mul(y, e)) == s);
  }
}

TEST_CASE("G15 replay at p = 5") {
  const auto rep = replay_g15(5, true);
  CHECK(rep.variables == 45);
  CHECK(rep.z.size() == 6);
  CHECK(rep.z[0].is_one());
  CHECK(rep.total.is_one());
  CHECK(rep.checks.size() >= 10);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.holds, c.name);
  CHECK(rep.cert.kind == CertKind::BoolRingUnit);
  CHECK_FALSE(revalidate(rep.cert, make_family(FamilySpec::make(Family::G15, 5))));

  for (std::uint64_t bad : {3u, 7u, 9u, 15u}) {
    try {
      (void)replay_g15(bad);
      FAIL("expected BadPrime");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadPrime);
    }
  }
}

TEST_CASE("unit combinations") {
  const auto g = make_family(FamilySpec::make(Family::G15, 5));
  const auto x = g.generator("x"), y = g.generator("y"), z2 = g.power(g.generator("z"), 2);
  const auto h = generated(g, {y, z2});
  const auto Y = generated(g, {y});
  const std::vector<ElementIndex> reps = {x, g.mul(x, z2), g.mul(g.power(x, 2), z2)};
  const auto found = find_unit_combination(g, h, Y, reps, 3);
  REQUIRE(found);
  CHECK(*found == reps);
  CHECK_FALSE(find_unit_combination(g, h, Y, {}, 3));
  CHECK_FALSE(find_unit_combination(g, h, Y, reps, 2));

  // Groups that do carry DRAD sets admit no unit combination.
  for (const auto& g16 : load_catalog(16)) {
    for (const auto& h16 : candidate_subgroups(g16)) {
      if (search_drad(g16, h16).witnesses.empty()) continue;
      const auto trivial = g16.empty_subset() | SubsetBits::from_indices(16, std::vector<ElementIndex>{0});
      std::vector<ElementIndex> all;
      for (ElementIndex k = 1; k < 16; ++k) all.push_back(k);
      CHECK_FALSE(find_unit_combination(g16, h16, trivial, all, 3));
    }
  }
}
