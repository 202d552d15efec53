#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "drad/catalog.hpp"
#include "drad/error.hpp"
#include "drad/group.hpp"
#include "drad/subgroups.hpp"
#include "helpers.hpp"

using namespace drad;
using drad::testing::cyclic;
using drad::testing::random_element;

namespace {

constexpr Family kFamilies[] = {Family::G4, Family::G11, Family::G13, Family::G14, Family::G15, Family::G16};

ElementIndex power_of(const GroupTable& g, const char* gen, std::int64_t k) { return g.power(g.generator(gen), k); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no drad::Error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("subset bits") {
  SubsetBits s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.count() == 3);
  CHECK(s.indices() == std::vector<ElementIndex>{0, 64, 129});
  CHECK(s.complement().count() == 127);
  CHECK((s - SubsetBits::from_indices(130, std::vector<ElementIndex>{64})).count() == 2);
  CHECK(SubsetBits::full(130).count() == 130);

  // Ordering is lexicographic on the sorted member lists.
  const auto a = SubsetBits::from_indices(8, std::vector<ElementIndex>{0, 1, 5});
  const auto b = SubsetBits::from_indices(8, std::vector<ElementIndex>{0, 2});
  CHECK(a < b);
  CHECK(SubsetBits::from_indices(8, std::vector<ElementIndex>{0, 1}) < a);
}

TEST_CASE("table validation rejects non-groups") {
  std::vector<ElementIndex> bad = {0, 1, 1, 0, 1, 1, 1, 0, 0};  // 3x3, row 1 repeats
  CHECK(code_of([&] { GroupTable("bad", 3, bad, {}); }) == ErrorCode::InvalidArgument);
  std::vector<ElementIndex> no_identity = {1, 0, 0, 1};
  CHECK(code_of([&] { GroupTable("bad", 2, no_identity, {}); }) == ErrorCode::InvalidArgument);

  // A Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<ElementIndex> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const GroupTable l("loop", 5, loop, {{"a", 1}, {"b", 2}});
  CHECK(check_group_axioms(l).has_value());
}

TEST_CASE("primes and square roots of -1") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(25));
  CHECK(find_f(5, 1) == 2);
  CHECK(find_f(13, 1) == 5);
  CHECK(find_f(5, 2) == 7);
  CHECK((find_f(13, 2) * find_f(13, 2) + 1) % 169 == 0);
  CHECK(code_of([] { find_f(7, 1); }) == ErrorCode::NoSquareRootOfMinusOne);
  CHECK(code_of([] { find_f(9, 1); }) == ErrorCode::BadPrime);
}

TEST_CASE("family constructors") {
  for (auto fam : kFamilies) {
    for (std::uint64_t p : {5u, 13u}) {
      const auto spec = FamilySpec::make(fam, p);
      const auto g = make_family(spec);
      CAPTURE(g.name());
      CHECK(g.order() == 4 * p * p);
      CHECK_FALSE(check_group_axioms(g).has_value());
      const auto z = g.generator("z");
      CHECK(g.element_order(z) == 4);
      if (fam == Family::G4) {
        CHECK(g.element_order(g.generator("x")) == p * p);
        CHECK(g.conj(g.generator("x"), z) == power_of(g, "x", static_cast<std::int64_t>(*spec.f)));
        continue;
      }
      const auto x = g.generator("x"), y = g.generator("y");
      CHECK(g.element_order(x) == p);
      CHECK(g.element_order(y) == p);
      CHECK(g.commutator(x, y) == 0);
      // z^-1 v z for v = x, y, matching the presentation of each family.
      const auto [xa, xb] = spec.action(1, 0);
      const auto [ya, yb] = spec.action(0, 1);
      CHECK(g.conj(x, z) == g.mul(g.power(x, xa), g.power(y, xb)));
      CHECK(g.conj(y, z) == g.mul(g.power(x, ya), g.power(y, yb)));
    }
  }
}

TEST_CASE("family presentations match their defining relations") {
  const auto g15 = make_family(FamilySpec::make(Family::G15, 5));
  const auto x = g15.generator("x"), y = g15.generator("y"), z = g15.generator("z");
  CHECK(g15.conj(x, z) == g15.inv(x));
  CHECK(g15.conj(y, z) == g15.power(y, 2));  // f = 2 for p = 5

  const auto g11 = make_family(FamilySpec::make(Family::G11, 5));
  CHECK(g11.conj(g11.generator("x"), g11.generator("z")) == g11.generator("x"));
  CHECK(g11.conj(g11.generator("y"), g11.generator("z")) == g11.inv(g11.generator("y")));

  const auto g13 = make_family(FamilySpec::make(Family::G13, 5));
  CHECK(g13.conj(g13.generator("x"), g13.generator("z")) == g13.inv(g13.generator("y")));
  CHECK(g13.conj(g13.generator("y"), g13.generator("z")) == g13.generator("x"));
}

TEST_CASE("inverse of x^i y^j z in G15 follows from the product law") {
  const std::uint64_t p = 5, f = 2;
  const auto spec = FamilySpec::make(Family::G15, p);
  const auto g = make_family(spec);
  for (std::uint64_t i = 0; i < p; ++i)
    for (std::uint64_t j = 0; j < p; ++j) {
      const auto e = spec.index(i, j, 1);
      // (x^i y^j z)^-1 = z^-1 y^-j x^-i = x^i y^{-fj} z^3 since z^-1 x z = x^-1.
      CHECK(g.inv(e) == spec.index(i, (p - (f * j) % p) % p, 3));
      // z^2 fixes x and inverts y.
      CHECK(g.inv(spec.index(i, j, 2)) == spec.index((p - i) % p, j, 2));
    }
}

TEST_CASE("family errors") {
  CHECK(code_of([] { make_family(FamilySpec::make(Family::G15, 7)); }) == ErrorCode::NoSquareRootOfMinusOne);
  CHECK(code_of([] { make_family(FamilySpec::make(Family::G11, 9)); }) == ErrorCode::BadPrime);
  CHECK(code_of([] { make_family(FamilySpec{Family::G15, 5, 4}); }) == ErrorCode::InvalidArgument);
  CHECK(parse_family("G14") == Family::G14);
  CHECK_FALSE(parse_family("G12").has_value());
  CHECK(FamilySpec::make(Family::G15, 5).group_name() == "G15(5)");
}

TEST_CASE("coordinates round-trip") {
  for (auto fam : kFamilies) {
    const auto spec = FamilySpec::make(fam, 5);
    for (ElementIndex e = 0; e < 4 * 25; ++e) {
      const auto c = spec.coords(e);
      CHECK(spec.index(c.i, c.j, c.w) == e);
    }
  }
}

TEST_CASE("associativity on random triples") {
  const auto g = make_family(FamilySpec::make(Family::G16, 13));
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_element(g), b = random_element(g), c = random_element(g);
    REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    REQUIRE(g.mul(a, g.inv(a)) == 0);
  }
}

TEST_CASE("subgroup machinery on G15(5)") {
  const auto g = make_family(FamilySpec::make(Family::G15, 5));
  const auto inv = involutions(g);
  CHECK(inv.count() == 5);
  const auto h = subgroup_generated(g, inv);
  CHECK(h.count() == 10);
  CHECK(is_normal(g, h));
  CHECK(h.contains(g.generator("y")));
  CHECK(commutator_subgroup(g).count() == 25);
  CHECK(center(g).count() == 1);
  CHECK_FALSE(is_abelian(g));

  const auto cs = cosets(g, h);
  REQUIRE(cs.size() == 10);
  CHECK(cs.front() == h);
  SubsetBits cover(g.order());
  for (const auto& c : cs) {
    CHECK(c.count() == 10);
    CHECK((cover & c).empty());
    cover |= c;
  }
  CHECK(cover.count() == g.order());

  const auto q = quotient(g, commutator_subgroup(g));
  CHECK(q.table.order() == 4);
  CHECK(abelian_invariants(q.table) == std::vector<std::uint64_t>{4});
}

TEST_CASE("subgroup errors") {
  const auto g = make_family(FamilySpec::make(Family::G15, 5));
  const auto not_sub = SubsetBits::from_indices(g.order(), std::vector<ElementIndex>{0, g.generator("x")});
  CHECK(code_of([&] { cosets(g, not_sub); }) == ErrorCode::NotASubgroup);
  const auto y = subgroup_generated(g, SubsetBits::from_indices(g.order(), std::vector<ElementIndex>{g.generator("z")}));
  CHECK_FALSE(is_normal(g, y));
  CHECK(code_of([&] { quotient(g, y); }) == ErrorCode::BadSubgroup);
  CHECK(code_of([&] { abelian_invariants(g); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("normal subgroup enumeration") {
  // Cyclic: exactly one subgroup per divisor.
  const auto c12 = cyclic(12);
  for (std::size_t d : {1, 2, 3, 4, 6, 12}) CHECK(normal_subgroups_of_order(c12, d).size() == 1);
  CHECK(normal_subgroups_of_order(c12, 12).front().count() == 12);

  // Elementary abelian 2^4: Gaussian binomials [4,k]_2.
  const auto e16 = load_catalog(16)[13];
  CHECK(normal_subgroups_of_order(e16, 2).size() == 15);
  CHECK(normal_subgroups_of_order(e16, 4).size() == 35);
  CHECK(normal_subgroups_of_order(e16, 8).size() == 15);

  // G11: <x,z^2> and <y,z^2> are the normal subgroups of order 2p over <z^2>.
  const auto g = make_family(FamilySpec::make(Family::G11, 5));
  const auto z2 = SubsetBits::from_indices(g.order(), std::vector<ElementIndex>{0, g.power(g.generator("z"), 2)});
  CHECK(normal_subgroups_containing(g, z2, 10).size() == 2);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const auto& g : load_catalog(36)) {
    std::size_t total = 0;
    const auto cls = conjugacy_classes(g);
    CHECK(cls.front().count() == 1);
    for (const auto& c : cls) total += c.count();
    CHECK(total == 36);
  }
}

TEST_CASE("abelian invariants") {
  const auto c16 = load_catalog(16);
  CHECK(abelian_invariants(c16[0]) == std::vector<std::uint64_t>{16});
  CHECK(abelian_invariants(c16[1]) == std::vector<std::uint64_t>{4, 4});
  CHECK(abelian_invariants(c16[9]) == std::vector<std::uint64_t>{2, 2, 4});
  CHECK(abelian_invariants(load_catalog(36)[13]) == std::vector<std::uint64_t>{6, 6});
  CHECK(abelian_invariants(cyclic(1)).empty());
}

TEST_CASE("catalogs") {
  for (int order : {16, 36}) {
    CAPTURE(order);
    const auto groups = load_catalog(order);
    REQUIRE(groups.size() == 14);
    std::set<Fingerprint> prints;
    std::size_t abelian = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      CHECK(groups[i].order() == static_cast<std::size_t>(order));
      CHECK(groups[i].name() == "cat(" + std::to_string(order) + "," + std::to_string(i + 1) + ")");
      CHECK_FALSE(check_group_axioms(groups[i]).has_value());
      prints.insert(fingerprint(groups[i]));
      abelian += is_abelian(groups[i]);
    }
    CHECK(prints.size() == 14);
    // Five abelian groups of order 16, four of order 36.
    CHECK(abelian == (order == 16 ? 5u : 4u));
  }
  CHECK(catalog_label(16, 4) == "C4 : C4");
  CHECK(catalog_label(16, 99).empty());
  CHECK(code_of([] { load_catalog(64); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("catalog parsing and corruption") {
  CHECK(code_of([] { parse_catalog("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_catalog("{}"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_catalog(R"([{"order": 4}])"); }) == ErrorCode::ParseError);

  // x^2 = y with y of order 2 gives C4; claiming order 8 is corrupt.
  const std::string c4 =
      R"([{"order": 4, "id": 1, "name": "C4", "gen_orders": [2, 2],
           "power_relations": [[0, 1], [0, 0]], "conj_relations": [[[0, 1]], []]}])";
  const auto entries = parse_catalog(c4);
  REQUIRE(entries.size() == 1);
  const auto g = collect(entries[0]);
  CHECK(g.order() == 4);
  CHECK(g.element_order(g.generator("g1")) == 4);

  auto wrong = entries[0];
  wrong.order = 8;
  CHECK(code_of([&] { collect(wrong); }) == ErrorCode::CatalogCorrupt);
  auto backwards = entries[0];
  backwards.power_relations[1] = {1, 0};
  CHECK(code_of([&] { collect(backwards); }) == ErrorCode::CatalogCorrupt);

  const auto dir = std::filesystem::temp_directory_path() / "drad_catalog_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "catalog16.json") << "[1, 2";
  CHECK(code_of([&] { load_catalog_file(dir / "catalog16.json", 16); }) != ErrorCode::InvalidArgument);
  std::ofstream(dir / "dup.json") << "[" << c4.substr(1, c4.size() - 2) << "," << c4.substr(1, c4.size() - 2) << "]";
  CHECK(code_of([&] { load_catalog_file(dir / "dup.json", 4); }) == ErrorCode::CatalogCorrupt);
  CHECK(code_of([&] { load_catalog_file(dir / "missing.json", 16); }) == ErrorCode::Io);
}
