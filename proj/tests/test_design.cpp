#include <doctest.h>

#include <sstream>

#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/subgroups.hpp"
#include "helpers.hpp"

using namespace drad;
using drad::testing::cyclic;
using drad::testing::rng;

namespace {

// Z/4 x Z/4 with index 4a + b.
GroupTable z4xz4() {
  std::vector<ElementIndex> mul(256);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b)
      mul[a * 16 + b] = static_cast<ElementIndex>(((a / 4 + b / 4) % 4) * 4 + (a % 4 + b % 4) % 4);
  return GroupTable("Z4xZ4", 16, std::move(mul), {{"u", 4}, {"v", 1}});
}

ElementIndex at(int a, int b) { return static_cast<ElementIndex>(4 * a + b); }

SubsetBits of(std::size_t n, std::vector<ElementIndex> v) { return SubsetBits::from_indices(n, v); }

}  // namespace

TEST_CASE("parameters") {
  CHECK(drad_params(4) == DesignParams{4, 16, 6, 2});
  CHECK(drad_params(10) == DesignParams{10, 100, 45, 20});
  CHECK(drad_params(26) == DesignParams{26, 676, 325, 156});
  for (std::uint64_t h = 4; h <= 400; h += 2) {
    const auto d = drad_params(h);
    CHECK(d.lambda % 2 == 0);
    CHECK(d.k * (d.k - 1) == d.lambda * (d.v - 1));
  }
  for (std::uint64_t bad : {0u, 2u, 5u, 11u}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(drad_params(bad), Error);
  }
}

TEST_CASE("difference multiset of the (7,3,1) design") {
  const auto c7 = cyclic(7);
  const auto d = of(7, {1, 2, 4});
  const auto counts = difference_multiset(c7, d);
  CHECK(counts[0] == 3);
  for (ElementIndex g = 1; g < 7; ++g) CHECK(counts[g] == 1);
  CHECK(is_difference_set(c7, d) == 1u);
  CHECK_FALSE(is_difference_set(c7, of(7, {1, 2, 3})).has_value());
}

TEST_CASE("difference multiset properties on random subsets") {
  const auto g = make_family(FamilySpec::make(Family::G15, 5));
  for (int t = 0; t < 50; ++t) {
    SubsetBits d(g.order());
    for (ElementIndex e = 0; e < g.order(); ++e)
      if (rng()() % 3 == 0) d.insert(e);
    const auto counts = difference_multiset(g, d);
    std::uint64_t total = 0;
    for (ElementIndex e = 0; e < g.order(); ++e) {
      total += counts[e];
      CHECK(counts[e] == counts[g.inv(e)]);
    }
    CHECK(total == d.count() * d.count());
    CHECK(counts[0] == d.count());
  }
}

TEST_CASE("DRAD clauses on a hand-checked witness in Z4 x Z4") {
  const auto g = z4xz4();
  const auto h = of(16, {at(0, 0), at(0, 2), at(2, 0), at(2, 2)});
  const auto d = of(16, {at(0, 1), at(1, 0), at(1, 1), at(1, 2), at(2, 3), at(3, 1)});
  const auto v = is_drad(g, h, d);
  CHECK(v.accepted);
  CHECK(v.lambda == 2u);
  CHECK(v.first_failure == DradClause::None);
  CHECK(v.coset_balance == std::vector<std::size_t>{0, 2, 2, 2});

  // Swapping one element for its inverse breaks disjointness first.
  const auto bad = is_drad(g, h, of(16, {at(0, 1), at(0, 3), at(1, 1), at(1, 2), at(2, 3), at(3, 1)}));
  CHECK_FALSE(bad.accepted);
  CHECK(bad.first_failure == DradClause::DisjointInverse);

  const auto not_sub = of(16, {at(0, 0), at(0, 1), at(2, 0), at(2, 2)});
  CHECK_THROWS_AS(is_drad(g, not_sub, d), Error);
}

TEST_CASE("candidate subgroups") {
  CHECK(candidate_subgroups(make_family(FamilySpec::make(Family::G4, 5))).empty());
  CHECK(candidate_subgroups(make_family(FamilySpec::make(Family::G13, 5))).empty());
  const auto g15 = make_family(FamilySpec::make(Family::G15, 5));
  const auto hs = candidate_subgroups(g15);
  REQUIRE(hs.size() == 1);
  const std::vector<ElementIndex> gens = {g15.generator("y"), g15.power(g15.generator("z"), 2)};
  CHECK(hs[0] == subgroup_generated(g15, SubsetBits::from_indices(100, gens)));
  CHECK(candidate_subgroups(make_family(FamilySpec::make(Family::G11, 5))).size() == 2);
  try {
    candidate_subgroups(cyclic(12));
    FAIL("expected NotSquareOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquareOrder);
  }
}

TEST_CASE("witness files") {
  const WitnessFile w{16, "cat(16,2)", {0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}};
  std::stringstream ss;
  write_witness(ss, w);
  CHECK(parse_witness(ss) == w);

  std::stringstream comments("# comment\n\norder 16\ngroup cat(16,2)\nH: 0 1 2 3\nD: 4 5\n");
  CHECK(parse_witness(comments).d == std::vector<ElementIndex>{4, 5});

  auto error_of = [](const std::string& text) {
    std::stringstream in(text);
    try {
      parse_witness(in);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("order 16\ngroup g\nH: 0 x\nD: 1\n").find("line 3") != std::string::npos);
  CHECK(error_of("order 16\ngroup g\nwhat\n").find("line 3") != std::string::npos);
  CHECK(error_of("order 16\ngroup g\nH: 0\n").find("needs") != std::string::npos);
  CHECK(error_of("order 4\ngroup g\nH: 0\nD: 9\n").find("out of range") != std::string::npos);
}
