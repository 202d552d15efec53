#include <doctest.h>

#include <algorithm>
#include <set>

#include "drad/catalog.hpp"
#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/search.hpp"
#include "drad/subgroups.hpp"

using namespace drad;

namespace {

// Independent check: D D^-1 = lambda (G - 1) + k, D ∩ D^-1 = ∅, D ∪ D^-1 ∪ H = G.
bool brute_is_drad(const GroupTable& g, const SubsetBits& h, const std::vector<ElementIndex>& d) {
  const auto n = g.order();
  std::vector<int> member(n, 0), count(n, 0);
  for (auto a : d) member[a] = 1;
  for (auto a : d) {
    if (member[g.inv(a)] || h.contains(a)) return false;
    for (auto b : d) ++count[g.mul(a, g.inv(b))];
  }
  const auto hh = h.count();
  const int lambda = static_cast<int>(hh * (hh - 2) / 4);
  for (ElementIndex e = 1; e < n; ++e)
    if (count[e] != lambda) return false;
  return d.size() == hh * (hh - 1) / 2;
}

// Every choice of one element per inverse pair, checked directly.
std::set<std::vector<ElementIndex>> brute_force(const GroupTable& g, const SubsetBits& h) {
  std::vector<std::pair<ElementIndex, ElementIndex>> pairs;
  for (ElementIndex a = 0; a < g.order(); ++a)
    if (!h.contains(a) && a < g.inv(a)) pairs.emplace_back(a, g.inv(a));
  std::set<std::vector<ElementIndex>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<ElementIndex> d;
    for (std::size_t i = 0; i < pairs.size(); ++i) d.push_back(mask >> i & 1 ? pairs[i].second : pairs[i].first);
    std::sort(d.begin(), d.end());
    if (brute_is_drad(g, h, d)) out.insert(d);
  }
  return out;
}

std::set<std::vector<ElementIndex>> as_set(const SearchResult& r) {
  std::set<std::vector<ElementIndex>> out;
  for (const auto& d : r.witnesses) out.insert(d.indices());
  return out;
}

}  // namespace

TEST_CASE("inverse pairs") {
  const auto g = load_catalog(16)[1];
  const auto hs = candidate_subgroups(g);
  REQUIRE(hs.size() == 1);
  const auto pairs = inverse_pairs(g, hs[0]);
  CHECK(pairs.size() == 6);
  for (const auto& p : pairs) {
    CHECK(p.low < p.high);
    CHECK(g.inv(p.low) == p.high);
  }
  CHECK(std::is_sorted(pairs.begin(), pairs.end(), [](auto a, auto b) { return a.low < b.low; }));

  // C2^4 has involutions outside any subgroup of order 4.
  const auto e16 = load_catalog(16)[13];
  const auto h4 = normal_subgroups_of_order(e16, 4).front();
  try {
    inverse_pairs(e16, h4);
    FAIL("expected InvolutionOutsideH");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvolutionOutsideH);
  }
  try {
    inverse_pairs(g, normal_subgroups_of_order(g, 2).front());
    FAIL("expected BadSubgroup");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadSubgroup);
  }
}

TEST_CASE("order-16 search agrees with brute force over all 2^6 choices") {
  std::vector<std::string> with_witness;
  for (const auto& g : load_catalog(16)) {
    for (const auto& h : candidate_subgroups(g)) {
      const auto oracle = brute_force(g, h);
      const auto found = as_set(search_drad(g, h));
      CAPTURE(g.name());
      CHECK(found == oracle);
      if (!found.empty()) with_witness.push_back(g.name());
    }
  }
  // Frozen from the brute force above: C4 x C4 and C4 : C4.
  CHECK(with_witness == std::vector<std::string>{"cat(16,2)", "cat(16,4)"});
  const auto g2 = load_catalog(16)[1];
  CHECK(brute_force(g2, candidate_subgroups(g2)[0]).size() == 16);
  const auto g4 = load_catalog(16)[3];
  CHECK(brute_force(g4, candidate_subgroups(g4)[0]).size() == 16);
}

TEST_CASE("every witness is (16,6,2) and passes every clause") {
  for (int id : {2, 4}) {
    const auto g = load_catalog(16)[id - 1];
    const auto h = candidate_subgroups(g)[0];
    for (const auto& d : search_drad(g, h).witnesses) {
      const auto v = is_drad(g, h, d);
      CHECK(v.accepted);
      CHECK(d.count() == 6);
      CHECK(v.lambda == 2u);
    }
  }
}

TEST_CASE("pruning never loses witnesses") {
  std::vector<GroupTable> groups = load_catalog(16);
  for (auto& g : load_catalog(36)) groups.push_back(std::move(g));
  for (const auto& g : groups) {
    for (const auto& h : candidate_subgroups(g)) {
      CAPTURE(g.name());
      SearchOptions none;
      none.prune_balance = false;
      none.prune_lambda = false;
      const auto plain = search_drad(g, h, none);
      for (bool bal : {false, true})
        for (bool lam : {false, true}) {
          SearchOptions o;
          o.prune_balance = bal;
          o.prune_lambda = lam;
          const auto r = search_drad(g, h, o);
          CHECK(as_set(r) == as_set(plain));
          CHECK(r.stats.nodes <= plain.stats.nodes);
        }
    }
  }
}

TEST_CASE("output does not depend on the thread count") {
  std::vector<GroupTable> groups = {load_catalog(16)[1], load_catalog(16)[3], load_catalog(36)[0], load_catalog(36)[6]};
  for (const auto& g : groups) {
    for (const auto& h : candidate_subgroups(g)) {
      for (std::optional<std::size_t> limit : {std::optional<std::size_t>{}, std::optional<std::size_t>{3}}) {
        SearchOptions base;
        base.limit = limit;
        const auto one = search_drad(g, h, base);
        for (unsigned t : {2u, 4u}) {
          auto o = base;
          o.threads = t;
          const auto r = search_drad(g, h, o);
          CHECK(r.witnesses == one.witnesses);
          CHECK(r.stats.complete == one.stats.complete);
        }
      }
    }
  }
}

TEST_CASE("limit and time budget") {
  const auto g = load_catalog(16)[1];
  const auto h = candidate_subgroups(g)[0];
  const auto all = as_set(search_drad(g, h));
  SearchOptions o;
  o.limit = 3;
  const auto r = search_drad(g, h, o);
  CHECK(r.witnesses.size() == 3);
  CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
  for (const auto& d : r.witnesses) CHECK(all.count(d.indices()) == 1);

  const auto big = make_family(FamilySpec::make(Family::G15, 5));
  SearchOptions tight;
  tight.time_budget = 0.05;
  const auto partial = search_drad(big, candidate_subgroups(big)[0], tight);
  CHECK_FALSE(partial.stats.complete);
}

TEST_CASE("census") {
  const auto c16 = census(load_catalog(16));
  REQUIRE(c16.size() == 14);
  std::size_t with = 0;
  for (const auto& e : c16) {
    with += e.has_witness();
    if (e.has_witness()) CHECK(e.targets.front().result.witnesses.size() == 16);
  }
  CHECK(with == 2);
  CHECK(c16[1].source == CensusSource::Witness);
  CHECK(c16[2].source == CensusSource::NoCandidateH);
  CHECK(c16[0].source == CensusSource::ExhaustedSearch);

  for (const auto& e : census(load_catalog(36))) {
    CAPTURE(e.group);
    CHECK_FALSE(e.has_witness());
    CHECK(e.source != CensusSource::BudgetExceeded);
  }
  CHECK(census({}).empty());
}
