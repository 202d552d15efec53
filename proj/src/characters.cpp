#include "drad/characters.hpp"

#include <algorithm>
#include <numeric>

#include "drad/error.hpp"
#include "drad/subgroups.hpp"

namespace drad {

namespace {

// Greedy generating set of an abelian group: repeatedly adjoin an element
// of largest order outside the current span.
std::vector<ElementIndex> abelian_generators(const GroupTable& q) {
  std::vector<ElementIndex> by_order(q.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](ElementIndex a, ElementIndex b) {
    return q.element_order(a) > q.element_order(b);
  });
  std::vector<ElementIndex> gens;
  SubsetBits span(q.order());
  span.insert(0);
  for (auto a : by_order) {
    if (span.contains(a)) continue;
    gens.push_back(a);
    span = subgroup_generated(q, SubsetBits::from_indices(q.order(), gens));
  }
  return gens;
}

// Extends an assignment of exponents (mod e) on generators to the whole
// group by BFS; nullopt when the assignment is inconsistent.
std::optional<std::vector<std::uint32_t>> extend(const GroupTable& q, const std::vector<ElementIndex>& gens,
                                                 const std::vector<std::uint32_t>& exps, std::uint32_t e) {
  constexpr auto kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> val(q.order(), kUnset);
  val[0] = 0;
  std::vector<ElementIndex> frontier{0};
  while (!frontier.empty()) {
    std::vector<ElementIndex> next;
    for (auto a : frontier)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto b = q.mul(a, gens[k]);
        const auto v = (val[a] + exps[k]) % e;
        if (val[b] == kUnset) {
          val[b] = v;
          next.push_back(b);
        } else if (val[b] != v) {
          return std::nullopt;
        }
      }
    frontier = std::move(next);
  }
  return val;
}

LinChar normalise(const GroupTable& g, std::vector<std::uint32_t> values, std::uint32_t e) {
  std::uint32_t common = e;
  for (auto v : values) common = std::gcd(common, v);
  LinChar chi;
  chi.n = e / common;
  for (auto& v : values) v /= common;
  chi.values = std::move(values);
  for (const auto& gen : g.generators()) chi.images.emplace_back(gen.name, chi.values[gen.index]);
  return chi;
}

}  // namespace

std::vector<LinChar> linear_characters(const GroupTable& g) {
  const auto derived = commutator_subgroup(g);
  const auto quo = quotient(g, derived);
  const auto& q = quo.table;

  std::uint32_t e = 1;
  for (ElementIndex a = 0; a < q.order(); ++a) e = std::lcm(e, static_cast<std::uint32_t>(q.element_order(a)));
  const auto gens = abelian_generators(q);

  // Every homomorphism Q -> Z/e is determined by generator images.
  std::vector<std::vector<std::uint32_t>> homs;
  std::vector<std::uint32_t> exps(gens.size(), 0);
  for (;;) {
    if (auto val = extend(q, gens, exps, e)) homs.push_back(std::move(*val));
    std::size_t k = 0;
    while (k < exps.size() && ++exps[k] == e) exps[k++] = 0;
    if (k == exps.size()) break;
  }
  if (homs.size() != q.order())
    throw Error(ErrorCode::InvalidArgument, "character count " + std::to_string(homs.size()) +
                                                " != |G/G'| = " + std::to_string(q.order()));

  std::vector<LinChar> out;
  for (const auto& h : homs) {
    std::vector<std::uint32_t> values(g.order());
    for (ElementIndex a = 0; a < g.order(); ++a) values[a] = h[quo.coset_of[a]];
    out.push_back(normalise(g, std::move(values), e));
  }
  std::stable_sort(out.begin(), out.end(), [](const LinChar& a, const LinChar& b) {
    if (a.principal() != b.principal()) return a.principal();
    // Compare generator images as points on the unit circle: v/n.
    for (std::size_t k = 0; k < a.images.size(); ++k) {
      const auto lhs = std::uint64_t{a.images[k].second} * b.n;
      const auto rhs = std::uint64_t{b.images[k].second} * a.n;
      if (lhs != rhs) return lhs < rhs;
    }
    return false;
  });
  return out;
}

std::optional<LinChar> character_from_images(const GroupTable& g, std::uint32_t n,
                                             const std::vector<std::pair<std::string, std::uint32_t>>& images) {
  if (n == 0 || images.size() != g.generators().size()) return std::nullopt;
  std::vector<ElementIndex> gens;
  std::vector<std::uint32_t> exps;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (images[k].first != g.generators()[k].name) return std::nullopt;
    gens.push_back(g.generators()[k].index);
    exps.push_back(images[k].second % n);
  }
  auto val = extend(g, gens, exps, n);
  if (!val) return std::nullopt;
  // A full homomorphism check; BFS only proves consistency along paths.
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      if ((*val)[g.mul(a, b)] != ((*val)[a] + (*val)[b]) % n) return std::nullopt;
  auto chi = normalise(g, std::move(*val), n);
  if (chi.n != n) return std::nullopt;
  return chi;
}

CycInt char_sum(const LinChar& chi, const SubsetBits& s) {
  CycInt acc(chi.n);
  s.for_each([&](ElementIndex a) { acc += chi.value(a); });
  return acc;
}

}  // namespace drad
