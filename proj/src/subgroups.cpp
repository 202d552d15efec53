#include "drad/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "drad/error.hpp"

namespace drad {

SubsetBits involutions(const GroupTable& g) {
  SubsetBits out(g.order());
  for (ElementIndex a = 1; a < g.order(); ++a)
    if (g.mul(a, a) == 0) out.insert(a);
  return out;
}

namespace {

// Closure of `start` under right multiplication by the generator list.
// `start` must already be closed under the generators it came from.
SubsetBits close_under(const GroupTable& g, SubsetBits start, const std::vector<ElementIndex>& gens) {
  std::vector<ElementIndex> frontier = start.indices();
  if (!start.contains(0)) {
    start.insert(0);
    frontier.push_back(0);
  }
  while (!frontier.empty()) {
    std::vector<ElementIndex> next;
    for (auto a : frontier) {
      for (auto s : gens) {
        const auto b = g.mul(a, s);
        if (!start.contains(b)) {
          start.insert(b);
          next.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return start;
}

}  // namespace

SubsetBits subgroup_generated(const GroupTable& g, const SubsetBits& s) {
  // In a finite group the monoid generated by s is already a subgroup.
  SubsetBits start(g.order());
  start.insert(0);
  return close_under(g, start, s.indices());
}

bool is_subgroup(const GroupTable& g, const SubsetBits& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  const auto members = s.indices();
  for (auto a : members) {
    if (!s.contains(g.inv(a))) return false;
    for (auto b : members)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const SubsetBits& s) {
  if (!is_subgroup(g, s)) return false;
  bool ok = true;
  s.for_each([&](ElementIndex a) {
    for (const auto& gen : g.generators())
      if (!s.contains(g.conj(a, gen.index))) ok = false;
    if (g.generators().empty())
      for (ElementIndex b = 0; b < g.order(); ++b)
        if (!s.contains(g.conj(a, b))) ok = false;
  });
  return ok;
}

std::vector<SubsetBits> conjugacy_classes(const GroupTable& g) {
  std::vector<ElementIndex> conjugators;
  for (const auto& gen : g.generators()) conjugators.push_back(gen.index);
  if (conjugators.empty())
    for (ElementIndex b = 0; b < g.order(); ++b) conjugators.push_back(b);

  std::vector<char> done(g.order(), 0);
  std::vector<SubsetBits> classes;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    SubsetBits cls(g.order());
    std::vector<ElementIndex> frontier{a};
    cls.insert(a);
    done[a] = 1;
    while (!frontier.empty()) {
      std::vector<ElementIndex> next;
      for (auto c : frontier)
        for (auto s : conjugators) {
          const auto d = g.conj(c, s);
          if (!cls.contains(d)) {
            cls.insert(d);
            done[d] = 1;
            next.push_back(d);
          }
        }
      frontier = std::move(next);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<SubsetBits> normal_subgroups_containing(const GroupTable& g, const SubsetBits& base, std::size_t m) {
  const std::size_t n = g.order();
  if (m == 0 || n % m != 0) throw Error(ErrorCode::InvalidArgument, "subgroup order must divide |G|");
  const auto classes = conjugacy_classes(g);
  std::set<SubsetBits> found;

  std::vector<ElementIndex> base_gens = base.indices();
  SubsetBits start = subgroup_generated(g, base);
  if (m % start.count() != 0) return {};

  // Each DFS node is a normal subgroup N with the list of elements that
  // generate it; adjoining a class c gives <N, c>, which is again normal.
  // Nodes are deduplicated by subgroup, so every class not yet in N is
  // tried from every node.
  struct Frame {
    SubsetBits sub;
    std::vector<ElementIndex> gens;
  };
  std::vector<Frame> stack;
  stack.push_back({start, base_gens});
  std::set<SubsetBits> visited{start};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.sub.count() == m) {
      found.insert(f.sub);
      continue;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].is_subset_of(f.sub)) continue;
      auto gens = f.gens;
      const auto cls = classes[c].indices();
      gens.insert(gens.end(), cls.begin(), cls.end());
      SubsetBits grown = close_under(g, f.sub, gens);
      const auto size = grown.count();
      if (size > m || m % size != 0) continue;
      if (!visited.insert(grown).second) continue;
      stack.push_back({std::move(grown), std::move(gens)});
    }
  }
  return {found.begin(), found.end()};
}

std::vector<SubsetBits> normal_subgroups_of_order(const GroupTable& g, std::size_t m) {
  SubsetBits trivial(g.order());
  trivial.insert(0);
  return normal_subgroups_containing(g, trivial, m);
}

std::vector<SubsetBits> cosets(const GroupTable& g, const SubsetBits& h) {
  if (!is_subgroup(g, h)) throw Error(ErrorCode::NotASubgroup, "cosets() needs a subgroup");
  std::vector<char> done(g.order(), 0);
  std::vector<SubsetBits> out;
  const auto members = h.indices();
  for (ElementIndex a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    SubsetBits c(g.order());
    for (auto x : members) {
      const auto b = g.mul(x, a);
      c.insert(b);
      done[b] = 1;
    }
    out.push_back(std::move(c));
  }
  // Coset of the identity is found first and the others are produced in
  // order of their smallest element already.
  return out;
}

SubsetBits commutator_subgroup(const GroupTable& g) {
  SubsetBits comms(g.order());
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b) comms.insert(g.commutator(a, b));
  return subgroup_generated(g, comms);
}

SubsetBits center(const GroupTable& g) {
  SubsetBits z(g.order());
  for (ElementIndex a = 0; a < g.order(); ++a) {
    bool central = true;
    if (!g.generators().empty()) {
      for (const auto& gen : g.generators())
        if (g.mul(a, gen.index) != g.mul(gen.index, a)) central = false;
    } else {
      for (ElementIndex b = 0; b < g.order() && central; ++b)
        if (g.mul(a, b) != g.mul(b, a)) central = false;
    }
    if (central) z.insert(a);
  }
  return z;
}

bool is_abelian(const GroupTable& g) { return center(g).count() == g.order(); }

Quotient quotient(const GroupTable& g, const SubsetBits& normal) {
  if (!is_normal(g, normal)) throw Error(ErrorCode::BadSubgroup, "quotient by a non-normal subgroup");
  const auto cs = cosets(g, normal);
  std::vector<ElementIndex> coset_of(g.order());
  std::vector<ElementIndex> rep;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    cs[c].for_each([&](ElementIndex a) { coset_of[a] = static_cast<ElementIndex>(c); });
    rep.push_back(cs[c].indices().front());
  }
  const auto q = cs.size();
  std::vector<ElementIndex> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = coset_of[g.mul(rep[a], rep[b])];
  std::vector<NamedElement> gens;
  for (const auto& gen : g.generators()) gens.push_back({gen.name, coset_of[gen.index]});
  return {GroupTable(g.name() + "/N", q, std::move(table), std::move(gens)), std::move(coset_of)};
}

std::vector<std::uint64_t> abelian_invariants(const GroupTable& g) {
  if (!is_abelian(g)) throw Error(ErrorCode::InvalidArgument, "abelian_invariants on a non-abelian group");
  const std::uint64_t n = g.order();
  std::vector<std::size_t> orders(n);
  for (ElementIndex a = 0; a < n; ++a) orders[a] = g.element_order(a);

  // For each prime q, the q-primary type is read off from |G[q^k]|:
  // log_q |G[q^k]| - log_q |G[q^(k-1)]| = #cyclic factors of order >= q^k.
  std::map<std::uint64_t, std::vector<std::uint64_t>> primary;  // prime -> exponents (desc)
  std::uint64_t rest = n;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    std::vector<std::size_t> at_least;  // at_least[k-1] = #factors of order >= q^k
    std::uint64_t qk = 1;
    std::size_t prev_log = 0;
    for (int k = 1;; ++k) {
      qk *= q;
      std::size_t cnt = 0;
      for (auto o : orders)
        if (qk % o == 0) ++cnt;
      std::size_t lg = 0;
      for (std::size_t c = cnt; c > 1; c /= q) ++lg;
      if (lg == prev_log) break;
      at_least.push_back(lg - prev_log);
      prev_log = lg;
    }
    // Conjugate partition -> exponents of cyclic factors.
    std::vector<std::uint64_t> exps;
    const std::size_t factors = at_least.empty() ? 0 : at_least.front();
    for (std::size_t f = 0; f < factors; ++f) {
      std::uint64_t e = 0;
      for (auto a : at_least)
        if (a > f) ++e;
      exps.push_back(e);
    }
    primary[q] = exps;  // descending
  }
  // Combine primary components into invariant factors.
  std::size_t width = 0;
  for (const auto& [q, exps] : primary) width = std::max(width, exps.size());
  std::vector<std::uint64_t> inv(width, 1);
  for (const auto& [q, exps] : primary) {
    for (std::size_t f = 0; f < exps.size(); ++f) {
      std::uint64_t qe = 1;
      for (std::uint64_t t = 0; t < exps[f]; ++t) qe *= q;
      inv[width - 1 - f] *= qe;
    }
  }
  return inv;
}

}  // namespace drad
