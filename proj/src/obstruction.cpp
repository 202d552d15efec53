#include "drad/obstruction.hpp"

#include <algorithm>
#include <array>

#include "drad/boolring.hpp"
#include "drad/cyclotomic.hpp"
#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/subgroups.hpp"

namespace drad {

namespace {

constexpr std::array<std::string_view, 6> kKindNames = {
    "InvolutionIndex", "CharacterField", "ParityInfeasible", "BoolRingUnit", "ExhaustedSearch", "NoCandidateH"};

CharacterImages images_of(const LinChar& chi) { return {chi.n, chi.images}; }

// Per element: which variable and whether eps is 1 + x (the larger index).
struct PairLookup {
  static constexpr VarId kNone = ~VarId{0};
  std::vector<VarId> var;
  std::vector<std::uint8_t> high;

  explicit PairLookup(const GroupTable& g, const std::vector<InversePair>& pairs)
      : var(g.order(), kNone), high(g.order(), 0) {
    for (VarId v = 0; v < pairs.size(); ++v) {
      var[pairs[v].low] = v;
      var[pairs[v].high] = v;
      high[pairs[v].high] = 1;
    }
  }
};

// Rows for sum_{g not in H} eps_g chi(g) = (h/2) i, one per coordinate.
std::vector<std::pair<BitRow, bool>> character_rows(const LinChar& chi, const std::vector<InversePair>& pairs,
                                                    std::uint64_t half_h) {
  const auto n = chi.n;
  const auto phi = euler_phi(n);
  std::vector<CycInt> zeta;
  zeta.reserve(n);
  for (std::uint32_t e = 0; e < n; ++e) zeta.push_back(CycInt::zeta_power(n, e));

  std::vector<std::pair<BitRow, bool>> rows(phi, {BitRow(pairs.size()), false});
  auto constant = zeta[n / 4].scaled(static_cast<std::int64_t>(half_h));
  for (VarId v = 0; v < pairs.size(); ++v) {
    const auto& lo = zeta[chi.values[pairs[v].low]];
    const auto& hi = zeta[chi.values[pairs[v].high]];
    const auto coeff = lo + hi;
    for (std::uint32_t c = 0; c < phi; ++c)
      if (coeff.coeffs()[c] & 1) rows[c].first.set(v, true);
    constant += hi;
  }
  for (std::uint32_t c = 0; c < phi; ++c) rows[c].second = constant.coeffs()[c] & 1;
  return rows;
}

std::pair<BitRow, bool> coset_row(const SubsetBits& coset, const PairLookup& lk, std::size_t vars,
                                  std::uint64_t half_h) {
  BitRow row(vars);
  bool rhs = half_h & 1;
  coset.for_each([&](ElementIndex a) {
    if (lk.var[a] == PairLookup::kNone) return;
    row.flip(lk.var[a]);
    if (lk.high[a]) rhs = !rhs;
  });
  return {row, rhs};
}

bool is_drad_subgroup_shape(const GroupTable& g, const SubsetBits& h) {
  const auto n = h.count();
  return h.universe() == g.order() && n * n == g.order() && is_subgroup(g, h) && is_normal(g, h);
}

}  // namespace

std::string_view to_string(CertKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<CertKind> parse_cert_kind(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == s) return static_cast<CertKind>(i);
  return std::nullopt;
}

std::optional<ObstructionCert> involution_obstruction(const GroupTable& g) {
  const auto inv = subgroup_generated(g, involutions(g));
  const auto n = inv.count();
  if (n * n <= g.order()) return std::nullopt;
  ObstructionCert c;
  c.kind = CertKind::InvolutionIndex;
  c.group = g.name();
  c.h = inv;
  c.conclusion = "involutions generate a subgroup of order " + std::to_string(n) +
                 ", larger than sqrt|G|; H would have to contain it";
  return c;
}

std::optional<ObstructionCert> lemma_test(const GroupTable& g, const SubsetBits& h) {
  std::optional<LinChar> best;
  for (const auto& chi : linear_characters(g)) {
    if (chi.principal() || field_contains_i(chi.n)) continue;
    if (!char_sum(chi, h).is_zero()) continue;
    if (!best || chi.n > best->n) best = chi;
  }
  if (!best) return std::nullopt;
  ObstructionCert c;
  c.kind = CertKind::CharacterField;
  c.group = g.name();
  c.h = h;
  c.character = images_of(*best);
  c.conductor = best->n;
  c.conclusion = "chi(H) = 0 forces chi(D) = +-(h/2) i, but i is not in Q(zeta_" + std::to_string(best->n) + ")";
  return c;
}

ParityBuild build_parity_system(const GroupTable& g, const SubsetBits& h) {
  ParityBuild b;
  b.pairs = inverse_pairs(g, h);
  b.system.variables = b.pairs.size();
  const auto half_h = h.count() / 2;

  for (const auto& chi : linear_characters(g)) {
    if (chi.principal() || !field_contains_i(chi.n)) continue;
    if (!char_sum(chi, h).is_zero()) continue;
    auto rows = character_rows(chi, b.pairs, half_h);
    for (std::uint32_t c = 0; c < rows.size(); ++c) {
      ParityRow r;
      r.source = ParityRow::Source::Character;
      r.character = images_of(chi);
      r.coordinate = c;
      r.row = rows[c].first;
      r.rhs = rows[c].second;
      b.system.add(std::move(rows[c].first), rows[c].second);
      b.recipes.push_back(std::move(r));
    }
  }

  const PairLookup lk(g, b.pairs);
  const auto cs = cosets(g, h);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    auto [row, rhs] = coset_row(cs[i], lk, b.pairs.size(), half_h);
    ParityRow r;
    r.source = ParityRow::Source::Coset;
    r.coset_rep = cs[i].indices().front();
    r.row = row;
    r.rhs = rhs;
    b.system.add(std::move(row), rhs);
    b.recipes.push_back(std::move(r));
  }
  return b;
}

std::optional<ObstructionCert> parity_obstruction(const GroupTable& g, const SubsetBits& h) {
  const auto b = build_parity_system(g, h);
  const auto sol = solve(b.system);
  if (sol.consistent) return std::nullopt;
  ObstructionCert c;
  c.kind = CertKind::ParityInfeasible;
  c.group = g.name();
  c.h = h;
  c.variables = b.pairs.size();
  for (auto r : sol.contradiction) c.rows.push_back(b.recipes[r]);
  c.conclusion = "the sum of " + std::to_string(c.rows.size()) + " parity rows reads 0 = 1";
  return c;
}

std::vector<std::uint8_t> pair_assignment(const std::vector<InversePair>& pairs, const SubsetBits& d) {
  std::vector<std::uint8_t> a(pairs.size());
  for (std::size_t v = 0; v < pairs.size(); ++v) a[v] = d.contains(pairs[v].low) ? 1 : 0;
  return a;
}

ObstructionCert no_candidate_cert(const GroupTable& g) {
  ObstructionCert c;
  c.kind = CertKind::NoCandidateH;
  c.group = g.name();
  c.h = g.empty_subset();
  c.conclusion = "no normal subgroup of order sqrt|G| contains every involution";
  return c;
}

ObstructionCert exhausted_search_cert(const GroupTable& g, const SubsetBits& h, const SearchStats& stats) {
  ObstructionCert c;
  c.kind = CertKind::ExhaustedSearch;
  c.group = g.name();
  c.h = h;
  c.search_nodes = stats.nodes;
  c.conclusion = "exhaustive search over " + std::to_string(stats.nodes) + " nodes found no DRAD set";
  return c;
}

std::optional<std::string> revalidate(const ObstructionCert& cert, const GroupTable& g) {
  if (cert.group != g.name()) return "certificate is for " + cert.group + ", not " + g.name();
  try {
    switch (cert.kind) {
      case CertKind::InvolutionIndex: {
        if (cert.h != subgroup_generated(g, involutions(g))) return "H is not the subgroup generated by involutions";
        const auto n = cert.h.count();
        if (n * n <= g.order()) return "involution subgroup is not larger than sqrt|G|";
        return std::nullopt;
      }
      case CertKind::NoCandidateH:
        if (!candidate_subgroups(g).empty()) return "a candidate subgroup exists";
        return std::nullopt;
      case CertKind::ExhaustedSearch: {
        if (!is_drad_subgroup_shape(g, cert.h)) return "H is not a normal subgroup of order sqrt|G|";
        SearchOptions opts;
        opts.limit = 1;
        const auto r = search_drad(g, cert.h, opts);
        if (!r.witnesses.empty()) return "search finds a witness";
        if (!r.stats.complete) return "search did not complete";
        return std::nullopt;
      }
      case CertKind::CharacterField: {
        if (!cert.character || !cert.conductor) return "missing character";
        if (!is_drad_subgroup_shape(g, cert.h)) return "H is not a normal subgroup of order sqrt|G|";
        const auto chi = character_from_images(g, cert.character->n, cert.character->images);
        if (!chi) return "images do not define a linear character of exact order n";
        if (chi->n != *cert.conductor) return "conductor does not match";
        if (chi->principal()) return "character is principal";
        if (field_contains_i(chi->n)) return "Q(zeta_n) contains i";
        if (!char_sum(*chi, cert.h).is_zero()) return "chi(H) != 0";
        return std::nullopt;
      }
      case CertKind::ParityInfeasible: {
        if (!is_drad_subgroup_shape(g, cert.h)) return "H is not a normal subgroup of order sqrt|G|";
        const auto pairs = inverse_pairs(g, cert.h);
        if (pairs.size() != cert.variables) return "variable count does not match";
        if (cert.rows.empty()) return "no rows";
        const PairLookup lk(g, pairs);
        const auto half_h = cert.h.count() / 2;
        BitRow acc(pairs.size());
        bool rhs = false;
        for (const auto& r : cert.rows) {
          std::pair<BitRow, bool> rebuilt;
          if (r.source == ParityRow::Source::Character) {
            const auto chi = character_from_images(g, r.character.n, r.character.images);
            if (!chi) return "row character is not a linear character";
            if (chi->principal() || !field_contains_i(chi->n)) return "row character has no i in its field";
            if (!char_sum(*chi, cert.h).is_zero()) return "row character does not vanish on H";
            auto rows = character_rows(*chi, pairs, half_h);
            if (r.coordinate >= rows.size()) return "coordinate out of range";
            rebuilt = std::move(rows[r.coordinate]);
          } else {
            if (r.coset_rep >= g.order() || cert.h.contains(r.coset_rep)) return "bad coset representative";
            SubsetBits coset(g.order());
            cert.h.for_each([&](ElementIndex a) { coset.insert(g.mul(a, r.coset_rep)); });
            if (coset.indices().front() != r.coset_rep) return "coset representative is not the smallest member";
            rebuilt = coset_row(coset, lk, pairs.size(), half_h);
          }
          if (rebuilt.first != r.row || rebuilt.second != r.rhs) return "stored row differs from its recipe";
          acc ^= r.row;
          rhs = rhs != r.rhs;
        }
        if (acc.any() || !rhs) return "rows do not sum to 0 = 1";
        return std::nullopt;
      }
      case CertKind::BoolRingUnit: {
        if (cert.unit_combination.empty()) return "empty combination";
        if (!is_subgroup(g, cert.y)) return "Y is not a subgroup";
        const VarMap vm(g, cert.h);
        BoolPoly sum;
        for (auto k : cert.unit_combination) sum += Z_poly(g, vm, cert.y, k);
        if (!sum.is_one()) return "sum of Z_k is not 1";
        return std::nullopt;
      }
    }
  } catch (const Error& e) {
    return std::string(e.what());
  }
  return "unknown certificate kind";
}

}  // namespace drad
