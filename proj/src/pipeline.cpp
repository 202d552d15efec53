#include "drad/pipeline.hpp"

#include <charconv>
#include <chrono>
#include <regex>

#include "drad/boolring.hpp"
#include "drad/catalog.hpp"
#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/subgroups.hpp"

namespace drad {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t to_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error(ErrorCode::InvalidArgument, "bad number " + s);
  return v;
}

void add_cert(TargetReport& t, const GroupTable& g, ObstructionCert c) {
  if (auto why = revalidate(c, g))
    throw Error(ErrorCode::IdentityViolation, std::string(to_string(c.kind)) + " certificate fails re-validation: " + *why);
  t.certificates.push_back(std::move(c));
  t.status = TargetStatus::Nonexistent;
}

// A G15 target whose H is <y,z^2> gets the symbolic replay.
bool is_g15_target(const GroupTable& g, const SubsetBits& h) {
  const auto spec = family_of(g.name());
  if (!spec || spec->family != Family::G15) return false;
  const auto y = g.generator("y"), z = g.generator("z");
  const std::vector<ElementIndex> gens = {y, g.mul(z, z)};
  return subgroup_generated(g, SubsetBits::from_indices(g.order(), gens)) == h;
}

}  // namespace

std::optional<FamilySpec> family_of(std::string_view name) {
  static const std::regex re(R"(^(G\d+)\((\d+)\)$)");
  std::cmatch m;
  if (!std::regex_match(name.begin(), name.end(), m, re)) return std::nullopt;
  const auto fam = parse_family(m[1].str());
  if (!fam) return std::nullopt;
  return FamilySpec::make(*fam, to_u64(m[2].str()));
}

GroupTable resolve_group(std::string_view name) {
  static const std::regex cat(R"(^cat\((\d+),(\d+)\)$)");
  std::cmatch m;
  if (std::regex_match(name.begin(), name.end(), m, cat)) {
    const auto order = to_u64(m[1].str());
    const auto id = to_u64(m[2].str());
    if (order != 16 && order != 36)
      throw Error(ErrorCode::InvalidArgument, "no catalog shipped for order " + std::to_string(order));
    auto groups = load_catalog(static_cast<int>(order));
    if (id < 1 || id > groups.size()) throw Error(ErrorCode::InvalidArgument, "no catalog group " + std::string(name));
    return std::move(groups[id - 1]);
  }
  if (auto spec = family_of(name)) return make_family(*spec);
  throw Error(ErrorCode::InvalidArgument, "unknown group '" + std::string(name) + "'");
}

std::string element_name(const GroupTable& g, ElementIndex e) {
  const auto spec = family_of(g.name());
  if (!spec) return std::to_string(e);
  const auto c = spec->coords(e);
  std::string s;
  auto part = [&](const char* sym, std::uint64_t k) {
    if (k == 0) return;
    s += sym;
    if (k > 1) s += "^" + std::to_string(k);
  };
  if (spec->rank() == 1) {
    part("x", c.i);
  } else {
    part("x", c.i);
    part("y", c.j);
  }
  part("z", c.w);
  return s.empty() ? "1" : s;
}

TargetReport run_pipeline_on(const GroupTable& g, const SubsetBits& h, const PipelineOptions& opts) {
  TargetReport t;
  t.group = g.name();
  t.order = g.order();
  t.h = h.indices();
  auto done = [&] { return !opts.all_obstructions && !t.certificates.empty(); };

  auto t0 = Clock::now();
  auto lemma = lemma_test(g, h);
  t.steps.push_back({"lemma", lemma.has_value(), since(t0),
                     lemma ? "vanishing character with conductor " + std::to_string(*lemma->conductor) : ""});
  if (lemma) add_cert(t, g, std::move(*lemma));

  if (!done()) {
    t0 = Clock::now();
    auto parity = parity_obstruction(g, h);
    t.steps.push_back({"parity", parity.has_value(), since(t0),
                       parity ? std::to_string(parity->rows.size()) + " rows sum to 0 = 1" : ""});
    if (parity) add_cert(t, g, std::move(*parity));
  }

  if (!done() && is_g15_target(g, h)) {
    t0 = Clock::now();
    const auto rep = replay_g15(family_of(g.name())->p, false);
    t.steps.push_back({"boolring", true, since(t0), "Z_x + Z_xz^2 + Z_x^p2z^2 = 1"});
    add_cert(t, g, rep.cert);
  }

  const bool small = g.order() <= opts.search_max_order || opts.force_search;
  if (small && (!done() || opts.all_obstructions)) {
    t0 = Clock::now();
    const auto r = search_drad(g, h, opts.search);
    std::string note = std::to_string(r.witnesses.size()) + " witnesses, " + std::to_string(r.stats.nodes) + " nodes";
    if (!r.stats.complete) note += ", incomplete";
    t.steps.push_back({"search", !r.witnesses.empty(), since(t0), note});
    for (const auto& d : r.witnesses) {
      if (!is_drad(g, h, d).accepted)
        throw Error(ErrorCode::IdentityViolation, "search returned a set that fails verification");
      t.witnesses.push_back(d.indices());
    }
    if (!t.witnesses.empty()) {
      if (!t.certificates.empty())
        throw Error(ErrorCode::IdentityViolation, "both a certificate and a witness for " + g.name());
      t.status = TargetStatus::Exists;
    } else if (r.stats.complete) {
      add_cert(t, g, exhausted_search_cert(g, h, r.stats));
    }
  }
  return t;
}

std::vector<TargetReport> run_pipeline(const GroupTable& g, const PipelineOptions& opts) {
  std::vector<TargetReport> out;
  if (!exact_sqrt(g.order())) throw Error(ErrorCode::NotSquareOrder, g.name() + " has non-square order");

  auto t0 = Clock::now();
  auto inv = involution_obstruction(g);
  const double inv_seconds = since(t0);
  if (inv) {
    TargetReport t;
    t.group = g.name();
    t.order = g.order();
    t.steps.push_back({"involution", true, inv_seconds,
                       "involutions generate a subgroup of order " + std::to_string(inv->h.count())});
    add_cert(t, g, std::move(*inv));
    out.push_back(std::move(t));
    if (!opts.all_obstructions) return out;
  }

  t0 = Clock::now();
  const auto hs = candidate_subgroups(g);
  if (hs.empty()) {
    if (out.empty()) {
      TargetReport t;
      t.group = g.name();
      t.order = g.order();
      t.steps.push_back({"involution", false, inv_seconds, ""});
      out.push_back(std::move(t));
    }
    auto& t = out.front();
    t.steps.push_back({"candidates", true, since(t0), "no normal subgroup of order sqrt|G| holds every involution"});
    add_cert(t, g, no_candidate_cert(g));
    return out;
  }
  for (const auto& h : hs) {
    auto t = run_pipeline_on(g, h, opts);
    t.steps.insert(t.steps.begin(), StepRecord{"involution", false, inv_seconds, ""});
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace drad
