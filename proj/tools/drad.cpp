// drad: command-line front end for the DRAD engine.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "drad/boolring.hpp"
#include "drad/catalog.hpp"
#include "drad/design.hpp"
#include "drad/error.hpp"
#include "drad/pipeline.hpp"
#include "drad/subgroups.hpp"

namespace {

using namespace drad;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitRejected = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconsistent = 3;

struct Options {
  std::string json_path;
  unsigned threads = 1;
  double time_budget = 0;

  int order = 0;
  int id = 0;
  std::string family;
  std::uint64_t p = 0;
  std::string group;
  std::string subgroup = "auto";
  std::size_t limit = 0;
  std::string witness_in;
  std::string witness_out;
  bool all_obstructions = false;
  bool force_search = false;
  bool check_lemmas = false;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::IdentityViolation:
    case ErrorCode::CatalogCorrupt:
    case ErrorCode::PolyTooLarge:
      return kExitInconsistent;
    default:
      return kExitInvalid;
  }
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.threads = std::max(1u, o.threads);
  if (o.limit) s.limit = o.limit;
  if (o.time_budget > 0) s.time_budget = o.time_budget;
  return s;
}

std::vector<GroupTable> select_groups(const Options& o) {
  if (!o.group.empty()) return {resolve_group(o.group)};
  if (!o.family.empty()) {
    const auto fam = parse_family(o.family);
    if (!fam) throw Error(ErrorCode::InvalidArgument, "unknown family '" + o.family + "'");
    if (o.p == 0) throw Error(ErrorCode::InvalidArgument, "--family needs --p");
    return {make_family(FamilySpec::make(*fam, o.p))};
  }
  if (o.order) {
    if (o.order == 64)
      throw Error(ErrorCode::InvalidArgument, "the order-64 catalog is not shipped; only 16 and 36 are available");
    if (o.order != 16 && o.order != 36)
      throw Error(ErrorCode::InvalidArgument, "no catalog for order " + std::to_string(o.order));
    auto groups = load_catalog(o.order);
    if (o.id) {
      if (o.id < 1 || o.id > static_cast<int>(groups.size()))
        throw Error(ErrorCode::InvalidArgument, "catalog id out of range");
      return {std::move(groups[o.id - 1])};
    }
    return groups;
  }
  throw Error(ErrorCode::InvalidArgument, "select groups with --order, --family/--p or --group");
}

std::vector<SubsetBits> select_subgroups(const Options& o, const GroupTable& g) {
  if (o.subgroup == "auto") return candidate_subgroups(g);
  std::vector<ElementIndex> idx;
  std::stringstream ss(o.subgroup);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size() || v >= g.order()) throw std::invalid_argument(item);
      idx.push_back(static_cast<ElementIndex>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad subgroup element '" + item + "'");
    }
  }
  auto h = SubsetBits::from_indices(g.order(), idx);
  if (!is_subgroup(g, h)) throw Error(ErrorCode::BadSubgroup, "--subgroup is not a subgroup");
  return {h};
}

json verdict_json(const DradVerdict& v) {
  json j = {{"is_diffset", v.is_diffset},
            {"disjoint_inverse", v.disjoint_inverse},
            {"complement_is_h", v.complement_is_h},
            {"coset_balance", v.coset_balance},
            {"balanced", v.balanced},
            {"accepted", v.accepted},
            {"first_failure", to_string(v.first_failure)}};
  j["lambda"] = v.lambda ? json(*v.lambda) : json(nullptr);
  return j;
}

void emit(const Options& o, RunReport& r, const Clock::time_point t0, const std::string& head,
          const std::string& tail = "") {
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const auto j = report_to_json(r);
  if (o.json_path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << head;
  write_text(std::cout, r);
  std::cout << tail;
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + o.json_path);
    out << j.dump(2) << '\n';
  }
}

int cmd_catalog(const Options& o, RunReport& r, Clock::time_point t0) {
  if (!o.order) throw Error(ErrorCode::InvalidArgument, "catalog needs --order");
  const auto groups = select_groups(o);
  std::ostringstream text;
  json list = json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto id = o.id ? o.id : static_cast<int>(i + 1);
    const auto f = fingerprint(groups[i]);
    const auto label = catalog_label(o.order, id);
    text << groups[i].name() << "  " << label << "  " << describe(f) << '\n';
    list.push_back({{"group", groups[i].name()}, {"label", label}, {"fingerprint", describe(f)}});
  }
  r.details["catalog"] = list;
  emit(o, r, t0, text.str());
  return 0;
}

int cmd_construct(const Options& o, RunReport& r, Clock::time_point t0) {
  std::ostringstream text;
  json list = json::array();
  for (const auto& g : select_groups(o)) {
    const auto bad = check_group_axioms(g);
    if (bad) throw Error(ErrorCode::IdentityViolation, g.name() + ": " + *bad);
    const auto inv = subgroup_generated(g, involutions(g));
    json gens = json::array();
    text << g.name() << ": order " << g.order() << ", generators";
    for (const auto& gen : g.generators()) {
      gens.push_back({{"name", gen.name}, {"index", gen.index}, {"order", g.element_order(gen.index)}});
      text << ' ' << gen.name << "=" << gen.index;
    }
    json entry = {{"group", g.name()}, {"order", g.order()}, {"generators", gens},
                  {"involution_subgroup_order", inv.count()}};
    std::vector<ElementIndex> inverses(g.order());
    for (ElementIndex e = 0; e < g.order(); ++e) inverses[e] = g.inv(e);
    entry["inverses"] = inverses;
    text << "; involutions generate a subgroup of order " << inv.count();
    if (auto spec = family_of(g.name()); spec && spec->f) {
      entry["f"] = *spec->f;
      text << "; f=" << *spec->f;
    }
    if (exact_sqrt(g.order())) {
      json hs = json::array();
      for (const auto& h : candidate_subgroups(g)) hs.push_back(h.indices());
      entry["candidate_subgroups"] = hs;
      text << "; " << hs.size() << " candidate H";
    }
    text << '\n';
    list.push_back(std::move(entry));
  }
  r.details["groups"] = list;
  emit(o, r, t0, text.str());
  return 0;
}

struct LoadedWitness {
  WitnessFile file;
  GroupTable g;
  SubsetBits h, d;
};

LoadedWitness load_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  auto w = parse_witness(in);
  auto g = resolve_group(w.group);
  if (g.order() != w.order)
    throw Error(ErrorCode::InvalidArgument, "file says order " + std::to_string(w.order) + " but " + g.name() +
                                                " has order " + std::to_string(g.order()));
  for (auto i : w.h)
    if (i >= g.order()) throw Error(ErrorCode::InvalidArgument, "H index out of range");
  for (auto i : w.d)
    if (i >= g.order()) throw Error(ErrorCode::InvalidArgument, "D index out of range");
  auto h = SubsetBits::from_indices(g.order(), w.h);
  auto d = SubsetBits::from_indices(g.order(), w.d);
  return {std::move(w), std::move(g), std::move(h), std::move(d)};
}

int cmd_verify(const Options& o, RunReport& r, Clock::time_point t0) {
  auto lw = load_witness(o.witness_in);
  const auto v = is_drad(lw.g, lw.h, lw.d);
  TargetReport t;
  t.group = lw.g.name();
  t.order = lw.g.order();
  t.h = lw.h.indices();
  t.details["verdict"] = verdict_json(v);
  if (v.accepted) {
    t.status = TargetStatus::Exists;
    t.witnesses.push_back(lw.d.indices());
  }
  r.targets.push_back(std::move(t));
  std::ostringstream text;
  text << (v.accepted ? "accepted" : "rejected");
  if (!v.accepted) text << " (" << to_string(v.first_failure) << ")";
  text << '\n';
  emit(o, r, t0, text.str());
  return v.accepted ? 0 : kExitRejected;
}

int cmd_search(const Options& o, RunReport& r, Clock::time_point t0) {
  const auto sopts = search_options(o);
  std::size_t with_witness = 0, groups_seen = 0;
  std::optional<WitnessFile> first;
  for (const auto& g : select_groups(o)) {
    ++groups_seen;
    const auto hs = select_subgroups(o, g);
    bool found = false;
    if (hs.empty()) {
      TargetReport t;
      t.group = g.name();
      t.order = g.order();
      t.status = TargetStatus::Nonexistent;
      t.certificates.push_back(no_candidate_cert(g));
      r.targets.push_back(std::move(t));
    }
    for (const auto& h : hs) {
      const auto res = search_drad(g, h, sopts);
      TargetReport t;
      t.group = g.name();
      t.order = g.order();
      t.h = h.indices();
      t.steps.push_back({"search", !res.witnesses.empty(), res.stats.elapsed_seconds,
                         std::to_string(res.stats.nodes) + " nodes" + (res.stats.complete ? "" : ", incomplete")});
      t.details["stats"] = {{"nodes", res.stats.nodes},
                            {"balance_prunes", res.stats.balance_prunes},
                            {"lambda_prunes", res.stats.lambda_prunes},
                            {"complete", res.stats.complete}};
      for (const auto& d : res.witnesses) t.witnesses.push_back(d.indices());
      if (!res.witnesses.empty()) {
        t.status = TargetStatus::Exists;
        found = true;
        if (!first) first = WitnessFile{g.order(), g.name(), h.indices(), res.witnesses.front().indices()};
      } else if (res.stats.complete) {
        t.status = TargetStatus::Nonexistent;
        t.certificates.push_back(exhausted_search_cert(g, h, res.stats));
      }
      r.targets.push_back(std::move(t));
    }
    with_witness += found;
  }
  if (!o.witness_out.empty()) {
    if (!first) throw Error(ErrorCode::InvalidArgument, "no witness found to write");
    std::ofstream out(o.witness_out);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + o.witness_out);
    write_witness(out, *first);
  }
  r.details["groups"] = groups_seen;
  r.details["groups_with_witness"] = with_witness;
  std::ostringstream text;
  text << with_witness << " of " << groups_seen << " groups admit a DRAD difference set\n";
  emit(o, r, t0, "", text.str());
  return 0;
}

PipelineOptions pipeline_options(const Options& o) {
  PipelineOptions p;
  p.all_obstructions = o.all_obstructions;
  p.force_search = o.force_search;
  p.search = search_options(o);
  return p;
}

int run_targets(const Options& o, RunReport& r, Clock::time_point t0, const PipelineOptions& popts) {
  std::size_t groups_seen = 0, exists = 0, nonexistent = 0;
  for (const auto& g : select_groups(o)) {
    ++groups_seen;
    std::vector<TargetReport> ts;
    if (o.subgroup == "auto") {
      ts = run_pipeline(g, popts);
    } else {
      for (const auto& h : select_subgroups(o, g)) ts.push_back(run_pipeline_on(g, h, popts));
    }
    bool any_exists = false, all_non = true;
    for (auto& t : ts) {
      any_exists = any_exists || t.status == TargetStatus::Exists;
      all_non = all_non && t.status == TargetStatus::Nonexistent;
      r.targets.push_back(std::move(t));
    }
    exists += any_exists;
    nonexistent += all_non;
  }
  r.details["groups"] = groups_seen;
  r.details["groups_with_witness"] = exists;
  r.details["groups_certified_nonexistent"] = nonexistent;
  std::ostringstream text;
  text << groups_seen << " groups: " << exists << " with a DRAD difference set, " << nonexistent
       << " certified nonexistent, " << groups_seen - exists - nonexistent << " undecided\n";
  emit(o, r, t0, "", text.str());
  return 0;
}

int cmd_obstruct(const Options& o, RunReport& r, Clock::time_point t0) {
  auto popts = pipeline_options(o);
  popts.all_obstructions = true;
  popts.search_max_order = 0;
  popts.force_search = false;
  return run_targets(o, r, t0, popts);
}

int cmd_pipeline(const Options& o, RunReport& r, Clock::time_point t0) {
  const auto popts = pipeline_options(o);
  if (o.witness_in.empty()) return run_targets(o, r, t0, popts);

  auto lw = load_witness(o.witness_in);
  const auto v = is_drad(lw.g, lw.h, lw.d);
  auto t = run_pipeline_on(lw.g, lw.h, popts);
  t.details["verdict"] = verdict_json(v);
  if (v.accepted && !t.certificates.empty())
    throw Error(ErrorCode::IdentityViolation, "an accepted witness and an obstruction certificate for the same (G,H)");
  if (v.accepted && t.status != TargetStatus::Exists) {
    t.status = TargetStatus::Exists;
    t.witnesses.push_back(lw.d.indices());
  }
  r.targets.push_back(std::move(t));
  emit(o, r, t0, std::string("witness ") + (v.accepted ? "accepted" : "rejected") + "\n");
  return 0;
}

int cmd_replay(const Options& o, RunReport& r, Clock::time_point t0) {
  const auto rep = replay_g15(o.p ? o.p : 5, o.check_lemmas);
  const auto g = make_family(FamilySpec::make(Family::G15, rep.p));
  if (auto why = revalidate(rep.cert, g)) throw Error(ErrorCode::IdentityViolation, *why);
  TargetReport t;
  t.group = g.name();
  t.order = g.order();
  t.h = rep.cert.h.indices();
  t.status = TargetStatus::Nonexistent;
  t.steps.push_back({"boolring", true, rep.seconds, ""});
  t.certificates.push_back(rep.cert);
  json checks = json::array();
  std::ostringstream text;
  text << "G15 replay, p = " << rep.p << ", " << rep.variables << " variables\n";
  for (const auto& c : rep.checks) {
    checks.push_back({{"identity", c.name}, {"holds", c.holds}, {"monomials", c.monomials}, {"seconds", c.seconds}});
    text << "  " << (c.holds ? "ok   " : "FAIL ") << c.name << "  (" << c.monomials << " monomials)\n";
  }
  json zs = json::array();
  for (const auto& z : rep.z) zs.push_back(z.size());
  t.details["checks"] = checks;
  t.details["z_monomials"] = zs;
  t.details["variables"] = rep.variables;
  r.targets.push_back(std::move(t));
  emit(o, r, t0, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for and rule out DRAD difference sets in finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--json", o.json_path, "Write the JSON report to this path ('-' for stdout)");
  app.add_option("--threads", o.threads, "Search threads")->check(CLI::PositiveNumber);
  app.add_option("--time-budget", o.time_budget, "Search wall-clock budget in seconds")->check(CLI::NonNegativeNumber);

  auto selectors = [&](CLI::App* c) {
    c->add_option("--order", o.order, "Catalog order (16 or 36)");
    c->add_option("--id", o.id, "Catalog id within --order");
    c->add_option("--family", o.family, "Family G4, G11, G13, G14, G15 or G16");
    c->add_option("--p", o.p, "Prime for --family");
    c->add_option("--group", o.group, "Group name, e.g. cat(16,2) or G15(5)");
  };

  auto* catalog = app.add_subcommand("catalog", "List a small-group catalog");
  selectors(catalog);
  auto* construct = app.add_subcommand("construct", "Build groups and report their structure");
  selectors(construct);
  auto* verify = app.add_subcommand("verify", "Check a witness file");
  verify->add_option("file", o.witness_in, "Witness file")->required();
  auto* search = app.add_subcommand("search", "Exhaustive search for DRAD difference sets");
  selectors(search);
  search->add_option("--subgroup", o.subgroup, "auto, or comma-separated element indices of H");
  search->add_option("--limit", o.limit, "Stop after this many witnesses per H");
  search->add_option("--witness-out", o.witness_out, "Write the first witness to this file");
  auto* obstruct = app.add_subcommand("obstruct", "Run every obstruction without search");
  selectors(obstruct);
  obstruct->add_option("--subgroup", o.subgroup, "auto, or comma-separated element indices of H");
  auto* replay = app.add_subcommand("replay-g15", "Replay the Boolean-ring argument for G15");
  replay->add_option("--p", o.p, "Prime p = 1 mod 4")->required();
  replay->add_flag("--check-lemmas", o.check_lemmas, "Also check the intermediate identities");
  auto* pipeline = app.add_subcommand("pipeline", "Obstructions in order, then search for small groups");
  selectors(pipeline);
  pipeline->add_option("--subgroup", o.subgroup, "auto, or comma-separated element indices of H");
  pipeline->add_option("--witness", o.witness_in, "Run on the (G,H) of a witness file and cross-check it");
  pipeline->add_option("--limit", o.limit, "Stop search after this many witnesses per H");
  pipeline->add_flag("--all-obstructions", o.all_obstructions, "Do not stop at the first certificate");
  pipeline->add_flag("--force-search", o.force_search, "Search at any order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  RunReport r;
  r.command.assign(argv, argv + argc);
  r.command.front() = "drad";
  const auto t0 = Clock::now();
  try {
    if (*catalog) return cmd_catalog(o, r, t0);
    if (*construct) return cmd_construct(o, r, t0);
    if (*verify) return cmd_verify(o, r, t0);
    if (*search) return cmd_search(o, r, t0);
    if (*obstruct) return cmd_obstruct(o, r, t0);
    if (*replay) return cmd_replay(o, r, t0);
    if (*pipeline) return cmd_pipeline(o, r, t0);
  } catch (const Error& e) {
    std::cerr << "drad: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "drad: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitInvalid;
}
