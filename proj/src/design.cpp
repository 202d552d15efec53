#include "drad/design.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "drad/error.hpp"
#include "drad/subgroups.hpp"

namespace drad {

DesignParams drad_params(std::uint64_t h) {
  if (h < 4 || h % 2 != 0)
    throw Error(ErrorCode::BadSubgroupOrder, "h=" + std::to_string(h) + " must be even and >= 4");
  return {h, h * h, h * (h - 1) / 2, h * (h - 2) / 4};
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

std::vector<std::uint64_t> difference_multiset(const GroupTable& g, const SubsetBits& d) {
  std::vector<std::uint64_t> counts(g.order(), 0);
  const auto members = d.indices();
  for (auto a : members)
    for (auto b : members) ++counts[g.mul(a, g.inv(b))];
  return counts;
}

std::optional<std::uint64_t> is_difference_set(const GroupTable& g, const SubsetBits& d) {
  const auto counts = difference_multiset(g, d);
  if (g.order() == 1) return 0;
  const auto lambda = counts[1];
  for (std::size_t x = 1; x < counts.size(); ++x)
    if (counts[x] != lambda) return std::nullopt;
  return lambda;
}

std::string_view to_string(DradClause c) {
  switch (c) {
    case DradClause::None: return "none";
    case DradClause::DisjointInverse: return "disjoint_inverse";
    case DradClause::ComplementIsH: return "complement_is_H";
    case DradClause::CosetBalance: return "coset_balance";
    case DradClause::Lambda: return "lambda";
  }
  return "?";
}

DradVerdict is_drad(const GroupTable& g, const SubsetBits& h, const SubsetBits& d) {
  const auto hsize = h.count();
  if (h.universe() != g.order() || d.universe() != g.order())
    throw Error(ErrorCode::BadSubgroup, "subset universe does not match the group");
  if (hsize * hsize != g.order()) throw Error(ErrorCode::BadSubgroup, "|H|^2 != |G|");
  if (!is_normal(g, h)) throw Error(ErrorCode::BadSubgroup, "H is not a normal subgroup");

  DradVerdict v;
  SubsetBits dinv(g.order());
  d.for_each([&](ElementIndex a) { dinv.insert(g.inv(a)); });
  v.disjoint_inverse = (d & dinv).empty();
  v.complement_is_h = (g.all() - (d | dinv)) == h;

  const auto cs = cosets(g, h);
  v.balanced = true;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto meet = (d & cs[c]).count();
    v.coset_balance.push_back(meet);
    if (c > 0 && meet * 2 != hsize) v.balanced = false;
  }

  v.lambda = is_difference_set(g, d);
  v.is_diffset = v.lambda.has_value();
  bool lambda_ok = false;
  if (v.is_diffset && hsize >= 4 && hsize % 2 == 0) {
    const auto params = drad_params(hsize);
    lambda_ok = *v.lambda == params.lambda && d.count() == params.k;
  }

  if (!v.disjoint_inverse)
    v.first_failure = DradClause::DisjointInverse;
  else if (!v.complement_is_h)
    v.first_failure = DradClause::ComplementIsH;
  else if (!v.balanced)
    v.first_failure = DradClause::CosetBalance;
  else if (!lambda_ok)
    v.first_failure = DradClause::Lambda;
  v.accepted = v.first_failure == DradClause::None;
  return v;
}

std::vector<SubsetBits> candidate_subgroups(const GroupTable& g) {
  const auto h = exact_sqrt(g.order());
  if (!h) throw Error(ErrorCode::NotSquareOrder, "|G|=" + std::to_string(g.order()) + " is not a square");
  const auto inv_sub = subgroup_generated(g, involutions(g));
  if (inv_sub.count() > *h || *h % inv_sub.count() != 0) return {};
  return normal_subgroups_containing(g, inv_sub, *h);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ElementIndex> parse_indices(std::string_view rest, int line_no) {
  std::vector<ElementIndex> out;
  std::istringstream is{std::string(rest)};
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<ElementIndex>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad index '" + tok + "'");
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

WitnessFile parse_witness(std::istream& in) {
  WitnessFile w;
  bool have_order = false, have_group = false, have_h = false, have_d = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
    };
    if (t.rfind("order ", 0) == 0) {
      const auto vals = parse_indices(t.substr(6), line_no);
      if (vals.size() != 1) fail("expected a single order");
      w.order = vals[0];
      have_order = true;
    } else if (t.rfind("group ", 0) == 0) {
      w.group = trim(t.substr(6));
      if (w.group.empty()) fail("empty group name");
      have_group = true;
    } else if (t.rfind("H:", 0) == 0) {
      w.h = parse_indices(t.substr(2), line_no);
      have_h = true;
    } else if (t.rfind("D:", 0) == 0) {
      w.d = parse_indices(t.substr(2), line_no);
      have_d = true;
    } else {
      fail("unrecognised line '" + t + "'");
    }
  }
  if (!have_order || !have_group || !have_h || !have_d)
    throw Error(ErrorCode::ParseError, "witness file needs order, group, H: and D: lines");
  for (auto idx : w.h)
    if (idx >= w.order) throw Error(ErrorCode::ParseError, "H index " + std::to_string(idx) + " out of range");
  for (auto idx : w.d)
    if (idx >= w.order) throw Error(ErrorCode::ParseError, "D index " + std::to_string(idx) + " out of range");
  return w;
}

void write_witness(std::ostream& out, const WitnessFile& w) {
  out << "order " << w.order << "\n";
  out << "group " << w.group << "\n";
  out << "H:";
  for (auto i : w.h) out << ' ' << i;
  out << "\nD:";
  for (auto i : w.d) out << ' ' << i;
  out << "\n";
}

}  // namespace drad
