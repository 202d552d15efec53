#include "drad/report.hpp"

#include <array>
#include <iomanip>
#include <ostream>

#include "drad/error.hpp"

namespace drad {

using nlohmann::json;

namespace {

constexpr std::string_view kAlphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
constexpr std::array<std::string_view, 3> kStatusNames = {"exists", "nonexistent", "undecided"};

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

json subset_json(const SubsetBits& s) { return s.indices(); }

SubsetBits subset_from(const json& j, const char* key, std::size_t order) {
  const auto idx = field<std::vector<ElementIndex>>(j, key);
  for (auto i : idx)
    if (i >= order) throw Error(ErrorCode::ParseError, std::string("index out of range in '") + key + "'");
  return SubsetBits::from_indices(order, idx);
}

json character_json(const CharacterImages& c) {
  json images = json::array();
  for (const auto& [name, e] : c.images) images.push_back({{"generator", name}, {"exponent", e}});
  return {{"n", c.n}, {"images", images}};
}

CharacterImages character_from(const json& j) {
  CharacterImages c;
  c.n = field<std::uint32_t>(j, "n");
  for (const auto& im : field<json>(j, "images"))
    c.images.emplace_back(field<std::string>(im, "generator"), field<std::uint32_t>(im, "exponent"));
  return c;
}

TargetStatus parse_status(const std::string& s) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i)
    if (kStatusNames[i] == s) return static_cast<TargetStatus>(i);
  throw Error(ErrorCode::ParseError, "unknown status '" + s + "'");
}

}  // namespace

std::string_view to_string(TargetStatus s) { return kStatusNames[static_cast<std::size_t>(s)]; }

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    std::uint32_t chunk = std::uint32_t{bytes[i]} << 16;
    if (i + 1 < bytes.size()) chunk |= std::uint32_t{bytes[i + 1]} << 8;
    if (i + 2 < bytes.size()) chunk |= bytes[i + 2];
    out += kAlphabet[(chunk >> 18) & 63];
    out += kAlphabet[(chunk >> 12) & 63];
    out += i + 1 < bytes.size() ? kAlphabet[(chunk >> 6) & 63] : '=';
    out += i + 2 < bytes.size() ? kAlphabet[chunk & 63] : '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw Error(ErrorCode::ParseError, "base64 length is not a multiple of 4");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::uint32_t chunk = 0;
    int pad = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const char ch = text[i + k];
      std::uint32_t v = 0;
      if (ch == '=') {
        if (i + 4 != text.size() || k < 2) throw Error(ErrorCode::ParseError, "misplaced base64 padding");
        ++pad;
      } else {
        if (pad) throw Error(ErrorCode::ParseError, "misplaced base64 padding");
        const auto pos = kAlphabet.find(ch);
        if (pos == std::string_view::npos) throw Error(ErrorCode::ParseError, "bad base64 character");
        v = static_cast<std::uint32_t>(pos);
      }
      chunk = chunk << 6 | v;
    }
    out.push_back(static_cast<std::uint8_t>(chunk >> 16));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>(chunk >> 8));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(chunk));
  }
  return out;
}

json cert_to_json(const ObstructionCert& c) {
  json j = {{"kind", to_string(c.kind)},
            {"group", c.group},
            {"order", c.h.universe()},
            {"H", subset_json(c.h)},
            {"conclusion", c.conclusion}};
  if (c.character) j["character"] = character_json(*c.character);
  if (c.conductor) j["conductor"] = *c.conductor;
  if (c.kind == CertKind::ParityInfeasible) {
    j["variables"] = c.variables;
    json rows = json::array();
    for (const auto& r : c.rows) {
      json row = {{"bits", base64_encode(r.row.to_bytes())}, {"rhs", r.rhs}};
      if (r.source == ParityRow::Source::Character) {
        row["source"] = "character";
        row["character"] = character_json(r.character);
        row["coordinate"] = r.coordinate;
      } else {
        row["source"] = "coset";
        row["coset_rep"] = r.coset_rep;
      }
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
  }
  if (c.kind == CertKind::BoolRingUnit) {
    j["Y"] = subset_json(c.y);
    j["unit_combination"] = c.unit_combination;
  }
  if (c.kind == CertKind::ExhaustedSearch) j["search_nodes"] = c.search_nodes;
  return j;
}

ObstructionCert cert_from_json(const json& j) {
  ObstructionCert c;
  const auto kind = parse_cert_kind(field<std::string>(j, "kind"));
  if (!kind) throw Error(ErrorCode::ParseError, "unknown certificate kind");
  c.kind = *kind;
  c.group = field<std::string>(j, "group");
  const auto order = field<std::size_t>(j, "order");
  c.h = subset_from(j, "H", order);
  c.conclusion = field<std::string>(j, "conclusion");
  if (j.contains("character")) c.character = character_from(j.at("character"));
  if (j.contains("conductor")) c.conductor = field<std::uint32_t>(j, "conductor");
  if (c.kind == CertKind::ParityInfeasible) {
    c.variables = field<std::size_t>(j, "variables");
    for (const auto& row : field<json>(j, "rows")) {
      ParityRow r;
      const auto source = field<std::string>(row, "source");
      if (source == "character") {
        r.source = ParityRow::Source::Character;
        r.character = character_from(field<json>(row, "character"));
        r.coordinate = field<std::uint32_t>(row, "coordinate");
      } else if (source == "coset") {
        r.source = ParityRow::Source::Coset;
        r.coset_rep = field<ElementIndex>(row, "coset_rep");
      } else {
        throw Error(ErrorCode::ParseError, "unknown row source '" + source + "'");
      }
      r.row = BitRow::from_bytes(c.variables, base64_decode(field<std::string>(row, "bits")));
      r.rhs = field<bool>(row, "rhs");
      c.rows.push_back(std::move(r));
    }
  }
  if (c.kind == CertKind::BoolRingUnit) {
    c.y = subset_from(j, "Y", order);
    c.unit_combination = field<std::vector<ElementIndex>>(j, "unit_combination");
  }
  if (c.kind == CertKind::ExhaustedSearch) c.search_nodes = field<std::uint64_t>(j, "search_nodes");
  return c;
}

json report_to_json(const RunReport& r) {
  json targets = json::array();
  for (const auto& t : r.targets) {
    json steps = json::array();
    for (const auto& s : t.steps)
      steps.push_back({{"step", s.step}, {"fired", s.fired}, {"seconds", s.seconds}, {"note", s.note}});
    json certs = json::array();
    for (const auto& c : t.certificates) certs.push_back(cert_to_json(c));
    targets.push_back({{"group", t.group},
                       {"order", t.order},
                       {"H", t.h},
                       {"status", to_string(t.status)},
                       {"steps", steps},
                       {"certificates", certs},
                       {"witnesses", t.witnesses},
                       {"details", t.details}});
  }
  return {{"schema_version", r.schema_version},
          {"engine_version", r.engine_version},
          {"command", r.command},
          {"targets", targets},
          {"seconds", r.seconds},
          {"details", r.details}};
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.schema_version = field<int>(j, "schema_version");
  r.engine_version = field<std::string>(j, "engine_version");
  r.command = field<std::vector<std::string>>(j, "command");
  r.seconds = field<double>(j, "seconds");
  r.details = field<json>(j, "details");
  for (const auto& tj : field<json>(j, "targets")) {
    TargetReport t;
    t.group = field<std::string>(tj, "group");
    t.order = field<std::size_t>(tj, "order");
    t.h = field<std::vector<ElementIndex>>(tj, "H");
    t.status = parse_status(field<std::string>(tj, "status"));
    for (const auto& sj : field<json>(tj, "steps"))
      t.steps.push_back({field<std::string>(sj, "step"), field<bool>(sj, "fired"), field<double>(sj, "seconds"),
                         field<std::string>(sj, "note")});
    for (const auto& cj : field<json>(tj, "certificates")) t.certificates.push_back(cert_from_json(cj));
    t.witnesses = field<std::vector<std::vector<ElementIndex>>>(tj, "witnesses");
    t.details = field<json>(tj, "details");
    r.targets.push_back(std::move(t));
  }
  return r;
}

void write_text(std::ostream& out, const RunReport& r) {
  auto list = [&](const std::vector<ElementIndex>& v) {
    out << '{';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '}';
  };
  for (const auto& t : r.targets) {
    out << t.group << " (order " << t.order << ")";
    if (!t.h.empty()) {
      out << " H=";
      list(t.h);
    }
    out << ": " << to_string(t.status) << '\n';
    for (const auto& s : t.steps) {
      out << "  " << std::left << std::setw(11) << s.step << (s.fired ? "fired    " : "not fired");
      if (!s.note.empty()) out << "  " << s.note;
      out << '\n';
    }
    for (const auto& c : t.certificates) {
      out << "  certificate " << to_string(c.kind);
      if (c.conductor) out << " m=" << *c.conductor;
      if (c.kind == CertKind::ParityInfeasible) out << " rows=" << c.rows.size() << " vars=" << c.variables;
      out << ": " << c.conclusion << '\n';
    }
    for (const auto& w : t.witnesses) {
      out << "  witness D=";
      list(w);
      out << '\n';
    }
  }
}

}  // namespace drad
