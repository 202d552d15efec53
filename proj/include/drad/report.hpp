#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "drad/obstruction.hpp"
#include "drad/subset.hpp"

namespace drad {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kEngineVersion = "1.0.0";

enum class TargetStatus { Exists, Nonexistent, Undecided };
std::string_view to_string(TargetStatus s);

/// One obstruction or search step as it ran on a target.
struct StepRecord {
  std::string step;  // involution, candidates, lemma, parity, boolring, search
  bool fired = false;
  double seconds = 0;
  std::string note;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// The outcome for one (G, H); H is empty when the claim is about G alone.
struct TargetReport {
  std::string group;
  std::size_t order = 0;
  std::vector<ElementIndex> h;
  TargetStatus status = TargetStatus::Undecided;
  std::vector<StepRecord> steps;
  std::vector<ObstructionCert> certificates;
  std::vector<std::vector<ElementIndex>> witnesses;
  nlohmann::json details = nlohmann::json::object();
  friend bool operator==(const TargetReport&, const TargetReport&) = default;
};

struct RunReport {
  int schema_version = kSchemaVersion;
  std::string engine_version{kEngineVersion};
  std::vector<std::string> command;
  std::vector<TargetReport> targets;
  double seconds = 0;
  nlohmann::json details = nlohmann::json::object();
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
/// Throws ParseError on malformed input.
std::vector<std::uint8_t> base64_decode(std::string_view text);

nlohmann::json cert_to_json(const ObstructionCert& c);
/// Throws ParseError on missing or ill-typed fields.
ObstructionCert cert_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

/// Plain-text rendering; identical input gives identical text.
void write_text(std::ostream& out, const RunReport& r);

}  // namespace drad
