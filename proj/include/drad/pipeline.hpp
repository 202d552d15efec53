#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drad/group.hpp"
#include "drad/report.hpp"
#include "drad/search.hpp"

namespace drad {

/// "cat(16,2)" or "G15(5)". Throws InvalidArgument for anything else.
GroupTable resolve_group(std::string_view name);
/// The family parameters behind a "G15(5)"-style name, if it is one.
std::optional<FamilySpec> family_of(std::string_view name);

/// "x^2yz^3" for family groups, the bare index otherwise.
std::string element_name(const GroupTable& g, ElementIndex e);

struct PipelineOptions {
  /// Run every obstruction instead of stopping at the first certificate.
  bool all_obstructions = false;
  /// Search even above search_max_order.
  bool force_search = false;
  std::size_t search_max_order = 36;
  SearchOptions search;
};

/// The fixed order: involution subgroup, candidate H, then per H the
/// character lemma, the parity system, the G15 replay, and search as the
/// fallback for small orders. Every certificate is re-validated and every
/// witness re-verified before it is reported; a contradiction between the
/// two throws IdentityViolation.
std::vector<TargetReport> run_pipeline(const GroupTable& g, const PipelineOptions& opts = {});

/// Same, restricted to one given H.
TargetReport run_pipeline_on(const GroupTable& g, const SubsetBits& h, const PipelineOptions& opts = {});

}  // namespace drad
