#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drad/group.hpp"

namespace drad {

/// One power-conjugate presentation. Generators g_0..g_{n-1} with prime
/// relative orders r_i; an exponent word is a length-n vector meaning
/// g_0^{e_0} ... g_{n-1}^{e_{n-1}}.
///   power_relations[i]     = g_i^{r_i}
///   conj_relations[i][j-i-1] = g_i^-1 g_j g_i   (j > i)
/// Words on the right-hand side may only involve generators after i.
struct PcCatalogEntry {
  int order = 0;
  int id = 0;
  std::string name;
  std::vector<int> gen_orders;
  std::vector<std::vector<int>> power_relations;
  std::vector<std::vector<std::vector<int>>> conj_relations;

  friend bool operator==(const PcCatalogEntry&, const PcCatalogEntry&) = default;
};

/// Parses a JSON array of entries. Throws ParseError on schema violations.
std::vector<PcCatalogEntry> parse_catalog(std::string_view json_text);

/// Builds the Cayley table by collection. The group is named
/// "cat(<order>,<id>)", generators "g1".."gn". Throws CatalogCorrupt if the
/// presentation does not describe a group of the stated order.
GroupTable collect(const PcCatalogEntry& entry);

struct Fingerprint {
  std::vector<std::pair<std::size_t, std::size_t>> element_orders;  // (order, count)
  std::size_t center_size = 0;
  std::vector<std::uint64_t> abelianization;
  std::size_t class_count = 0;
  std::size_t derived_size = 0;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupTable& g);
std::string describe(const Fingerprint& f);

/// Directory holding catalog<order>.json. Taken from $DRAD_CATALOG_DIR when
/// set, else the data/ directory of the source tree.
std::filesystem::path catalog_dir();

/// Loads, collects and validates every entry for order 16 or 36: group
/// axioms, stated order, and pairwise-distinct fingerprints. Throws
/// CatalogCorrupt otherwise.
std::vector<GroupTable> load_catalog(int order);
std::vector<GroupTable> load_catalog_file(const std::filesystem::path& path, int order);

/// Human-readable name of a catalog group ("C4 : C4"), or "" if unknown.
std::string catalog_label(int order, int id);

}  // namespace drad
