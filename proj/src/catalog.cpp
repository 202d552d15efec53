#include "drad/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "drad/error.hpp"
#include "drad/subgroups.hpp"

#ifndef DRAD_DEFAULT_DATA_DIR
#define DRAD_DEFAULT_DATA_DIR "data"
#endif

namespace drad {

using nlohmann::json;

std::vector<PcCatalogEntry> parse_catalog(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("catalog JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "catalog must be a JSON array");
  std::vector<PcCatalogEntry> out;
  for (const auto& item : doc) {
    try {
      PcCatalogEntry e;
      e.order = item.at("order").get<int>();
      e.id = item.at("id").get<int>();
      e.name = item.value("name", "");
      e.gen_orders = item.at("gen_orders").get<std::vector<int>>();
      e.power_relations = item.at("power_relations").get<std::vector<std::vector<int>>>();
      e.conj_relations = item.at("conj_relations").get<std::vector<std::vector<std::vector<int>>>>();
      const auto n = e.gen_orders.size();
      if (e.power_relations.size() != n || e.conj_relations.size() != n)
        throw Error(ErrorCode::ParseError, "relation list length mismatch");
      for (std::size_t i = 0; i < n; ++i) {
        if (e.power_relations[i].size() != n) throw Error(ErrorCode::ParseError, "power word length");
        if (e.conj_relations[i].size() != n - 1 - i) throw Error(ErrorCode::ParseError, "conj row length");
        for (const auto& w : e.conj_relations[i])
          if (w.size() != n) throw Error(ErrorCode::ParseError, "conj word length");
      }
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::ParseError, std::string("catalog entry: ") + ex.what());
    }
  }
  return out;
}

namespace {

class Collector {
 public:
  explicit Collector(const PcCatalogEntry& e) : e_(e), n_(e.gen_orders.size()) {
    std::size_t size = 1;
    for (auto r : e.gen_orders) {
      if (r < 2) throw Error(ErrorCode::CatalogCorrupt, "relative order < 2");
      size *= static_cast<std::size_t>(r);
    }
    size_ = size;
    stride_.assign(n_, 1);
    for (std::size_t i = n_; i-- > 1;) stride_[i - 1] = stride_[i] * e.gen_orders[i];
    memo_.assign(size_ * n_, kUnknown);
    for (std::size_t i = 0; i < n_; ++i) {
      check_tail(e.power_relations[i], i);
      power_.push_back(encode(e.power_relations[i]));
      std::vector<ElementIndex> row(n_, 0);
      for (std::size_t j = i + 1; j < n_; ++j) {
        check_tail(e.conj_relations[i][j - i - 1], i);
        row[j] = encode(e.conj_relations[i][j - i - 1]);
      }
      conj_.push_back(std::move(row));
    }
  }

  std::size_t size() const { return size_; }

  ElementIndex multiply(ElementIndex a, ElementIndex b) {
    for (std::size_t k = 0; k < n_; ++k) {
      const auto ek = digit(b, k);
      for (std::size_t t = 0; t < ek; ++t) a = times_gen(a, k);
    }
    return a;
  }

  ElementIndex gen(std::size_t k) const { return static_cast<ElementIndex>(stride_[k]); }

 private:
  static constexpr ElementIndex kUnknown = ~ElementIndex{0};

  void check_tail(const std::vector<int>& w, std::size_t i) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (w[k] < 0 || w[k] >= e_.gen_orders[k]) throw Error(ErrorCode::CatalogCorrupt, "exponent out of range");
      if (k <= i && w[k] != 0)
        throw Error(ErrorCode::CatalogCorrupt, "relation word uses a generator at or before its own");
    }
  }

  ElementIndex encode(const std::vector<int>& w) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n_; ++k) idx += static_cast<std::size_t>(w[k]) * stride_[k];
    return static_cast<ElementIndex>(idx);
  }
  std::size_t digit(ElementIndex a, std::size_t k) const {
    return (a / stride_[k]) % static_cast<std::size_t>(e_.gen_orders[k]);
  }

  // u * g_k for a normal word u = prefix * g_k^{e_k} * tail:
  //   = prefix * g_k^{e_k + 1} * tail^{g_k}
  // with g_k^{r_k} replaced by its power relation.
  ElementIndex times_gen(ElementIndex u, std::size_t k) {
    auto& slot = memo_[u * n_ + k];
    if (slot != kUnknown) return slot;
    const auto head = (u / stride_[k] / e_.gen_orders[k]) * stride_[k] * e_.gen_orders[k];  // digits < k
    const auto ek = digit(u, k);
    const auto tail = u % stride_[k];  // digits > k
    ElementIndex conj_tail = 0;
    for (std::size_t j = k + 1; j < n_; ++j)
      for (std::size_t t = 0; t < digit(tail, j); ++t) conj_tail = multiply(conj_tail, conj_[k][j]);
    ElementIndex w;
    std::size_t new_ek = ek + 1;
    if (new_ek == static_cast<std::size_t>(e_.gen_orders[k])) {
      new_ek = 0;
      w = multiply(power_[k], conj_tail);
    } else {
      w = conj_tail;
    }
    const auto result = static_cast<ElementIndex>(head + new_ek * stride_[k] + w);
    memo_[u * n_ + k] = result;
    return result;
  }

  const PcCatalogEntry& e_;
  std::size_t n_;
  std::size_t size_ = 1;
  std::vector<std::size_t> stride_;
  std::vector<ElementIndex> power_;
  std::vector<std::vector<ElementIndex>> conj_;
  std::vector<ElementIndex> memo_;
};

}  // namespace

GroupTable collect(const PcCatalogEntry& entry) {
  const std::string name = "cat(" + std::to_string(entry.order) + "," + std::to_string(entry.id) + ")";
  Collector c(entry);
  if (c.size() != static_cast<std::size_t>(entry.order))
    throw Error(ErrorCode::CatalogCorrupt, name + ": relative orders multiply to " + std::to_string(c.size()));
  const auto n = c.size();
  std::vector<ElementIndex> table(n * n);
  for (ElementIndex a = 0; a < n; ++a)
    for (ElementIndex b = 0; b < n; ++b) table[a * n + b] = c.multiply(a, b);
  std::vector<NamedElement> gens;
  for (std::size_t k = 0; k < entry.gen_orders.size(); ++k) gens.push_back({"g" + std::to_string(k + 1), c.gen(k)});
  try {
    GroupTable g(name, n, std::move(table), std::move(gens));
    if (auto err = check_group_axioms(g)) throw Error(ErrorCode::CatalogCorrupt, name + ": " + *err);
    return g;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CatalogCorrupt) throw;
    throw Error(ErrorCode::CatalogCorrupt, name + ": " + e.what());
  }
}

Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint f;
  std::map<std::size_t, std::size_t> orders;
  for (ElementIndex a = 0; a < g.order(); ++a) ++orders[g.element_order(a)];
  f.element_orders.assign(orders.begin(), orders.end());
  f.center_size = center(g).count();
  const auto derived = commutator_subgroup(g);
  f.derived_size = derived.count();
  f.abelianization = abelian_invariants(quotient(g, derived).table);
  f.class_count = conjugacy_classes(g).size();
  return f;
}

std::string describe(const Fingerprint& f) {
  std::ostringstream os;
  os << "orders{";
  for (auto [o, c] : f.element_orders) os << o << ":" << c << " ";
  os << "} |Z|=" << f.center_size << " |G'|=" << f.derived_size << " ab=[";
  for (auto d : f.abelianization) os << d << " ";
  os << "] classes=" << f.class_count;
  return os.str();
}

std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("DRAD_CATALOG_DIR"); env && *env) return env;
  return DRAD_DEFAULT_DATA_DIR;
}

std::vector<GroupTable> load_catalog_file(const std::filesystem::path& path, int order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open catalog " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto entries = parse_catalog(buf.str());
  std::vector<GroupTable> groups;
  std::vector<Fingerprint> prints;
  for (const auto& e : entries) {
    if (e.order != order)
      throw Error(ErrorCode::CatalogCorrupt, "entry of order " + std::to_string(e.order) + " in catalog " +
                                                 std::to_string(order));
    auto g = collect(e);
    auto fp = fingerprint(g);
    for (std::size_t k = 0; k < prints.size(); ++k)
      if (prints[k] == fp)
        throw Error(ErrorCode::CatalogCorrupt,
                    g.name() + " and " + groups[k].name() + " share fingerprint " + describe(fp));
    prints.push_back(std::move(fp));
    groups.push_back(std::move(g));
  }
  return groups;
}

std::vector<GroupTable> load_catalog(int order) {
  if (order != 16 && order != 36)
    throw Error(ErrorCode::InvalidArgument, "no catalog shipped for order " + std::to_string(order));
  return load_catalog_file(catalog_dir() / ("catalog" + std::to_string(order) + ".json"), order);
}

std::string catalog_label(int order, int id) {
  try {
    std::ifstream in(catalog_dir() / ("catalog" + std::to_string(order) + ".json"));
    if (!in) return "";
    std::stringstream buf;
    buf << in.rdbuf();
    for (const auto& e : parse_catalog(buf.str()))
      if (e.id == id) return e.name;
  } catch (const Error&) {
  }
  return "";
}

}  // namespace drad
