#include "drad/group.hpp"

#include <deque>
#include <random>

#include "drad/error.hpp"

namespace drad {

GroupTable::GroupTable(std::string name, std::size_t order, std::vector<ElementIndex> mul,
                       std::vector<NamedElement> generators)
    : name_(std::move(name)), order_(order), mul_(std::move(mul)), inv_(order, 0),
      generators_(std::move(generators)) {
  if (order_ == 0) throw Error(ErrorCode::InvalidArgument, "group of order 0");
  if (mul_.size() != order_ * order_) throw Error(ErrorCode::InvalidArgument, "table size mismatch");
  for (auto v : mul_)
    if (v >= order_) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
  for (ElementIndex g = 0; g < order_; ++g) {
    if (this->mul(0, g) != g || this->mul(g, 0) != g)
      throw Error(ErrorCode::InvalidArgument, name_ + ": index 0 is not the identity");
  }
  std::vector<char> seen(order_);
  for (ElementIndex a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    bool found = false;
    for (ElementIndex b = 0; b < order_; ++b) {
      const auto c = this->mul(a, b);
      if (seen[c]) throw Error(ErrorCode::InvalidArgument, name_ + ": row is not a permutation");
      seen[c] = 1;
      if (c == 0) {
        inv_[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, name_ + ": element without inverse");
  }
  for (ElementIndex b = 0; b < order_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementIndex a = 0; a < order_; ++a) {
      const auto c = this->mul(a, b);
      if (seen[c]) throw Error(ErrorCode::InvalidArgument, name_ + ": column is not a permutation");
      seen[c] = 1;
    }
  }
  for (const auto& gen : generators_)
    if (gen.index >= order_) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
}

ElementIndex GroupTable::generator(std::string_view name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g.index;
  throw Error(ErrorCode::InvalidArgument, name_ + ": no generator named " + std::string(name));
}

ElementIndex GroupTable::power(ElementIndex g, std::int64_t n) const {
  if (n < 0) {
    g = inv(g);
    n = -n;
  }
  ElementIndex result = 0;
  ElementIndex base = g;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(ElementIndex g) const {
  std::size_t n = 1;
  for (ElementIndex acc = g; acc != 0; acc = mul(acc, g)) ++n;
  return n;
}

ElementIndex GroupTable::product(std::initializer_list<ElementIndex> word) const {
  ElementIndex acc = 0;
  for (auto g : word) acc = mul(acc, g);
  return acc;
}

std::optional<std::string> check_group_axioms(const GroupTable& g, std::uint64_t seed) {
  const auto n = static_cast<ElementIndex>(g.order());
  for (ElementIndex a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return "identity fails at " + std::to_string(a);
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return "inverse fails at " + std::to_string(a);
    if (g.inv(g.inv(a)) != a) return "inv(inv(g)) != g at " + std::to_string(a);
  }
  auto assoc = [&](ElementIndex a, ElementIndex b, ElementIndex c) -> std::optional<std::string> {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")";
    return std::nullopt;
  };
  if (n <= kFullAssociativityLimit) {
    for (ElementIndex a = 0; a < n; ++a)
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n; ++c)
          if (auto err = assoc(a, b, c)) return err;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ElementIndex> pick(0, n - 1);
    for (std::size_t t = 0; t < kSampledAssociativityTriples; ++t)
      if (auto err = assoc(pick(rng), pick(rng), pick(rng))) return err;
  }
  // The named generators must generate the whole group.
  if (!g.generators().empty()) {
    std::vector<char> seen(n, 0);
    std::deque<ElementIndex> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const auto a = queue.front();
      queue.pop_front();
      for (const auto& gen : g.generators()) {
        const auto b = g.mul(a, gen.index);
        if (!seen[b]) {
          seen[b] = 1;
          ++reached;
          queue.push_back(b);
        }
      }
    }
    if (reached != n) return "generators span only " + std::to_string(reached) + " elements";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
    case Family::G4: return "G4";
    case Family::G11: return "G11";
    case Family::G13: return "G13";
    case Family::G14: return "G14";
    case Family::G15: return "G15";
    case Family::G16: return "G16";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (auto f : {Family::G4, Family::G11, Family::G13, Family::G14, Family::G15, Family::G16})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t find_f(std::uint64_t p, int k) {
  if (p % 2 == 0 || !is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not an odd prime");
  if (k != 1 && k != 2) throw Error(ErrorCode::InvalidArgument, "k must be 1 or 2");
  if (p % 4 == 3)
    throw Error(ErrorCode::NoSquareRootOfMinusOne, "-1 is not a square mod " + std::to_string(p));
  const std::uint64_t m = k == 1 ? p : p * p;
  for (std::uint64_t f = 1; f < m; ++f)
    if ((f * f) % m == m - 1) return f;
  throw Error(ErrorCode::NoSquareRootOfMinusOne, "no square root of -1 found");
}

namespace {

bool needs_f(Family f) { return f != Family::G11 && f != Family::G13; }

}  // namespace

FamilySpec FamilySpec::make(Family family, std::uint64_t p) {
  FamilySpec spec{family, p, std::nullopt};
  if (needs_f(family)) spec.f = find_f(p, family == Family::G4 ? 2 : 1);
  return spec;
}

std::pair<std::uint64_t, std::uint64_t> FamilySpec::action(std::uint64_t a, std::uint64_t b) const {
  const auto m = modulus();
  const auto neg = [m](std::uint64_t v) { return (m - v % m) % m; };
  switch (family) {
    case Family::G4: return {(*f * a) % m, 0};
    case Family::G11: return {a % m, neg(b)};
    case Family::G13: return {b % m, neg(a)};
    case Family::G14: return {a % m, (*f * b) % m};
    case Family::G15: return {neg(a), (*f * b) % m};
    case Family::G16: return {(*f * a) % m, (*f * b) % m};
  }
  return {a, b};
}

std::pair<std::uint64_t, std::uint64_t> FamilySpec::action_pow(std::uint64_t a, std::uint64_t b, int w) const {
  w = ((w % 4) + 4) % 4;
  std::pair<std::uint64_t, std::uint64_t> v{a, b};
  for (int t = 0; t < w; ++t) v = action(v.first, v.second);
  return v;
}

ElementIndex FamilySpec::index(std::uint64_t i, std::uint64_t j, std::uint64_t w) const {
  const auto m = modulus();
  if (rank() == 1) return static_cast<ElementIndex>(w % 4 + 4 * (i % m));
  return static_cast<ElementIndex>(w % 4 + 4 * (j % m + p * (i % m)));
}

FamilySpec::Coords FamilySpec::coords(ElementIndex g) const {
  const std::uint64_t w = g % 4;
  const std::uint64_t rest = g / 4;
  if (rank() == 1) return {rest, 0, w};
  return {rest / p, rest % p, w};
}

std::string FamilySpec::group_name() const {
  return std::string(to_string(family)) + "(" + std::to_string(p) + ")";
}

GroupTable make_family(const FamilySpec& spec) {
  const auto p = spec.p;
  if (p % 2 == 0 || !is_prime(p)) throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not an odd prime");
  if (needs_f(spec.family)) {
    const auto m = spec.modulus();
    if (!spec.f) {
      // Surface the same error find_f gives when the family cannot exist.
      (void)find_f(p, spec.family == Family::G4 ? 2 : 1);
      throw Error(ErrorCode::InvalidArgument, "family requires f");
    }
    if ((*spec.f % m) * (*spec.f % m) % m != m - 1)
      throw Error(ErrorCode::InvalidArgument,
                  "f=" + std::to_string(*spec.f) + " is not a square root of -1 mod " + std::to_string(m));
  }

  const auto m = spec.modulus();
  const std::size_t order = 4 * p * p;
  const bool rank2 = spec.rank() == 2;
  std::vector<ElementIndex> table(order * order);
  for (ElementIndex a = 0; a < order; ++a) {
    const auto ca = spec.coords(a);
    for (ElementIndex b = 0; b < order; ++b) {
      const auto cb = spec.coords(b);
      // (v,w)(v',c) = (v + a^{-w}(v'), w + c); a^{-w} = a^{4-w}.
      const auto moved = spec.action_pow(cb.i, cb.j, static_cast<int>(4 - ca.w));
      const auto i = (ca.i + moved.first) % m;
      const auto j = rank2 ? (ca.j + moved.second) % m : 0;
      table[a * order + b] = spec.index(i, j, (ca.w + cb.w) % 4);
    }
  }
  std::vector<NamedElement> gens;
  gens.push_back({"x", spec.index(1, 0, 0)});
  if (rank2) gens.push_back({"y", spec.index(0, 1, 0)});
  gens.push_back({"z", spec.index(0, 0, 1)});
  return GroupTable(spec.group_name(), order, std::move(table), std::move(gens));
}

}  // namespace drad
