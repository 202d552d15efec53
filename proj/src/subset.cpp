#include "drad/subset.hpp"

#include <algorithm>
#include <bit>

#include "drad/error.hpp"

namespace drad {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoSquareRootOfMinusOne: return "NoSquareRootOfMinusOne";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::CatalogCorrupt: return "CatalogCorrupt";
    case ErrorCode::BadSubgroupOrder: return "BadSubgroupOrder";
    case ErrorCode::BadSubgroup: return "BadSubgroup";
    case ErrorCode::NotSquareOrder: return "NotSquareOrder";
    case ErrorCode::InvolutionOutsideH: return "InvolutionOutsideH";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::IdentityK: return "IdentityK";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::PolyTooLarge: return "PolyTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

SubsetBits::SubsetBits(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

SubsetBits SubsetBits::from_indices(std::size_t universe, std::span<const ElementIndex> members) {
  SubsetBits s(universe);
  for (ElementIndex g : members) {
    if (g >= universe) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    s.insert(g);
  }
  return s;
}

SubsetBits SubsetBits::full(std::size_t universe) {
  SubsetBits s(universe);
  for (std::size_t g = 0; g < universe; ++g) s.insert(static_cast<ElementIndex>(g));
  return s;
}

std::size_t SubsetBits::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool SubsetBits::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool SubsetBits::is_subset_of(const SubsetBits& other) const {
  if (other.universe_ != universe_) throw Error(ErrorCode::InvalidArgument, "subset universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

SubsetBits SubsetBits::complement() const {
  SubsetBits out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (universe_ % 64 != 0 && !out.words_.empty())
    out.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  return out;
}

SubsetBits& SubsetBits::operator|=(const SubsetBits& other) {
  if (other.universe_ != universe_) throw Error(ErrorCode::InvalidArgument, "subset universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SubsetBits& SubsetBits::operator&=(const SubsetBits& other) {
  if (other.universe_ != universe_) throw Error(ErrorCode::InvalidArgument, "subset universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SubsetBits& SubsetBits::operator-=(const SubsetBits& other) {
  if (other.universe_ != universe_) throw Error(ErrorCode::InvalidArgument, "subset universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<ElementIndex> SubsetBits::indices() const {
  std::vector<ElementIndex> out;
  out.reserve(count());
  for_each([&](ElementIndex g) { out.push_back(g); });
  return out;
}

std::strong_ordering operator<=>(const SubsetBits& a, const SubsetBits& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  if (auto c = std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end()); c != 0)
    return c;
  return a.universe_ <=> b.universe_;
}

}  // namespace drad
