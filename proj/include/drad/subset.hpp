#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace drad {

using ElementIndex = std::uint32_t;

/// A subset of a finite group stored as a bit vector over element indices.
class SubsetBits {
 public:
  SubsetBits() = default;
  explicit SubsetBits(std::size_t universe);

  static SubsetBits from_indices(std::size_t universe, std::span<const ElementIndex> members);
  static SubsetBits full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(ElementIndex g) const noexcept {
    return (words_[g >> 6] >> (g & 63)) & 1u;
  }
  void insert(ElementIndex g) noexcept { words_[g >> 6] |= std::uint64_t{1} << (g & 63); }
  void erase(ElementIndex g) noexcept { words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const SubsetBits& other) const;

  SubsetBits complement() const;
  SubsetBits& operator|=(const SubsetBits& other);
  SubsetBits& operator&=(const SubsetBits& other);
  SubsetBits& operator-=(const SubsetBits& other);
  friend SubsetBits operator|(SubsetBits a, const SubsetBits& b) { return a |= b; }
  friend SubsetBits operator&(SubsetBits a, const SubsetBits& b) { return a &= b; }
  friend SubsetBits operator-(SubsetBits a, const SubsetBits& b) { return a -= b; }

  /// Members in ascending index order.
  std::vector<ElementIndex> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<ElementIndex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const SubsetBits&, const SubsetBits&) = default;
  /// Lexicographic order on the ascending member lists; this is the
  /// "bit pattern" order used wherever subgroups are listed.
  friend std::strong_ordering operator<=>(const SubsetBits& a, const SubsetBits& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace drad
