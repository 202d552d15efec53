#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace drad {

/// A dense row over GF(2).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const noexcept { return width_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) noexcept {
    const auto mask = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitRow& operator^=(const BitRow& o);
  bool any() const noexcept;
  std::optional<std::size_t> lowest() const noexcept;
  std::size_t popcount() const noexcept;

  /// Little-endian byte image (bit i is bit i%8 of byte i/8).
  std::vector<std::uint8_t> to_bytes() const;
  static BitRow from_bytes(std::size_t width, const std::vector<std::uint8_t>& bytes);

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A x = b over GF(2).
struct Gf2System {
  std::size_t variables = 0;
  std::vector<BitRow> rows;
  std::vector<bool> rhs;

  void add(BitRow row, bool b) {
    rows.push_back(std::move(row));
    rhs.push_back(b);
  }
};

struct Gf2Solution {
  bool consistent = true;
  std::size_t rank = 0;
  /// When inconsistent: original row indices (ascending) whose sum is 0 = 1.
  std::vector<std::size_t> contradiction;
  /// When consistent: one solution, free variables set to 0.
  std::vector<std::uint8_t> assignment;
};

/// Gaussian elimination, pivoting on the lowest column, tracking which
/// original rows make up each reduced row.
Gf2Solution solve(const Gf2System& sys);

/// Sum of the selected rows as (coefficients, rhs).
std::pair<BitRow, bool> combine(const Gf2System& sys, const std::vector<std::size_t>& which);

/// Does the assignment satisfy every row?
bool satisfies(const Gf2System& sys, const std::vector<std::uint8_t>& assignment);

}  // namespace drad
