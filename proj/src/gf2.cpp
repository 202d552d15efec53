#include "drad/gf2.hpp"

#include <bit>

#include "drad/error.hpp"

namespace drad {

BitRow& BitRow::operator^=(const BitRow& o) {
  if (o.width_ != width_) throw Error(ErrorCode::InvalidArgument, "row width mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

bool BitRow::any() const noexcept {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::optional<std::size_t> BitRow::lowest() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  return std::nullopt;
}

std::size_t BitRow::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<std::uint8_t> BitRow::to_bytes() const {
  std::vector<std::uint8_t> out((width_ + 7) / 8, 0);
  for (std::size_t i = 0; i < width_; ++i)
    if (get(i)) out[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  return out;
}

BitRow BitRow::from_bytes(std::size_t width, const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() != (width + 7) / 8) throw Error(ErrorCode::ParseError, "bit row has wrong byte length");
  BitRow r(width);
  for (std::size_t i = 0; i < width; ++i)
    if ((bytes[i / 8] >> (i % 8)) & 1u) r.set(i, true);
  for (std::size_t i = width; i < bytes.size() * 8; ++i)
    if ((bytes[i / 8] >> (i % 8)) & 1u) throw Error(ErrorCode::ParseError, "bit row has padding bits set");
  return r;
}

Gf2Solution solve(const Gf2System& sys) {
  const auto m = sys.rows.size();
  std::vector<BitRow> rows = sys.rows;
  std::vector<bool> rhs = sys.rhs;
  std::vector<BitRow> origin;
  origin.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].width() != sys.variables) throw Error(ErrorCode::InvalidArgument, "row width mismatch");
    origin.emplace_back(m);
    origin.back().set(r, true);
  }

  Gf2Solution out;
  std::vector<std::size_t> pivot_col;  // per pivot row, in order
  std::size_t next = 0;                // rows [0, next) are pivots
  for (std::size_t col = 0; col < sys.variables && next < m; ++col) {
    std::size_t r = next;
    while (r < m && !rows[r].get(col)) ++r;
    if (r == m) continue;
    std::swap(rows[r], rows[next]);
    std::swap(origin[r], origin[next]);
    {
      const bool t = rhs[r];
      rhs[r] = rhs[next];
      rhs[next] = t;
    }
    for (std::size_t q = 0; q < m; ++q) {
      if (q == next || !rows[q].get(col)) continue;
      rows[q] ^= rows[next];
      origin[q] ^= origin[next];
      rhs[q] = rhs[q] != rhs[next];
    }
    pivot_col.push_back(col);
    ++next;
  }
  out.rank = next;

  // Among zero rows with rhs 1 take the one built from the fewest originals.
  std::optional<std::size_t> bad;
  for (std::size_t r = next; r < m; ++r)
    if (rhs[r] && (!bad || origin[r].popcount() < origin[*bad].popcount())) bad = r;
  if (bad) {
    out.consistent = false;
    for (std::size_t r = 0; r < m; ++r)
      if (origin[*bad].get(r)) out.contradiction.push_back(r);
    return out;
  }
  out.assignment.assign(sys.variables, 0);
  for (std::size_t r = 0; r < next; ++r) out.assignment[pivot_col[r]] = rhs[r] ? 1 : 0;
  return out;
}

std::pair<BitRow, bool> combine(const Gf2System& sys, const std::vector<std::size_t>& which) {
  BitRow acc(sys.variables);
  bool b = false;
  for (auto r : which) {
    if (r >= sys.rows.size()) throw Error(ErrorCode::InvalidArgument, "row index out of range");
    acc ^= sys.rows[r];
    b = b != sys.rhs[r];
  }
  return {acc, b};
}

bool satisfies(const Gf2System& sys, const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != sys.variables) return false;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    bool acc = false;
    for (std::size_t v = 0; v < sys.variables; ++v)
      if (sys.rows[r].get(v) && assignment[v]) acc = !acc;
    if (acc != sys.rhs[r]) return false;
  }
  return true;
}

}  // namespace drad
