#pragma once

// Bit-parallel helpers for period and anti-period scans over long words.
//
// A mask of length n stores one bit per position. The two operations that
// matter are "compare the word with itself shifted by p" and "keep only
// positions that start a run of >= r ones"; the latter costs O(n/64 log r)
// through run doubling, and usually terminates after a handful of rounds.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "antisq/word.hpp"

namespace antisq::detail {

class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const noexcept { return (bits_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool any() const noexcept {
    for (auto b : bits_) {
      if (b) return true;
    }
    return false;
  }

  /// Word (64-bit block) j of the mask shifted down by `shift`: bit i of the
  /// result is bit i+shift of this mask, zero past the end.
  std::uint64_t shifted_block(std::size_t j, std::size_t shift) const noexcept {
    const std::size_t q = j + (shift >> 6);
    const unsigned r = shift & 63;
    const std::uint64_t lo = q < bits_.size() ? bits_[q] : 0;
    if (r == 0) return lo;
    const std::uint64_t hi = q + 1 < bits_.size() ? bits_[q + 1] : 0;
    return (lo >> r) | (hi << (64 - r));
  }

  /// this[i] &= this[i + shift]; returns whether any bit survives.
  bool and_shifted_self(std::size_t shift) noexcept {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < bits_.size(); ++j) {
      bits_[j] &= shifted_block(j, shift);
      acc |= bits_[j];
    }
    return acc != 0;
  }

  void clear_tail() noexcept {
    if (n_ & 63) bits_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t j = 0; j < bits_.size(); ++j) {
      std::uint64_t b = bits_[j];
      while (b) {
        const unsigned t = static_cast<unsigned>(std::countr_zero(b));
        f(j * 64 + t);
        b &= b - 1;
      }
    }
  }

  std::vector<std::uint64_t>& blocks() noexcept { return bits_; }
  const std::vector<std::uint64_t>& blocks() const noexcept { return bits_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Bit planes of a word: plane b holds bit b of every letter. Binary words
/// need one plane, ternary words two.
class BitPlanes {
 public:
  explicit BitPlanes(std::span<const Letter> w, unsigned alphabet_size)
      : n_(w.size()), planes_(alphabet_size > 2 ? 2 : 1, BitMask(w.size())) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t b = 0; b < planes_.size(); ++b) {
        if ((w[i] >> b) & 1U) planes_[b].set(i);
      }
    }
  }

  std::size_t size() const noexcept { return n_; }

  /// Bit i set iff w[i] == w[i+shift], for 0 <= i < n - shift.
  BitMask equal_mask(std::size_t shift) const {
    BitMask out(n_ > shift ? n_ - shift : 0);
    auto& o = out.blocks();
    for (std::size_t j = 0; j < o.size(); ++j) {
      std::uint64_t diff = 0;
      for (const auto& p : planes_) diff |= p.blocks()[j] ^ p.shifted_block(j, shift);
      o[j] = ~diff;
    }
    out.clear_tail();
    return out;
  }

  /// Bit i set iff w[i] != w[i+shift] (binary words).
  BitMask differ_mask(std::size_t shift) const {
    BitMask out(n_ > shift ? n_ - shift : 0);
    auto& o = out.blocks();
    for (std::size_t j = 0; j < o.size(); ++j) {
      std::uint64_t diff = 0;
      for (const auto& p : planes_) diff |= p.blocks()[j] ^ p.shifted_block(j, shift);
      o[j] = diff;
    }
    out.clear_tail();
    return out;
  }

 private:
  std::size_t n_;
  std::vector<BitMask> planes_;
};

/// Keeps exactly the positions that start a run of at least r set bits.
/// Returns false (and leaves an all-zero mask) when no such run exists.
inline bool keep_runs_at_least(BitMask& m, std::size_t r) {
  if (r == 0) return m.size() > 0;
  if (!m.any()) return false;
  std::size_t have = 1;
  while (2 * have <= r) {
    if (!m.and_shifted_self(have)) return false;
    have *= 2;
  }
  if (r > have) return m.and_shifted_self(r - have);
  return true;
}

/// Length of the run of set bits starting at i.
inline std::size_t run_length_from(const BitMask& m, std::size_t i) {
  std::size_t len = 0;
  const auto& b = m.blocks();
  while (i < m.size()) {
    const std::size_t j = i >> 6;
    const unsigned off = i & 63;
    const std::uint64_t chunk = b[j] >> off;
    const unsigned ones = static_cast<unsigned>(std::countr_one(chunk));
    const unsigned avail = 64 - off;
    if (ones < avail) {
      len += ones;
      break;
    }
    len += avail;
    i += avail;
  }
  // Bits past size() are zero, so the count never overshoots.
  return len;
}

}  // namespace antisq::detail
