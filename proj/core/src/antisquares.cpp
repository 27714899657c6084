#include "antisq/antisquares.hpp"

#include <algorithm>
#include <cstring>
#include <ostream>
#include <stdexcept>
#include <string>

#include "antisq/error.hpp"
#include "bitmask.hpp"

namespace antisq {

namespace {

void require_binary(const Word& w, const char* what) {
  if (w.alphabet_size() != 2) throw DomainError(std::string(what) + " requires a binary word");
}

Word repeat(Letter c, std::size_t n) { return Word(std::vector<Letter>(n, c), 2); }

}  // namespace

std::optional<std::size_t> antisquare_order(const Word& w) {
  if (w.size() < 2 || w.size() % 2 != 0) return std::nullopt;
  const std::size_t k = w.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    if (w[i] == w[i + k]) return std::nullopt;
  }
  return k;
}

AntisquareInventory inventory(const Word& w) {
  require_binary(w, "antisquare inventory");
  AntisquareInventory inv;
  const std::size_t n = w.size();
  detail::BitPlanes planes(w.letters(), 2);
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    detail::BitMask starts = planes.differ_mask(k);
    if (!detail::keep_runs_at_least(starts, k)) continue;
    starts.for_each_set([&](std::size_t i) {
      if (i + 2 * k > n) return;
      inv.distinct.insert(w.factor(i, 2 * k));
      inv.max_order = std::max(inv.max_order, k);
    });
  }
  return inv;
}

bool is_good(const Word& w) {
  require_binary(w, "goodness test");
  const std::size_t n = w.size();
  detail::BitPlanes planes(w.letters(), 2);
  for (std::size_t k = 2; 2 * k <= n; ++k) {
    detail::BitMask starts = planes.differ_mask(k);
    if (detail::keep_runs_at_least(starts, k)) return false;
  }
  return true;
}

bool is_minimal_antisquare(const Word& w) {
  if (w.alphabet_size() != 2 || !is_antisquare(w)) return false;
  const std::size_t n = w.size();
  // Proper antisquare factors of length >= 4 (01 and 10 are exempt).
  for (std::size_t len = 4; len < n; len += 2) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t k = len / 2;
      bool anti = true;
      for (std::size_t t = 0; t < k && anti; ++t) anti = w[i + t] != w[i + k + t];
      if (anti) return false;
    }
  }
  return true;
}

MinimalAntisquareTable minimal_antisquares(std::size_t max_order) {
  if (max_order < 1) throw DomainError("max_order must be at least 1");
  if (max_order > 24) throw DomainError("brute force beyond order 24 is not supported");
  MinimalAntisquareTable table;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto& bucket = table.by_order[n];
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<Letter> letters(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        letters[i] = static_cast<Letter>((bits >> (n - 1 - i)) & 1U);
        letters[i + n] = letters[i] ^ 1U;
      }
      Word w(std::move(letters), 2);
      if (is_minimal_antisquare(w)) bucket.insert(std::move(w));
    }
  }
  return table;
}

std::set<Word> characterized_minimal(std::size_t order) {
  auto lit = [](std::initializer_list<const char*> ws) {
    std::set<Word> out;
    for (const char* s : ws) out.insert(Word::parse(s));
    return out;
  };
  switch (order) {
    case 0: throw DomainError("order must be at least 1");
    case 1: return lit({"01", "10"});
    case 2: return lit({"0011", "0110", "1001", "1100"});
    case 3: return lit({"010101", "101010"});
    case 4: return {};
    default: break;
  }
  const Word base = repeat(0, order - 2) + Word::parse("10") + repeat(1, order - 2) +
                    Word::parse("01");
  auto conj = conjugates(base);
  return std::set<Word>(conj.begin(), conj.end());
}

void write_table(std::ostream& os, const MinimalAntisquareTable& table) {
  for (const auto& [order, words] : table.by_order) {
    for (const auto& w : words) os << order << '\t' << w << '\n';
  }
}

Word pansiot_encode(const Word& w) {
  require_binary(w, "Pansiot code");
  if (w.empty()) throw DomainError("Pansiot code of the empty word");
  std::vector<Letter> code(w.size() - 1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) code[i] = w[i] != w[i + 1] ? 1 : 0;
  return Word(std::move(code), 2);
}

Word pansiot_decode(const Word& code, Letter first) {
  require_binary(code, "Pansiot decoding");
  if (first > 1) throw DomainError("first letter must be binary");
  std::vector<Letter> out(code.size() + 1);
  out[0] = first;
  for (std::size_t i = 0; i < code.size(); ++i) out[i + 1] = out[i] ^ code[i];
  return Word(std::move(out), 2);
}

IncrementalAntisquareTracker::IncrementalAntisquareTracker(
    std::optional<std::size_t> forbid_order_from, std::optional<std::size_t> max_distinct,
    std::size_t reserve_depth)
    : forbid_order_from_(forbid_order_from), max_distinct_(max_distinct) {
  letters_.reserve(reserve_depth);
  row_offset_.reserve(reserve_depth + 1);
  runs_.reserve(reserve_depth * (reserve_depth + 1) / 2);
  row_offset_.push_back(0);
}

bool IncrementalAntisquareTracker::push(Letter c) {
  if (poisoned_) throw std::logic_error("push() after a failed push() without pop()");
  const std::size_t d = letters_.size();
  letters_.push_back(c);
  const std::size_t base = row_offset_.back();
  runs_.resize(base + d + 1);
  row_offset_.push_back(base + d + 1);

  std::uint32_t* row = runs_.data() + base;
  const std::uint32_t* prev = d > 0 ? runs_.data() + row_offset_[d - 1] : nullptr;
  const Letter* w = letters_.data();
  row[0] = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    const std::uint32_t before = k < d ? prev[k] : 0;
    row[k] = (w[d - k] != c) ? before + 1 : 0;
  }

  new_orders_.clear();
  const std::size_t n = d + 1;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    if (row[k] < k) continue;
    new_orders_.push_back(k);
    const std::size_t len = 2 * k;
    const std::size_t start = n - len;
    if (forbid_order_from_ && k >= *forbid_order_from_) {
      violation_ = Word(std::vector<Letter>(w + start, w + n), 2);
      poisoned_ = true;
      return false;
    }
    const bool known = std::any_of(seen_.begin(), seen_.end(), [&](const Seen& s) {
      return s.length == len && std::memcmp(w + s.start, w + start, len) == 0;
    });
    if (!known) {
      seen_.push_back(Seen{start, len, n});
      if (max_distinct_ && seen_.size() > *max_distinct_) {
        violation_ = Word(std::vector<Letter>(w + start, w + n), 2);
        poisoned_ = true;
        return false;
      }
    }
  }
  violation_.reset();
  return true;
}

void IncrementalAntisquareTracker::pop() {
  if (letters_.empty()) throw std::logic_error("pop() on an empty tracker");
  const std::size_t n = letters_.size();
  while (!seen_.empty() && seen_.back().depth >= n) seen_.pop_back();
  letters_.pop_back();
  row_offset_.pop_back();
  runs_.resize(row_offset_.back());
  poisoned_ = false;
  new_orders_.clear();
}

std::vector<Word> IncrementalAntisquareTracker::distinct() const {
  std::vector<Word> out;
  out.reserve(seen_.size());
  for (const auto& s : seen_) {
    out.emplace_back(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(s.start),
                                         letters_.begin() +
                                             static_cast<std::ptrdiff_t>(s.start + s.length)),
                     2);
  }
  return out;
}

}  // namespace antisq
