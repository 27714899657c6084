#include "antisq/repetitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "antisq/error.hpp"
#include "bitmask.hpp"

namespace antisq {

namespace {

// KMP failure function on a letter span; returns the border length of the whole.
std::size_t longest_border(std::span<const Letter> w) {
  std::vector<std::size_t> fail(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return fail[w.size()];
}

std::size_t smallest_period_of(std::span<const Letter> w) {
  return w.size() - longest_border(w);
}

}  // namespace

std::size_t smallest_period(const Word& w) {
  if (w.empty()) throw DomainError("smallest period of the empty word");
  return smallest_period_of(w.letters());
}

Rational exponent(const Word& w) {
  const auto p = smallest_period(w);
  return Rational(static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(p));
}

CriticalExponent critical_exponent(const Word& w) {
  if (w.empty()) throw DomainError("critical exponent of the empty word");
  const std::size_t n = w.size();
  CriticalExponent best{Rational(1), Repetition{0, 1, 1}};
  detail::BitPlanes planes(w.letters(), w.alphabet_size());

  for (std::size_t p = 1; p < n; ++p) {
    // Need a run r of matches with (r+p)/p > best, i.e. r*den > (num-den)*p.
    const __int128 excess = static_cast<__int128>(best.value.num() - best.value.den()) * p;
    const std::size_t r_min = static_cast<std::size_t>(excess / best.value.den()) + 1;
    // r_min never decreases with p while n-p shrinks, so no later p can win.
    if (r_min > n - p) break;
    detail::BitMask eq = planes.equal_mask(p);
    detail::BitMask starts = eq;
    if (!detail::keep_runs_at_least(starts, r_min)) continue;
    starts.for_each_set([&](std::size_t i) {
      if (i > 0 && eq.test(i - 1)) return;  // not the start of a maximal run
      const std::size_t r = detail::run_length_from(eq, i);
      const Rational e(static_cast<std::int64_t>(r + p), static_cast<std::int64_t>(p));
      if (e > best.value) best = {e, Repetition{i, p, r + p}};
    });
  }
  return best;
}

std::vector<Repetition> maximal_repetitions(const Word& w, const Rational& min_exponent) {
  std::vector<Repetition> out;
  const std::size_t n = w.size();
  if (n == 0) return out;
  const auto letters = w.letters();
  detail::BitPlanes planes(letters, w.alphabet_size());

  auto emit_if_primitive = [&](std::size_t start, std::size_t period, std::size_t length) {
    if (smallest_period_of(letters.subspan(start, length)) == period) {
      out.push_back(Repetition{start, period, length});
    }
  };

  for (std::size_t p = 1; p <= n; ++p) {
    // (r+p)/p >= e  <=>  r >= (e-1)p  <=>  r*den >= (num-den)*p.
    const __int128 need = (static_cast<__int128>(min_exponent.num()) - min_exponent.den()) *
                          static_cast<__int128>(p);
    std::size_t r_min = 0;
    if (need > 0) {
      r_min = static_cast<std::size_t>((need + min_exponent.den() - 1) / min_exponent.den());
    }
    if (r_min > n - p) continue;

    if (r_min == 0) {
      // Every maximal run of matches qualifies, including empty ones.
      std::size_t i = 0;
      while (i + p <= n) {
        std::size_t r = 0;
        while (i + r + p < n && letters[i + r] == letters[i + r + p]) ++r;
        emit_if_primitive(i, p, r + p);
        i += r + 1;
      }
      continue;
    }

    detail::BitMask eq = planes.equal_mask(p);
    detail::BitMask starts = eq;
    if (!detail::keep_runs_at_least(starts, r_min)) continue;
    starts.for_each_set([&](std::size_t i) {
      if (i > 0 && eq.test(i - 1)) return;
      const std::size_t r = detail::run_length_from(eq, i);
      emit_if_primitive(i, p, r + p);
    });
  }
  return out;
}

PowerCheck satisfies(const Word& w, const PowerBound& bound) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  if (bound.forbids(1, 1)) {
    // Every single letter already has exponent 1.
    return {false, Repetition{0, 1, 1}};
  }
  detail::BitPlanes planes(w.letters(), w.alphabet_size());
  // min_forbidden_length is strictly increasing in p here, so the first
  // period with a hit yields the shortest violation.
  for (std::size_t p = 1; p < n; ++p) {
    const std::size_t len = bound.min_forbidden_length(p);
    if (len > n) break;
    const std::size_t r_need = len - p;
    detail::BitMask eq = planes.equal_mask(p);
    if (!detail::keep_runs_at_least(eq, r_need)) continue;
    std::size_t first = n;
    eq.for_each_set([&](std::size_t i) { first = std::min(first, i); });
    return {false, Repetition{first, p, len}};
  }
  return {};
}

IncrementalPowerValidator::IncrementalPowerValidator(PowerBound bound, std::size_t reserve_depth)
    : bound_(bound) {
  letters_.reserve(reserve_depth);
  row_offset_.reserve(reserve_depth + 1);
  runs_.reserve(reserve_depth * (reserve_depth + 1) / 2);
  row_offset_.push_back(0);
}

bool IncrementalPowerValidator::push(Letter c) {
  if (poisoned_) throw std::logic_error("push() after a failed push() without pop()");
  const std::size_t d = letters_.size();  // index of the new letter
  letters_.push_back(c);
  const std::size_t base = row_offset_.back();
  runs_.resize(base + d + 1);
  row_offset_.push_back(base + d + 1);
  while (min_run_.size() <= d) {
    const std::size_t p = min_run_.size();
    const std::size_t len = p == 0 ? 0 : bound_.min_forbidden_length(p);
    min_run_.push_back(static_cast<std::uint32_t>(len > p ? len - p : 0));
  }

  std::uint32_t* row = runs_.data() + base;
  const std::uint32_t* prev = d > 0 ? runs_.data() + row_offset_[d - 1] : nullptr;
  const Letter* w = letters_.data();
  const std::uint32_t* need = min_run_.data();
  row[0] = 0;
  bool bad = false;
  for (std::size_t p = 1; p <= d; ++p) {
    const std::uint32_t before = p < d ? prev[p] : 0;
    const std::uint32_t r = (w[d - p] == c) ? before + 1 : 0;
    row[p] = r;
    bad |= r >= need[p];
  }

  if (bound_.forbids(1, 1)) {
    violation_ = Repetition{d, 1, 1};
    poisoned_ = true;
    return false;
  }
  if (bad) {
    // The shortest violating suffix comes from the smallest offending period.
    for (std::size_t p = 1; p <= d; ++p) {
      if (row[p] >= need[p]) {
        const std::size_t len = need[p] + p;
        violation_ = Repetition{d + 1 - len, p, len};
        break;
      }
    }
    poisoned_ = true;
    return false;
  }
  violation_.reset();
  return true;
}

void IncrementalPowerValidator::pop() {
  if (letters_.empty()) throw std::logic_error("pop() on an empty validator");
  letters_.pop_back();
  row_offset_.pop_back();
  runs_.resize(row_offset_.back());
  poisoned_ = false;
}

}  // namespace antisq
