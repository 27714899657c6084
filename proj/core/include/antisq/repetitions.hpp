#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "antisq/rational.hpp"
#include "antisq/word.hpp"

namespace antisq {

/// The factor w[start, start+length) has period `period`.
struct Repetition {
  std::size_t start = 0;
  std::size_t period = 1;
  std::size_t length = 1;

  Rational exponent() const { return Rational(static_cast<std::int64_t>(length),
                                              static_cast<std::int64_t>(period)); }
  friend bool operator==(const Repetition&, const Repetition&) = default;
};

/// Least p >= 1 with w[i] = w[i+p]. Throws DomainError on the empty word.
std::size_t smallest_period(const Word& w);

/// |w| / smallest_period(w).
Rational exponent(const Word& w);

struct CriticalExponent {
  Rational value;
  Repetition witness;  ///< leftmost factor attaining the maximum, minimal period
};

/// Maximum exponent over all nonempty factors. Throws on the empty word.
CriticalExponent critical_exponent(const Word& w);

/// Maximal repetitions (neither end extends with the same period, period
/// minimal for the factor) with exponent >= min_exponent, ordered by
/// (period, start).
std::vector<Repetition> maximal_repetitions(const Word& w, const Rational& min_exponent);

struct PowerCheck {
  bool ok = true;
  /// On failure: a shortest violating factor (leftmost among the shortest).
  std::optional<Repetition> violation;

  explicit operator bool() const noexcept { return ok; }
};

PowerCheck satisfies(const Word& w, const PowerBound& bound);

/// Per-worker validator for depth-first search. Appending a letter can only
/// create violations in suffixes, so push() inspects the new suffixes only,
/// in O(n) time.
///
/// push() always appends. If it returns false the caller must pop() before
/// pushing again.
class IncrementalPowerValidator {
 public:
  explicit IncrementalPowerValidator(PowerBound bound, std::size_t reserve_depth = 64);

  bool push(Letter c);
  void pop();

  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const PowerBound& bound() const noexcept { return bound_; }

  /// Shortest violating suffix found by the last failed push().
  std::optional<Repetition> last_violation() const { return violation_; }

 private:
  PowerBound bound_;
  std::vector<Letter> letters_;
  // Row d (word length d+1) holds, for p = 1..d, the number of trailing
  // positions j with w[j] = w[j-p]. Stored as a flat triangle.
  std::vector<std::uint32_t> runs_;
  std::vector<std::size_t> row_offset_;
  std::vector<std::uint32_t> min_run_;  // matches needed to violate, per period
  std::optional<Repetition> violation_;
  bool poisoned_ = false;
};

}  // namespace antisq
