#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace antisq {

/// Exact non-negative fraction in lowest terms. Comparisons cross-multiply in
/// 128-bit integers, so no two int64 fractions can compare incorrectly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Always "num/den", including "3/1".
  std::string str() const;
  long double to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Power-avoidance bound. With forbid_equal the word must be threshold-free
/// (every factor exponent < threshold); otherwise threshold+-free (every
/// factor exponent <= threshold).
struct PowerBound {
  Rational threshold;
  bool forbid_equal = true;

  /// "p/q" forbids exponent >= p/q, "p/q+" forbids exponent > p/q.
  static PowerBound parse(std::string_view text);
  std::string str() const;

  bool forbids(const Rational& exponent) const noexcept;
  /// Does a factor of `length` with period `period` violate the bound?
  bool forbids(std::size_t length, std::size_t period) const noexcept;
  /// Smallest length of a forbidden factor with the given period.
  std::size_t min_forbidden_length(std::size_t period) const noexcept;

  friend bool operator==(const PowerBound&, const PowerBound&) = default;
};

}  // namespace antisq
