#include "antisq/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "antisq/error.hpp"

namespace antisq {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw DomainError("malformed rational \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw DomainError("rational denominator must be positive");
  if (numerator < 0) throw DomainError("rational must be non-negative");
  const auto g = std::gcd(numerator, denominator);
  num_ = g ? numerator / g : 0;
  den_ = g ? denominator / g : 1;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text), 1);
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

PowerBound PowerBound::parse(std::string_view text) {
  PowerBound b;
  if (!text.empty() && text.back() == '+') {
    b.forbid_equal = false;
    text.remove_suffix(1);
  }
  b.threshold = Rational::parse(text);
  if (b.threshold.num() == 0) throw DomainError("power bound must be positive");
  return b;
}

std::string PowerBound::str() const { return threshold.str() + (forbid_equal ? "" : "+"); }

bool PowerBound::forbids(const Rational& exponent) const noexcept {
  return forbid_equal ? exponent >= threshold : exponent > threshold;
}

bool PowerBound::forbids(std::size_t length, std::size_t period) const noexcept {
  const __int128 lhs = static_cast<__int128>(length) * threshold.den();
  const __int128 rhs = static_cast<__int128>(threshold.num()) * period;
  return forbid_equal ? lhs >= rhs : lhs > rhs;
}

std::size_t PowerBound::min_forbidden_length(std::size_t period) const noexcept {
  // Smallest L with L*den >= num*p (strict) or L*den > num*p (weak).
  const __int128 target = static_cast<__int128>(threshold.num()) * period;
  const __int128 den = threshold.den();
  __int128 len = target / den;
  if (forbid_equal) {
    if (len * den < target) ++len;
  } else {
    ++len;
  }
  return static_cast<std::size_t>(len);
}

}  // namespace antisq
