#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "antisq/word.hpp"

namespace antisq {

using BigInt = boost::multiprecision::cpp_int;
using Decimal50 = boost::multiprecision::cpp_dec_float_50;

/// Deterministic automaton for the binary words avoiding a finite set of
/// factors. A state is the last min(n, k-1) letters read, k being the longest
/// forbidden length, so two inputs share a state iff they agree on that window.
class FactorAvoidanceAutomaton {
 public:
  static constexpr std::size_t dead = std::numeric_limits<std::size_t>::max();

  /// Throws DomainError if `forbidden` is empty or not binary.
  static FactorAvoidanceAutomaton build(const std::set<Word>& forbidden);

  std::size_t state_count() const noexcept { return labels_.size(); }
  std::size_t start() const noexcept { return start_; }
  std::size_t next(std::size_t state, Letter a) const { return delta_.at(state)[a]; }
  const Word& label(std::size_t state) const { return labels_.at(state); }
  const std::set<Word>& forbidden() const noexcept { return forbidden_; }
  bool accepts(const Word& w) const;

  /// Same automaton with state i renumbered to order[i].
  FactorAvoidanceAutomaton renumbered(const std::vector<std::size_t>& order) const;

  /// "state label: 0->s 1->s" lines, "-" for the dead sink.
  void dump(std::ostream& os) const;

 private:
  std::set<Word> forbidden_;
  std::vector<Word> labels_;
  std::vector<std::array<std::size_t, 2>> delta_;
  std::size_t start_ = 0;
};

BigInt count_with_automaton(const FactorAvoidanceAutomaton& a, std::size_t n);

struct CountSeries {
  std::string description;
  std::vector<BigInt> counts;  ///< counts[n] for n = 0..
};

CountSeries count_series(const FactorAvoidanceAutomaton& a, std::size_t n_max);
/// "length<TAB>count" lines.
void write_tsv(std::ostream& os, const CountSeries& series);

struct GrowthEstimate {
  long double value = 0;
  long double residual = 0;    ///< |Av - value v| / |v| on the dominant component
  long double ratio_estimate = 0;  ///< counts[n] / counts[n-1] at a large n
  std::string method;
};

/// Dominant eigenvalue of the transition matrix restricted to live states,
/// by power iteration on each strongly connected component. Throws
/// DomainError for a finite language and VerificationFailure if the residual
/// does not fall below `tolerance`.
GrowthEstimate growth_rate(const FactorAvoidanceAutomaton& a, long double tolerance = 1e-12L);

/// Real root of X^3 = X^2 + 1, bisected to 50 digits.
Decimal50 supergolden();
std::string to_string(const Decimal50& x, int significant_digits);

/// Integer polynomials, coefficient of X^i at index i.
using Polynomial = std::vector<std::int64_t>;
Polynomial multiply(const Polynomial& a, const Polynomial& b);
/// (X+1)(X^2-X+1)(X^3-X^2-1).
Polynomial pansiot_factor_product();
/// True iff the product above is exactly X^6 - X^5 - X^2 - 1.
bool expand_polynomial_identity();

/// Forbidden factors whose avoiders are the good words avoiding 001011 and
/// 110100, and the forbidden factors of their Pansiot codes.
std::set<Word> good_core_forbidden();
std::set<Word> pansiot_code_forbidden();

struct PansiotRecurrenceReport {
  std::vector<BigInt> c;             ///< c[n] = code words of length n ending in 00
  std::vector<std::uint64_t> brute;  ///< brute-force c[n] for small n
  bool brute_agrees = true;
  bool recurrence_holds = true;
  std::optional<std::size_t> first_failure;
  bool suffix_decomposition_unique = true;  ///< checked for 8 <= n <= decomposition_max
};

/// Checks C_n = C_{n-1} + C_{n-4} + C_{n-6} for lo <= n <= hi using automaton
/// counts, compares automaton counts against brute force for n <= brute_max,
/// and verifies that each qualifying word of length 8..decomposition_max is
/// a shorter one plus exactly one of 0, 1100, 111100.
PansiotRecurrenceReport verify_pansiot_recurrence(std::size_t lo, std::size_t hi,
                                                  std::size_t brute_max = 9,
                                                  std::size_t decomposition_max = 25);

}  // namespace antisq
