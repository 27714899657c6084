#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antisq/antisquares.hpp"
#include "antisq/enumeration.hpp"
#include "antisq/rational.hpp"
#include "antisq/repetitions.hpp"
#include "antisq/word.hpp"

namespace antisq {

/// F_0 = 1, F_1 = 2, F_k = F_{k-1} + F_{k-2}. Throws DomainError past 64 bits.
std::uint64_t fib(std::size_t k);

/// Greedy representation over F_0 = 1, F_1 = 2, ..., most significant digit
/// first. Throws DomainError for n = 0.
std::string zeckendorf_encode(std::uint64_t n);
std::uint64_t zeckendorf_decode(std::string_view digits);

struct GoldenConstants {
  Decimal50 alpha;   ///< (1 + sqrt 5) / 2
  Decimal50 target;  ///< 2 + alpha
};
const GoldenConstants& golden_constants();

/// Exact test of x < 2 + alpha.
bool less_than_two_plus_golden(const Rational& x);

/// Prefix of g(phi^omega(0)) with phi: 0->001, 1->01 and g: 0->01, 1->11.
/// Generated once and cached; thread-safe.
Word word_w_prefix(std::size_t length);
/// Prefix of the Fibonacci word, the fixed point of 0->01, 1->0.
Word fibonacci_word_prefix(std::size_t length);

struct PhiIdentityCheck {
  bool ok = true;
  std::optional<std::size_t> first_failure;
};

/// phi^n(0) = 0 f^n(0) 0^{-1} and phi^n(01) = 0 f^n(10) 0^{-1} for
/// 1 <= n <= n_max, with f: 0->010, 1->01.
PhiIdentityCheck verify_phi_identities(std::size_t n_max);

/// 2 + (2F_{k-2} - 3) / (2F_{k-3}), the exponent of the k-th family member.
Rational w_family_exponent(std::size_t k);

struct WRepetitionRow {
  std::size_t k = 0;
  std::size_t n = 0;  ///< length minus period
  std::size_t p = 0;
  Rational exponent;
  std::string zeckendorf_p;
  Repetition occurrence;  ///< leftmost occurrence
};

/// Maximal repetitions of exponent >= 3 in a prefix of w, sorted into:
/// matched (p = 2F_{k-3}, n = 2F_{k-1} - 3, one row per period); dominated
/// (a matched period, but shorter than that period's longest repetition);
/// truncated (touching the end of the prefix); whitelisted (period below
/// 2F_3 = 10, outside the family); and unmatched (anything else).
struct WRepetitionReport {
  std::size_t prefix_length = 0;
  std::vector<WRepetitionRow> matched;
  std::vector<Repetition> dominated;
  std::vector<Repetition> truncated;
  std::vector<Repetition> whitelisted;
  std::vector<Repetition> unmatched;
  CriticalExponent prefix_critical;

  bool ok() const noexcept { return unmatched.empty(); }
};

/// Throws DomainError if prefix_len < 100.
WRepetitionReport analyze_w_repetitions(std::size_t prefix_len);

AntisquareInventory fibonacci_word_antisquares(std::size_t prefix_len);

struct HConstructionCheck {
  bool good = false;
  Rational critical_exponent;
  Word image;
};

/// Applies h: 0->010001, 1->0100010001, 2->01000100010001. Throws
/// DomainError unless w is a squarefree ternary word.
HConstructionCheck verify_h_construction(const Word& w);

struct MarkerLemmaReport {
  std::size_t words = 0;
  std::vector<Word> counterexamples;
};

/// Every 4-free good word of the given length has a prefix of length
/// <= prefix_len containing 0001 or 0111.
MarkerLemmaReport marker_lemma_check(std::size_t length = 15, std::size_t prefix_len = 9);

enum class GTag { G, GPrime };
const char* to_string(GTag tag) noexcept;

/// w = w1 G(u1 phi(u2 ... phi(ur phi(V) vr) ... v2) v1) w2 with G in {g, g'}.
struct Decomposition {
  Word w1;
  GTag G = GTag::G;
  std::vector<Word> u;  ///< u1..ur
  std::vector<Word> v;  ///< v1..vr
  Word V;
  Word w2;
  /// x_1 = G-preimage of the middle, x_{i+1} = phi-preimage inside x_i.
  std::vector<Word> preimages;

  std::size_t depth() const noexcept { return u.size(); }
  bool within_bounds() const noexcept;
};

Word recompose(const Decomposition& d);

/// Requires a good, strictly 15/4-free binary word of length >= 33
/// (DomainError otherwise). Throws VerificationFailure if no decomposition
/// exists within the bounds.
Decomposition decompose_good_word(const Word& w);

/// x is 4-free and x = p x' s with |p| <= 2, |s| <= 1, x' free of 000 and 11.
bool preimage_shape_ok(const Word& x);

}  // namespace antisq
