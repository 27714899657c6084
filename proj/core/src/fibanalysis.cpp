#include "antisq/fibanalysis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>

#include "antisq/error.hpp"
#include "antisq/morphism.hpp"
#include "antisq/search.hpp"

namespace antisq {

std::uint64_t fib(std::size_t k) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t{1, 2};
    while (t.back() <= UINT64_MAX - t[t.size() - 2]) t.push_back(t.back() + t[t.size() - 2]);
    return t;
  }();
  if (k >= table.size()) throw DomainError("F_" + std::to_string(k) + " does not fit in 64 bits");
  return table[k];
}

std::string zeckendorf_encode(std::uint64_t n) {
  if (n == 0) throw DomainError("zeckendorf_encode needs n >= 1");
  std::size_t top = 0;
  while (top + 1 < 91 && fib(top + 1) <= n) ++top;
  std::string out;
  for (std::size_t k = top + 1; k-- > 0;) {
    if (fib(k) <= n) {
      out.push_back('1');
      n -= fib(k);
    } else {
      out.push_back('0');
    }
  }
  return out;
}

std::uint64_t zeckendorf_decode(std::string_view digits) {
  std::uint64_t value = 0;
  const std::size_t len = digits.size();
  for (std::size_t i = 0; i < len; ++i) {
    const char d = digits[i];
    if (d != '0' && d != '1') throw DomainError("Zeckendorf digits must be 0 or 1");
    if (d == '1') value += fib(len - 1 - i);
  }
  return value;
}

const GoldenConstants& golden_constants() {
  static const GoldenConstants g = [] {
    GoldenConstants c;
    c.alpha = (1 + boost::multiprecision::sqrt(Decimal50(5))) / 2;
    c.target = 2 + c.alpha;
    return c;
  }();
  return g;
}

bool less_than_two_plus_golden(const Rational& x) {
  // a/b < 2 + (1+sqrt5)/2  <=>  2a - 5b < b sqrt5.
  const BigInt a = x.num(), b = x.den();
  const BigInt lhs = 2 * a - 5 * b;
  if (lhs < 0) return true;
  return lhs * lhs < 5 * b * b;
}

namespace {

const Morphism& phi() {
  static const Morphism m = Morphism::parse({"001", "01"});
  return m;
}
const Morphism& g_morphism() {
  static const Morphism m = Morphism::parse({"01", "11"});
  return m;
}

}  // namespace

Word word_w_prefix(std::size_t length) {
  static std::mutex mu;
  static Word cache;
  std::lock_guard lock(mu);
  if (cache.size() < length) {
    // Each letter of phi's fixed point yields two letters under g.
    const Word x = phi().fixed_point_prefix(0, (std::max<std::size_t>(length, 1024) + 1) / 2 + 1);
    cache = g_morphism().apply(x);
  }
  return cache.prefix(length);
}

Word fibonacci_word_prefix(std::size_t length) {
  static const Morphism fibm = Morphism::parse({"01", "0"});
  return fibm.fixed_point_prefix(0, length);
}

PhiIdentityCheck verify_phi_identities(std::size_t n_max) {
  static const Morphism f = Morphism::parse({"010", "01"});
  PhiIdentityCheck out;
  const Word zero = Word::parse("0");
  auto wrap = [&](const Word& x) {  // 0 x 0^{-1}
    if (x.empty() || x.back() != 0) return std::optional<Word>{};
    return std::optional<Word>{zero + x.prefix(x.size() - 1)};
  };
  Word p0 = zero, p01 = Word::parse("01"), f0 = zero, f10 = Word::parse("10");
  for (std::size_t n = 1; n <= n_max; ++n) {
    p0 = phi().apply(p0);
    p01 = phi().apply(p01);
    f0 = f.apply(f0);
    f10 = f.apply(f10);
    const auto a = wrap(f0);
    const auto b = wrap(f10);
    if (!a || *a != p0 || !b || *b != p01) {
      out.ok = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

Rational w_family_exponent(std::size_t k) {
  if (k < 3) throw DomainError("family index k must be >= 3");
  const auto num = static_cast<std::int64_t>(2 * fib(k - 2)) - 3;
  const auto den = static_cast<std::int64_t>(2 * fib(k - 3));
  return Rational(2 * den + num, den);
}

WRepetitionReport analyze_w_repetitions(std::size_t prefix_len) {
  if (prefix_len < 100) throw DomainError("prefix length must be at least 100");
  const Word w = word_w_prefix(prefix_len);
  WRepetitionReport r;
  r.prefix_length = prefix_len;
  r.prefix_critical = critical_exponent(w);

  // period -> k
  std::map<std::size_t, std::size_t> family;
  for (std::size_t k = 3; 2 * fib(k - 3) <= prefix_len; ++k) family[2 * fib(k - 3)] = k;

  std::map<std::size_t, WRepetitionRow> rows;
  for (const auto& rep : maximal_repetitions(w, Rational(3))) {
    if (rep.start + rep.length == prefix_len) {
      r.truncated.push_back(rep);
      continue;
    }
    const auto it = family.find(rep.period);
    if (it == family.end()) {
      (rep.period < 2 * fib(3) ? r.whitelisted : r.unmatched).push_back(rep);
      continue;
    }
    const std::size_t k = it->second;
    const std::size_t expected = 2 * fib(k - 1) - 3;
    const std::size_t n = rep.length - rep.period;
    if (n > expected) {
      r.unmatched.push_back(rep);
    } else if (n < expected) {
      r.dominated.push_back(rep);
    } else if (!rows.count(rep.period)) {
      rows[rep.period] = WRepetitionRow{k, n, rep.period, rep.exponent(), zeckendorf_encode(rep.period), rep};
    }
  }
  for (auto& [p, row] : rows) r.matched.push_back(row);
  return r;
}

AntisquareInventory fibonacci_word_antisquares(std::size_t prefix_len) {
  if (prefix_len < 1) throw DomainError("prefix length must be positive");
  return inventory(fibonacci_word_prefix(prefix_len));
}

HConstructionCheck verify_h_construction(const Word& w) {
  if (w.alphabet_size() != 3) throw DomainError("h is defined on ternary words");
  if (w.empty()) throw DomainError("h construction needs a nonempty word");
  if (!satisfies(w, PowerBound{Rational(2), true})) throw DomainError("input word is not squarefree");
  static const Morphism h = Morphism::parse({"010001", "0100010001", "01000100010001"});
  HConstructionCheck out;
  out.image = h.apply(w);
  out.good = is_good(out.image);
  out.critical_exponent = critical_exponent(out.image).value;
  return out;
}

MarkerLemmaReport marker_lemma_check(std::size_t length, std::size_t prefix_len) {
  ConstraintSet c = ConstraintSet::good();
  c.power = PowerBound{Rational(4), true};
  const Word m1 = Word::parse("0001"), m2 = Word::parse("0111");
  MarkerLemmaReport out;
  for_each_valid_word(c, length, UINT64_MAX, [&](const Word& w) {
    ++out.words;
    const Word pre = w.prefix(std::min(prefix_len, w.size()));
    if (!pre.contains(m1) && !pre.contains(m2)) out.counterexamples.push_back(w);
  });
  return out;
}

}  // namespace antisq
