#include <doctest.h>

#include <random>

#include <antisq/error.hpp>
#include <antisq/repetitions.hpp>

#include "helpers.hpp"

using namespace antisq;
using antisq::testing::w;

namespace {

std::size_t naive_period(const Word& x, std::size_t i, std::size_t len) {
  for (std::size_t p = 1; p < len; ++p) {
    bool ok = true;
    for (std::size_t j = i; j + p < i + len && ok; ++j) ok = x[j] == x[j + p];
    if (ok) return p;
  }
  return len;
}

Rational naive_critical(const Word& x) {
  Rational best(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t len = 1; i + len <= x.size(); ++len) {
      const Rational e(static_cast<std::int64_t>(len),
                       static_cast<std::int64_t>(naive_period(x, i, len)));
      if (e > best) best = e;
    }
  return best;
}

Word thue_morse(std::size_t n) {
  std::vector<Letter> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Letter>(__builtin_popcountll(i) & 1);
  return Word(t);
}

// Ternary word counting the 1s between consecutive 0s of Thue-Morse.
Word variant_thue_morse(std::size_t n) {
  const Word t = thue_morse(4 * n + 8);
  std::vector<Letter> out;
  std::size_t ones = 0;
  for (std::size_t i = 1; i < t.size() && out.size() < n; ++i) {
    if (t[i] == 1) {
      ++ones;
    } else {
      out.push_back(static_cast<Letter>(ones));
      ones = 0;
    }
  }
  return Word(out, 3);
}

}  // namespace

TEST_CASE("smallest period and exponent") {
  CHECK(smallest_period(w("0100010001")) == 4);
  CHECK(smallest_period(w("0101")) == 2);
  CHECK(smallest_period(w("011")) == 3);
  CHECK(exponent(w("010101")) == Rational(3));
  CHECK(exponent(w("010001000100010")) == Rational(15, 4));
  CHECK(exponent(w("01")) == Rational(1));
  CHECK_THROWS_AS(smallest_period(w("")), DomainError);
}

TEST_CASE("critical exponent examples") {
  auto c = critical_exponent(w("010001000100010"));
  CHECK(c.value == Rational(15, 4));
  CHECK(c.witness.period == 4);
  CHECK(c.witness.length == 15);
  CHECK(critical_exponent(w("01")).value == Rational(1));
  const Word t = thue_morse(64);
  c = critical_exponent(t);
  CHECK(c.value == Rational(2));
  CHECK(naive_critical(t) == Rational(2));
  const Word witness = t.factor(c.witness.start, c.witness.length);
  CHECK(exponent(witness) == Rational(2));
}

TEST_CASE("critical exponent matches brute force up to length 14") {
  for (std::size_t n = 1; n <= 14; ++n) {
    antisq::testing::for_each_binary_word(n, [&](const Word& x) {
      const auto c = critical_exponent(x);
      REQUIRE(c.value == naive_critical(x));
      const Word f = x.factor(c.witness.start, c.witness.length);
      REQUIRE(exponent(f) == c.value);
    });
  }
}

TEST_CASE("exponent is at least one") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word x = antisq::testing::random_word(rng, 1 + rng() % 30);
    const auto e = exponent(x);
    CHECK(e >= Rational(1));
    CHECK((e == Rational(1)) == (smallest_period(x) == x.size()));
  }
}

TEST_CASE("maximal repetitions") {
  auto r = maximal_repetitions(w("000"), Rational(3));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Repetition{0, 1, 3});
  // the two 000 runs have exponent 3 and are maximal too
  r = maximal_repetitions(w("0100010001"), Rational(5, 2));
  CHECK(r == std::vector<Repetition>{{2, 1, 3}, {6, 1, 3}, {0, 4, 10}});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Word x = antisq::testing::random_word(rng, 2 + rng() % 60);
    for (const auto& rep : maximal_repetitions(x, Rational(2))) {
      for (std::size_t j = rep.start; j + rep.period < rep.start + rep.length; ++j)
        REQUIRE(x[j] == x[j + rep.period]);
      if (rep.start > 0) CHECK(x[rep.start - 1] != x[rep.start - 1 + rep.period]);
      const std::size_t end = rep.start + rep.length;
      if (end < x.size()) CHECK(x[end] != x[end - rep.period]);
      CHECK(smallest_period(x.factor(rep.start, rep.length)) == rep.period);
      CHECK(rep.exponent() >= Rational(2));
    }
  }
}

TEST_CASE("satisfies agrees with the critical exponent") {
  auto s = satisfies(w("0000"), PowerBound{Rational(4), true});
  CHECK_FALSE(s.ok);
  REQUIRE(s.violation);
  CHECK(s.violation->period == 1);
  CHECK(s.violation->length == 4);
  CHECK(satisfies(w("0000"), PowerBound{Rational(4), false}).ok);
  CHECK(satisfies(variant_thue_morse(1000), PowerBound{Rational(2), true}).ok);

  std::mt19937_64 rng(3);
  const PowerBound bounds[] = {PowerBound::parse("2"), PowerBound::parse("7/3"),
                               PowerBound::parse("5/2+"), PowerBound::parse("3"),
                               PowerBound::parse("15/4+")};
  for (int trial = 0; trial < 2000; ++trial) {
    const Word x = antisq::testing::random_word(rng, 1 + rng() % 25);
    const auto ce = critical_exponent(x).value;
    for (const auto& b : bounds) REQUIRE(satisfies(x, b).ok == !b.forbids(ce));
  }
}

TEST_CASE("incremental power validator matches the full check") {
  std::mt19937_64 rng(17);
  const PowerBound bounds[] = {PowerBound::parse("7/3"), PowerBound::parse("5/2+"),
                               PowerBound::parse("3"), PowerBound::parse("38/15")};
  for (const auto& b : bounds) {
    for (int trial = 0; trial < 300; ++trial) {
      IncrementalPowerValidator v(b);
      std::vector<Letter> letters;
      for (int step = 0; step < 60; ++step) {
        const Letter a = static_cast<Letter>(rng() & 1);
        letters.push_back(a);
        const bool ok = v.push(a);
        REQUIRE(ok == satisfies(Word(letters), b).ok);
        if (!ok) {
          REQUIRE(v.last_violation());
          v.pop();
          letters.pop_back();
        }
      }
    }
  }
}
