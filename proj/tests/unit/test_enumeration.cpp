#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <antisq/enumeration.hpp>
#include <antisq/error.hpp>
#include <antisq/search.hpp>

#include "helpers.hpp"

using namespace antisq;
using antisq::testing::w;

namespace {

std::uint64_t brute_avoiding(const std::set<Word>& forbidden, std::size_t n) {
  std::uint64_t total = 0;
  antisq::testing::for_each_binary_word(n, [&](const Word& x) {
    for (const auto& f : forbidden)
      if (x.contains(f)) return;
    ++total;
  });
  return total;
}

}  // namespace

TEST_CASE("no-00 automaton") {
  const auto a = FactorAvoidanceAutomaton::build({w("00")});
  CHECK(a.state_count() == 3);
  CHECK(count_with_automaton(a, 10) == 144);
  const auto series = count_series(a, 6);
  const int fibs[] = {1, 2, 3, 5, 8, 13, 21};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(series.counts[n] == fibs[n]);
  CHECK(std::fabs(static_cast<double>(growth_rate(a).value) - (1 + std::sqrt(5.0)) / 2) < 1e-9);
  CHECK(a.accepts(w("0101101")));
  CHECK_FALSE(a.accepts(w("0100")));
  std::ostringstream os;
  write_tsv(os, series);
  CHECK(os.str().find("\n0\t1\n1\t2\n2\t3\n") != std::string::npos);
}

TEST_CASE("automaton counts equal exhaustive filtering") {
  const std::set<Word> sets[] = {good_core_forbidden(), pansiot_code_forbidden(),
                                 {w("000"), w("111")}, {w("0110"), w("1001"), w("010")},
                                 {w("00"), w("111"), w("10101")}};
  for (const auto& s : sets) {
    const auto a = FactorAvoidanceAutomaton::build(s);
    for (std::size_t n = 0; n <= 18; ++n) CHECK(count_with_automaton(a, n) == brute_avoiding(s, n));
  }
  // reference script values for the F-avoiders
  const std::uint64_t f_counts[] = {1,   2,   4,   8,   12,  20,  28,  42,   62,  92,
                                    134, 196, 286, 420, 616, 904, 1324, 1940, 2842};
  const auto a = FactorAvoidanceAutomaton::build(good_core_forbidden());
  CHECK(count_with_automaton(a, 1) == 2);
  for (std::size_t n = 0; n <= 18; ++n) CHECK(count_with_automaton(a, n) == f_counts[n]);
  for (std::size_t n = 19; n <= 20; ++n)
    CHECK(count_with_automaton(a, n) == brute_avoiding(good_core_forbidden(), n));
}

TEST_CASE("automaton agrees with the search counter") {
  ConstraintSet c;
  c.forbidden_factors = good_core_forbidden();
  const auto counts = count_by_length(c, 24);
  const auto a = FactorAvoidanceAutomaton::build(good_core_forbidden());
  for (std::size_t n = 0; n <= 24; ++n) CHECK(count_with_automaton(a, n) == counts.counts[n]);
}

TEST_CASE("good words and F-avoiders share a growth rate") {
  const auto good = count_by_length(ConstraintSet::good(), 30);
  const auto a = FactorAvoidanceAutomaton::build(good_core_forbidden());
  const long double psi = static_cast<long double>(supergolden());
  for (std::size_t n = 1; n <= 30; ++n) {
    const BigInt f = count_with_automaton(a, n);
    CHECK(BigInt(good.counts[n]) >= f);
    // bounded ratio; the excess is a steady quarter or so of the good words
    CHECK(static_cast<long double>(good.counts[n]) < 1.5L * static_cast<long double>(f));
  }
  const auto excess = [&](std::size_t n) {
    return static_cast<long double>(BigInt(good.counts[n]) - count_with_automaton(a, n));
  };
  CHECK(std::fabs(static_cast<double>(excess(30) / excess(29) - psi)) < 0.02);
}

TEST_CASE("growth rate") {
  const auto a = FactorAvoidanceAutomaton::build(good_core_forbidden());
  const auto g = growth_rate(a);
  const double psi = static_cast<double>(supergolden());
  CHECK(std::fabs(static_cast<double>(g.value) - psi) < 1e-9);
  CHECK(g.residual < 1e-12L);
  CHECK(std::fabs(static_cast<double>(g.ratio_estimate) - psi) < 1e-6);
  const auto p = growth_rate(FactorAvoidanceAutomaton::build(pansiot_code_forbidden()));
  CHECK(std::fabs(static_cast<double>(p.value) - psi) < 1e-9);

  // any reordering of the states leaves the rate unchanged
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> order(a.state_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto b = a.renumbered(order);
    CHECK(std::fabs(static_cast<double>(growth_rate(b).value - g.value)) < 1e-12);
    CHECK(count_with_automaton(b, 15) == count_with_automaton(a, 15));
  }
  // finite language
  CHECK_THROWS_AS(growth_rate(FactorAvoidanceAutomaton::build({w("00"), w("11"), w("010"),
                                                                w("101")})),
                  DomainError);
  CHECK_THROWS_AS(FactorAvoidanceAutomaton::build({}), DomainError);
}

TEST_CASE("supergolden ratio") {
  const Decimal50 psi = supergolden();
  CHECK(to_string(psi, 16) == "1.465571231876768");
  CHECK(abs(psi * psi * psi - psi * psi - 1) < Decimal50("1e-40"));
  CHECK(abs(pow(psi, 6) - pow(psi, 5) - psi * psi - 1) < Decimal50("1e-40"));
}

TEST_CASE("polynomial identity") {
  CHECK(multiply({1, 1}, {-1, 1}) == Polynomial{-1, 0, 1});
  CHECK(pansiot_factor_product() == Polynomial{-1, 0, -1, 0, 0, -1, 1});
  CHECK(expand_polynomial_identity());
}

TEST_CASE("pansiot recurrence") {
  const auto r = verify_pansiot_recurrence(10, 40);
  CHECK(r.recurrence_holds);
  CHECK_FALSE(r.first_failure);
  CHECK(r.brute_agrees);
  CHECK(r.suffix_decomposition_unique);
  // reference script values, n = 0..20
  const int expected[] = {0,  0,  1,   2,   3,   5,   7,   10,  14,  21,  31,
                          46, 67, 98, 143, 210, 308, 452, 662, 970, 1421};
  for (std::size_t n = 0; n <= 20; ++n) CHECK(r.c[n] == expected[n]);
  for (std::size_t n = 10; n <= 40; ++n) CHECK(r.c[n] == r.c[n - 1] + r.c[n - 4] + r.c[n - 6]);
}

TEST_CASE("forbidden sets") {
  CHECK(good_core_forbidden().size() == 8);
  CHECK(good_core_forbidden().count(w("001011")));
  CHECK(pansiot_code_forbidden() == std::set<Word>{w("010"), w("101"), w("11111"), w("01110")});
}
