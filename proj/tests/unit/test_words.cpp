#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include <antisq/error.hpp>
#include <antisq/rational.hpp>
#include <antisq/word.hpp>

#include "helpers.hpp"

using namespace antisq;
using antisq::testing::w;

TEST_CASE("parse and print") {
  CHECK(w("0110").str() == "0110");
  CHECK(w("").empty());
  CHECK(Word::parse("0120", 3).alphabet_size() == 3);
  CHECK_THROWS_AS(w("012"), DomainError);
  CHECK_THROWS_AS(w("01a"), DomainError);
}

TEST_CASE("complement") {
  CHECK(complement(w("0110")) == w("1001"));
  CHECK(complement(w("")) == w(""));
  CHECK(complement(complement(w("001011"))) == w("001011"));
  CHECK_THROWS_AS(complement(Word::parse("012", 3)), DomainError);
}

TEST_CASE("run length encoding") {
  auto r = run_length_encoding(w("011100"));
  CHECK(r.runs == std::vector<std::size_t>{1, 3, 2});
  CHECK(r.first_letter == 0);
  r = run_length_encoding(w("0001011101"));
  CHECK(r.runs == std::vector<std::size_t>{3, 1, 1, 3, 1, 1});
  r = run_length_encoding(w("0"));
  CHECK(r.runs == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(run_length_encoding(w("")), DomainError);
}

TEST_CASE("conjugates") {
  auto strs = [](const Word& x) {
    std::vector<std::string> out;
    for (const auto& c : conjugates(x)) out.push_back(c.str());
    return out;
  };
  CHECK(strs(w("01")) == std::vector<std::string>{"01", "10"});
  CHECK(strs(w("000")) == std::vector<std::string>{"000", "000", "000"});
  CHECK(strs(w("0011")) == std::vector<std::string>{"0011", "0110", "1100", "1001"});
}

TEST_CASE("factor sets") {
  CHECK(factor_set(w("0101"), 2) == std::set<Word>{w("0"), w("1"), w("01"), w("10")});
  CHECK(factor_set(w("00"), 1) == std::set<Word>{w("0")});
  // sliding-window count from the reference script
  CHECK(factor_set(w("0110100110010110"), 4).size() == 22);
  CHECK(factors_of_length(w("0110100110010110"), 4).size() == 10);

  std::ostringstream os;
  write_factor_set(os, factor_set(w("0101"), 2));
  CHECK(os.str() == "0\n01\n1\n10\n");
}

TEST_CASE("word invariants on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word x = antisq::testing::random_word(rng, 1 + rng() % 40);
    CHECK(complement(complement(x)) == x);
    const auto r = run_length_encoding(x);
    CHECK(std::accumulate(r.runs.begin(), r.runs.end(), std::size_t{0}) == x.size());
    const auto rc = run_length_encoding(complement(x));
    CHECK(rc.runs == r.runs);
    CHECK(rc.first_letter == 1 - r.first_letter);
    const auto cs = conjugates(x);
    REQUIRE(cs.size() == x.size());
    const Word xx = x + x;
    for (const auto& c : cs) {
      CHECK(c.size() == x.size());
      CHECK(xx.contains(c));
    }
  }
}

TEST_CASE("ordering and concatenation") {
  CHECK(w("0") < w("00"));
  CHECK(w("01") < w("1"));
  CHECK((w("01") + w("10")) == w("0110"));
  CHECK((w("01") + Word::parse("2", 3)).alphabet_size() == 3);
  CHECK(w("0110").factor(1, 2) == w("11"));
  CHECK(w("0110").suffix(3) == w("110"));
  CHECK_THROWS(w("01").factor(1, 5));
}

TEST_CASE("rationals") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational::parse("38/15") > Rational::parse("5/2"));
  CHECK(Rational::parse("7/3") < Rational::parse("12/5"));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);

  const auto strict = PowerBound::parse("15/4");
  const auto weak = PowerBound::parse("15/4+");
  CHECK(strict.forbid_equal);
  CHECK_FALSE(weak.forbid_equal);
  CHECK(strict.forbids(15, 4));
  CHECK_FALSE(weak.forbids(15, 4));
  CHECK(weak.forbids(16, 4));
  CHECK(strict.min_forbidden_length(4) == 15);
  CHECK(weak.min_forbidden_length(4) == 16);
  CHECK(weak.str() == "15/4+");
}
