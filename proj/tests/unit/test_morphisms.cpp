#include <doctest.h>

#include <random>

#include <antisq/error.hpp>
#include <antisq/morphism.hpp>
#include <antisq/registry.hpp>

#include "helpers.hpp"

using namespace antisq;
using antisq::testing::w;

namespace {

const Morphism phi = Morphism::parse({"001", "01"});
const Morphism g = Morphism::parse({"01", "11"});
const Morphism h = Morphism::parse({"010001", "0100010001", "01000100010001"});
const Morphism fibo = Morphism::parse({"01", "0"});
const Morphism mu = Morphism::parse({"01", "10"});

bool squarefree_naive(const Word& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t p = 1; i + 2 * p <= x.size(); ++p)
      if (x.factor(i, p) == x.factor(i + p, p)) return false;
  return true;
}

}  // namespace

TEST_CASE("apply") {
  CHECK(phi.apply(w("01")) == w("00101"));
  CHECK(g.apply(w("00100101")) == w("0101110101110111"));
  CHECK(h.apply(Word::parse("2", 3)) == w("01000100010001"));
  CHECK(h.domain_alphabet() == 3);
  CHECK(mu.uniform_length() == 2u);
  CHECK_FALSE(phi.uniform_length());
  CHECK(Morphism::parse({"0", "12", "2"}).target_alphabet() == 3);
}

TEST_CASE("fixed points") {
  CHECK(phi.fixed_point_prefix(0, 8) == w("00100101"));
  CHECK(fibo.fixed_point_prefix(0, 8) == w("01001010"));
  CHECK(mu.fixed_point_prefix(0, 16) == w("0110100110010110"));
  CHECK(phi.iterate(w("0"), 2) == w("00100101"));
  CHECK(phi.prolongable_on(0));
  CHECK_FALSE(phi.prolongable_on(1));
  CHECK_THROWS_AS(phi.fixed_point_prefix(1, 8), DomainError);
}

TEST_CASE("apply distributes over concatenation") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Word u = antisq::testing::random_word(rng, rng() % 12);
    const Word v = antisq::testing::random_word(rng, rng() % 12);
    CHECK(phi.apply(u + v) == phi.apply(u) + phi.apply(v));
    CHECK(g.apply(u + v) == g.apply(u) + g.apply(v));
  }
}

TEST_CASE("synchronizing") {
  const auto& reg = MorphismRegistry::builtin();
  CHECK(is_synchronizing(reg.at("xi5")));
  CHECK(is_synchronizing(reg.at("zeta3")));
  CHECK_FALSE(is_synchronizing(mu));
  // 1-uniform injective maps are synchronizing under this definition
  CHECK(is_synchronizing(Morphism::parse({"0", "1"})));
  CHECK_THROWS_AS(is_synchronizing(phi), DomainError);
}

TEST_CASE("squarefree ternary words") {
  CHECK(squarefree_words(1).size() == 3);
  CHECK(squarefree_words(3).size() == 12);
  std::size_t brute = 0;
  for (std::uint32_t code = 0; code < 243; ++code) {
    std::vector<Letter> l(5);
    std::uint32_t c = code;
    for (auto it = l.rbegin(); it != l.rend(); ++it, c /= 3) *it = static_cast<Letter>(c % 3);
    if (squarefree_naive(Word(l, 3))) ++brute;
  }
  CHECK(squarefree_words(5).size() == brute);
  // reference script values
  const std::size_t counts[] = {1, 3, 6, 12, 18, 30, 42, 60, 78, 108, 144, 204, 264, 342, 456,
                                618, 798, 1044, 1392, 1830, 2388};
  for (std::size_t n = 1; n <= 20; ++n) {
    std::size_t seen = 0;
    for_each_squarefree_word(n, 3, [&](const Word&) { ++seen; });
    CHECK(seen == counts[n]);
  }
  const auto words = squarefree_words(6);
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("image power check") {
  const auto& reg = MorphismRegistry::builtin();
  CHECK(image_power_check(reg.at("xi6"), PowerBound::parse("7/3+"), 14).ok);
  CHECK(image_power_check(reg.at("zeta10"), PowerBound::parse("5/2+"), 10).ok);
  const auto bad = image_power_check(reg.at("xi5"), PowerBound::parse("2+"), 3);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.preimage);
  REQUIRE(bad.violation);
  CHECK(bad.violation->exponent() > Rational(2));
  const Word image = reg.at("xi5").apply(*bad.preimage);
  CHECK(exponent(image.factor(bad.violation->start, bad.violation->length)) > Rational(2));
}

TEST_CASE("complement factor bound") {
  const auto& reg = MorphismRegistry::builtin();
  CHECK(complement_factor_bound(reg.at("xi5")).value == 16);
  CHECK(complement_factor_bound(reg.at("zeta16")).value == 13);
  CHECK(complement_factor_bound(reg.at("xi3")).value == 6);
}

TEST_CASE("morphic antisquare inventories") {
  const auto& reg = MorphismRegistry::builtin();
  CHECK(check_morphism(reg.at("zeta3"), PowerBound::parse("3+"), 6).inventory.count() <= 3);
  CHECK(check_morphism(reg.at("xi6"), PowerBound::parse("7/3+"), 14).inventory.max_order <= 5);
  CHECK(check_morphism(reg.at("zeta16"), PowerBound::parse("7/3+"), 14).inventory.count() <= 16);
}

TEST_CASE("thue-morse iterates are antisquares") {
  for (std::size_t k = 1; k <= 12; ++k) CHECK(is_antisquare(mu.iterate(w("0"), k)));
}

TEST_CASE("registry fixed points are stable") {
  for (const auto& e : MorphismRegistry::builtin().entries()) {
    for (Letter a = 0; a < e.morphism.domain_alphabet(); ++a) {
      if (!e.morphism.prolongable_on(a)) continue;
      const Word shortp = e.morphism.fixed_point_prefix(a, 300);
      const Word longp = e.morphism.fixed_point_prefix(a, 600);
      CHECK(longp.starts_with(shortp));
    }
  }
}
