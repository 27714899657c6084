// One line per acceptance criterion. Exit status is 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <antisq/antisquares.hpp>
#include <antisq/enumeration.hpp>
#include <antisq/error.hpp>
#include <antisq/fibanalysis.hpp>
#include <antisq/morphism.hpp>
#include <antisq/registry.hpp>
#include <antisq/search.hpp>

using namespace antisq;

namespace {

enum class Verdict { Pass, Fail, NotExhausted };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

class Recorder {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += ", ";
    notes_ += s;
  }
  Outcome outcome() const {
    if (failed_) return {Verdict::Fail, failures_};
    return {Verdict::Pass, notes_};
  }

 private:
  bool failed_ = false;
  std::string failures_;
  std::string notes_;
};

ConstraintSet row_constraints(const LongestWordRow& row) {
  ConstraintSet c;
  c.power = row.bound;
  if (row.kind == CapKind::Order) {
    c.max_antisquare_order = row.cap;
  } else {
    c.max_distinct_antisquares = row.cap;
  }
  return c;
}

ConstraintSet good_with(const char* beta) {
  ConstraintSet c = ConstraintSet::good();
  c.power = PowerBound::parse(beta);
  return c;
}

Outcome minimal_antisquares_criterion() {
  Recorder r;
  const auto table = minimal_antisquares(12);
  const std::size_t sizes[] = {2, 4, 2, 0, 10, 12, 14, 16, 18, 20, 22, 24};
  std::string got;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto it = table.by_order.find(n);
    const std::set<Word> found = it == table.by_order.end() ? std::set<Word>{} : it->second;
    r.require(found == characterized_minimal(n), "order " + std::to_string(n) + " differs from closed form");
    r.require(found.size() == sizes[n - 1], "order " + std::to_string(n) + " has " +
                                                std::to_string(found.size()) + " words");
    got += (n > 1 ? " " : "") + std::to_string(found.size());
  }
  r.note("sizes " + got);
  return r.outcome();
}

Outcome longest_rows(CapKind kind, const std::vector<std::size_t>& caps, double per_row_limit) {
  Recorder r;
  for (const auto& row : published_longest_words()) {
    if (row.kind != kind || std::find(caps.begin(), caps.end(), row.cap) == caps.end()) continue;
    const auto c = row_constraints(row);
    const auto o = longest_word(c);
    const std::string tag = c.describe();
    r.require(o.max_length == row.length,
              tag + ": length " + std::to_string(o.max_length) + " != " + std::to_string(row.length));
    r.require(o.exhausted, tag + ": not exhausted");
    r.require(check_word(c, o.witness).ok(), tag + ": witness fails its constraints");
    r.require(check_word(c, Word::parse(row.example)).ok(), tag + ": published example fails");
    r.require(o.seconds < per_row_limit, tag + ": too slow");
    r.note(std::to_string(row.cap) + "->" + std::to_string(o.max_length));
  }
  return r.outcome();
}

Outcome morphism_criterion() {
  Recorder r;
  const auto& reg = MorphismRegistry::builtin();
  r.require(reg.intact(), "registry checksums fail");
  for (const auto& p : published_morphism_parameters()) {
    const auto& m = reg.at(p.morphism);
    const auto rep = check_morphism(m, p.bound, p.t);
    r.require(m.uniform_length() == p.uniform_length, p.morphism + ": wrong uniform length");
    r.require(rep.synchronizing, p.morphism + ": not synchronizing");
    r.require(rep.image_bound_ok, p.morphism + ": image fails " + p.bound.str());
    r.require(rep.complement_bound.value == p.m, p.morphism + ": m=" +
                                                     std::to_string(rep.complement_bound.value));
    if (p.kind == CapKind::Order) {
      r.require(rep.inventory.max_order < p.cap, p.morphism + ": antisquare order too large");
    } else {
      r.require(rep.inventory.count() <= p.cap, p.morphism + ": too many antisquares");
    }
    r.note(p.morphism + " m=" + std::to_string(rep.complement_bound.value));
  }
  return r.outcome();
}

Outcome growth_criterion() {
  Recorder r;
  const auto a = FactorAvoidanceAutomaton::build(good_core_forbidden());
  const auto g = growth_rate(a);
  const long double psi = static_cast<long double>(supergolden());
  r.require(std::fabs(g.value - psi) < 1e-9L, "growth rate off");
  const std::string digits = to_string(supergolden(), 16);
  r.require(digits == "1.465571231876768", "supergolden prints " + digits);
  r.require(expand_polynomial_identity(), "polynomial identity fails");
  std::ostringstream os;
  os.precision(17);
  os << "growth " << static_cast<double>(g.value) << ", psi " << digits;
  r.note(os.str());
  return r.outcome();
}

Outcome pansiot_criterion() {
  Recorder r;
  bool round_trip = true;
  for (std::size_t n = 1; n <= 12 && round_trip; ++n) {
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      std::vector<Letter> l(n);
      for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<Letter>((bits >> i) & 1U);
      const Word x(l);
      if (pansiot_decode(pansiot_encode(x), x[0]) != x) round_trip = false;
    }
  }
  r.require(round_trip, "code/decode round trip fails");
  const auto g = growth_rate(FactorAvoidanceAutomaton::build(pansiot_code_forbidden()));
  r.require(std::fabs(g.value - static_cast<long double>(supergolden())) < 1e-9L,
            "code automaton growth off");
  const auto rep = verify_pansiot_recurrence(10, 40);
  r.require(rep.brute_agrees, "automaton disagrees with brute force");
  r.require(rep.recurrence_holds, "recurrence fails");
  r.require(rep.suffix_decomposition_unique, "suffix decomposition not unique");
  r.note("C_40=" + rep.c[40].str());
  return r.outcome();
}

Outcome word_w_criterion() {
  Recorder r;
  const Word w = word_w_prefix(100000);
  r.require(inventory(w).distinct == std::set<Word>{Word::parse("01"), Word::parse("10")},
            "inventory is not {01,10}");
  const auto rep = analyze_w_repetitions(100000);
  r.require(rep.unmatched.empty(), std::to_string(rep.unmatched.size()) + " unmatched repetitions");
  r.require(rep.dominated.empty(), std::to_string(rep.dominated.size()) + " dominated repetitions");
  for (const auto& x : rep.whitelisted) r.require(x.period < 10, "whitelisted period >= 10");
  for (const auto& row : rep.matched) {
    r.require(row.p == 2 * fib(row.k - 3) && row.n == 2 * fib(row.k - 1) - 3,
              "row k=" + std::to_string(row.k) + " off the family");
  }
  r.require(!rep.matched.empty(), "no matched rows");
  if (!rep.matched.empty()) {
    const auto& last = rep.matched.back();
    r.require(rep.prefix_critical.value == last.exponent, "max exponent is not the last family member");
    r.require(last.exponent == w_family_exponent(last.k), "max exponent differs from the formula");
    r.require(less_than_two_plus_golden(rep.prefix_critical.value), "max exponent reaches 2+alpha");
    const Decimal50 gap = golden_constants().target -
                          Decimal50(rep.prefix_critical.value.num()) / rep.prefix_critical.value.den();
    r.require(gap > 0, "gap not positive");
    r.note("k<=" + std::to_string(last.k) + ", max " + last.exponent.str() + ", gap " +
           to_string(gap, 6));
  }
  return r.outcome();
}

Outcome fibonacci_criterion() {
  Recorder r;
  const std::set<Word> four{Word::parse("01"), Word::parse("10"), Word::parse("1001"),
                            Word::parse("10100101")};
  r.require(fibonacci_word_antisquares(100000).distinct == four, "inventory differs");
  r.require(verify_phi_identities(10).ok, "phi identities fail");
  r.note("inventory {01,10,1001,10100101}, phi identities n<=10");
  return r.outcome();
}

Outcome dichotomy_criterion() {
  Recorder r;
  std::mt19937_64 rng(20240615);
  for (int i = 0; i < 20; ++i) {
    const std::size_t len = 5 + rng() % 46;
    IncrementalPowerValidator v(PowerBound::parse("2"));
    std::vector<Letter> letters;
    while (letters.size() < len) {
      const Letter a = static_cast<Letter>(rng() % 3);
      if (v.push(a)) {
        letters.push_back(a);
      } else {
        v.pop();
        if (rng() % 16 == 0 && !letters.empty()) {  // escape dead ends
          v.pop();
          letters.pop_back();
        }
      }
    }
    const auto c = verify_h_construction(Word(letters, 3));
    r.require(c.good && c.critical_exponent == Rational(15, 4),
              "h image of a length-" + std::to_string(len) + " word fails");
  }
  const auto weak = count_by_length(good_with("15/4+"), 40);
  r.require(!weak.truncated, "15/4+ counting truncated");
  const double ratio = static_cast<double>(weak.counts[40]) / static_cast<double>(weak.counts[39]);
  r.require(ratio >= 1.05, "ratio at 40 is " + std::to_string(ratio));
  const auto strict = count_by_length(good_with("15/4"), 120, 10'000'000);
  r.require(!strict.truncated, "strict counting did not finish under 10^7 nodes");
  r.require(strict.counts[120] == 828, "count at 120 is " + std::to_string(strict.counts[120]));
  r.note("ratio40 " + std::to_string(ratio) + ", c120 " + std::to_string(strict.counts[120]) +
         ", nodes " + std::to_string(strict.nodes_explored));
  return r.outcome();
}

Outcome factorization_criterion() {
  Recorder r;
  const auto marker = marker_lemma_check(15, 9);
  r.require(marker.words > 0 && marker.counterexamples.empty(), "marker lemma fails");

  std::vector<Word> pool;
  const auto c = good_with("15/4");
  for (std::size_t n : {33, 47, 64, 90, 120})
    for_each_valid_word(c, n, 100'000'000, [&](const Word& x) { pool.push_back(x); });
  std::mt19937_64 rng(7);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), 200));
  r.require(pool.size() == 200, "corpus too small");
  std::size_t ok = 0;
  for (const auto& x : pool) {
    try {
      const auto d = decompose_good_word(x);
      if (recompose(d) == x && d.within_bounds()) ++ok;
    } catch (const VerificationFailure&) {
    }
  }
  r.require(ok == pool.size(), std::to_string(pool.size() - ok) + " words fail to decompose");
  r.note(std::to_string(marker.words) + " marker words, " + std::to_string(ok) + "/" +
         std::to_string(pool.size()) + " decompositions");
  return r.outcome();
}

Outcome extendable_core_criterion() {
  Recorder r;
  ConstraintSet c;
  c.power = PowerBound::parse("4");
  for (const char* f : {"0011", "0110", "1100", "1001", "010101", "101010", "0001011101",
                        "1011101000", "101110111011101", "010001000100010"})
    c.forbidden_factors.insert(Word::parse(f));
  const Word gf = Morphism::parse({"01", "11"}).apply(fibonacci_word_prefix(20000));
  for (std::size_t len : {30, 50, 100}) {
    std::set<Word> oracle = factors_of_length(gf, len);
    for (const auto& x : factors_of_length(gf, len)) oracle.insert(complement(x));
    ExtendableCores s;
    try {
      s = extendable_cores(c, len, len, 2'000'000'000);
    } catch (const ResourceError&) {
      return {Verdict::NotExhausted, "budget ran out at pad " + std::to_string(len)};
    }
    const bool contains = std::includes(s.cores.begin(), s.cores.end(), oracle.begin(), oracle.end());
    r.require(contains, "pad " + std::to_string(len) + ": S misses factors of g(f)");
    if (len == 100) r.require(s.cores == oracle, "pad 100: S has extra words");
    r.note("pad " + std::to_string(len) + " |S|=" + std::to_string(s.cores.size()) + " union=" +
           std::to_string(oracle.size()));
  }
  return r.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "minimal antisquares", 60, minimal_antisquares_criterion},
      {2, "longest words, antisquare order caps", 300,
       [] { return longest_rows(CapKind::Order, {4, 5, 6}, 300); }},
      {3, "longest words, antisquare count caps", 600 + 5 * 600,
       [] { return longest_rows(CapKind::Count, {5, 8, 9, 14, 15, 16}, 600); }},
      {4, "morphism verification", 900, morphism_criterion},
      {5, "growth constant", 60, growth_criterion},
      {6, "pansiot machinery", 60, pansiot_criterion},
      {7, "structure of w", 120, word_w_criterion},
      {8, "fibonacci word", 60, fibonacci_criterion},
      {9, "15/4 dichotomy", 600, dichotomy_criterion},
      {10, "factorization", 300, factorization_criterion},
      {11, "extendable cores", 3600, extendable_core_criterion},
  };
  bool failed = false;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Verdict::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.verdict != Verdict::Fail && secs > c.limit_seconds) {
      o = {Verdict::Fail, "took " + std::to_string(secs) + " s"};
    }
    const char* label = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Fail ? "FAIL" : "NOT-EXHAUSTED";
    failed |= o.verdict == Verdict::Fail;
    char head[96];
    std::snprintf(head, sizeof head, "criterion %2d %-13s %-38s %8.2fs", c.id, label, c.name, secs);
    std::cout << head << "  " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
