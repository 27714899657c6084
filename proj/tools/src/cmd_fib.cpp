#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>

#include <antisq/error.hpp>
#include <antisq/fibanalysis.hpp>

#include "options.hpp"

namespace antisq::cli {

namespace {

Decimal50 gap_to_target(const Rational& x) {
  return golden_constants().target - Decimal50(x.num()) / Decimal50(x.den());
}

std::string decimal(const Rational& x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << static_cast<double>(x.to_long_double());
  return os.str();
}

}  // namespace

void add_fib_report(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("fib-report", "antisquares and repetition structure of the word g(phi^omega(0))");
  auto prefix_len = std::make_shared<std::size_t>(100000);
  auto tsv = std::make_shared<bool>(false);
  cmd->add_option("--prefix-len,-n", *prefix_len, "prefix length")->default_val(100000);
  cmd->add_flag("--tsv", *tsv, "write repetition rows as TSV instead of JSON");
  cmd->callback([&ctx, prefix_len, tsv] {
    const std::size_t n = *prefix_len;
    if (n < 100) throw DomainError("--prefix-len must be at least 100");
    auto& h = ctx.out.human();
    const auto inv = inventory(word_w_prefix(n));
    std::vector<std::string> antisquares;
    for (const auto& w : inv.distinct) antisquares.push_back(w.str());
    const bool only_trivial = inv.distinct == std::set<Word>{Word::parse("01"), Word::parse("10")};
    const auto report = analyze_w_repetitions(n);

    bool gaps_decrease = true;
    Decimal50 previous_gap = 10;
    if (*tsv) std::cout << "k\tn\tp\texponent\tdecimal\tzeckendorf_p\n";
    for (const auto& row : report.matched) {
      const auto gap = gap_to_target(row.exponent);
      if (!(gap > 0) || !(gap < previous_gap)) gaps_decrease = false;
      previous_gap = gap;
      if (*tsv) {
        std::cout << row.k << '\t' << row.n << '\t' << row.p << '\t' << row.exponent << '\t'
                  << decimal(row.exponent) << '\t' << row.zeckendorf_p << '\n';
        continue;
      }
      ctx.out.record({{"record", "fib-repetition"},
                      {"anchor", "w repetition k=" + std::to_string(row.k)},
                      {"k", row.k},
                      {"n", row.n},
                      {"p", row.p},
                      {"exponent", row.exponent.str()},
                      {"decimal", decimal(row.exponent)},
                      {"zeckendorf_p", row.zeckendorf_p},
                      {"start", row.occurrence.start},
                      {"formula_match", row.exponent == w_family_exponent(row.k)},
                      {"gap", to_string(gap, 20)}});
    }
    const auto& cexp = report.prefix_critical.value;
    const bool below = less_than_two_plus_golden(cexp);
    const bool formula_ok =
        std::all_of(report.matched.begin(), report.matched.end(),
                    [](const auto& r) { return r.exponent == w_family_exponent(r.k); });
    const bool max_is_last =
        !report.matched.empty() && report.matched.back().exponent == cexp;
    const bool pass = only_trivial && report.ok() && below && formula_ok && gaps_decrease && max_is_last;
    std::vector<std::size_t> whitelisted_periods;
    for (const auto& r : report.whitelisted) {
      if (std::find(whitelisted_periods.begin(), whitelisted_periods.end(), r.period) == whitelisted_periods.end()) {
        whitelisted_periods.push_back(r.period);
      }
    }
    nlohmann::json unmatched = nlohmann::json::array();
    for (const auto& r : report.unmatched) unmatched.push_back(to_json(r));
    if (!*tsv) {
      ctx.out.record({{"record", "fib-summary"},
                      {"anchor", "w critical exponent 2+alpha"},
                      {"prefix_length", n},
                      {"antisquares", antisquares},
                      {"matched_rows", report.matched.size()},
                      {"dominated", report.dominated.size()},
                      {"truncated", report.truncated.size()},
                      {"whitelisted", report.whitelisted.size()},
                      {"whitelisted_periods", whitelisted_periods},
                      {"unmatched", unmatched},
                      {"max_exponent", cexp.str()},
                      {"gap", to_string(gap_to_target(cexp), 20)},
                      {"status", pass ? "pass" : "fail"}});
    }
    h << "prefix " << n << ": antisquares";
    for (const auto& a : antisquares) h << ' ' << a;
    h << "\n" << report.matched.size() << " repetition rows matched, " << report.unmatched.size() << " unmatched, "
      << report.truncated.size() << " truncated, " << report.whitelisted.size() << " whitelisted (periods";
    for (auto p : whitelisted_periods) h << ' ' << p;
    h << ")\nmax exponent " << cexp << " = " << decimal(cexp) << ", gap to 2+alpha " << to_string(gap_to_target(cexp), 12)
      << '\n' << (pass ? "pass" : "FAIL") << '\n';
    ctx.status = pass ? kOk : kVerificationFailed;
  });
}

}  // namespace antisq::cli
