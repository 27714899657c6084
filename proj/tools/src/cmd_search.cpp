#include <filesystem>
#include <iomanip>
#include <iostream>
#include <ostream>

#include <antisq/enumeration.hpp>
#include <antisq/error.hpp>
#include <antisq/search.hpp>

#include "options.hpp"

namespace antisq::cli {

void add_search(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("search", "longest word under a set of constraints");
  struct Args {
    ConstraintFlags flags;
    std::optional<std::uint64_t> budget;
    unsigned jobs = 1;
    std::string checkpoint;
    std::string resume;
    std::uint64_t interval = 50'000'000;
  };
  auto a = std::make_shared<Args>();
  a->flags.attach(cmd);
  cmd->add_option("--budget", a->budget, "node budget (default: ANTISQ_BUDGET or 1e8)");
  cmd->add_option("--jobs,-j", a->jobs, "worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
  cmd->add_option("--checkpoint", a->checkpoint, "write the DFS state to this file periodically");
  cmd->add_option("--checkpoint-interval", a->interval, "nodes between checkpoints")->default_val(50'000'000);
  cmd->add_option("--resume", a->resume, "continue from a checkpoint file");
  cmd->callback([&ctx, a] {
    const ConstraintSet c = a->flags.build();
    if (c.empty()) throw DomainError("search needs at least one constraint");
    SearchOptions opt;
    opt.budget = a->budget ? *a->budget : default_budget(100'000'000);
    opt.jobs = a->jobs;
    if (!a->checkpoint.empty()) opt.checkpoint = a->checkpoint;
    opt.checkpoint_interval = a->interval;
    if (!a->resume.empty()) {
      opt.resume = a->resume;
      if (!opt.checkpoint) opt.checkpoint = a->resume;
    }
    const auto r = longest_word(c, opt);
    nlohmann::json rec = {{"record", "search"},
                          {"anchor", "search"},
                          {"constraints", c.describe()},
                          {"max_length", r.max_length},
                          {"witness", r.witness.str()},
                          {"exhausted", r.exhausted},
                          {"nodes", r.nodes_explored},
                          {"seconds", r.seconds}};
    if (!r.exhausted && opt.checkpoint) rec["checkpoint"] = opt.checkpoint->string();
    ctx.out.record(rec);
    auto& h = ctx.out.human();
    h << c.describe() << ": longest " << r.max_length << (r.exhausted ? " (exhausted" : " (budget ran out")
      << ", " << r.nodes_explored << " nodes, " << r.seconds << " s)\n"
      << "witness " << r.witness << '\n';
    if (!r.exhausted && opt.checkpoint) h << "checkpoint written to " << opt.checkpoint->string() << '\n';
    ctx.status = r.exhausted ? kOk : kBudget;
  });
}

namespace {

nlohmann::json count_value(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

}  // namespace

void add_count(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("count", "number of valid words per length");
  struct Args {
    ConstraintFlags flags;
    std::size_t n_max = 0;
    std::optional<std::uint64_t> budget;
    bool automaton = false;
    std::string preset;
    bool growth = false;
    bool tsv = false;
  };
  auto a = std::make_shared<Args>();
  a->flags.attach(cmd);
  cmd->add_option("--n-max,-n", a->n_max, "largest length")->required();
  cmd->add_option("--budget", a->budget, "node budget for the DFS counter (default: ANTISQ_BUDGET or 1e7)");
  cmd->add_flag("--automaton", a->automaton, "count with the factor-avoidance automaton (--forbid only)");
  cmd->add_option("--preset", a->preset, "forbidden set for --automaton")
      ->check(CLI::IsMember({"good-core", "pansiot"}));
  cmd->add_flag("--growth", a->growth, "also report the automaton growth rate");
  cmd->add_flag("--tsv", a->tsv, "write length<TAB>count lines instead of JSON");
  cmd->callback([&ctx, a] {
    auto& h = ctx.out.human();
    std::vector<BigInt> counts;
    bool truncated = false;
    nlohmann::json summary = {{"record", "count-summary"}, {"anchor", "count"}};
    if (a->automaton || !a->preset.empty()) {
      std::set<Word> forbidden;
      if (a->preset == "good-core") forbidden = good_core_forbidden();
      if (a->preset == "pansiot") forbidden = pansiot_code_forbidden();
      for (const auto& f : a->flags.forbid) forbidden.insert(Word::parse(f));
      const auto aut = FactorAvoidanceAutomaton::build(forbidden);
      const auto series = count_series(aut, a->n_max);
      counts = series.counts;
      summary["method"] = "automaton";
      summary["states"] = aut.state_count();
      summary["constraints"] = series.description;
      if (a->growth) {
        const auto g = growth_rate(aut);
        summary["growth_rate"] = static_cast<double>(g.value);
        summary["residual"] = static_cast<double>(g.residual);
        h << "growth rate " << std::setprecision(16) << static_cast<double>(g.value) << '\n';
      }
    } else {
      const ConstraintSet c = a->flags.build();
      const auto r = count_by_length(c, a->n_max, a->budget ? *a->budget : default_budget(10'000'000));
      for (auto v : r.counts) counts.emplace_back(v);
      truncated = r.truncated;
      summary["method"] = "dfs";
      summary["constraints"] = c.describe();
      summary["nodes"] = r.nodes_explored;
    }
    summary["truncated"] = truncated;
    summary["n_max"] = a->n_max;
    if (a->tsv) {
      for (std::size_t n = 0; n < counts.size(); ++n) std::cout << n << '\t' << counts[n] << '\n';
    } else {
      for (std::size_t n = 0; n < counts.size(); ++n) {
        ctx.out.record({{"record", "count"}, {"anchor", "count"}, {"length", n}, {"count", count_value(counts[n])}});
      }
      ctx.out.record(summary);
    }
    h << "counted lengths 0.." << a->n_max << (truncated ? " (TRUNCATED: budget ran out)" : "") << "; count("
      << a->n_max << ") = " << counts.back() << '\n';
    ctx.status = truncated ? kBudget : kOk;
  });
}

}  // namespace antisq::cli
