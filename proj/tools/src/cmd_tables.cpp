#include <atomic>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <thread>

#include <antisq/error.hpp>

#include "options.hpp"
#include "tables.hpp"

namespace antisq::cli {

namespace {

struct RowOutcome {
  nlohmann::json record;
  std::string line;  // rendered row for the human table
  int status = kOk;
};

struct Job {
  int table;
  std::size_t row;
  std::function<RowOutcome()> run;
};

void run_parallel(std::vector<Job>& jobs, std::vector<RowOutcome>& out, unsigned workers) {
  out.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        out[i] = jobs[i].run();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < workers; ++j) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string anchor(int table, std::size_t row) {
  return "Table " + std::to_string(table) + " row " + std::to_string(row);
}

}  // namespace

void add_reproduce_tables(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("reproduce-tables", "recompute the numeric cells of the morphism and search tables");
  struct Args {
    std::vector<int> tables;
    std::optional<std::uint64_t> budget;
    unsigned jobs = 1;
    bool skip_slow = false;
    bool resume = false;
    std::string checkpoint_dir;
    std::string registry;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("--table", a->tables, "table number 1-6 (repeatable; default all)")->check(CLI::Range(1, 6));
  cmd->add_option("--budget", a->budget, "node budget per search row (default: ANTISQ_BUDGET or 1e8)");
  cmd->add_option("--jobs,-j", a->jobs, "rows computed concurrently")->default_val(1)->check(CLI::Range(1u, 256u));
  cmd->add_flag("--skip-slow", a->skip_slow, "skip the n=9 search row");
  cmd->add_option("--checkpoint-dir", a->checkpoint_dir, "directory for search checkpoints");
  cmd->add_flag("--resume", a->resume, "resume the n=9 row from its checkpoint");
  cmd->add_option("--registry", a->registry, "registry file instead of the built-in one");
  cmd->callback([&ctx, a] {
    auto& h = ctx.out.human();
    const auto reg = a->registry.empty() ? MorphismRegistry::builtin() : MorphismRegistry::load(a->registry);
    const auto problems = reg.integrity_problems();
    if (!problems.empty()) {
      for (const auto& p : problems) h << "registry: " << p << '\n';
      ctx.out.record({{"record", "registry"}, {"anchor", "registry integrity"}, {"status", "fail"}, {"problems", problems}});
      h << "refusing to verify tables against a modified registry\n";
      ctx.status = kVerificationFailed;
      return;
    }
    std::vector<int> tables = a->tables;
    if (tables.empty()) tables = {1, 2, 3, 4, 5, 6};
    if (a->resume && a->checkpoint_dir.empty()) throw DomainError("--resume needs --checkpoint-dir");
    const std::uint64_t budget = a->budget ? *a->budget : default_budget(100'000'000);

    std::vector<Job> jobs;
    for (int t : tables) {
      if (t == 1 || t == 4) {
        std::size_t row = 0;
        for (const auto& p : published_morphism_parameters()) {
          if ((t == 1) != (p.kind == CapKind::Order)) continue;
          ++row;
          jobs.push_back({t, row, [&reg, p, t, row] {
            const auto* e = reg.find(p.morphism);
            const auto q = e->morphism.uniform_length();
            const bool ok = q == p.uniform_length && e->morphism.domain_alphabet() == 3;
            RowOutcome o;
            o.record = {{"record", "table-row"}, {"anchor", anchor(t, row)}, {"table", t}, {"row", row},
                        {"morphism", p.morphism}, {"s", q.value_or(0)}, {"s_expected", p.uniform_length},
                        {"source", e->source}, {"status", ok ? "pass" : "fail"}};
            o.line = p.morphism + "\ts=" + std::to_string(q.value_or(0)) + (ok ? "" : "  FAIL");
            o.status = ok ? kOk : kVerificationFailed;
            return o;
          }});
        }
      } else if (t == 2 || t == 5) {
        std::size_t row = 0;
        for (const auto& p : published_morphism_parameters()) {
          if ((t == 2) != (p.kind == CapKind::Order)) continue;
          ++row;
          jobs.push_back({t, row, [&reg, p, t, row] {
            const auto r = check_morphism_row(reg, p);
            RowOutcome o;
            o.record = to_json(r);
            o.record["record"] = "table-row";
            o.record["anchor"] = anchor(t, row);
            o.record["table"] = t;
            o.record["row"] = row;
            o.line = p.morphism + '\t' + std::to_string(p.cap) + '\t' + p.bound.threshold.str() + '\t' +
                     std::to_string(p.t) + '\t' + std::to_string(r.report.complement_bound.value);
            for (const auto& f : r.failures) o.line += "  FAIL: " + f;
            o.status = r.pass() ? kOk : kVerificationFailed;
            return o;
          }});
        }
      } else {
        std::size_t row = 0;
        for (const auto& p : published_longest_words()) {
          if ((t == 3) != (p.kind == CapKind::Order)) continue;
          ++row;
          const bool slow = p.kind == CapKind::Count && p.cap == 9;
          const bool skip = slow && a->skip_slow;
          std::optional<std::filesystem::path> ckpt;
          if (slow && !a->checkpoint_dir.empty()) {
            ckpt = std::filesystem::path(a->checkpoint_dir) / "table6-n9.ckpt";
          }
          const bool resume = a->resume && ckpt && std::filesystem::exists(*ckpt);
          jobs.push_back({t, row, [p, t, row, skip, budget, ckpt, resume] {
            RowOutcome o;
            const auto cap_key = p.kind == CapKind::Order ? "ell" : "n";
            o.record = {{"record", "table-row"}, {"anchor", anchor(t, row)}, {"table", t}, {"row", row},
                        {cap_key, p.cap}, {"beta", p.bound.str()}, {"L_expected", p.length}};
            const std::string head = std::to_string(p.cap) + '\t' + p.bound.threshold.str() + '\t';
            if (skip) {
              o.record["status"] = "skipped";
              o.line = head + "skipped";
              return o;
            }
            SearchOptions opt;
            opt.budget = budget;
            opt.checkpoint = ckpt;
            if (resume) opt.resume = ckpt;
            const auto c = constraints_for(p);
            const auto r = longest_word(c, opt);
            const bool example_ok = check_word(c, Word::parse(p.example)).ok();
            o.record["L"] = r.max_length;
            o.record["witness"] = r.witness.str();
            o.record["exhausted"] = r.exhausted;
            o.record["nodes"] = r.nodes_explored;
            o.record["seconds"] = r.seconds;
            o.record["example_valid"] = example_ok;
            o.line = head + std::to_string(r.max_length);
            if (!r.exhausted) {
              // A partial search can only bound L from below.
              const bool consistent = r.max_length <= p.length && example_ok;
              o.status = consistent ? kBudget : kVerificationFailed;
              o.record["status"] = consistent ? "budget" : "fail";
              if (ckpt) o.record["checkpoint"] = ckpt->string();
              o.line += " (budget ran out" + (ckpt ? ", checkpoint " + ckpt->string() : std::string()) + ")";
              return o;
            }
            const bool ok = r.max_length == p.length && example_ok;
            o.status = ok ? kOk : kVerificationFailed;
            o.record["status"] = ok ? "pass" : "fail";
            if (!ok) o.line += "  FAIL: expected " + std::to_string(p.length);
            return o;
          }});
        }
      }
    }

    std::vector<RowOutcome> results;
    run_parallel(jobs, results, a->jobs);
    int status = kOk;
    int shown = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (jobs[i].table != shown) {
        shown = jobs[i].table;
        h << "Table " << shown << '\n';
      }
      ctx.out.record(results[i].record);
      h << "  " << results[i].line << '\n';
      if (results[i].status == kVerificationFailed) {
        status = kVerificationFailed;
      } else if (results[i].status == kBudget && status == kOk) {
        status = kBudget;
      }
    }
    ctx.status = status;
  });
}

}  // namespace antisq::cli
