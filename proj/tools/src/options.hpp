#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <antisq/repetitions.hpp>
#include <antisq/search.hpp>

#include "emit.hpp"

namespace antisq::cli {

struct Context {
  Emitter out;
  int status = kOk;
};

struct ConstraintFlags {
  std::string beta;
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> max_count;
  std::vector<std::string> forbid;
  bool good = false;

  void attach(CLI::App* app);
  ConstraintSet build() const;
};

/// ANTISQ_BUDGET if set and valid, otherwise `fallback`.
std::uint64_t default_budget(std::uint64_t fallback);

/// Binary digit strings, one per non-empty line.
std::vector<std::string> read_word_file(const std::string& path);

nlohmann::json to_json(const Repetition& r);

// Verb registration; each sets ctx.status from its callback.
void add_analyze(CLI::App& app, Context& ctx);
void add_generate(CLI::App& app, Context& ctx);
void add_search(CLI::App& app, Context& ctx);
void add_count(CLI::App& app, Context& ctx);
void add_verify_morphism(CLI::App& app, Context& ctx);
void add_minimal_antisquares(CLI::App& app, Context& ctx);
void add_fib_report(CLI::App& app, Context& ctx);
void add_reproduce_tables(CLI::App& app, Context& ctx);

}  // namespace antisq::cli
