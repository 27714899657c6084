#include "options.hpp"

#include <cstdlib>
#include <fstream>

#include <boost/algorithm/string/trim.hpp>

#include <antisq/error.hpp>

namespace antisq::cli {

void ConstraintFlags::attach(CLI::App* app) {
  app->add_option("--beta", beta, "power bound: p/q forbids exponent >= p/q, p/q+ forbids > p/q");
  app->add_option("--max-order", max_order, "forbid antisquares of order >= L");
  app->add_option("--max-count", max_count, "allow at most N distinct antisquares");
  app->add_option("--forbid", forbid, "forbidden factor (repeatable)");
  app->add_flag("--good", good, "only 01 and 10 allowed as antisquares");
}

ConstraintSet ConstraintFlags::build() const {
  ConstraintSet c;
  if (!beta.empty()) c.power = PowerBound::parse(beta);
  if (good) c.max_antisquare_order = 2;
  if (max_order) {
    c.max_antisquare_order = c.max_antisquare_order ? std::min(*c.max_antisquare_order, *max_order) : *max_order;
  }
  c.max_distinct_antisquares = max_count;
  for (const auto& f : forbid) c.forbidden_factors.insert(Word::parse(f));
  return c;
}

std::uint64_t default_budget(std::uint64_t fallback) {
  const char* env = std::getenv("ANTISQ_BUDGET");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::char_traits<char>::length(env) && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(std::string("ANTISQ_BUDGET is not a positive integer: ") + env);
}

std::vector<std::string> read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    boost::algorithm::trim(line);
    if (!line.empty()) words.push_back(line);
  }
  return words;
}

nlohmann::json to_json(const Repetition& r) {
  return {{"start", r.start}, {"period", r.period}, {"length", r.length}, {"exponent", r.exponent().str()}};
}

}  // namespace antisq::cli
