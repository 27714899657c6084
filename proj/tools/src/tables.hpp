#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <antisq/morphism.hpp>
#include <antisq/registry.hpp>
#include <antisq/search.hpp>

namespace antisq::cli {

struct MorphismRowResult {
  MorphismParameters row;
  MorphismCheckReport report;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

/// Runs the three morphism checks and compares against the row.
MorphismRowResult check_morphism_row(const MorphismRegistry& reg, const MorphismParameters& row);
nlohmann::json to_json(const MorphismRowResult& r);

ConstraintSet constraints_for(const LongestWordRow& row);

}  // namespace antisq::cli
