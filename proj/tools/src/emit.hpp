#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace antisq::cli {

// Exit codes shared by every verb.
enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudget = 3 };

/// One JSON object per line on stdout; human text on stderr.
class Emitter {
 public:
  Emitter(std::ostream& records, std::ostream& human) : records_(records), human_(human) {}

  void record(const nlohmann::json& j);
  std::ostream& human() { return human_; }

 private:
  std::ostream& records_;
  std::ostream& human_;
};

}  // namespace antisq::cli
