#include "emit.hpp"

#include <ostream>

namespace antisq::cli {

void Emitter::record(const nlohmann::json& j) {
  records_ << j.dump() << '\n';
  records_.flush();
}

}  // namespace antisq::cli
