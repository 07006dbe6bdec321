#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsl/serialize.hpp"

namespace tsl {

/// Unknown operation or wrong arguments for a known one.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments of one evaluation. `set` is an index list ("0,2"); `mode` is a
/// closure mode, or a weak topology mode for weak-topology.
struct EvalArgs {
  std::optional<std::string> set;
  std::optional<std::string> mode;
};

/// Applies a named operation to the instance and returns canonical JSON
/// (an index list, a boolean, or a structure). Throws UsageError or
/// ParseError.
nlohmann::json eval_op(const SpaceFile& file, const std::string& op, const EvalArgs& args);

/// Names accepted by eval_op, sorted.
std::vector<std::string> eval_op_names();

}  // namespace tsl
