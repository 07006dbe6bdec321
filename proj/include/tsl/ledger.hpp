#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tsl {

enum class LedgerStatus { pass, fail, indeterminate };
std::string to_string(LedgerStatus status);

/// One asserted fact about an infinite example, evaluated exactly.
struct LedgerEntry {
  std::string claim;
  std::string anchor;
  LedgerStatus status = LedgerStatus::indeterminate;
  std::string witness;
};

/// Runs every claim for example 71 (the interval with punctured
/// neighbourhoods at 0) or 72 (the square with a distinguished edge), in a
/// fixed order. Throws std::invalid_argument for other numbers.
std::vector<LedgerEntry> run_ledger(int example);

nlohmann::json to_json(const LedgerEntry& entry);

}  // namespace tsl
