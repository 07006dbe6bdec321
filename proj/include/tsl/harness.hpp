#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tsl {

/// Outcome of evaluating one claim over an enumerated universe.
struct ClaimReport {
  std::string claim;
  std::string anchor;
  std::string universe;
  bool pass = true;
  /// First failing instance in enumeration order; for witness searches, the
  /// witness found or an exhaustion note.
  std::optional<nlohmann::json> counterexample;
  long long checked_count = 0;
};

nlohmann::json to_json(const ClaimReport& report);

enum class Suite { operators, completeness, weak_topologies, transfer, examples, all };
std::string to_string(Suite suite);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);

/// A registered claim. `covers` lists the invariant keys from the coverage
/// manifest that the claim evaluates.
struct ClaimDef {
  std::string id;
  std::string anchor;
  Suite suite;
  std::vector<std::string> covers;
  std::function<ClaimReport(int n_max)> run;
};

/// Every claim, in report order.
const std::vector<ClaimDef>& claim_registry();

/// Invariant keys that the suites must cover, one per stated invariant.
const std::vector<std::string>& coverage_manifest();

/// Runs the claims of a suite (all claims for Suite::all) in registry order.
/// Universes are capped per claim: spaces at 5 points, models at 4, theorem
/// sweeps over maps at 3.
std::vector<ClaimReport> run_claim_suite(Suite suite, int n_max);

enum class WitnessTarget {
  theta_not_idempotent,
  closure_lt_thetacl,
  semitop_not_updown_closed,
  nonbiclosed_thetacl_not_chain,
  retraction_range_not_theta_closed,
};
std::string to_string(WitnessTarget target);
WitnessTarget parse_witness_target(const std::string& name);

/// First witness in enumeration order up to n_max points. pass = a witness
/// was found (it is stored in counterexample); otherwise counterexample
/// records that none exists up to n_max.
ClaimReport find_witness(WitnessTarget target, int n_max);

}  // namespace tsl
