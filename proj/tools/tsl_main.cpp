#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tsl/enumerate.hpp"
#include "tsl/eval.hpp"
#include "tsl/harness.hpp"
#include "tsl/ledger.hpp"
#include "tsl/serialize.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int run_enumerate(int n, const std::string& what, const std::string& out_path) {
  std::vector<json> lines;
  if (what == "topologies") {
    for (const auto& sp : tsl::enumerate_topologies(n)) lines.push_back(tsl::space_to_json(sp));
  } else if (what == "meets") {
    for (const auto& m : tsl::enumerate_meet_tables(n)) lines.push_back(json{{"n", m.size()}, {"meet", m.rows()}});
  } else {
    for (const auto& ts : tsl::enumerate_models(n)) lines.push_back(tsl::model_to_json(ts));
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  for (const auto& line : lines) out << line.dump() << "\n";
  if (!out_path.empty()) std::cerr << lines.size() << " " << what << " written to " << out_path << "\n";
  return kExitPass;
}

int run_check(const std::string& suite, int n_max, bool as_json) {
  const auto reports = tsl::run_claim_suite(tsl::parse_suite(suite), n_max);
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    if (as_json) {
      std::cout << tsl::to_json(r).dump() << "\n";
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.claim << " [" << r.checked_count << " checked; " << r.universe
                << "]\n";
      if (!r.pass) std::cout << "  counterexample: " << r.counterexample->dump() << "\n";
    }
  }
  if (!as_json) std::cout << reports.size() << " claims, " << (all_pass ? "all pass" : "failures present") << "\n";
  return all_pass ? kExitPass : kExitFail;
}

int run_witness(const std::string& target, int n_max) {
  std::cout << tsl::to_json(tsl::find_witness(tsl::parse_witness_target(target), n_max)).dump() << "\n";
  return kExitPass;
}

int run_eval(const std::string& path, const std::string& op, const std::optional<std::string>& set,
             const std::optional<std::string>& mode) {
  const tsl::SpaceFile file = tsl::read_space_file(path);
  std::cout << tsl::eval_op(file, op, tsl::EvalArgs{set, mode}).dump() << "\n";
  return kExitPass;
}

int run_example(int example) {
  bool all_pass = true;
  for (const auto& e : tsl::run_ledger(example)) {
    all_pass = all_pass && e.status == tsl::LedgerStatus::pass;
    std::cout << tsl::to_json(e).dump() << "\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topologized semilattice toolkit: enumeration, claim checks, witnesses, evaluation"};
  app.require_subcommand(1);

  int n = 0;
  std::string what, out_path;
  auto* enumerate = app.add_subcommand("enumerate", "List every labelled structure on n points as JSON lines");
  enumerate->add_option("--n", n, "Carrier size")->required()->check(CLI::Range(1, tsl::kMaxEnumeratedCarrier));
  enumerate->add_option("--what", what, "Structure kind")
      ->required()
      ->check(CLI::IsMember({"topologies", "meets", "models"}));
  enumerate->add_option("--out", out_path, "Output file (default stdout)");

  std::string suite;
  int n_max = 3;
  bool as_json = false;
  auto* check = app.add_subcommand("check", "Evaluate a claim suite over the enumerated universe");
  check->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"operators", "completeness", "weak_topologies", "transfer", "examples", "all"}));
  check->add_option("--nmax", n_max, "Largest carrier size")->check(CLI::PositiveNumber);
  check->add_flag("--json", as_json, "Emit JSON lines");

  std::string target;
  auto* witness = app.add_subcommand("witness", "Search for the first witness in enumeration order");
  witness->add_option("--target", target, "Witness target")->required();
  witness->add_option("--nmax", n_max, "Largest carrier size")->check(CLI::PositiveNumber);

  std::string space_path, op;
  std::optional<std::string> set, mode;
  auto* eval = app.add_subcommand("eval", "Apply one operation to a space file");
  eval->add_option("--space", space_path, "Space file")->required();
  eval->add_option("--op", op, "Operation name")->required();
  eval->add_option("--set", set, "Index list, e.g. 0,2");
  eval->add_option("--mode", mode, "Closure mode or weak topology mode");

  int example = 0;
  bool ledger = false;
  auto* ex = app.add_subcommand("example", "Evaluate the claims about an infinite example");
  ex->add_option("example", example, "71 or 72")->required()->check(CLI::IsMember({71, 72}));
  ex->add_flag("--ledger", ledger, "Print the claims ledger")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(n, what, out_path);
    if (*check) return run_check(suite, n_max, as_json);
    if (*witness) return run_witness(target, n_max);
    if (*eval) return run_eval(space_path, op, set, mode);
    return run_example(example);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tsl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
