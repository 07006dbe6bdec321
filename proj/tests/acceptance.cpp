// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>

#include "tsl/enumerate.hpp"
#include "tsl/harness.hpp"
#include "tsl/ledger.hpp"
#include "tsl/serialize.hpp"

using namespace tsl;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

ClaimReport run_claim(const std::string& id, int n_max) {
  for (const auto& c : claim_registry())
    if (c.id == id) {
      ClaimReport r = c.run(n_max);
      r.claim = id;
      return r;
    }
  throw std::logic_error("no claim " + id);
}

// All named claims pass with a non-empty universe.
Verdict claims_pass(const std::vector<std::string>& ids, int n_max, double limit_s = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  for (const auto& id : ids) {
    const ClaimReport r = run_claim(id, n_max);
    ok = ok && r.pass && r.checked_count > 0;
    detail += id + "=" + (r.pass ? "pass" : "fail") + "/" + std::to_string(r.checked_count) + " ";
    if (!r.pass) detail += "counterexample " + r.counterexample->dump() + " ";
  }
  const double s = seconds_since(t0);
  if (limit_s > 0) ok = ok && s < limit_s;
  return {ok, detail + "in " + fmt_seconds(s)};
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(TSL_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<Element> permutation_to_w3(const FiniteSpace& sp) {
  const FiniteSpace w3 = FiniteSpace::make(3, {Subset{}, Subset{0}, Subset{2}, Subset{0, 2}, Subset{0, 1, 2}});
  std::vector<Element> p{0, 1, 2};
  do {
    bool same = true;
    for (Subset u : w3.opens()) same = same && sp.is_open(image_of(p, u));
    if (same && sp.opens().size() == w3.opens().size()) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return {};
}

Verdict theta_witness() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [code, out] = run_cli("witness --target theta_not_idempotent --nmax 3");
  const double s = seconds_since(t0);
  if (code != 0) return {false, "exit code " + std::to_string(code)};
  const json r = json::parse(out);
  const json& w = r["counterexample"];
  const SpaceFile f = parse_space(w["space"]);
  const Subset a = subset_from_json(w["set"], f.space.size());
  const Subset once = closure_of(f.space, a, ClosureMode::theta);
  const Subset twice = closure_of(f.space, once, ClosureMode::theta);
  // The witness must be W3 up to relabelling, with A = {0} mapped along.
  const auto p = permutation_to_w3(f.space);
  const bool shape = !p.empty() && a == Subset{p[0]} && once == image_of(p, Subset{0, 1}) &&
                     twice == f.space.carrier() && subset_to_json(once) == w["theta_once"] &&
                     subset_to_json(twice) == w["theta_twice"];
  return {r["status"] == "pass" && shape && s < 5,
          "witness " + w.dump() + (p.empty() ? "" : " (W3 relabelled)") + " in " + fmt_seconds(s)};
}

Verdict equivalences() {
  const std::vector<std::string> ids = {"equivalence_complete_chain_compact", "equivalence_delta", "equivalence_theta",
                                        "equivalence_bigtheta"};
  return claims_pass(ids, 4);
}

Verdict transfer_sweep() {
  return claims_pass({"transfer_order_condition", "transfer_disjoint_values", "closed_embedding_theta_fibers",
                      "closed_embedding_regular", "fiber_preimage_identity"},
                     3, 600);
}

Verdict semitop_witness() {
  const auto [code, out] = run_cli("witness --target semitop_not_updown_closed --nmax 2");
  if (code != 0) return {false, "exit code " + std::to_string(code)};
  const json r = json::parse(out);
  const TopSemilattice ts = parse_space(r["counterexample"]).model();
  const bool sierpinski = ts.size() == 2 && ts.space().opens().size() == 3;
  const bool min_meet = ts.meet().meet(0, 1) == 0;
  // ↑1 = {1} is open but not closed.
  const bool up_not_closed = !ts.space().is_closed(ts.order().up_set(1));
  const bool ok = r["status"] == "pass" && sierpinski && min_meet && is_semitopological(ts) &&
                  !is_updown_closed(ts, ClosureMode::plain) && up_not_closed;
  return {ok, "model " + r["counterexample"].dump()};
}

Verdict ledger71() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = run_ledger(71);
  const double s = seconds_since(t0);
  int passed = 0;
  for (const auto& e : entries) passed += e.status == LedgerStatus::pass;
  return {passed == static_cast<int>(entries.size()) && !entries.empty() && s < 5,
          std::to_string(passed) + "/" + std::to_string(entries.size()) + " pass in " + fmt_seconds(s)};
}

Verdict ledger72() {
  int closed_ball = 0, decided = 0, indeterminate = 0;
  std::vector<std::string> failures;
  bool ok = true;
  const auto entries = run_ledger(72);
  for (const auto& e : entries) {
    if (e.status == LedgerStatus::indeterminate) ++indeterminate;
    else ++decided;
    ok = ok && !e.witness.empty();
    if (e.claim.rfind("closure_of_basic_is_closed_ball", 0) == 0) {
      ++closed_ball;
      ok = ok && e.status == LedgerStatus::pass;
    }
    if (e.status == LedgerStatus::fail) failures.push_back(e.claim);
  }
  ok = ok && indeterminate == 0 && closed_ball > 0;
  std::string detail = std::to_string(decided) + "/" + std::to_string(entries.size()) + " decided; reported fails:";
  for (const auto& f : failures) detail += " [" + f + "]";
  return {ok, detail};
}

Verdict enumeration_counts() {
  const Verdict dual = claims_pass({"topology_count_dual_path", "meet_count_dual_path"}, 3);
  const std::uint64_t topologies[] = {1, 4, 29};
  bool ok = dual.pass;
  for (int n = 1; n <= 3; ++n)
    ok = ok && enumerate_topologies(n).size() == topologies[n - 1] &&
         count_topologies_by_families(n) == topologies[n - 1] &&
         enumerate_meet_tables(n).size() == count_meet_tables_by_tables(n);
  return {ok, dual.detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"operator inclusion chain, n <= 4", [] { return claims_pass({"inclusion_chain"}, 4, 60); }},
      {"regular collapse, n <= 4", [] { return claims_pass({"regular_collapse"}, 4); }},
      {"derived-topology consistency, n <= 4", [] { return claims_pass({"derived_topology_closure"}, 4); }},
      {"theta non-idempotence witness (CLI)", theta_witness},
      {"finite completeness meta-theorem, n <= 4", [] { return claims_pass({"finite_completeness"}, 4); }},
      {"equivalence theorems, n <= 4", equivalences},
      {"weak-topology inclusions, n <= 4",
       [] {
         return claims_pass({"weak_chain_in_weak_star", "weak_bigtheta_in_delta_and_theta", "weak_delta_in_weak_chain"},
                            4);
       }},
      {"theta closures of chains: chain, theta-closed, H-set, n <= 4",
       [] { return claims_pass({"thetacl_chain_is_chain", "thetacl_chain_theta_closed", "thetacl_chain_h_set"}, 4); }},
      {"transfer-theorem sweep, carriers <= 3", transfer_sweep},
      {"semitopological updown witness (CLI)", semitop_witness},
      {"interval example ledger", ledger71},
      {"interval example grid oracle agreement", [] { return claims_pass({"interval_grid_oracle"}, 1); }},
      {"square example ledger", ledger72},
      {"enumeration cross-checks", enumeration_counts},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ". " << criteria[i].first << " -- " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
