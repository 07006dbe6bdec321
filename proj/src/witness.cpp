#include <stdexcept>

#include "tsl/enumerate.hpp"
#include "tsl/harness.hpp"
#include "tsl/serialize.hpp"

namespace tsl {

using nlohmann::json;

namespace {

constexpr WitnessTarget kTargets[] = {
    WitnessTarget::theta_not_idempotent,
    WitnessTarget::closure_lt_thetacl,
    WitnessTarget::semitop_not_updown_closed,
    WitnessTarget::nonbiclosed_thetacl_not_chain,
    WitnessTarget::retraction_range_not_theta_closed,
};

std::optional<json> theta_not_idempotent(int n) {
  for (const auto& sp : enumerate_topologies_up_to(n))
    for (Subset a : all_subsets(sp.size())) {
      const Subset once = closure_of(sp, a, ClosureMode::theta);
      const Subset twice = closure_of(sp, once, ClosureMode::theta);
      if (once != twice)
        return json{{"space", space_to_json(sp)}, {"set", subset_to_json(a)},
                    {"theta_once", subset_to_json(once)}, {"theta_twice", subset_to_json(twice)}};
    }
  return std::nullopt;
}

std::optional<json> closure_lt_thetacl(int n) {
  for (const auto& sp : enumerate_topologies_up_to(n))
    for (Subset a : all_subsets(sp.size())) {
      const Subset cl = closure_of(sp, a, ClosureMode::plain);
      const Subset tcl = closure_of(sp, a, ClosureMode::theta);
      if (cl != tcl)
        return json{{"space", space_to_json(sp)}, {"set", subset_to_json(a)}, {"closure", subset_to_json(cl)},
                    {"theta_closure", subset_to_json(tcl)}};
    }
  return std::nullopt;
}

std::optional<json> semitop_not_updown_closed(int n) {
  for (const auto& ts : enumerate_models_up_to(std::min(n, kMaxEnumeratedModelCarrier)))
    if (is_semitopological(ts) && !is_updown_closed(ts, ClosureMode::plain)) return model_to_json(ts);
  return std::nullopt;
}

std::optional<json> nonbiclosed_thetacl_not_chain(int n) {
  for (const auto& ts : enumerate_models_up_to(std::min(n, kMaxEnumeratedModelCarrier))) {
    if (is_theta_biclosed(ts)) continue;
    for (const Chain& c : enumerate_chains(ts.order())) {
      const Subset tcl = closure_of(ts.space(), c.elements(), ClosureMode::theta);
      if (!is_chain(ts.order(), tcl))
        return json{{"model", model_to_json(ts)}, {"chain", subset_to_json(c.elements())},
                    {"theta_closure", subset_to_json(tcl)}};
    }
  }
  return std::nullopt;
}

std::optional<json> retraction_range_not_theta_closed(int n) {
  for (const auto& sp : enumerate_topologies_up_to(n)) {
    const int k = sp.size();
    std::vector<Element> r(k, 0);
    for (;;) {
      bool idempotent = true;
      for (Element x = 0; x < k; ++x) idempotent = idempotent && r[r[x]] == r[x];
      if (idempotent && is_continuous(sp, sp, r)) {
        const Subset range = image_of(r, sp.carrier());
        if (!is_mode_closed(sp, range, ClosureMode::theta))
          return json{{"space", space_to_json(sp)}, {"retraction", r}, {"range", subset_to_json(range)},
                      {"theta_closure", subset_to_json(closure_of(sp, range, ClosureMode::theta))}};
      }
      int i = 0;
      while (i < k && ++r[i] == k) r[i++] = 0;
      if (i == k) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(WitnessTarget target) {
  switch (target) {
    case WitnessTarget::theta_not_idempotent: return "theta_not_idempotent";
    case WitnessTarget::closure_lt_thetacl: return "closure_lt_thetacl";
    case WitnessTarget::semitop_not_updown_closed: return "semitop_not_updown_closed";
    case WitnessTarget::nonbiclosed_thetacl_not_chain: return "nonbiclosed_thetacl_not_chain";
    case WitnessTarget::retraction_range_not_theta_closed: return "retraction_range_not_theta_closed";
  }
  return "";
}

WitnessTarget parse_witness_target(const std::string& name) {
  for (WitnessTarget t : kTargets)
    if (to_string(t) == name) return t;
  throw std::invalid_argument("unknown witness target: " + name);
}

ClaimReport find_witness(WitnessTarget target, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const int n = std::min(n_max, kMaxEnumeratedCarrier);
  std::optional<json> found;
  switch (target) {
    case WitnessTarget::theta_not_idempotent: found = theta_not_idempotent(n); break;
    case WitnessTarget::closure_lt_thetacl: found = closure_lt_thetacl(n); break;
    case WitnessTarget::semitop_not_updown_closed: found = semitop_not_updown_closed(n); break;
    case WitnessTarget::nonbiclosed_thetacl_not_chain: found = nonbiclosed_thetacl_not_chain(n); break;
    case WitnessTarget::retraction_range_not_theta_closed: found = retraction_range_not_theta_closed(n); break;
  }
  ClaimReport r;
  r.claim = to_string(target);
  r.anchor = "witness search";
  r.universe = "enumeration order on n <= " + std::to_string(n) + " points";
  r.pass = found.has_value();
  r.counterexample = found ? *found : json{{"none_up_to", n}};
  r.checked_count = 1;
  return r;
}

}  // namespace tsl
