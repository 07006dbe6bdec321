#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tsl/enumerate.hpp"
#include "tsl/example71.hpp"
#include "tsl/grid_oracle71.hpp"
#include "tsl/harness.hpp"
#include "tsl/ledger.hpp"
#include "tsl/multimap.hpp"
#include "tsl/serialize.hpp"

namespace tsl {

using nlohmann::json;

namespace {

constexpr int kSpaceCap = kMaxEnumeratedCarrier;
constexpr int kModelCap = kMaxEnumeratedModelCarrier;
constexpr int kMapCap = 3;

constexpr ClosureMode kModes[] = {ClosureMode::plain, ClosureMode::delta, ClosureMode::theta, ClosureMode::bigtheta};

// Counts instances and keeps the first failure in enumeration order.
class Tally {
 public:
  explicit Tally(std::string universe) { report_.universe = std::move(universe); }

  template <class MakeCounterexample>
  bool check(bool ok, MakeCounterexample&& make) {
    ++report_.checked_count;
    if (!ok && report_.pass) {
      report_.pass = false;
      report_.counterexample = make();
    }
    return ok;
  }

  ClaimReport done() { return std::move(report_); }

 private:
  ClaimReport report_;
};

std::string bound(const std::string& what, int n) { return what + " on n <= " + std::to_string(n) + " points"; }

json with(json j, const std::string& key, json value) {
  j[key] = std::move(value);
  return j;
}

const std::vector<FiniteSpace>& spaces_up_to(int n) {
  static std::map<int, std::vector<FiniteSpace>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_topologies_up_to(n)).first;
  return it->second;
}

const std::vector<TopSemilattice>& models_up_to(int n) {
  static std::map<int, std::vector<TopSemilattice>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_models_up_to(n)).first;
  return it->second;
}

std::vector<MeetTable> meets_up_to(int n) {
  std::vector<MeetTable> out;
  for (int k = 1; k <= n; ++k)
    for (auto& m : enumerate_meet_tables(k)) out.push_back(std::move(m));
  return out;
}

bool is_topology_family(int n, const std::vector<Subset>& opens) {
  const std::set<Subset> family(opens.begin(), opens.end());
  if (!family.count(Subset{}) || !family.count(Subset::full(n))) return false;
  for (Subset a : opens)
    for (Subset b : opens)
      if (!family.count(a | b) || !family.count(a & b)) return false;
  return true;
}

// Closed under finite unions and intersections and containing ∅ and X.
bool is_closed_lattice(int n, const std::vector<Subset>& closed) {
  std::vector<Subset> complements;
  for (Subset f : closed) complements.push_back(f.complement(n));
  return is_topology_family(n, complements);
}

bool opens_contained(const FiniteSpace& a, const FiniteSpace& b) {
  for (Subset u : a.opens())
    if (!b.is_open(u)) return false;
  return true;
}

MeetTable chain_meet(int n) {
  RawTable raw(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) raw[x][y] = std::min(x, y);
  return MeetTable::validate(raw);
}

// ---- operators -----------------------------------------------------------

ClaimReport op_inclusion_chain(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all topologies and subsets", n));
  for (const auto& sp : spaces_up_to(n))
    for (Subset a : all_subsets(sp.size())) {
      const Subset c0 = closure_of(sp, a, ClosureMode::plain), c1 = closure_of(sp, a, ClosureMode::delta);
      const Subset c2 = closure_of(sp, a, ClosureMode::theta), c3 = closure_of(sp, a, ClosureMode::bigtheta);
      t.check(c0.is_subset_of(c1) && c1.is_subset_of(c2) && c2.is_subset_of(c3),
              [&] { return with(space_to_json(sp), "set", subset_to_json(a)); });
    }
  return t.done();
}

ClaimReport op_monotone_extensive(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all topologies, modes and pairs A ⊆ B", n));
  for (const auto& sp : spaces_up_to(n))
    for (ClosureMode mode : kModes) {
      const bool idempotent_expected = mode != ClosureMode::theta;
      for (Subset b : all_subsets(sp.size())) {
        const Subset cb = closure_of(sp, b, mode);
        bool ok = b.is_subset_of(cb) && (!idempotent_expected || closure_of(sp, cb, mode) == cb);
        for (Subset a = b;; a = Subset((a.bits() - 1) & b.bits())) {
          ok = ok && closure_of(sp, a, mode).is_subset_of(cb);
          if (a.empty()) break;
        }
        t.check(ok, [&] {
          return with(with(space_to_json(sp), "set", subset_to_json(b)), "mode", to_string(mode));
        });
      }
    }
  return t.done();
}

ClaimReport op_w3_theta(int) {
  Tally t("the three-point space with opens ∅,{0},{2},{0,2},X");
  const FiniteSpace w3 = FiniteSpace::make(3, {Subset{}, Subset{0}, Subset{2}, Subset{0, 2}, Subset{0, 1, 2}});
  const Subset once = closure_of(w3, Subset{0}, ClosureMode::theta);
  const Subset twice = closure_of(w3, once, ClosureMode::theta);
  t.check(once == Subset({0, 1}) && twice == Subset({0, 1, 2}), [&] {
    return with(with(space_to_json(w3), "theta_once", subset_to_json(once)), "theta_twice", subset_to_json(twice));
  });
  return t.done();
}

ClaimReport op_closed_families(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all topologies", n));
  for (const auto& sp : spaces_up_to(n))
    for (ClosureMode mode : {ClosureMode::delta, ClosureMode::theta})
      t.check(is_closed_lattice(sp.size(), mode_closed_sets(sp, mode)),
              [&] { return with(space_to_json(sp), "mode", to_string(mode)); });
  return t.done();
}

ClaimReport op_derived_topology(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all topologies and subsets", n));
  for (const auto& sp : spaces_up_to(n)) {
    for (ClosureMode mode : {ClosureMode::delta, ClosureMode::theta}) {
      std::optional<FiniteSpace> derived;
      try {
        derived = derived_topology(sp, mode);
      } catch (const TopologyError&) {
      }
      const ClosureMode matching = mode == ClosureMode::delta ? ClosureMode::delta : ClosureMode::bigtheta;
      bool ok = derived && is_topology_family(sp.size(), derived->opens());
      if (ok)
        for (Subset a : all_subsets(sp.size()))
          ok = ok && closure_of(*derived, a, ClosureMode::plain) == closure_of(sp, a, matching);
      t.check(ok, [&] { return with(space_to_json(sp), "mode", to_string(mode)); });
    }
  }
  return t.done();
}

ClaimReport op_regular_collapse(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("regular topologies and all subsets", n));
  for (const auto& sp : spaces_up_to(n)) {
    if (!separation(sp, Separation::regular)) continue;
    for (Subset a : all_subsets(sp.size())) {
      const Subset c = closure_of(sp, a, ClosureMode::plain);
      bool ok = true;
      for (ClosureMode mode : kModes) ok = ok && closure_of(sp, a, mode) == c;
      t.check(ok, [&] { return with(space_to_json(sp), "set", subset_to_json(a)); });
    }
  }
  return t.done();
}

ClaimReport op_int_cl_delta_open(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all topologies and open sets", n));
  for (const auto& sp : spaces_up_to(n))
    for (Subset u : sp.opens()) {
      const Subset r = interior_of(sp, closure_of(sp, u, ClosureMode::plain));
      t.check(is_mode_closed(sp, r.complement(sp.size()), ClosureMode::delta),
              [&] { return with(space_to_json(sp), "open", subset_to_json(u)); });
    }
  return t.done();
}

ClaimReport op_dual_paths(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all topologies, subsets and modes", n));
  for (const auto& sp : spaces_up_to(n))
    for (Subset a : all_subsets(sp.size()))
      for (ClosureMode mode : kModes)
        t.check(closure_of(sp, a, mode) == closure_by_definition(sp, a, mode), [&] {
          return with(with(space_to_json(sp), "set", subset_to_json(a)), "mode", to_string(mode));
        });
  return t.done();
}

ClaimReport op_bigtheta_fixpoint(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all topologies and subsets", n));
  for (const auto& sp : spaces_up_to(n))
    for (Subset a : all_subsets(sp.size())) {
      Subset x = a;
      for (;;) {
        const Subset next = closure_of(sp, x, ClosureMode::theta);
        if (next == x) break;
        x = next;
      }
      Subset meet_of_closed = sp.carrier();
      for (Subset b : mode_closed_sets(sp, ClosureMode::theta))
        if (a.is_subset_of(b)) meet_of_closed &= b;
      t.check(x == meet_of_closed && x == closure_of(sp, a, ClosureMode::bigtheta),
              [&] { return with(space_to_json(sp), "set", subset_to_json(a)); });
    }
  return t.done();
}

ClaimReport enum_topology_dual_path(int n_max) {
  const int n = std::min(n_max, 3);
  Tally t(bound("topology counts by preorders and by subset families", n));
  const std::uint64_t expected[] = {0, 1, 4, 29};
  for (int k = 1; k <= n; ++k) {
    const auto by_preorders = enumerate_topologies(k).size();
    const auto by_families = count_topologies_by_families(k);
    t.check(by_preorders == by_families && by_families == expected[k], [&] {
      return json{{"n", k}, {"preorders", by_preorders}, {"families", by_families}};
    });
  }
  return t.done();
}

ClaimReport harness_determinism(int n_max) {
  const int n = std::min(n_max, 3);
  Tally t(bound("repeated enumeration and ledger runs", n));
  for (int k = 1; k <= n; ++k) {
    json a = json::array(), b = json::array();
    for (const auto& m : enumerate_models(k)) a.push_back(model_to_json(m));
    for (const auto& m : enumerate_models(k)) b.push_back(model_to_json(m));
    t.check(a.dump() == b.dump(), [&] { return json{{"n", k}}; });
  }
  for (int example : {71, 72}) {
    std::string a, b;
    for (const auto& e : run_ledger(example)) a += to_json(e).dump() + "\n";
    for (const auto& e : run_ledger(example)) b += to_json(e).dump() + "\n";
    t.check(a == b, [&] { return json{{"ledger", example}}; });
  }
  return t.done();
}

ClaimReport harness_coverage(int) {
  Tally t("claim registry against the coverage manifest");
  std::set<std::string> ids, covered;
  for (const auto& c : claim_registry()) {
    t.check(!c.anchor.empty() && ids.insert(c.id).second, [&] { return json{{"claim", c.id}}; });
    covered.insert(c.covers.begin(), c.covers.end());
  }
  for (const auto& key : coverage_manifest())
    t.check(covered.count(key) == 1, [&] { return json{{"uncovered", key}}; });
  return t.done();
}

// ---- order and completeness ----------------------------------------------

ClaimReport order_partial_order(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all meet tables", n));
  for (const auto& m : meets_up_to(n)) {
    const OrderRelation o = induced_order(m);
    bool ok = true;
    for (Element x = 0; x < m.size(); ++x)
      for (Element y = 0; y < m.size(); ++y) {
        ok = ok && o.leq(x, x);
        if (x != y) ok = ok && !(o.leq(x, y) && o.leq(y, x));
        for (Element z = 0; z < m.size(); ++z) ok = ok && (!(o.leq(x, y) && o.leq(y, z)) || o.leq(x, z));
        const auto g = o.glb(Subset{x, y});
        ok = ok && g && *g == m.meet(x, y);
      }
    t.check(ok, [&] { return json{{"meet", m.rows()}}; });
  }
  return t.done();
}

template <class Check>
ClaimReport over_chains(int n_max, Check check) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all meet tables and chains", n));
  for (const auto& m : meets_up_to(n)) {
    const OrderRelation o = induced_order(m);
    for (const Chain& c : enumerate_chains(o))
      t.check(check(o, c), [&] { return json{{"meet", m.rows()}, {"chain", subset_to_json(c.elements())}}; });
  }
  return t.done();
}

ClaimReport order_chains_directed(int n_max) {
  return over_chains(n_max, [](const OrderRelation& o, const Chain& c) {
    return is_up_directed(o, c.elements()) && is_down_directed(o, c.elements());
  });
}

ClaimReport order_chain_bounds(int n_max) {
  return over_chains(n_max, [](const OrderRelation& o, const Chain& c) {
    return c.elements().contains(chain_inf(o, c)) && c.elements().contains(chain_sup(o, c));
  });
}

ClaimReport order_chain_count(int n_max) {
  const int n = std::min(n_max, kSpaceCap);
  Tally t(bound("all meet tables", n));
  for (const auto& m : meets_up_to(n)) {
    const OrderRelation o = induced_order(m);
    std::size_t brute = 0;
    for (Subset s : all_subsets(m.size()))
      if (!s.empty() && is_chain(o, s)) ++brute;
    const std::size_t listed = enumerate_chains(o).size();
    t.check(brute == listed, [&] { return json{{"meet", m.rows()}, {"listed", listed}, {"brute_force", brute}}; });
  }
  return t.done();
}

ClaimReport enum_meet_dual_path(int n_max) {
  const int n = std::min(n_max, 3);
  Tally t(bound("meet-table counts by orders and by axiom filtering", n));
  for (int k = 1; k <= n; ++k) {
    const auto by_orders = enumerate_meet_tables(k).size();
    const auto by_tables = count_meet_tables_by_tables(k);
    t.check(by_orders == by_tables, [&] { return json{{"n", k}, {"orders", by_orders}, {"tables", by_tables}}; });
  }
  return t.done();
}

template <class Check>
ClaimReport over_models(int n_max, const std::string& what, Check check) {
  const int n = std::min(n_max, kModelCap);
  Tally t(bound(what, n));
  for (const auto& ts : models_up_to(n)) {
    std::optional<json> detail;
    const std::optional<bool> ok = check(ts, detail);
    if (!ok) continue;
    t.check(*ok, [&] {
      json j = model_to_json(ts);
      if (detail) j["detail"] = *detail;
      return j;
    });
  }
  return t.done();
}

ClaimReport comp_finite_meta(int n_max) {
  return over_models(n_max, "all models", [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
    for (ClosureMode mode : kModes)
      if (!is_complete(ts, mode)) {
        d = to_string(mode);
        return false;
      }
    return true;
  });
}

json sides(std::initializer_list<std::pair<const char*, bool>> s) {
  json j;
  for (const auto& [k, v] : s) j[k] = v;
  return j;
}

ClaimReport comp_equivalence_plain(int n_max) {
  return over_models(n_max, "updown-closed models",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       if (!is_updown_closed(ts, ClosureMode::plain)) return std::nullopt;
                       const bool a = is_complete(ts, ClosureMode::plain);
                       const bool b = is_compact_in(weak_topology(ts, WeakTopologyMode::chain), ts.space().carrier());
                       const bool c = is_chain_compact(ts, ClosureMode::plain);
                       d = sides({{"complete", a}, {"weak_chain_compact", b}, {"chain_compact", c}});
                       return a == b && b == c;
                     });
}

ClaimReport comp_equivalence_delta(int n_max) {
  return over_models(n_max, "delta-updown-closed models",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       if (!is_updown_closed(ts, ClosureMode::delta)) return std::nullopt;
                       const bool a = is_complete(ts, ClosureMode::delta);
                       const bool b =
                           is_compact_in(weak_topology(ts, WeakTopologyMode::delta_chain), ts.space().carrier());
                       const bool c = is_chain_compact(ts, ClosureMode::delta);
                       d = sides({{"delta_complete", a}, {"weak_delta_chain_compact", b}, {"delta_chain_compact", c}});
                       return a == b && b == c;
                     });
}

ClaimReport comp_equivalence_theta(int n_max) {
  return over_models(n_max, "theta-updown-closed models",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       if (!is_updown_closed(ts, ClosureMode::theta)) return std::nullopt;
                       const bool a = is_complete(ts, ClosureMode::theta);
                       const bool b =
                           is_compact_in(weak_topology(ts, WeakTopologyMode::theta_chain), ts.space().carrier());
                       const bool c = thetacl_chains_are_h_sets(ts);
                       d = sides({{"theta_complete", a}, {"theta_chain_compact", b}, {"thetacl_chains_h_sets", c}});
                       return a == b && b == c;
                     });
}

ClaimReport comp_equivalence_bigtheta(int n_max) {
  return over_models(n_max, "theta-updown-closed models",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       if (!is_updown_closed(ts, ClosureMode::theta)) return std::nullopt;
                       const bool a = is_complete(ts, ClosureMode::bigtheta);
                       const bool b =
                           is_compact_in(weak_topology(ts, WeakTopologyMode::bigtheta_chain), ts.space().carrier());
                       const bool c = is_chain_compact(ts, ClosureMode::bigtheta);
                       d = sides({{"bigtheta_complete", a}, {"weak_bigtheta_chain_compact", b},
                                  {"bigtheta_chain_compact", c}});
                       return a == b && b == c;
                     });
}

ClaimReport comp_closed_chain_bounds(int n_max) {
  return over_models(n_max, "updown-closed models",
                     [](const TopSemilattice& ts, std::optional<json>&) -> std::optional<bool> {
                       if (!is_updown_closed(ts, ClosureMode::plain)) return std::nullopt;
                       return is_complete(ts, ClosureMode::plain) == closed_chains_contain_bounds(ts);
                     });
}

ClaimReport comp_thetacl_chain_is_chain(int n_max) {
  return over_models(n_max, "theta-biclosed models",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       if (!is_theta_biclosed(ts)) return std::nullopt;
                       for (const Chain& c : enumerate_chains(ts.order()))
                         if (!is_chain(ts.order(), closure_of(ts.space(), c.elements(), ClosureMode::theta))) {
                           d = subset_to_json(c.elements());
                           return false;
                         }
                       return true;
                     });
}

ClaimReport comp_thetacl_chain_theta_closed(int n_max) {
  return over_models(n_max, "theta-complete theta-updown-closed models",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       if (!is_complete(ts, ClosureMode::theta) || !is_updown_closed(ts, ClosureMode::theta))
                         return std::nullopt;
                       for (const Chain& c : enumerate_chains(ts.order()))
                         if (!is_mode_closed(ts.space(), closure_of(ts.space(), c.elements(), ClosureMode::theta),
                                             ClosureMode::theta)) {
                           d = subset_to_json(c.elements());
                           return false;
                         }
                       return true;
                     });
}

ClaimReport comp_directed_convergence(int n_max) {
  return over_models(n_max, "all models and directed subsets",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       const OrderRelation& o = ts.order();
                       for (Subset s : all_subsets(ts.size())) {
                         if (s.empty()) continue;
                         if (is_up_directed(o, s) && !theta_converges(ts, s, *o.lub(s), Direction::up)) {
                           d = json{{"up", subset_to_json(s)}};
                           return false;
                         }
                         if (is_down_directed(o, s) && !theta_converges(ts, s, *o.glb(s), Direction::down)) {
                           d = json{{"down", subset_to_json(s)}};
                           return false;
                         }
                       }
                       return true;
                     });
}

ClaimReport comp_thetacl_h_set(int n_max) {
  return over_models(n_max, "theta-updown-closed models",
                     [](const TopSemilattice& ts, std::optional<json>& d) -> std::optional<bool> {
                       if (!is_updown_closed(ts, ClosureMode::theta)) return std::nullopt;
                       for (const Chain& c : enumerate_chains(ts.order())) {
                         const Subset cl = closure_of(ts.space(), c.elements(), ClosureMode::theta);
                         if (!is_H_set(ts.space(), cl) || !is_H_set_by_filters(ts.space(), cl)) {
                           d = subset_to_json(c.elements());
                           return false;
                         }
                       }
                       return true;
                     });
}

ClaimReport comp_urysohn(int n_max) {
  return over_models(n_max, "Urysohn semitopological models (all discrete)",
                     [](const TopSemilattice& ts, std::optional<json>&) -> std::optional<bool> {
                       if (!separation(ts.space(), Separation::urysohn) || !is_semitopological(ts))
                         return std::nullopt;
                       return is_updown_closed(ts, ClosureMode::theta);
                     });
}

ClaimReport comp_sierpinski(int) {
  Tally t("Sierpinski space with the chain meet 0 < 1");
  const auto ts = TopSemilattice::make(FiniteSpace::make(2, {Subset{}, Subset{1}, Subset{0, 1}}), chain_meet(2));
  const bool semi = is_semitopological(ts);
  const bool updown = is_updown_closed(ts, ClosureMode::plain);
  const bool up1_closed = ts.space().is_closed(ts.order().up_set(1));
  t.check(semi && !updown && !up1_closed, [&] {
    return with(model_to_json(ts), "detail", sides({{"semitopological", semi}, {"updown_closed", updown}}));
  });
  return t.done();
}

// ---- weak topologies -----------------------------------------------------

template <class Check>
ClaimReport over_weak(int n_max, Check check) {
  return over_models(n_max, "all models", [&](const TopSemilattice& ts, std::optional<json>&) -> std::optional<bool> {
    return check(ts);
  });
}

ClaimReport weak_chain_in_star(int n_max) {
  return over_weak(n_max, [](const TopSemilattice& ts) {
    return opens_contained(weak_topology(ts, WeakTopologyMode::chain), weak_topology(ts, WeakTopologyMode::star));
  });
}

ClaimReport weak_bigtheta_in_delta_theta(int n_max) {
  return over_weak(n_max, [](const TopSemilattice& ts) {
    const FiniteSpace big = weak_topology(ts, WeakTopologyMode::bigtheta_chain);
    return opens_contained(big, weak_topology(ts, WeakTopologyMode::delta_chain)) &&
           opens_contained(big, weak_topology(ts, WeakTopologyMode::theta_chain));
  });
}

ClaimReport weak_delta_in_chain(int n_max) {
  return over_weak(n_max, [](const TopSemilattice& ts) {
    return opens_contained(weak_topology(ts, WeakTopologyMode::delta_chain), weak_topology(ts, WeakTopologyMode::chain));
  });
}

// ---- maps and transfer theorems ------------------------------------------

std::vector<std::vector<Element>> all_maps(int n, int m) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> f(n, 0);
  for (;;) {
    out.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

json map_json(const std::vector<Element>& f) { return json(f); }

ClaimReport mm_fiber_identity(int n_max) {
  const int n = std::min(n_max, kMapCap);
  Tally t(bound("all maps between chain models and all subsets", n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const auto dom = std::make_shared<const TopSemilattice>(TopSemilattice::make(FiniteSpace::discrete(a), chain_meet(a)));
      const auto cod = std::make_shared<const TopSemilattice>(TopSemilattice::make(FiniteSpace::discrete(b), chain_meet(b)));
      for (const auto& h : all_maps(a, b)) {
        const MultiMap fib = fibers_of(PointMap(dom, cod, h), FiberPolicy::allow_empty);
        for (Subset f : all_subsets(a))
          t.check(mm_preimage(fib, f) == image_of(h, f),
                  [&] { return json{{"map", map_json(h)}, {"codomain_size", b}, {"set", subset_to_json(f)}}; });
      }
    }
  return t.done();
}

ClaimReport mm_fibers_multimorphism(int n_max) {
  const int n = std::min(n_max, kMapCap);
  Tally t(bound("all homomorphisms between meet tables", n));
  const auto meets = meets_up_to(n);
  for (const auto& md : meets)
    for (const auto& mc : meets) {
      const auto dom = std::make_shared<const TopSemilattice>(TopSemilattice::make(FiniteSpace::discrete(md.size()), md));
      const auto cod = std::make_shared<const TopSemilattice>(TopSemilattice::make(FiniteSpace::discrete(mc.size()), mc));
      for (const auto& h : all_maps(md.size(), mc.size())) {
        const PointMap pm(dom, cod, h);
        if (!is_homomorphism(pm)) continue;
        t.check(is_multimorphism(fibers_of(pm, FiberPolicy::allow_empty)), [&] {
          return json{{"dom_meet", md.rows()}, {"cod_meet", mc.rows()}, {"map", map_json(h)}};
        });
      }
    }
  return t.done();
}

ClaimReport mm_theta_preimage(int n_max) {
  const int n = std::min(n_max, kMapCap);
  Tally t(bound("continuous maps between spaces and theta-closed sets", n));
  const auto& spaces = spaces_up_to(n);
  for (const auto& dom : spaces)
    for (const auto& cod : spaces) {
      const auto closed = mode_closed_sets(cod, ClosureMode::theta);
      for (const auto& f : all_maps(dom.size(), cod.size())) {
        if (!is_continuous(dom, cod, f)) continue;
        for (Subset b : closed)
          t.check(is_mode_closed(dom, preimage_of(f, dom.size(), b), ClosureMode::theta), [&] {
            return json{{"dom", space_to_json(dom)}, {"cod", space_to_json(cod)}, {"map", map_json(f)},
                        {"set", subset_to_json(b)}};
          });
      }
    }
  return t.done();
}

bool is_retraction_map(const FiniteSpace& sp, const std::vector<Element>& r) {
  for (Element x = 0; x < sp.size(); ++x)
    if (r[r[x]] != r[x]) return false;
  return is_continuous(sp, sp, r);
}

ClaimReport mm_retraction_urysohn(int n_max) {
  const int n = std::min(n_max, kMapCap);
  Tally t(bound("retractions of Urysohn spaces (all discrete)", n));
  for (const auto& sp : spaces_up_to(n)) {
    if (!separation(sp, Separation::urysohn)) continue;
    for (const auto& r : all_maps(sp.size(), sp.size())) {
      if (!is_retraction_map(sp, r)) continue;
      const Subset range = image_of(r, sp.carrier());
      t.check(is_mode_closed(sp, range, ClosureMode::theta),
              [&] { return json{{"space", space_to_json(sp)}, {"retraction", map_json(r)}}; });
    }
  }
  return t.done();
}

// Per-codomain tables for the transfer sweeps.
struct CodTables {
  TopSemilatticePtr ts;
  bool updown = false;
  std::vector<bool> t1;
  std::vector<Subset> up;
  std::vector<std::vector<Subset>> product;
  std::vector<Subset> closed;
};

CodTables cod_tables(const TopSemilattice& model) {
  CodTables c;
  c.ts = std::make_shared<const TopSemilattice>(model);
  const int m = model.size();
  const int subsets = 1 << m;
  c.updown = is_updown_closed(model, ClosureMode::plain);
  c.t1.resize(subsets);
  c.up.resize(subsets);
  c.product.assign(subsets, std::vector<Subset>(subsets));
  for (Subset v : all_subsets(m)) {
    c.t1[v.bits()] = is_Ti_set(model.space(), v, 1);
    c.up[v.bits()] = model.order().up_closure(v);
    for (Subset w : all_subsets(m)) {
      Subset p;
      v.for_each([&](Element a) { w.for_each([&](Element b) { p.insert(model.meet().meet(a, b)); }); });
      c.product[v.bits()][w.bits()] = p;
    }
  }
  c.closed = model.space().closed_sets();
  return c;
}

enum class TransferKind { order_condition, disjoint };

ClaimReport transfer_sweep(int n_max, TransferKind kind) {
  const int n = std::min(n_max, kMapCap);
  Tally t(bound("all multimaps with non-empty values between models", n));
  const auto& models = models_up_to(n);
  std::vector<CodTables> tables;
  for (const auto& m : models) tables.push_back(cod_tables(m));
  for (std::size_t di = 0; di < models.size(); ++di) {
    const TopSemilattice& dom = models[di];
    const auto dom_ptr = std::make_shared<const TopSemilattice>(dom);
    const int k = dom.size();
    const bool dom_complete = is_complete(dom, ClosureMode::plain);
    for (const CodTables& cod : tables) {
      const int m = cod.ts->size();
      const std::uint32_t top = (1u << m) - 1;
      std::vector<std::uint32_t> v(k, 1);
      for (;;) {
        bool hyp = dom_complete && cod.updown;
        for (int x = 0; x < k && hyp; ++x) hyp = cod.t1[v[x]];
        for (int x = 0; x < k && hyp; ++x)
          for (int y = 0; y < k && hyp; ++y)
            hyp = cod.product[v[x]][v[y]].is_subset_of(Subset(v[dom.meet().meet(x, y)]));
        for (std::size_t f = 0; f < cod.closed.size() && hyp; ++f) {
          Subset pre;
          for (int x = 0; x < k; ++x)
            if (Subset(v[x]).intersects(cod.closed[f])) pre.insert(x);
          hyp = dom.space().is_closed(pre);
        }
        for (int x = 0; x < k && hyp; ++x)
          for (int y = 0; y < k && hyp; ++y) {
            if (kind == TransferKind::order_condition)
              hyp = !dom.order().leq(x, y) || (Subset(v[x]) & cod.up[v[y]]).is_subset_of(Subset(v[y]));
            else
              hyp = x == y || !Subset(v[x]).intersects(Subset(v[y]));
          }
        // The fast filter must agree with the checker; on small carriers the
        // checker also runs where the filter rejects.
        if (hyp || (k <= 2 && m <= 2)) {
          std::vector<Subset> values;
          for (int x = 0; x < k; ++x) values.emplace_back(v[x]);
          const MultiMap phi(dom_ptr, cod.ts, values);
          const TheoremVerdict verdict = kind == TransferKind::order_condition ? check_transfer_theorem(phi)
                                                                                : check_disjoint_corollary(phi);
          const bool ok = verdict.hypotheses_hold() == hyp &&
                          (!hyp || (verdict.conclusion && verdict.derived_fact.value_or(true)));
          t.check(ok, [&] { return with(multimap_to_json(phi), "outcome", to_string(verdict.outcome())); });
        }
        int i = 0;
        while (i < k && v[i] == top) v[i++] = 1;
        if (i == k) break;
        ++v[i];
      }
    }
  }
  return t.done();
}

ClaimReport thm_transfer(int n_max) { return transfer_sweep(n_max, TransferKind::order_condition); }
ClaimReport thm_disjoint(int n_max) { return transfer_sweep(n_max, TransferKind::disjoint); }

ClaimReport closed_embedding_sweep(int n_max, EmbeddingVariant variant) {
  const int n = std::min(n_max, kMapCap);
  Tally t(bound("subsemilattices with all maps to models", n));
  const auto& models = models_up_to(n);
  std::vector<bool> complete;
  for (const auto& e : models) complete.push_back(is_complete(e, ClosureMode::plain));
  for (const auto& y : models) {
    const bool ambient = variant == EmbeddingVariant::theta_fibers
                             ? is_topological(y)
                             : is_semitopological(y) && separation(y.space(), Separation::regular);
    for (Subset xs : enumerate_subsemilattices(y)) {
      if (xs.empty()) continue;
      const TopSemilattice x = induced_substructure(y, xs);
      const std::vector<Element> members = xs.elements();
      const auto x_closed = x.space().closed_sets();
      for (std::size_t ei = 0; ei < models.size(); ++ei) {
        const TopSemilattice& e = models[ei];
        for (const auto& h : all_maps(x.size(), e.size())) {
          bool hyp = ambient && complete[ei];
          for (int a = 0; a < x.size() && hyp; ++a)
            for (int b = 0; b < x.size() && hyp; ++b) hyp = h[x.meet().meet(a, b)] == e.meet().meet(h[a], h[b]);
          for (std::size_t f = 0; f < x_closed.size() && hyp; ++f) hyp = e.space().is_closed(image_of(h, x_closed[f]));
          for (Element p = 0; p < e.size() && hyp; ++p) {
            Subset fiber;
            for (std::size_t i = 0; i < members.size(); ++i)
              if (h[i] == p) fiber.insert(members[i]);
            hyp = variant == EmbeddingVariant::theta_fibers ? is_mode_closed(y.space(), fiber, ClosureMode::theta)
                                                            : y.space().is_closed(fiber);
          }
          if (!hyp && (y.size() > 2 || e.size() > 2)) continue;
          const TheoremVerdict verdict = check_closed_embedding_theorem(y, xs, e, h, variant);
          t.check(verdict.hypotheses_hold() == hyp && (!hyp || verdict.conclusion), [&] {
            return json{{"ambient", model_to_json(y)}, {"subsemilattice", subset_to_json(xs)},
                        {"target", model_to_json(e)}, {"map", map_json(h)},
                        {"outcome", to_string(verdict.outcome())}};
          });
        }
      }
    }
  }
  return t.done();
}

ClaimReport thm_embedding_theta(int n_max) { return closed_embedding_sweep(n_max, EmbeddingVariant::theta_fibers); }
ClaimReport thm_embedding_regular(int n_max) {
  return closed_embedding_sweep(n_max, EmbeddingVariant::regular_closed);
}

// ---- infinite examples ---------------------------------------------------

std::vector<IntervalSet> normalization_family() {
  const Rational ends[] = {0, Rational(1, 3), Rational(1, 2), 1};
  std::vector<Component> comps;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      for (int f = 0; f < 4; ++f) comps.push_back(Component{ends[i], ends[j], (f & 1) != 0, (f & 2) != 0});
  std::vector<IntervalSet> out;
  for (std::size_t i = 0; i < comps.size(); i += 3)
    for (std::size_t j = 0; j < comps.size(); j += 5) {
      out.push_back(IntervalSet::make({comps[i], comps[j]}));
      out.push_back(IntervalSet::make({comps[i], comps[j]}, {Rational(1, 4)}, {Rational(1, 3)},
                                      Harmonic{HarmonicSign::minus, 2}));
    }
  return out;
}

ClaimReport ex_normalization(int) {
  Tally t("interval sets built from pairs of components over the ends 0, 1/3, 1/2, 1");
  const Rational ends[] = {0, Rational(1, 3), Rational(1, 2), 1};
  std::vector<Component> comps;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      for (int f = 0; f < 4; ++f) comps.push_back(Component{ends[i], ends[j], (f & 1) != 0, (f & 2) != 0});
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const IntervalSet a = IntervalSet::make({comps[i], comps[j]}, {}, {}, Harmonic{HarmonicSign::minus, 3});
      const IntervalSet b = IntervalSet::make({comps[j], comps[i]}, {}, {}, Harmonic{HarmonicSign::minus, 3});
      const IntervalSet again = IntervalSet::make(a.components(), a.plus_points(), a.minus_points(), a.harmonic());
      t.check(a == b && again == a, [&] { return json{{"first", a.to_string()}, {"second", b.to_string()}}; });
    }
  return t.done();
}

ClaimReport ex_s71_operator_chain(int) {
  Tally t("corpus sets, their pairwise unions and a component family");
  std::vector<IntervalSet> sets;
  const auto corpus = s71_corpus();
  for (const auto& [name, a] : corpus) sets.push_back(a);
  for (const auto& [n1, a] : corpus)
    for (const auto& [n2, b] : corpus) sets.push_back(a | b);
  for (auto& s : normalization_family()) sets.push_back(std::move(s));
  for (const auto& a : sets) {
    const IntervalSet cl = s71_closure(a), dcl = s71_delta_closure(a);
    t.check(cl.is_subset_of(dcl) && dcl == a.euclidean_closure(), [&] { return json{{"set", a.to_string()}}; });
  }
  return t.done();
}

ClaimReport ex_grid_oracle(int) {
  Tally t("20 corpus sets at grid points p/q, q <= 32");
  const auto grid = oracle71::grid();
  for (const auto& [name, a] : s71_corpus()) {
    const IntervalSet cl = s71_closure(a), dcl = s71_delta_closure(a);
    const auto grid_in_a = oracle71::witness_membership(a);
    for (const auto& x : grid) {
      const bool c_sym = cl.contains(x), c_orc = oracle71::closure_mem(x, a, grid_in_a);
      const bool d_sym = dcl.contains(x), d_orc = oracle71::delta_closure_mem(x, a, grid_in_a);
      t.check(c_sym == c_orc && d_sym == d_orc, [&] {
        return json{{"set", name}, {"x", to_string(x)}, {"closure", c_sym}, {"oracle_closure", c_orc},
                    {"delta_closure", d_sym}, {"oracle_delta_closure", d_orc}};
      });
    }
  }
  return t.done();
}

ClaimReport ex_ledger71(int) {
  Tally t("ledger of the interval example");
  for (const auto& e : run_ledger(71)) t.check(e.status == LedgerStatus::pass, [&] { return to_json(e); });
  return t.done();
}

ClaimReport ex_ledger72(int) {
  Tally t("ledger of the square example");
  for (const auto& e : run_ledger(72)) {
    bool ok = e.status != LedgerStatus::indeterminate && !e.witness.empty();
    if (e.claim.rfind("closure_of_basic_is_closed_ball", 0) == 0) ok = ok && e.status == LedgerStatus::pass;
    t.check(ok, [&] { return to_json(e); });
  }
  return t.done();
}

ClaimReport ex_ledger_totality(int) {
  Tally t("ledger claim lists against the expected claims");
  const std::map<int, std::vector<std::string>> expected = {
      {71,
       {"closure_of_H1_misses_0", "chain_H1_not_complete", "delta_closure_of_H1_holds_0",
        "int_cl_punctured_basic x=0 eps=1/3", "int_cl_punctured_basic x=0 eps=1/2",
        "int_cl_euclidean_basic x=1/2 eps=1/4", "int_cl_euclidean_basic x=1/2 eps=1/3",
        "int_cl_euclidean_basic x=3/4 eps=1/2", "delta_closure_holds_bounds (0,1]", "delta_closure_holds_bounds H_1",
        "closure_within_delta_closure"}},
      {72,
       {"closure_of_basic_is_closed_ball a=1/2 eps=1/4", "closure_of_basic_is_closed_ball a=1/3 eps=1/6",
        "basic_nbhd_is_regular_open a=1/3 eps=1/6", "basic_nbhd_misses_A a=1/3 eps=1/6",
        "theta_closure_holds_bounds A=(1/3,2/3)", "A_not_delta_complete A=(1/3,2/3)",
        "stated_orientation sup A=e(1/3) inf A=e(2/3)", "meet_orientation inf A=e(1/3) sup A=e(2/3)",
        "chain_A_closed_without_bounds"}},
  };
  for (const auto& [example, ids] : expected) {
    std::vector<std::string> got;
    for (const auto& e : run_ledger(example)) got.push_back(e.claim);
    t.check(got == ids, [&] { return json{{"ledger", example}, {"claims", got}}; });
  }
  return t.done();
}

std::vector<ClaimDef> build_registry() {
  using S = Suite;
  return {
      {"inclusion_chain", "cl ⊆ δcl ⊆ θcl ⊆ Θcl for every subset", S::operators, {"space.inclusion_chain"},
       op_inclusion_chain},
      {"operators_monotone_extensive", "closure operators are monotone and extensive; cl, δcl, Θcl idempotent",
       S::operators, {"space.monotone_extensive_idempotent"}, op_monotone_extensive},
      {"theta_not_idempotent_w3", "θ-closure is not necessarily idempotent", S::operators,
       {"space.monotone_extensive_idempotent"}, op_w3_theta},
      {"closed_families_lattice", "δ-closed and θ-closed sets are closed under intersection and finite union",
       S::operators, {"space.closed_families_lattice"}, op_closed_families},
      {"derived_topology_closure", "closure in τ_δ is δcl and closure in τ_θ is Θcl", S::operators,
       {"space.derived_topology_closure"}, op_derived_topology},
      {"regular_collapse", "all closure operators coincide on regular spaces", S::operators,
       {"space.regular_collapse"}, op_regular_collapse},
      {"int_cl_delta_open", "Int cl U is δ-open for open U", S::operators, {"space.int_cl_open_delta_open"},
       op_int_cl_delta_open},
      {"closure_dual_paths", "minimal-neighbourhood closures match definitional closures", S::operators,
       {"space.dual_paths"}, op_dual_paths},
      {"bigtheta_fixpoint", "Θcl is the θ-iteration fixpoint and the meet of θ-closed supersets", S::operators,
       {"space.bigtheta_fixpoint"}, op_bigtheta_fixpoint},
      {"topology_count_dual_path", "finite topologies correspond to preorders", S::operators,
       {"harness.enumeration_dual_path"}, enum_topology_dual_path},
      {"deterministic_reports", "identical inputs give identical reports", S::operators, {"harness.determinism"},
       harness_determinism},
      {"coverage_manifest", "every claim has one anchor and every invariant is covered", S::operators,
       {"harness.anchor_per_claim"}, harness_coverage},

      {"induced_order_partial_order", "x ≤ y iff xy = x is a partial order with meet as glb", S::completeness,
       {"order.induced_order_is_partial_order"}, order_partial_order},
      {"chains_directed", "each chain is both up-directed and down-directed", S::completeness,
       {"order.chains_directed"}, order_chains_directed},
      {"chain_bounds_in_chain", "inf and sup of a finite chain belong to it", S::completeness,
       {"order.chain_bounds_in_chain"}, order_chain_bounds},
      {"chain_count_brute_force", "chain enumeration matches subset filtering", S::completeness,
       {"order.chain_count_brute_force"}, order_chain_count},
      {"meet_count_dual_path", "meet tables correspond to meet-semilattice orders", S::completeness,
       {"harness.enumeration_dual_path"}, enum_meet_dual_path},
      {"finite_completeness", "inf C and sup C belong to the closure of every chain C, all four closures",
       S::completeness, {"ts.finite_completeness"}, comp_finite_meta},
      {"equivalence_complete_chain_compact", "complete ⇔ weak chain• compact ⇔ chain compact on ↑↓-closed models",
       S::completeness, {"ts.equivalence_plain"}, comp_equivalence_plain},
      {"equivalence_delta", "δ-complete ⇔ weak δ-chain• compact ⇔ δ-closed chains δ-compact", S::completeness,
       {"ts.equivalence_delta_theta_bigtheta"}, comp_equivalence_delta},
      {"equivalence_theta", "θ-complete ⇔ θ-chain• compact ⇔ θcl C is an H-set", S::completeness,
       {"ts.equivalence_delta_theta_bigtheta"}, comp_equivalence_theta},
      {"equivalence_bigtheta", "Θ-complete ⇔ weak Θ-chain• compact ⇔ θ-closed chains θ-compact", S::completeness,
       {"ts.equivalence_delta_theta_bigtheta"}, comp_equivalence_bigtheta},
      {"closed_chains_contain_bounds", "complete ⇔ closed chains contain inf and sup on ↑↓-closed models",
       S::completeness, {"ts.closed_chains_contain_bounds"}, comp_closed_chain_bounds},
      {"thetacl_chain_is_chain", "θcl C is a chain on θ-↕-closed models", S::completeness,
       {"ts.thetacl_chain_is_chain"}, comp_thetacl_chain_is_chain},
      {"thetacl_chain_theta_closed", "θcl C is θ-closed on θ-complete θ-↑↓-closed models", S::completeness,
       {"ts.thetacl_chain_theta_closed"}, comp_thetacl_chain_theta_closed},
      {"directed_theta_convergence", "directed sets θ-converge to their sup (up) and inf (down)", S::completeness,
       {"ts.directed_theta_convergence"}, comp_directed_convergence},
      {"thetacl_chain_h_set", "θcl C is an H-set on θ-↑↓-closed models", S::completeness,
       {"ts.thetacl_chain_h_set"}, comp_thetacl_h_set},
      {"urysohn_semitop_theta_updown", "Urysohn semitopological semilattices are θ-↑↓-closed", S::completeness,
       {"ts.urysohn_theta_updown_and_sierpinski"}, comp_urysohn},
      {"semitop_needs_separation", "semitopological semilattice is ↑↓-closed (needs a separation axiom)",
       S::completeness, {"ts.urysohn_theta_updown_and_sierpinski"}, comp_sierpinski},

      {"weak_chain_in_weak_star", "weak chain• topology is contained in the weak• topology", S::weak_topologies,
       {"ts.weak_topology_inclusions"}, weak_chain_in_star},
      {"weak_bigtheta_in_delta_and_theta", "weak Θ-chain• is contained in weak δ-chain• and weak θ-chain•",
       S::weak_topologies, {"ts.weak_topology_inclusions"}, weak_bigtheta_in_delta_theta},
      {"weak_delta_in_weak_chain", "weak δ-chain• is weaker than weak chain•", S::weak_topologies,
       {"ts.weak_topology_inclusions"}, weak_delta_in_chain},

      {"fiber_preimage_identity", "Φ⁻¹(F) = h(F) for the fiber map Φ of h", S::transfer, {"mm.fiber_preimage_identity"},
       mm_fiber_identity},
      {"fibers_of_homomorphism_multimorphism", "fibers of a homomorphism form a multimorphism", S::transfer,
       {"mm.fibers_of_homomorphism_multimorphism"}, mm_fibers_multimorphism},
      {"theta_closed_preimage", "preimage of a θ-closed set under a continuous map is θ-closed", S::transfer,
       {"mm.theta_closed_preimage"}, mm_theta_preimage},
      {"retraction_range_theta_closed", "the range of a retraction of a Urysohn space is θ-closed", S::transfer,
       {"mm.retraction_range_theta_closed"}, mm_retraction_urysohn},
      {"transfer_order_condition", "Φ(x) ∩ ↑Φ(y) ⊂ Φ(y): completeness of Φ(X) iff of each Φ(x)", S::transfer, {},
       thm_transfer},
      {"transfer_disjoint_values", "disjoint values: completeness of Φ(X) iff of each Φ(x)", S::transfer, {},
       thm_disjoint},
      {"closed_embedding_theta_fibers", "homomorphic closed map with θ-closed fibers onto a complete target",
       S::transfer, {}, thm_embedding_theta},
      {"closed_embedding_regular", "regular semitopological ambient with closed fibers", S::transfer, {},
       thm_embedding_regular},

      {"interval_set_normalization", "normalization is idempotent and order-independent", S::examples,
       {"ex.normalization"}, ex_normalization},
      {"interval_operator_chain", "δ-topology on the interval coincides with the Euclidean topology", S::examples,
       {"ex.s71_operator_chain"}, ex_s71_operator_chain},
      {"interval_grid_oracle", "symbolic cl and δcl agree with neighbourhood quantification on a grid", S::examples,
       {"ex.s71_grid_oracle"}, ex_grid_oracle},
      {"interval_ledger", "δ-complete but not complete: every stated identity", S::examples, {"ex.ledger_totality"},
       ex_ledger71},
      {"square_ledger", "θ-complete but not δ-complete: every stated claim decided with a witness", S::examples,
       {"ex.ledger_totality"}, ex_ledger72},
      {"ledger_totality", "every ledger claim receives a status", S::examples, {"ex.ledger_totality"},
       ex_ledger_totality},
  };
}

}  // namespace

json to_json(const ClaimReport& report) {
  return {{"claim", report.claim},
          {"anchor", report.anchor},
          {"universe", report.universe},
          {"status", report.pass ? "pass" : "fail"},
          {"counterexample", report.counterexample ? *report.counterexample : json(nullptr)},
          {"checked_count", report.checked_count}};
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::operators: return "operators";
    case Suite::completeness: return "completeness";
    case Suite::weak_topologies: return "weak_topologies";
    case Suite::transfer: return "transfer";
    case Suite::examples: return "examples";
    case Suite::all: return "all";
  }
  return "all";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::operators, Suite::completeness, Suite::weak_topologies, Suite::transfer, Suite::examples,
                  Suite::all})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite: " + name);
}

const std::vector<ClaimDef>& claim_registry() {
  static const std::vector<ClaimDef> registry = build_registry();
  return registry;
}

const std::vector<std::string>& coverage_manifest() {
  static const std::vector<std::string> keys = {
      "order.induced_order_is_partial_order",
      "order.chains_directed",
      "order.chain_bounds_in_chain",
      "order.chain_count_brute_force",
      "space.inclusion_chain",
      "space.monotone_extensive_idempotent",
      "space.closed_families_lattice",
      "space.derived_topology_closure",
      "space.regular_collapse",
      "space.int_cl_open_delta_open",
      "space.dual_paths",
      "space.bigtheta_fixpoint",
      "ts.finite_completeness",
      "ts.equivalence_plain",
      "ts.equivalence_delta_theta_bigtheta",
      "ts.thetacl_chain_is_chain",
      "ts.thetacl_chain_theta_closed",
      "ts.directed_theta_convergence",
      "ts.thetacl_chain_h_set",
      "ts.closed_chains_contain_bounds",
      "ts.weak_topology_inclusions",
      "ts.urysohn_theta_updown_and_sierpinski",
      "mm.fiber_preimage_identity",
      "mm.fibers_of_homomorphism_multimorphism",
      "mm.theta_closed_preimage",
      "mm.retraction_range_theta_closed",
      "ex.normalization",
      "ex.s71_operator_chain",
      "ex.s71_grid_oracle",
      "ex.ledger_totality",
      "harness.enumeration_dual_path",
      "harness.determinism",
      "harness.anchor_per_claim",
  };
  return keys;
}

std::vector<ClaimReport> run_claim_suite(Suite suite, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  std::vector<ClaimReport> out;
  for (const auto& def : claim_registry()) {
    if (suite != Suite::all && def.suite != suite) continue;
    ClaimReport r = def.run(n_max);
    r.claim = def.id;
    r.anchor = def.anchor;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tsl
