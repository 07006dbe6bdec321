#include "tsl/eval.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tsl/multimap.hpp"

namespace tsl {

using nlohmann::json;

namespace {

enum class SetArg { none, required };
enum class ModeArg { none, optional_closure, required_closure, required_weak, required_derived, chain_compact };

struct Context {
  const SpaceFile& file;
  Subset set;
  ClosureMode mode = ClosureMode::plain;
  WeakTopologyMode weak = WeakTopologyMode::chain;

  const FiniteSpace& space() const { return file.space; }
  TopSemilattice model() const { return file.model(); }
};

struct OpDef {
  SetArg set;
  ModeArg mode;
  std::function<json(const Context&)> run;
};

json subsets_json(const std::vector<Subset>& family) {
  std::vector<Subset> sorted = family;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  json out = json::array();
  for (Subset s : sorted) out.push_back(subset_to_json(s));
  return out;
}

Element single(const Context& c) {
  if (c.set.size() != 1) throw UsageError("this op takes exactly one index in --set");
  return c.set.min();
}

json optional_element(std::optional<Element> e) { return e ? json(*e) : json(nullptr); }

json closure_with(ClosureMode mode, const Context& c) { return subset_to_json(closure_of(c.space(), c.set, mode)); }

json separation_op(Separation s, const Context& c) { return separation(c.space(), s); }

const std::map<std::string, OpDef>& ops() {
  using S = SetArg;
  using M = ModeArg;
  static const std::map<std::string, OpDef> table = {
      {"closure", {S::required, M::optional_closure, [](const Context& c) { return closure_with(c.mode, c); }}},
      {"delta-closure", {S::required, M::none, [](const Context& c) { return closure_with(ClosureMode::delta, c); }}},
      {"theta-closure", {S::required, M::none, [](const Context& c) { return closure_with(ClosureMode::theta, c); }}},
      {"bigtheta-closure",
       {S::required, M::none, [](const Context& c) { return closure_with(ClosureMode::bigtheta, c); }}},
      {"closure-by-definition",
       {S::required, M::optional_closure,
        [](const Context& c) { return subset_to_json(closure_by_definition(c.space(), c.set, c.mode)); }}},
      {"interior", {S::required, M::none, [](const Context& c) { return subset_to_json(interior_of(c.space(), c.set)); }}},
      {"is-open", {S::required, M::none, [](const Context& c) { return json(c.space().is_open(c.set)); }}},
      {"is-closed",
       {S::required, M::optional_closure,
        [](const Context& c) { return json(is_mode_closed(c.space(), c.set, c.mode)); }}},
      {"opens", {S::none, M::none, [](const Context& c) { return subsets_json(c.space().opens()); }}},
      {"closed-sets",
       {S::none, M::optional_closure,
        [](const Context& c) { return subsets_json(mode_closed_sets(c.space(), c.mode)); }}},
      {"min-nbhd",
       {S::required, M::none, [](const Context& c) { return subset_to_json(c.space().min_nbhd(single(c))); }}},
      {"derived-topology",
       {S::none, M::required_derived,
        [](const Context& c) { return space_to_json(derived_topology(c.space(), c.mode)); }}},
      {"subspace", {S::required, M::none, [](const Context& c) { return space_to_json(subspace(c.space(), c.set)); }}},
      {"is-t1", {S::none, M::none, [](const Context& c) { return separation_op(Separation::t1, c); }}},
      {"is-hausdorff", {S::none, M::none, [](const Context& c) { return separation_op(Separation::hausdorff, c); }}},
      {"is-urysohn", {S::none, M::none, [](const Context& c) { return separation_op(Separation::urysohn, c); }}},
      {"is-regular", {S::none, M::none, [](const Context& c) { return separation_op(Separation::regular, c); }}},
      {"is-h-set", {S::required, M::none, [](const Context& c) { return json(is_H_set(c.space(), c.set)); }}},
      {"is-h-set-by-filters",
       {S::required, M::none, [](const Context& c) { return json(is_H_set_by_filters(c.space(), c.set)); }}},

      {"leq",
       {S::none, M::none,
        [](const Context& c) {
          const auto ts = c.model();
          json rows = json::array();
          for (Element x = 0; x < ts.size(); ++x) rows.push_back(subset_to_json(ts.order().up_set(x)));
          return rows;
        }}},
      {"up-set", {S::required, M::none, [](const Context& c) { return subset_to_json(c.model().order().up_closure(c.set)); }}},
      {"down-set",
       {S::required, M::none, [](const Context& c) { return subset_to_json(c.model().order().down_closure(c.set)); }}},
      {"glb", {S::required, M::none, [](const Context& c) { return optional_element(c.model().order().glb(c.set)); }}},
      {"lub", {S::required, M::none, [](const Context& c) { return optional_element(c.model().order().lub(c.set)); }}},
      {"is-chain", {S::required, M::none, [](const Context& c) { return json(is_chain(c.model().order(), c.set)); }}},
      {"is-subsemilattice",
       {S::required, M::none, [](const Context& c) { return json(is_subsemilattice(c.model().meet(), c.set)); }}},
      {"chains",
       {S::none, M::none,
        [](const Context& c) {
          json out = json::array();
          for (const Chain& ch : enumerate_chains(c.model().order())) out.push_back(subset_to_json(ch.elements()));
          return out;
        }}},
      {"subsemilattices",
       {S::none, M::none, [](const Context& c) { return subsets_json(enumerate_subsemilattices(c.model())); }}},
      {"is-semitopological", {S::none, M::none, [](const Context& c) { return json(is_semitopological(c.model())); }}},
      {"is-topological", {S::none, M::none, [](const Context& c) { return json(is_topological(c.model())); }}},
      {"is-updown-closed",
       {S::none, M::optional_closure, [](const Context& c) { return json(is_updown_closed(c.model(), c.mode)); }}},
      {"is-theta-biclosed", {S::none, M::none, [](const Context& c) { return json(is_theta_biclosed(c.model())); }}},
      {"is-complete",
       {S::none, M::optional_closure, [](const Context& c) { return json(is_complete(c.model(), c.mode)); }}},
      {"is-complete-subset",
       {S::required, M::optional_closure,
        [](const Context& c) { return json(is_complete_subset(c.model(), c.set, c.mode)); }}},
      {"closed-chains-contain-bounds",
       {S::none, M::none, [](const Context& c) { return json(closed_chains_contain_bounds(c.model())); }}},
      {"weak-topology",
       {S::none, M::required_weak, [](const Context& c) { return space_to_json(weak_topology(c.model(), c.weak)); }}},
      {"is-chain-compact",
       {S::none, M::chain_compact, [](const Context& c) { return json(is_chain_compact(c.model(), c.mode)); }}},
      {"thetacl-chains-are-h-sets",
       {S::none, M::none, [](const Context& c) { return json(thetacl_chains_are_h_sets(c.model())); }}},
  };
  return table;
}

ClosureMode parse_mode(const std::string& name) {
  try {
    return parse_closure_mode(name);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown closure mode: " + name);
  }
}

}  // namespace

json eval_op(const SpaceFile& file, const std::string& op, const EvalArgs& args) {
  const auto it = ops().find(op);
  if (it == ops().end()) throw UsageError("unknown op: " + op);
  const OpDef& def = it->second;
  Context c{file, {}};
  if (def.set == SetArg::required) {
    if (!args.set) throw UsageError(op + " requires --set");
    c.set = parse_index_list(*args.set, file.space.size());
  } else if (args.set) {
    throw UsageError(op + " takes no --set");
  }
  switch (def.mode) {
    case ModeArg::none:
      if (args.mode) throw UsageError(op + " takes no --mode");
      break;
    case ModeArg::optional_closure:
      if (args.mode) c.mode = parse_mode(*args.mode);
      break;
    case ModeArg::required_closure:
      if (!args.mode) throw UsageError(op + " requires --mode");
      c.mode = parse_mode(*args.mode);
      break;
    case ModeArg::required_derived:
      if (!args.mode) throw UsageError(op + " requires --mode delta|theta");
      c.mode = parse_mode(*args.mode);
      if (c.mode != ClosureMode::delta && c.mode != ClosureMode::theta)
        throw UsageError(op + " accepts --mode delta|theta");
      break;
    case ModeArg::chain_compact:
      if (args.mode) c.mode = parse_mode(*args.mode);
      if (c.mode == ClosureMode::theta) throw UsageError(op + " accepts --mode plain|delta|bigtheta");
      break;
    case ModeArg::required_weak:
      if (!args.mode) throw UsageError(op + " requires --mode chain|star|delta_chain|theta_chain|bigtheta_chain");
      try {
        c.weak = parse_weak_topology_mode(*args.mode);
      } catch (const std::invalid_argument&) {
        throw UsageError("unknown weak topology mode: " + *args.mode);
      }
      break;
  }
  return def.run(c);
}

std::vector<std::string> eval_op_names() {
  std::vector<std::string> names;
  for (const auto& [name, def] : ops()) names.push_back(name);
  return names;
}

}  // namespace tsl
