#include "tsl/topo_semilattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsl {

namespace {

Subset compress(Subset value, Subset s) {
  Subset out;
  int index = 0;
  s.for_each([&](Element e) {
    if (value.contains(e)) out.insert(index);
    ++index;
  });
  return out;
}

Element least_of(const OrderRelation& o, Subset c) {
  Element out = -1;
  c.for_each([&](Element x) {
    if (c.is_subset_of(o.up_set(x))) out = x;
  });
  return out;
}

Element greatest_of(const OrderRelation& o, Subset c) {
  Element out = -1;
  c.for_each([&](Element x) {
    if (c.is_subset_of(o.down_set(x))) out = x;
  });
  return out;
}

}  // namespace

TopSemilattice TopSemilattice::make(FiniteSpace space, MeetTable meet) {
  if (space.size() != meet.size())
    throw std::invalid_argument("topology has " + std::to_string(space.size()) +
                                " points but meet table has " + std::to_string(meet.size()));
  OrderRelation order = induced_order(meet);
  return TopSemilattice(std::move(space), std::move(meet), std::move(order));
}

bool is_semitopological(const TopSemilattice& ts) {
  const int n = ts.size();
  const auto& sp = ts.space();
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) {
      const Subset target = sp.min_nbhd(ts.meet().meet(a, x));
      bool ok = true;
      sp.min_nbhd(x).for_each([&](Element y) {
        if (!target.contains(ts.meet().meet(a, y))) ok = false;
      });
      if (!ok) return false;
    }
  return true;
}

bool is_semitopological_by_definition(const TopSemilattice& ts) {
  const int n = ts.size();
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> shift(n);
    for (Element x = 0; x < n; ++x) shift[x] = ts.meet().meet(a, x);
    if (!is_continuous_by_definition(ts.space(), ts.space(), shift)) return false;
  }
  return true;
}

bool is_topological(const TopSemilattice& ts) {
  const int n = ts.size();
  const auto& sp = ts.space();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Subset target = sp.min_nbhd(ts.meet().meet(x, y));
      bool ok = true;
      sp.min_nbhd(x).for_each([&](Element u) {
        sp.min_nbhd(y).for_each([&](Element v) {
          if (!target.contains(ts.meet().meet(u, v))) ok = false;
        });
      });
      if (!ok) return false;
    }
  return true;
}

bool is_topological_by_definition(const TopSemilattice& ts) {
  const int n = ts.size();
  if (n > 3) throw std::invalid_argument("definitional product check limited to 3 points");
  // Pair (x, y) is product point x * n + y.
  auto rectangle = [n](Subset u, Subset v) {
    Subset out;
    u.for_each([&](Element x) { v.for_each([&](Element y) { out.insert(x * n + y); }); });
    return out;
  };
  std::vector<Subset> rectangles;
  for (Subset u : ts.space().opens())
    for (Subset v : ts.space().opens()) rectangles.push_back(rectangle(u, v));
  const FiniteSpace product = generate_topology(n * n, rectangles);
  std::vector<Element> m(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) m[x * n + y] = ts.meet().meet(x, y);
  return is_continuous_by_definition(product, ts.space(), m);
}

bool is_updown_closed(const TopSemilattice& ts, ClosureMode mode) {
  for (Element x = 0; x < ts.size(); ++x)
    if (!is_mode_closed(ts.space(), ts.order().up_set(x), mode) ||
        !is_mode_closed(ts.space(), ts.order().down_set(x), mode))
      return false;
  return true;
}

bool is_theta_biclosed(const TopSemilattice& ts) {
  for (Element x = 0; x < ts.size(); ++x)
    if (!is_mode_closed(ts.space(), ts.order().updown_set(x), ClosureMode::theta)) return false;
  return true;
}

bool is_complete(const TopSemilattice& ts, ClosureMode mode) {
  for (const Chain& c : enumerate_chains(ts.order())) {
    const Subset cl = closure_of(ts.space(), c.elements(), mode);
    if (!cl.contains(chain_inf(ts.order(), c)) || !cl.contains(chain_sup(ts.order(), c))) return false;
  }
  return true;
}

bool closed_chains_contain_bounds(const TopSemilattice& ts) {
  for (const Chain& c : enumerate_chains(ts.order())) {
    if (!ts.space().is_closed(c.elements())) continue;
    const auto inf = ts.order().glb(c.elements());
    const auto sup = ts.order().lub(c.elements());
    if (!inf || !sup || !c.elements().contains(*inf) || !c.elements().contains(*sup)) return false;
  }
  return true;
}

bool is_complete_subset(const TopSemilattice& ts, Subset s, ClosureMode mode) {
  if (s.empty()) return true;
  const FiniteSpace sub = subspace(ts.space(), s);
  for (Subset c : all_subsets(ts.size())) {
    if (!c.is_subset_of(s) || !is_chain(ts.order(), c)) continue;
    const Element inf = least_of(ts.order(), c);
    const Element sup = greatest_of(ts.order(), c);
    if (inf < 0 || sup < 0) return false;
    const Subset cl = closure_of(sub, compress(c, s), mode);
    if (!cl.intersects(compress(Subset::singleton(inf), s)) ||
        !cl.intersects(compress(Subset::singleton(sup), s)))
      return false;
  }
  return true;
}

bool is_subsemilattice(const MeetTable& meet, Subset s) {
  bool closed = true;
  s.for_each([&](Element x) {
    s.for_each([&](Element y) {
      if (!s.contains(meet.meet(x, y))) closed = false;
    });
  });
  return closed;
}

TopSemilattice induced_substructure(const TopSemilattice& ts, Subset s) {
  if (s.empty() || !is_subsemilattice(ts.meet(), s))
    throw std::invalid_argument("not a non-empty subsemilattice: " + s.to_string());
  const std::vector<Element> members = s.elements();
  const int k = static_cast<int>(members.size());
  RawTable raw(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Element m = ts.meet().meet(members[i], members[j]);
      raw[i][j] = static_cast<int>(std::find(members.begin(), members.end(), m) - members.begin());
    }
  return TopSemilattice::make(subspace(ts.space(), s), MeetTable::validate(raw));
}

std::vector<Subset> enumerate_subsemilattices(const TopSemilattice& ts) {
  std::vector<Subset> out;
  for (Subset s : all_subsets(ts.size()))
    if (is_subsemilattice(ts.meet(), s)) out.push_back(s);
  return out;
}

std::string to_string(WeakTopologyMode mode) {
  switch (mode) {
    case WeakTopologyMode::chain: return "chain";
    case WeakTopologyMode::star: return "star";
    case WeakTopologyMode::delta_chain: return "delta_chain";
    case WeakTopologyMode::theta_chain: return "theta_chain";
    case WeakTopologyMode::bigtheta_chain: return "bigtheta_chain";
  }
  return "unknown";
}

WeakTopologyMode parse_weak_topology_mode(const std::string& name) {
  for (WeakTopologyMode m : kAllWeakTopologyModes)
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown weak topology: " + name);
}

std::vector<Subset> weak_topology_closed_subbase(const TopSemilattice& ts, WeakTopologyMode mode) {
  const FiniteSpace& sp = ts.space();
  std::vector<Subset> out;
  if (mode == WeakTopologyMode::star) {
    for (Subset s : enumerate_subsemilattices(ts))
      if (sp.is_closed(s)) out.push_back(s);
    return out;
  }
  for (const Chain& c : enumerate_chains(ts.order())) {
    const Subset s = c.elements();
    switch (mode) {
      case WeakTopologyMode::chain:
        if (sp.is_closed(s)) out.push_back(s);
        break;
      case WeakTopologyMode::delta_chain:
        if (is_mode_closed(sp, s, ClosureMode::delta)) out.push_back(s);
        break;
      case WeakTopologyMode::theta_chain:
        out.push_back(closure_of(sp, s, ClosureMode::theta));
        break;
      case WeakTopologyMode::bigtheta_chain:
        if (is_mode_closed(sp, s, ClosureMode::theta)) out.push_back(s);
        break;
      case WeakTopologyMode::star: break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteSpace weak_topology(const TopSemilattice& ts, WeakTopologyMode mode) {
  std::vector<Subset> subbase;
  for (Subset f : weak_topology_closed_subbase(ts, mode)) subbase.push_back(f.complement(ts.size()));
  return generate_topology(ts.size(), subbase);
}

bool is_compact_in(const FiniteSpace& topology, Subset s) {
  // Any open cover contains, for each x in s, a member V_x ∋ x; V_x ⊇
  // min_nbhd(x), so the finitely many V_x cover s.
  Subset covered;
  s.for_each([&](Element x) { covered |= topology.min_nbhd(x); });
  return s.is_subset_of(covered);
}

bool is_chain_compact(const TopSemilattice& ts, ClosureMode mode) {
  if (mode == ClosureMode::theta) throw std::invalid_argument("chain compactness has no theta variant");
  const FiniteSpace topology = mode == ClosureMode::plain ? ts.space()
                               : mode == ClosureMode::delta ? derived_topology(ts.space(), ClosureMode::delta)
                                                            : derived_topology(ts.space(), ClosureMode::theta);
  const ClosureMode closedness = mode == ClosureMode::bigtheta ? ClosureMode::theta : mode;
  for (const Chain& c : enumerate_chains(ts.order()))
    if (is_mode_closed(ts.space(), c.elements(), closedness) && !is_compact_in(topology, c.elements()))
      return false;
  return true;
}

bool thetacl_chains_are_h_sets(const TopSemilattice& ts) {
  for (const Chain& c : enumerate_chains(ts.order()))
    if (!is_H_set(ts.space(), closure_of(ts.space(), c.elements(), ClosureMode::theta))) return false;
  return true;
}

bool theta_converges(const TopSemilattice& ts, Subset d, Element x, Direction direction) {
  const OrderRelation& o = ts.order();
  if (direction == Direction::up ? !is_up_directed(o, d) : !is_down_directed(o, d))
    throw std::invalid_argument("set " + d.to_string() + " is not " +
                                (direction == Direction::up ? "up" : "down") + "-directed");
  for (Subset u : ts.space().opens()) {
    if (!u.contains(x)) continue;
    const Subset cl = closure_of(ts.space(), u, ClosureMode::plain);
    bool found = false;
    d.for_each([&](Element d0) {
      const Subset tail = d & (direction == Direction::up ? o.up_set(d0) : o.down_set(d0));
      if (tail.is_subset_of(cl)) found = true;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace tsl
