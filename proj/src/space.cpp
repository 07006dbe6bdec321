#include "tsl/space.hpp"

#include <algorithm>

namespace tsl {

namespace {

Subset plain_closure(const std::vector<Subset>& nbhd, Subset a) {
  Subset out;
  for (Element x = 0; x < static_cast<int>(nbhd.size()); ++x)
    if (nbhd[x].intersects(a)) out.insert(x);
  return out;
}

Subset plain_interior(const std::vector<Subset>& nbhd, Subset a) {
  Subset out;
  a.for_each([&](Element x) {
    if (nbhd[x].is_subset_of(a)) out.insert(x);
  });
  return out;
}

// Re-indexes the members of `s` (ascending) as 0..|s|-1.
Subset compress(Subset value, Subset s) {
  Subset out;
  int index = 0;
  s.for_each([&](Element e) {
    if (value.contains(e)) out.insert(index);
    ++index;
  });
  return out;
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<Subset> nbhd) : n_(static_cast<int>(nbhd.size())), nbhd_(std::move(nbhd)) {
  nbhd_cl_.resize(n_);
  nbhd_int_cl_.resize(n_);
  for (Element x = 0; x < n_; ++x) {
    nbhd_cl_[x] = plain_closure(nbhd_, nbhd_[x]);
    nbhd_int_cl_[x] = plain_interior(nbhd_, nbhd_cl_[x]);
  }
  for (Subset s : all_subsets(n_))
    if (is_open(s)) opens_.push_back(s);
}

FiniteSpace FiniteSpace::from_min_nbhd(std::vector<Subset> nbhd) {
  const int n = static_cast<int>(nbhd.size());
  check_carrier_size(n);
  for (Element x = 0; x < n; ++x) {
    if (!nbhd[x].contains(x) || !nbhd[x].is_subset_of(Subset::full(n)))
      throw TopologyError("minimal neighbourhood of " + std::to_string(x) + " is invalid");
    nbhd[x].for_each([&](Element y) {
      if (!nbhd[y].is_subset_of(nbhd[x]))
        throw TopologyError("neighbourhood table is not transitive", nbhd[x], nbhd[y]);
    });
  }
  return FiniteSpace(std::move(nbhd));
}

FiniteSpace FiniteSpace::make(int n, const std::vector<Subset>& opens) {
  check_carrier_size(n);
  const Subset full = Subset::full(n);
  std::vector<Subset> family = opens;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (Subset u : family)
    if (!u.is_subset_of(full)) throw TopologyError("open set outside the carrier: " + u.to_string(), u);
  if (!std::binary_search(family.begin(), family.end(), Subset{}))
    throw TopologyError("empty set is not open");
  if (!std::binary_search(family.begin(), family.end(), full))
    throw TopologyError("carrier is not open");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!std::binary_search(family.begin(), family.end(), family[i] | family[j]))
        throw TopologyError("not closed under union: " + family[i].to_string() + " ∪ " +
                                family[j].to_string(),
                            family[i], family[j]);
      if (!std::binary_search(family.begin(), family.end(), family[i] & family[j]))
        throw TopologyError("not closed under intersection: " + family[i].to_string() + " ∩ " +
                                family[j].to_string(),
                            family[i], family[j]);
    }
  std::vector<Subset> nbhd(n, full);
  for (Subset u : family)
    u.for_each([&](Element x) { nbhd[x] &= u; });
  FiniteSpace space(std::move(nbhd));
  if (space.opens_ != family) throw TopologyError("open family is not determined by its minimal neighbourhoods");
  return space;
}

FiniteSpace FiniteSpace::discrete(int n) {
  check_carrier_size(n);
  std::vector<Subset> nbhd(n);
  for (Element x = 0; x < n; ++x) nbhd[x] = Subset::singleton(x);
  return FiniteSpace(std::move(nbhd));
}

FiniteSpace FiniteSpace::indiscrete(int n) {
  check_carrier_size(n);
  return FiniteSpace(std::vector<Subset>(n, Subset::full(n)));
}

std::vector<Subset> FiniteSpace::closed_sets() const {
  std::vector<Subset> out;
  out.reserve(opens_.size());
  for (Subset u : opens_) out.push_back(u.complement(n_));
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteSpace::is_open(Subset s) const {
  bool open = s.is_subset_of(carrier());
  s.for_each([&](Element x) {
    if (!nbhd_[x].is_subset_of(s)) open = false;
  });
  return open;
}

Subset FiniteSpace::open_hull(Subset s) const {
  Subset out;
  s.for_each([&](Element x) { out |= nbhd_[x]; });
  return out;
}

FiniteSpace generate_topology(int n, const std::vector<Subset>& subbase) {
  check_carrier_size(n);
  const Subset full = Subset::full(n);
  std::vector<char> in(std::size_t{1} << n, 0);
  std::vector<Subset> family;
  auto add = [&](Subset s) {
    if (!in[s.bits()]) {
      in[s.bits()] = 1;
      family.push_back(s);
    }
  };
  add(full);
  for (Subset s : subbase) {
    if (!s.is_subset_of(full)) throw TopologyError("subbase member outside the carrier: " + s.to_string(), s);
    add(s);
  }
  // Finite intersections.
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(family[i] & family[j]);
  // Arbitrary (here: finite) unions; the empty union contributes ∅.
  add(Subset{});
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(family[i] | family[j]);
  return FiniteSpace::make(n, family);
}

std::string to_string(ClosureMode mode) {
  switch (mode) {
    case ClosureMode::plain: return "plain";
    case ClosureMode::delta: return "delta";
    case ClosureMode::theta: return "theta";
    case ClosureMode::bigtheta: return "bigtheta";
  }
  return "unknown";
}

ClosureMode parse_closure_mode(const std::string& name) {
  for (ClosureMode m : kAllClosureModes)
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown closure mode: " + name);
}

Subset closure_of(const FiniteSpace& space, Subset a, ClosureMode mode) {
  const int n = space.size();
  Subset out;
  switch (mode) {
    case ClosureMode::plain:
      for (Element x = 0; x < n; ++x)
        if (space.min_nbhd(x).intersects(a)) out.insert(x);
      return out;
    case ClosureMode::delta:
      for (Element x = 0; x < n; ++x)
        if (space.nbhd_regular_open(x).intersects(a)) out.insert(x);
      return out;
    case ClosureMode::theta:
      for (Element x = 0; x < n; ++x)
        if (space.nbhd_closure(x).intersects(a)) out.insert(x);
      return out;
    case ClosureMode::bigtheta: {
      // Monotone and extensive, so the iteration stabilises within n steps.
      Subset current = a;
      for (;;) {
        Subset next = closure_of(space, current, ClosureMode::theta);
        if (next == current) return current;
        current = next;
      }
    }
  }
  return out;
}

namespace {

Subset closure_def_plain(const FiniteSpace& space, Subset a) {
  Subset out = space.carrier();
  for (Subset f : space.closed_sets())
    if (a.is_subset_of(f)) out &= f;
  return out;
}

Subset interior_def(const FiniteSpace& space, Subset a) {
  Subset out;
  for (Subset u : space.opens())
    if (u.is_subset_of(a)) out |= u;
  return out;
}

}  // namespace

Subset closure_by_definition(const FiniteSpace& space, Subset a, ClosureMode mode) {
  const int n = space.size();
  if (mode == ClosureMode::plain) return closure_def_plain(space, a);
  if (mode == ClosureMode::bigtheta) {
    Subset out = space.carrier();
    for (Subset b : all_subsets(n))
      if (a.is_subset_of(b) && closure_by_definition(space, b, ClosureMode::theta) == b) out &= b;
    return out;
  }
  Subset out;
  for (Element x = 0; x < n; ++x) {
    bool adherent = true;
    for (Subset u : space.opens()) {
      if (!u.contains(x)) continue;
      Subset probe = closure_def_plain(space, u);
      if (mode == ClosureMode::delta) probe = interior_def(space, probe);
      if (!probe.intersects(a)) {
        adherent = false;
        break;
      }
    }
    if (adherent) out.insert(x);
  }
  return out;
}

Subset interior_of(const FiniteSpace& space, Subset a) {
  return plain_interior(space.min_nbhd_table(), a);
}

bool is_mode_closed(const FiniteSpace& space, Subset a, ClosureMode mode) {
  return closure_of(space, a, mode) == a;
}

std::vector<Subset> mode_closed_sets(const FiniteSpace& space, ClosureMode mode) {
  std::vector<Subset> out;
  for (Subset s : all_subsets(space.size()))
    if (is_mode_closed(space, s, mode)) out.push_back(s);
  return out;
}

FiniteSpace derived_topology(const FiniteSpace& space, ClosureMode mode) {
  if (mode != ClosureMode::delta && mode != ClosureMode::theta)
    throw std::invalid_argument("derived topology is defined for delta and theta only");
  std::vector<Subset> opens;
  for (Subset f : mode_closed_sets(space, mode)) opens.push_back(f.complement(space.size()));
  return FiniteSpace::make(space.size(), opens);
}

std::string to_string(Separation prop) {
  switch (prop) {
    case Separation::t1: return "T1";
    case Separation::hausdorff: return "hausdorff";
    case Separation::urysohn: return "urysohn";
    case Separation::regular: return "regular";
  }
  return "unknown";
}

Separation parse_separation(const std::string& name) {
  for (Separation s : {Separation::t1, Separation::hausdorff, Separation::urysohn, Separation::regular})
    if (to_string(s) == name) return s;
  if (name == "t1") return Separation::t1;
  throw std::invalid_argument("unknown separation property: " + name);
}

bool separation(const FiniteSpace& space, Separation prop) {
  const int n = space.size();
  const auto& opens = space.opens();
  auto separated = [&](Element x, auto&& ok) {
    for (Subset u : opens) {
      if (!u.contains(x)) continue;
      if (ok(u)) return true;
    }
    return false;
  };
  if (prop == Separation::regular) {
    for (Subset f : space.closed_sets())
      for (Element x = 0; x < n; ++x) {
        if (f.contains(x)) continue;
        bool found = separated(x, [&](Subset u) {
          for (Subset v : opens)
            if (f.is_subset_of(v) && !u.intersects(v)) return true;
          return false;
        });
        if (!found) return false;
      }
    return true;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = false;
      switch (prop) {
        case Separation::t1:
          found = separated(x, [&](Subset u) { return !u.contains(y); });
          break;
        case Separation::hausdorff:
          found = separated(x, [&](Subset u) {
            for (Subset v : opens)
              if (v.contains(y) && !u.intersects(v)) return true;
            return false;
          });
          break;
        case Separation::urysohn:
          found = separated(x, [&](Subset u) {
            const Subset cu = closure_of(space, u, ClosureMode::plain);
            for (Subset v : opens)
              if (v.contains(y) && !cu.intersects(closure_of(space, v, ClosureMode::plain))) return true;
            return false;
          });
          break;
        case Separation::regular: break;
      }
      if (!found) return false;
    }
  return true;
}

bool is_H_set(const FiniteSpace& space, Subset m) {
  // Any open cover picks, for each x in m, a member V_x ∋ x; V_x ⊇ min_nbhd(x)
  // so the closures of the finitely many V_x cover m whenever the closures of
  // the minimal neighbourhoods do.
  Subset covered;
  m.for_each([&](Element x) { covered |= space.nbhd_closure(x); });
  return m.is_subset_of(covered);
}

bool is_H_set_all_covers(const FiniteSpace& space, Subset m) {
  const auto& opens = space.opens();
  if (opens.size() > 10) throw std::invalid_argument("all-covers H-set check limited to 10 open sets");
  const std::uint32_t families = std::uint32_t{1} << opens.size();
  std::vector<Subset> closures;
  for (Subset u : opens) closures.push_back(closure_of(space, u, ClosureMode::plain));
  for (std::uint32_t cover = 0; cover < families; ++cover) {
    Subset covered;
    for (std::size_t i = 0; i < opens.size(); ++i)
      if ((cover >> i) & 1u) covered |= opens[i];
    if (!m.is_subset_of(covered)) continue;
    bool has_subfamily = false;
    for (std::uint32_t sub = cover;; sub = (sub - 1) & cover) {
      Subset cl;
      for (std::size_t i = 0; i < opens.size(); ++i)
        if ((sub >> i) & 1u) cl |= closures[i];
      if (m.is_subset_of(cl)) {
        has_subfamily = true;
        break;
      }
      if (sub == 0) break;
    }
    if (!has_subfamily) return false;
  }
  return true;
}

Subset ad_theta(const FiniteSpace& space, std::span<const Subset> family) {
  if (family.empty()) throw std::invalid_argument("ad_theta of an empty family");
  Subset out = space.carrier();
  for (Subset f : family) out &= closure_of(space, f, ClosureMode::theta);
  return out;
}

bool is_H_set_by_filters(const FiniteSpace& space, Subset m) {
  const int n = space.size();
  for (Subset base : all_subsets(n)) {
    if (base.empty() || !base.intersects(m)) continue;
    std::vector<Subset> filter;
    for (Subset s : all_subsets(n))
      if (base.is_subset_of(s)) filter.push_back(s);
    if (!m.intersects(ad_theta(space, filter))) return false;
  }
  return true;
}

bool is_continuous(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Element> f) {
  for (Element x = 0; x < dom.size(); ++x)
    if (!image_of(f, dom.min_nbhd(x)).is_subset_of(cod.min_nbhd(f[x]))) return false;
  return true;
}

bool is_continuous_by_definition(const FiniteSpace& dom, const FiniteSpace& cod,
                                 std::span<const Element> f) {
  for (Subset v : cod.opens())
    if (!dom.is_open(preimage_of(f, dom.size(), v))) return false;
  return true;
}

Subset image_of(std::span<const Element> f, Subset a) {
  Subset out;
  a.for_each([&](Element x) { out.insert(f[x]); });
  return out;
}

Subset preimage_of(std::span<const Element> f, int dom_size, Subset b) {
  Subset out;
  for (Element x = 0; x < dom_size; ++x)
    if (b.contains(f[x])) out.insert(x);
  return out;
}

FiniteSpace subspace(const FiniteSpace& space, Subset s) {
  if (s.empty()) throw std::invalid_argument("subspace of the empty set");
  std::vector<Subset> nbhd;
  s.for_each([&](Element x) { nbhd.push_back(compress(space.min_nbhd(x) & s, s)); });
  return FiniteSpace::from_min_nbhd(std::move(nbhd));
}

}  // namespace tsl
