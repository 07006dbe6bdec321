#include "tsl/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsl {

std::string to_string(MeetAxiom axiom) {
  switch (axiom) {
    case MeetAxiom::range: return "range";
    case MeetAxiom::idempotence: return "idempotence";
    case MeetAxiom::commutativity: return "commutativity";
    case MeetAxiom::associativity: return "associativity";
  }
  return "unknown";
}

std::string MeetViolation::describe() const {
  std::string out = to_string(axiom) + " violated at (" + std::to_string(x);
  if (y >= 0) out += "," + std::to_string(y);
  if (z >= 0) out += "," + std::to_string(z);
  return out + ")";
}

std::optional<MeetViolation> check_meet_axioms(const RawTable& table) {
  const int n = static_cast<int>(table.size());
  check_carrier_size(n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw std::invalid_argument("meet table row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y)
      if (table[x][y] < 0 || table[x][y] >= n) return MeetViolation{MeetAxiom::range, x, y};
  }
  for (int x = 0; x < n; ++x)
    if (table[x][x] != x) return MeetViolation{MeetAxiom::idempotence, x};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (table[x][y] != table[y][x]) return MeetViolation{MeetAxiom::commutativity, x, y};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          return MeetViolation{MeetAxiom::associativity, x, y, z};
  return std::nullopt;
}

MeetTable MeetTable::validate(const RawTable& table) {
  if (auto v = check_meet_axioms(table)) throw MeetAxiomError(*v);
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
  return MeetTable(n, std::move(flat));
}

RawTable MeetTable::rows() const {
  RawTable out(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) out[x][y] = meet(x, y);
  return out;
}

Element MeetTable::meet_of(Subset s) const {
  if (s.empty()) throw std::invalid_argument("meet of empty set");
  Element acc = s.min();
  s.for_each([&](Element e) { acc = meet(acc, e); });
  return acc;
}

OrderRelation induced_order(const MeetTable& m) {
  const int n = m.size();
  OrderRelation o(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.meet(x, y) == x) {
        o.up_[x].insert(y);
        o.down_[y].insert(x);
      }
  return o;
}

OrderRelation OrderRelation::from_leq(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  check_carrier_size(n);
  OrderRelation o(n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(leq[x].size()) != n) throw std::invalid_argument("leq row has wrong length");
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) {
        o.up_[x].insert(y);
        o.down_[y].insert(x);
      }
  }
  for (int x = 0; x < n; ++x) {
    if (!o.leq(x, x)) throw std::invalid_argument("order is not reflexive at " + std::to_string(x));
    for (int y = 0; y < n; ++y) {
      if (x != y && o.leq(x, y) && o.leq(y, x))
        throw std::invalid_argument("order is not antisymmetric");
      for (int z = 0; z < n; ++z)
        if (o.leq(x, y) && o.leq(y, z) && !o.leq(x, z))
          throw std::invalid_argument("order is not transitive");
    }
  }
  return o;
}

Subset OrderRelation::up_closure(Subset s) const {
  Subset out;
  s.for_each([&](Element e) { out |= up_[e]; });
  return out;
}

Subset OrderRelation::down_closure(Subset s) const {
  Subset out;
  s.for_each([&](Element e) { out |= down_[e]; });
  return out;
}

std::optional<Element> OrderRelation::glb(Subset s) const {
  // Lower bounds of s, then the greatest among them.
  Subset lower = Subset::full(size());
  s.for_each([&](Element e) { lower &= down_[e]; });
  std::optional<Element> best;
  lower.for_each([&](Element c) {
    if (lower.is_subset_of(down_[c])) best = c;
  });
  return best;
}

std::optional<Element> OrderRelation::lub(Subset s) const {
  Subset upper = Subset::full(size());
  s.for_each([&](Element e) { upper &= up_[e]; });
  std::optional<Element> best;
  upper.for_each([&](Element c) {
    if (upper.is_subset_of(up_[c])) best = c;
  });
  return best;
}

bool is_chain(const OrderRelation& o, Subset s) {
  if (s.empty()) return false;
  bool ok = true;
  s.for_each([&](Element x) {
    if (!s.is_subset_of(o.updown_set(x))) ok = false;
  });
  return ok;
}

bool is_up_directed(const OrderRelation& o, Subset s) {
  if (s.empty()) return false;
  for (Element x : s.elements())
    for (Element y : s.elements())
      if ((o.up_set(x) & o.up_set(y) & s).empty()) return false;
  return true;
}

bool is_down_directed(const OrderRelation& o, Subset s) {
  if (s.empty()) return false;
  for (Element x : s.elements())
    for (Element y : s.elements())
      if ((o.down_set(x) & o.down_set(y) & s).empty()) return false;
  return true;
}

Chain::Chain(const OrderRelation& o, Subset s) : elements_(s) {
  if (!is_chain(o, s)) throw std::invalid_argument("not a non-empty chain: " + s.to_string());
}

std::vector<Chain> enumerate_chains(const OrderRelation& o) {
  std::vector<Subset> found;
  for (Subset s : all_subsets(o.size()))
    if (is_chain(o, s)) found.push_back(s);
  std::sort(found.begin(), found.end(), lex_less);
  std::vector<Chain> out;
  out.reserve(found.size());
  for (Subset s : found) out.emplace_back(o, s);
  return out;
}

Element chain_inf(const OrderRelation& o, const Chain& c) {
  const Subset s = c.elements();
  Element least = -1;
  s.for_each([&](Element x) {
    if (s.is_subset_of(o.up_set(x))) least = x;
  });
  // A finite chain contains its bounds, so no tighter bound exists outside it.
  if (least < 0 || o.glb(s) != least) throw std::logic_error("chain infimum is not the carrier glb");
  return least;
}

Element chain_sup(const OrderRelation& o, const Chain& c) {
  const Subset s = c.elements();
  Element greatest = -1;
  s.for_each([&](Element x) {
    if (s.is_subset_of(o.down_set(x))) greatest = x;
  });
  if (greatest < 0 || o.lub(s) != greatest) throw std::logic_error("chain supremum is not the carrier lub");
  return greatest;
}

}  // namespace tsl
