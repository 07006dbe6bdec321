#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsl/subset.hpp"

namespace tsl {

using RawTable = std::vector<std::vector<int>>;

enum class MeetAxiom { range, idempotence, commutativity, associativity };

std::string to_string(MeetAxiom axiom);

/// First axiom failure found by check_meet_axioms, with the witnessing indices.
/// Unused witness slots are -1 (idempotence uses x only, commutativity x and y).
struct MeetViolation {
  MeetAxiom axiom;
  int x = -1;
  int y = -1;
  int z = -1;

  std::string describe() const;
};

class MeetAxiomError : public std::invalid_argument {
 public:
  explicit MeetAxiomError(MeetViolation v)
      : std::invalid_argument(v.describe()), violation_(v) {}
  const MeetViolation& violation() const { return violation_; }

 private:
  MeetViolation violation_;
};

/// Checks idempotence, commutativity and associativity exhaustively
/// (all n^3 triples). Returns the first violation in index order.
std::optional<MeetViolation> check_meet_axioms(const RawTable& table);

/// A validated semilattice operation on {0, ..., n-1}.
class MeetTable {
 public:
  /// Throws MeetAxiomError naming the failed axiom and witnesses.
  static MeetTable validate(const RawTable& table);

  int size() const { return n_; }
  Element meet(Element x, Element y) const { return table_[x * n_ + y]; }
  RawTable rows() const;

  /// Meet of a nonempty subset (fold).
  Element meet_of(Subset s) const;

  friend bool operator==(const MeetTable&, const MeetTable&) = default;

 private:
  MeetTable(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {}
  int n_ = 0;
  std::vector<int> table_;
};

/// The partial order x <= y iff meet(x, y) == x.
class OrderRelation {
 public:
  /// Builds leq from an explicit relation table; checks reflexivity,
  /// antisymmetry and transitivity.
  static OrderRelation from_leq(const std::vector<std::vector<bool>>& leq);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  Subset up_set(Element x) const { return up_[x]; }
  Subset down_set(Element x) const { return down_[x]; }
  Subset updown_set(Element x) const { return up_[x] | down_[x]; }

  /// Union of up-sets of the members of s.
  Subset up_closure(Subset s) const;
  Subset down_closure(Subset s) const;

  /// Greatest lower bound / least upper bound of s over the whole carrier, if
  /// one exists.
  std::optional<Element> glb(Subset s) const;
  std::optional<Element> lub(Subset s) const;

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;

 private:
  friend OrderRelation induced_order(const MeetTable& m);
  explicit OrderRelation(int n) : up_(n), down_(n) {}
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

OrderRelation induced_order(const MeetTable& m);

// Chains and directed sets. The empty set is neither a chain nor directed:
// every statement about chains quantifies over non-empty chains only.

bool is_chain(const OrderRelation& o, Subset s);
bool is_up_directed(const OrderRelation& o, Subset s);
bool is_down_directed(const OrderRelation& o, Subset s);

/// A non-empty, pairwise comparable subset.
class Chain {
 public:
  /// Throws std::invalid_argument if s is empty or not a chain under o.
  Chain(const OrderRelation& o, Subset s);

  Subset elements() const { return elements_; }

 private:
  Subset elements_;
};

/// All non-empty chains, each once, ordered lexicographically on sorted
/// index lists.
std::vector<Chain> enumerate_chains(const OrderRelation& o);

/// Least element of the chain. Also asserts it is the glb of the chain in
/// the whole carrier.
Element chain_inf(const OrderRelation& o, const Chain& c);
Element chain_sup(const OrderRelation& o, const Chain& c);

}  // namespace tsl
