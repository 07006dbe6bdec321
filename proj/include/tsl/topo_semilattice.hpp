#pragma once

#include <string>
#include <vector>

#include "tsl/order.hpp"
#include "tsl/space.hpp"

namespace tsl {

/// A topology and a meet operation on the same carrier. No continuity is
/// assumed.
class TopSemilattice {
 public:
  /// Throws std::invalid_argument if the carriers differ.
  static TopSemilattice make(FiniteSpace space, MeetTable meet);

  int size() const { return space_.size(); }
  const FiniteSpace& space() const { return space_; }
  const MeetTable& meet() const { return meet_; }
  const OrderRelation& order() const { return order_; }

 private:
  TopSemilattice(FiniteSpace space, MeetTable meet, OrderRelation order)
      : space_(std::move(space)), meet_(std::move(meet)), order_(std::move(order)) {}
  FiniteSpace space_;
  MeetTable meet_;
  OrderRelation order_;
};

/// Every translation x ↦ meet(a, x) is continuous.
bool is_semitopological(const TopSemilattice& ts);
bool is_semitopological_by_definition(const TopSemilattice& ts);

/// meet is jointly continuous. Uses product minimal neighbourhoods:
/// meet(min_nbhd(x) × min_nbhd(y)) ⊆ min_nbhd(meet(x, y)).
bool is_topological(const TopSemilattice& ts);
/// Builds the product topology on the n² carrier from open rectangles and
/// checks preimages of opens. Carriers of at most 3 points.
bool is_topological_by_definition(const TopSemilattice& ts);

/// ↑x and ↓x are mode-closed for every x.
bool is_updown_closed(const TopSemilattice& ts, ClosureMode mode);
/// ↕x is theta-closed for every x.
bool is_theta_biclosed(const TopSemilattice& ts);

/// For every non-empty chain C, inf C and sup C lie in the mode-closure of C.
bool is_complete(const TopSemilattice& ts, ClosureMode mode);

/// Every non-empty closed chain contains its inf and sup.
bool closed_chains_contain_bounds(const TopSemilattice& ts);

/// Completeness of a subset s with the subspace topology and the order
/// inherited from ts: every non-empty chain C ⊆ s has inf and sup (taken in
/// s) inside cl(C) ∩ s. False if some chain in s has no bound in s.
bool is_complete_subset(const TopSemilattice& ts, Subset s, ClosureMode mode = ClosureMode::plain);

/// The induced structure on a meet-closed subset, re-indexed ascending.
/// Throws std::invalid_argument if s is empty or not meet-closed.
TopSemilattice induced_substructure(const TopSemilattice& ts, Subset s);

bool is_subsemilattice(const MeetTable& meet, Subset s);

/// All meet-closed subsets, ∅ included, ascending by bit mask.
std::vector<Subset> enumerate_subsemilattices(const TopSemilattice& ts);

enum class WeakTopologyMode { chain, star, delta_chain, theta_chain, bigtheta_chain };
inline constexpr WeakTopologyMode kAllWeakTopologyModes[] = {
    WeakTopologyMode::chain, WeakTopologyMode::star, WeakTopologyMode::delta_chain,
    WeakTopologyMode::theta_chain, WeakTopologyMode::bigtheta_chain};
std::string to_string(WeakTopologyMode mode);
WeakTopologyMode parse_weak_topology_mode(const std::string& name);

/// The sets whose complements form the subbase: closed chains (chain),
/// closed subsemilattices (star), delta-closed chains (delta_chain), theta
/// closures of chains (theta_chain), theta-closed chains (bigtheta_chain).
/// Sorted ascending, duplicates removed.
std::vector<Subset> weak_topology_closed_subbase(const TopSemilattice& ts, WeakTopologyMode mode);
FiniteSpace weak_topology(const TopSemilattice& ts, WeakTopologyMode mode);

/// Every open cover of s by opens of `topology` has a finite subcover.
/// Extracts the subcover {min_nbhd(x) : x ∈ s} and verifies it covers s.
bool is_compact_in(const FiniteSpace& topology, Subset s);

/// Chain compactness against a closure mode: every mode-closed chain is
/// compact in the matching topology (plain: τ, delta: τ_δ, bigtheta: τ_θ).
/// theta is not accepted; use thetacl_chains_are_h_sets for that side.
bool is_chain_compact(const TopSemilattice& ts, ClosureMode mode);

/// theta closure of every non-empty chain is an H-set.
bool thetacl_chains_are_h_sets(const TopSemilattice& ts);

enum class Direction { up, down };

/// d must be up-directed (up) or down-directed (down); throws otherwise.
/// For every open U ∋ x there is d0 ∈ d with d ∩ ↑d0 ⊆ cl(U) (resp. ↓d0).
bool theta_converges(const TopSemilattice& ts, Subset d, Element x, Direction direction);

}  // namespace tsl
