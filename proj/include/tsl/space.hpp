#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsl/subset.hpp"

namespace tsl {

/// Raised when a family of subsets is not a topology. `first` and `second`
/// hold the offending pair for union/intersection failures.
class TopologyError : public std::invalid_argument {
 public:
  TopologyError(const std::string& what, Subset first = {}, Subset second = {})
      : std::invalid_argument(what), first_(first), second_(second) {}
  Subset first() const { return first_; }
  Subset second() const { return second_; }

 private:
  Subset first_, second_;
};

/// A topology on {0, ..., n-1}.
///
/// Every finite topology is Alexandrov: each point x has a smallest open
/// neighbourhood min_nbhd(x), and the opens are exactly the sets U with
/// min_nbhd(x) ⊆ U for all x in U. Both views are kept; closures of the
/// minimal neighbourhoods are cached because every closure operator below is
/// evaluated through them.
class FiniteSpace {
 public:
  /// Validates an explicit open family. Throws TopologyError.
  static FiniteSpace make(int n, const std::vector<Subset>& opens);

  /// Builds the topology whose minimal neighbourhoods are `nbhd`. Requires
  /// x ∈ nbhd[x] and y ∈ nbhd[x] ⇒ nbhd[y] ⊆ nbhd[x].
  static FiniteSpace from_min_nbhd(std::vector<Subset> nbhd);

  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);

  int size() const { return n_; }
  Subset carrier() const { return Subset::full(n_); }

  /// Open sets in ascending bit-mask order.
  const std::vector<Subset>& opens() const { return opens_; }
  std::vector<Subset> closed_sets() const;

  Subset min_nbhd(Element x) const { return nbhd_[x]; }
  const std::vector<Subset>& min_nbhd_table() const { return nbhd_; }
  /// cl(min_nbhd(x)).
  Subset nbhd_closure(Element x) const { return nbhd_cl_[x]; }
  /// Int(cl(min_nbhd(x))).
  Subset nbhd_regular_open(Element x) const { return nbhd_int_cl_[x]; }

  bool is_open(Subset s) const;
  bool is_closed(Subset s) const { return is_open(s.complement(n_)); }

  /// Smallest open set containing s.
  Subset open_hull(Subset s) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.nbhd_ == b.nbhd_;
  }

 private:
  explicit FiniteSpace(std::vector<Subset> nbhd);

  int n_ = 0;
  std::vector<Subset> nbhd_;
  std::vector<Subset> nbhd_cl_;
  std::vector<Subset> nbhd_int_cl_;
  std::vector<Subset> opens_;
};

/// Smallest topology containing the subbase: finite intersections (the empty
/// intersection being the whole carrier), then arbitrary unions.
FiniteSpace generate_topology(int n, const std::vector<Subset>& subbase);

enum class ClosureMode { plain, delta, theta, bigtheta };
inline constexpr ClosureMode kAllClosureModes[] = {ClosureMode::plain, ClosureMode::delta,
                                                   ClosureMode::theta, ClosureMode::bigtheta};
std::string to_string(ClosureMode mode);
ClosureMode parse_closure_mode(const std::string& name);

/// Closure operators. plain: smallest closed superset. delta: points all of
/// whose open neighbourhoods U have Int(cl(U)) meeting a. theta: points all
/// of whose open neighbourhoods have closures meeting a. bigtheta: smallest
/// theta-closed superset, computed as the least fixpoint of theta.
Subset closure_of(const FiniteSpace& space, Subset a, ClosureMode mode);

/// Same operators evaluated by quantifying over every open set containing
/// the point (bigtheta: intersection of all theta-closed supersets). Used to
/// cross-check the minimal-neighbourhood shortcut.
Subset closure_by_definition(const FiniteSpace& space, Subset a, ClosureMode mode);

Subset interior_of(const FiniteSpace& space, Subset a);

bool is_mode_closed(const FiniteSpace& space, Subset a, ClosureMode mode);

/// All subsets fixed by the operator, ascending by bit mask.
std::vector<Subset> mode_closed_sets(const FiniteSpace& space, ClosureMode mode);

/// The topology whose closed sets are the delta-closed (mode = delta) or
/// theta-closed (mode = theta) sets. Throws TopologyError if that family is
/// not a topology.
FiniteSpace derived_topology(const FiniteSpace& space, ClosureMode mode);

enum class Separation { t1, hausdorff, urysohn, regular };
std::string to_string(Separation prop);
Separation parse_separation(const std::string& name);

/// Definitional checks. `regular` here does not include T1: a point and a
/// closed set not containing it must have disjoint open neighbourhoods.
bool separation(const FiniteSpace& space, Separation prop);

/// H-set test: every open cover of m has a finite subfamily whose closures
/// cover m. Quantifies over covers assembled from minimal neighbourhoods;
/// on a finite space any cover is refined by one of those.
bool is_H_set(const FiniteSpace& space, Subset m);

/// Same property by quantifying over every subfamily of the opens. Only for
/// spaces with at most 10 open sets.
bool is_H_set_all_covers(const FiniteSpace& space, Subset m);

/// Filter criterion: for every filter meeting m, m ∩ ad_theta(filter) ≠ ∅.
/// On a finite carrier every filter is principal, generated by a non-empty
/// set b; it meets m exactly when b does.
bool is_H_set_by_filters(const FiniteSpace& space, Subset m);

/// Intersection of theta-closures of the members of a non-empty family.
Subset ad_theta(const FiniteSpace& space, std::span<const Subset> family);

/// f : dom -> cod given pointwise. Continuity through minimal neighbourhoods:
/// f(min_nbhd(x)) ⊆ min_nbhd(f(x)).
bool is_continuous(const FiniteSpace& dom, const FiniteSpace& cod, std::span<const Element> f);
/// Preimage of every open set is open.
bool is_continuous_by_definition(const FiniteSpace& dom, const FiniteSpace& cod,
                                 std::span<const Element> f);

Subset image_of(std::span<const Element> f, Subset a);
Subset preimage_of(std::span<const Element> f, int dom_size, Subset b);

/// Subspace topology on the members of s, re-indexed in ascending order.
FiniteSpace subspace(const FiniteSpace& space, Subset s);

}  // namespace tsl
