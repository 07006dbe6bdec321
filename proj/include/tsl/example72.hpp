#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsl/interval_set.hpp"

namespace tsl {

// The unit square X = [0,1]² with one distinguished edge e(t) = (t, 0).
// Points off the edge have Euclidean neighbourhoods; e(a) has the basic
// neighbourhoods U(a, ε) = {e(a)} ∪ {p ∈ X : |p − e(a)| < ε, p_y > 0}.
// Meet: e(s)·e(t) = e(min(s, t)), x·x = x, every other product is e(0).

struct Point72 {
  Rational x, y;
  bool on_edge() const { return y == 0; }
  bool in_square() const { return x >= 0 && x <= 1 && y >= 0 && y <= 1; }
  std::string to_string() const;
  friend bool operator==(const Point72&, const Point72&) = default;
};

inline Point72 edge_point(Rational t) { return Point72{std::move(t), 0}; }

/// Squared Euclidean distance.
Rational dist2(const Point72& p, const Point72& q);

/// Subset of X: edge parameters plus finitely many off-edge points.
struct EdgeSet72 {
  IntervalSet edge;
  std::vector<Point72> off_edge;  ///< y > 0

  /// Throws std::invalid_argument for off-edge points outside X or on the edge.
  static EdgeSet72 make(IntervalSet edge, std::vector<Point72> off_edge = {});
  bool contains(const Point72& p) const;
};

/// p lies in the basic neighbourhood of `center` with radius eps.
bool s72_in_basic(const Point72& center, const Rational& eps, const Point72& p);

/// Membership in cl, θcl, δcl of a. Every EdgeSet72 is closed; θcl and δcl
/// add the Euclidean limit points of the edge parameters.
bool s72_closure_mem(const Point72& p, const EdgeSet72& a);
bool s72_theta_mem(const Point72& p, const EdgeSet72& a);
bool s72_delta_mem(const Point72& p, const EdgeSet72& a);

enum class Decision { member, non_member, undecided };

struct Evidence {
  Decision decision = Decision::undecided;
  std::string witness;
};

/// Decides p ∈ cl(U(a, ε)) from neighbourhoods of p alone: for radii 2^-j,
/// j ≤ 20, an explicit point of U inside the neighbourhood of p, or a radius
/// whose neighbourhood is Euclidean-separated from U.
Evidence s72_basic_closure_by_witness(const Rational& a, const Rational& eps, const Point72& p);

/// p ∈ Int(cl(U(a, ε))) where cl(U(a, ε)) = B[e(a), ε] ∩ X. For edge points
/// the certificate is the radius ε − |t − a|; off the edge it is the open disk.
Evidence s72_int_cl_basic(const Rational& a, const Rational& eps, const Point72& p);

Point72 s72_meet(const Point72& p, const Point72& q);
bool s72_leq(const Point72& p, const Point72& q);

/// Bounds of a chain of edge points in the meet order; nullopt when empty.
std::optional<Point72> s72_edge_inf(const IntervalSet& params);
std::optional<Point72> s72_edge_sup(const IntervalSet& params);

}  // namespace tsl
