#include "tsl/example72.hpp"

#include <stdexcept>

namespace tsl {

std::string Point72::to_string() const { return "(" + tsl::to_string(x) + "," + tsl::to_string(y) + ")"; }

Rational dist2(const Point72& p, const Point72& q) {
  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

EdgeSet72 EdgeSet72::make(IntervalSet edge, std::vector<Point72> off_edge) {
  for (const auto& p : off_edge)
    if (!p.in_square() || p.on_edge()) throw std::invalid_argument("not an off-edge point of X: " + p.to_string());
  return EdgeSet72{std::move(edge), std::move(off_edge)};
}

bool EdgeSet72::contains(const Point72& p) const {
  if (!p.in_square()) return false;
  if (p.on_edge()) return edge.contains(p.x);
  for (const auto& q : off_edge)
    if (q == p) return true;
  return false;
}

bool s72_in_basic(const Point72& center, const Rational& eps, const Point72& p) {
  if (!p.in_square()) return false;
  if (center.on_edge() && p.on_edge()) return p == center;
  return dist2(p, center) < eps * eps;
}

bool s72_closure_mem(const Point72& p, const EdgeSet72& a) { return a.contains(p); }

bool s72_theta_mem(const Point72& p, const EdgeSet72& a) {
  if (!p.in_square()) return false;
  if (p.on_edge()) return a.edge.euclidean_closure().contains(p.x);
  return a.contains(p);
}

bool s72_delta_mem(const Point72& p, const EdgeSet72& a) { return s72_theta_mem(p, a); }

namespace {

Rational l1(const Point72& p, const Point72& q) { return abs(p.x - q.x) + abs(p.y - q.y); }

}  // namespace

Evidence s72_basic_closure_by_witness(const Rational& a, const Rational& eps, const Point72& p) {
  if (!p.in_square()) throw std::invalid_argument("point outside X: " + p.to_string());
  const Point72 centre = edge_point(a);
  // Interior point of U used to pull witnesses off the edge.
  const Point72 c{a, eps / 2};
  bool every_radius = true;
  std::string witness;
  for (int j = 0; j <= 20; ++j) {
    const Rational delta(1, BigInt(1) << j);
    const Rational reach = eps + delta;
    if (dist2(p, centre) > reach * reach)
      return {Decision::non_member, "radius " + to_string(delta) + " neighbourhood of " + p.to_string() +
                                        " lies outside B(e(a), eps + radius)"};
    Point72 q = p;
    if (p != c) {
      Rational lambda = delta / (2 * l1(c, p));
      if (lambda > 1) lambda = 1;
      q = Point72{p.x + lambda * (c.x - p.x), p.y + lambda * (c.y - p.y)};
    }
    if (s72_in_basic(centre, eps, q) && s72_in_basic(p, delta, q))
      witness = "witness " + q.to_string() + " at radius " + to_string(delta);
    else
      every_radius = false;
  }
  if (every_radius) return {Decision::member, witness};
  return {Decision::undecided, "neither a witness at every radius nor a separating radius"};
}

Evidence s72_int_cl_basic(const Rational& a, const Rational& eps, const Point72& p) {
  if (!p.in_square()) throw std::invalid_argument("point outside X: " + p.to_string());
  if (p.on_edge()) {
    const Rational gap = eps - abs(p.x - a);
    if (gap > 0) return {Decision::member, "U(" + to_string(p.x) + ", " + to_string(gap) + ") lies in B[e(a), eps]"};
    return {Decision::non_member, "every neighbourhood of " + p.to_string() + " leaves B[e(a), eps]"};
  }
  if (dist2(p, edge_point(a)) < eps * eps) return {Decision::member, "inside the open disk"};
  return {Decision::non_member, "on or outside the circle"};
}

Point72 s72_meet(const Point72& p, const Point72& q) {
  if (p == q) return p;
  if (p.on_edge() && q.on_edge()) return p.x < q.x ? p : q;
  return edge_point(0);
}

bool s72_leq(const Point72& p, const Point72& q) { return s72_meet(p, q) == p; }

std::optional<Point72> s72_edge_inf(const IntervalSet& params) {
  const auto r = params.inf();
  if (!r) return std::nullopt;
  return edge_point(*r);
}

std::optional<Point72> s72_edge_sup(const IntervalSet& params) {
  const auto r = params.sup();
  if (!r) return std::nullopt;
  return edge_point(*r);
}

}  // namespace tsl
