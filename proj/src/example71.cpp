#include "tsl/example71.hpp"

#include <stdexcept>

namespace tsl {

namespace {

bool has_component_at_zero(const IntervalSet& a) {
  for (const auto& c : a.components())
    if (c.lo == 0) return true;
  return false;
}

IntervalSet iv(Rational lo, Rational hi, bool lc, bool hc) { return IntervalSet::interval(lo, hi, lc, hc); }

IntervalSet minus_tail(const IntervalSet& s, int k) { return s - IntervalSet::harmonic_tail(k); }

}  // namespace

std::vector<std::pair<std::string, IntervalSet>> s71_corpus() {
  const Rational h(1, 2);
  return {
      {"empty", IntervalSet::empty_set()},
      {"[0,1]", IntervalSet::unit()},
      {"(0,1)", iv(0, 1, false, false)},
      {"(0,1/2)", iv(0, h, false, false)},
      {"[0,1/2]", iv(0, h, true, true)},
      {"(1/2,1]", iv(h, 1, false, true)},
      {"[1/2,1)", iv(h, 1, true, false)},
      {"{1/2}", IntervalSet::points({h})},
      {"{0}", IntervalSet::points({0})},
      {"{1}", IntervalSet::points({1})},
      {"{0,1}", IntervalSet::points({0, 1})},
      {"(0,1) minus {1/2}", iv(0, 1, false, false) - IntervalSet::points({h})},
      {"[0,1] minus H_1", minus_tail(IntervalSet::unit(), 1)},
      {"(0,1) minus H_2", minus_tail(iv(0, 1, false, false), 2)},
      {"[0,1/2) minus H_3", minus_tail(iv(0, h, true, false), 3)},
      {"(0,1/2] with {1}", iv(0, h, false, true) | IntervalSet::points({1})},
      {"{0} with (1/2,1)", IntervalSet::points({0}) | iv(h, 1, false, false)},
      {"(1/2,1] minus H_1", minus_tail(iv(h, 1, false, true), 1)},
      {"[0,1/2) with (1/2,1]", iv(0, h, true, false) | iv(h, 1, false, true)},
      {"(0,1/2) minus H_1 with {1/2}", minus_tail(iv(0, h, false, false), 1) | IntervalSet::points({h})},
  };
}

IntervalSet s71_closure(const IntervalSet& a) {
  const IntervalSet euclid = a.euclidean_closure();
  const bool zero = a.contains(0) || has_component_at_zero(a);
  const IntervalSet* sources[] = {&euclid};
  return IntervalSet::rebuild(sources, [&](const Rational& x) { return x == 0 ? zero : euclid.contains(x); });
}

IntervalSet s71_interior(const IntervalSet& a) {
  const IntervalSet euclid = a.euclidean_interior();
  const bool zero = a.contains(0) && has_component_at_zero(a);
  const IntervalSet* sources[] = {&euclid};
  return IntervalSet::rebuild(sources, [&](const Rational& x) { return x == 0 ? zero : euclid.contains(x); });
}

IntervalSet s71_delta_closure(const IntervalSet& a) { return a.euclidean_closure(); }

bool s71_theta_mem(const Rational& x, const IntervalSet& a) { return a.euclidean_closure().contains(x); }

IntervalSet s71_basic(BasicKind kind, const Rational& center, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("radius must be positive");
  if (kind == BasicKind::punctured_at_0) {
    const Rational hi = eps < 1 ? eps : Rational(1);
    return IntervalSet::make({Component{0, hi, true, eps <= 1 ? false : true}}, {}, {},
                             Harmonic{HarmonicSign::minus, 1});
  }
  if (center <= 0 || center > 1)
    throw std::invalid_argument("Euclidean basic neighbourhoods are centred in (0,1]");
  const Rational lo = center - eps;
  const Rational hi = center + eps;
  return IntervalSet::make({Component{lo < 0 ? Rational(0) : lo, hi > 1 ? Rational(1) : hi, lo < 0, hi > 1}});
}

IntervalSet s71_int_cl_basic(BasicKind kind, const Rational& center, const Rational& eps) {
  return s71_interior(s71_closure(s71_basic(kind, center, eps)));
}

}  // namespace tsl
