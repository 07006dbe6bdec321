#pragma once

// Brute-force neighbourhood oracle for the space on [0,1] with punctured
// neighbourhoods at 0. Independent of the symbolic rules: it quantifies over
// radii 1/q and searches grid witnesses directly.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tsl/example71.hpp"

namespace tsl::oracle71 {

inline constexpr int kGridDenominator = 32;
inline constexpr int kRadiusDenominator = 64;
inline constexpr int kWitnessDenominator = 4096;

inline bool in_unit(const Rational& y) { return y >= 0 && y <= 1; }

inline bool is_unit_fraction(const Rational& y) { return y > 0 && numerator(y) == 1; }

/// y lies in the basic neighbourhood of x of radius eps.
inline bool in_basic(const Rational& x, const Rational& eps, const Rational& y) {
  if (!in_unit(y)) return false;
  if (x == 0) return y < eps && !is_unit_fraction(y);
  return abs(y - x) < eps;
}

/// y lies in the interior of the closure of that neighbourhood: the open
/// interval around x, with the ends of [0,1] added when the interval reaches
/// or passes them.
inline bool in_delta_basic(const Rational& x, const Rational& eps, const Rational& y) {
  if (!in_unit(y)) return false;
  if (abs(y - x) < eps) return true;
  if (y == 0 && x - eps <= 0) return true;
  return y == 1 && x + eps >= 1;
}

/// Membership of the witness grid k/kWitnessDenominator in a, computed once.
inline std::vector<bool> witness_membership(const IntervalSet& a) {
  std::vector<bool> out(kWitnessDenominator + 1);
  for (int k = 0; k <= kWitnessDenominator; ++k) out[k] = a.contains(Rational(k, kWitnessDenominator));
  return out;
}

/// For each radius 1/q, q ≤ kRadiusDenominator, some witness (x itself or a
/// grid point within distance 1/q of x) lies in the neighbourhood and in a.
template <class InNbhd>
bool every_nbhd_meets(const Rational& x, const IntervalSet& a, const std::vector<bool>& grid_in_a, InNbhd in_nbhd) {
  const bool x_in_a = a.contains(x);
  for (int q = 1; q <= kRadiusDenominator; ++q) {
    const Rational eps(1, q);
    bool met = x_in_a && in_nbhd(x, eps, x);
    const Rational lo = (x - eps) * kWitnessDenominator;
    const Rational hi = (x + eps) * kWitnessDenominator;
    const int k_lo = std::max(0, static_cast<int>(numerator(lo) / denominator(lo)) - 1);
    const int k_hi = std::min(kWitnessDenominator, static_cast<int>(numerator(hi) / denominator(hi)) + 1);
    for (int k = k_lo; k <= k_hi && !met; ++k)
      met = grid_in_a[k] && in_nbhd(x, eps, Rational(k, kWitnessDenominator));
    if (!met) return false;
  }
  return true;
}

inline bool closure_mem(const Rational& x, const IntervalSet& a, const std::vector<bool>& grid_in_a) {
  return every_nbhd_meets(x, a, grid_in_a, in_basic);
}
inline bool delta_closure_mem(const Rational& x, const IntervalSet& a, const std::vector<bool>& grid_in_a) {
  return every_nbhd_meets(x, a, grid_in_a, in_delta_basic);
}

/// Reduced fractions p/q in [0,1] with q ≤ kGridDenominator, ascending.
inline std::vector<Rational> grid() {
  std::vector<Rational> out;
  for (int q = 1; q <= kGridDenominator; ++q)
    for (int p = 0; p <= q; ++p) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::pair<std::string, IntervalSet>> corpus() { return s71_corpus(); }

}  // namespace tsl::oracle71
