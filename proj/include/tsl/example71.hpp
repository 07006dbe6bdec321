#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsl/interval_set.hpp"

namespace tsl {

// The unit interval with Euclidean neighbourhoods at every x ≠ 0 and the
// neighbourhoods [0,ε) \ H_1 at 0 (H_1 = {1/n : n ≥ 1}); order and meet are
// those of the reals.

/// Closure: the Euclidean closure, except that 0 belongs to it only when 0
/// is in a or a has a component starting at 0 (points of a off H_1
/// accumulating at 0).
IntervalSet s71_closure(const IntervalSet& a);

/// Interior: the Euclidean interior relative to [0,1], plus 0 when 0 ∈ a and
/// a contains [0,ε) \ H_1 for some ε.
IntervalSet s71_interior(const IntervalSet& a);

/// delta closure; equals the Euclidean closure because every Int(cl(U)) of a
/// basic U is squeezed between two Euclidean neighbourhoods.
IntervalSet s71_delta_closure(const IntervalSet& a);

/// theta adherence of x to a: closures of basic neighbourhoods are
/// Euclidean closed neighbourhoods, so this is Euclidean-closure membership.
bool s71_theta_mem(const Rational& x, const IntervalSet& a);

enum class BasicKind { euclidean_at_x, punctured_at_0 };

/// The basic neighbourhood: (x-ε, x+ε) ∩ I for x ≠ 0, or [0,ε) ∩ I \ H_1.
/// Throws std::invalid_argument if ε ≤ 0, x ∉ (0,1] for euclidean_at_x.
IntervalSet s71_basic(BasicKind kind, const Rational& center, const Rational& eps);

/// Int(cl(U)) for the basic neighbourhood U.
IntervalSet s71_int_cl_basic(BasicKind kind, const Rational& center, const Rational& eps);

/// Fixed sample of 20 named subsets with breakpoints at 0, 1/2, 1 and
/// removed harmonic tails.
std::vector<std::pair<std::string, IntervalSet>> s71_corpus();

}  // namespace tsl
