#include <doctest.h>

#include "tsl/grid_oracle71.hpp"
#include "tsl/example71.hpp"

using namespace tsl;

namespace {

const Rational kHalf(1, 2);

IntervalSet iv(Rational lo, Rational hi, bool lc, bool hc) { return IntervalSet::interval(lo, hi, lc, hc); }

}  // namespace

TEST_CASE("closure at 0 depends on the punctured neighbourhoods") {
  const auto h1 = IntervalSet::harmonic_tail(1);
  CHECK_FALSE(s71_closure(h1).contains(0));
  CHECK(s71_closure(h1) == h1);
  CHECK(s71_delta_closure(h1).contains(0));
  CHECK(s71_theta_mem(0, h1));
  CHECK(s71_closure(iv(0, kHalf, false, false)) == iv(0, kHalf, true, true));
  CHECK(s71_closure(IntervalSet::harmonic_tail(4) | IntervalSet::points({Rational(2, 3)})).contains(0) == false);
}

TEST_CASE("closure and interior are dual") {
  for (const auto& [name, a] : oracle71::corpus()) {
    CAPTURE(name);
    CHECK(s71_interior(a) == s71_closure(a.complement()).complement());
    CHECK(s71_closure(s71_closure(a)) == s71_closure(a));
    CHECK(s71_interior(a).is_subset_of(a));
    CHECK(s71_closure(a).is_subset_of(s71_delta_closure(a)));
  }
}

TEST_CASE("symbolic closures agree with the grid oracle") {
  const auto grid = oracle71::grid();
  for (const auto& [name, a] : oracle71::corpus()) {
    CAPTURE(name);
    const IntervalSet cl = s71_closure(a);
    const IntervalSet dcl = s71_delta_closure(a);
    const auto grid_in_a = oracle71::witness_membership(a);
    for (const auto& x : grid) {
      CAPTURE(to_string(x));
      REQUIRE(cl.contains(x) == oracle71::closure_mem(x, a, grid_in_a));
      REQUIRE(dcl.contains(x) == oracle71::delta_closure_mem(x, a, grid_in_a));
    }
  }
}

TEST_CASE("harmonic sets against a dyadic-radius oracle") {
  // Radii 2^-j reach below every 1/n on the probes used here.
  auto every_nbhd_meets = [](const Rational& x, const IntervalSet& a, bool delta) {
    for (int j = 0; j <= 12; ++j) {
      const Rational eps(1, 1 << j);
      bool met = false;
      for (int n = 1; n <= 8192 && !met; ++n) {
        const Rational w(1, n);
        met = a.contains(w) && (delta ? oracle71::in_delta_basic(x, eps, w) : oracle71::in_basic(x, eps, w));
      }
      met = met || a.contains(x);
      if (!met) return false;
    }
    return true;
  };
  for (int k = 1; k <= 4; ++k) {
    const auto h = IntervalSet::harmonic_tail(k);
    for (const Rational& x : {Rational(0), Rational(1, 5), Rational(1, 7), Rational(2, 9), Rational(1)}) {
      CAPTURE(k);
      CAPTURE(to_string(x));
      CHECK(s71_closure(h).contains(x) == every_nbhd_meets(x, h, false));
      CHECK(s71_delta_closure(h).contains(x) == every_nbhd_meets(x, h, true));
    }
  }
}

TEST_CASE("interior of the closure of basic neighbourhoods") {
  using B = BasicKind;
  CHECK(s71_int_cl_basic(B::punctured_at_0, 0, Rational(1, 3)) == iv(0, Rational(1, 3), true, false));
  CHECK(s71_int_cl_basic(B::punctured_at_0, 0, kHalf) == iv(0, kHalf, true, false));
  // The radius-1 neighbourhood has closure [0,1], whose interior keeps 1.
  CHECK(s71_int_cl_basic(B::punctured_at_0, 0, 1) == IntervalSet::unit());

  CHECK(s71_int_cl_basic(B::euclidean_at_x, kHalf, Rational(1, 4)) == iv(Rational(1, 4), Rational(3, 4), false, false));
  CHECK(s71_int_cl_basic(B::euclidean_at_x, kHalf, Rational(1, 3)) == iv(Rational(1, 6), Rational(5, 6), false, false));
  CHECK(s71_int_cl_basic(B::euclidean_at_x, Rational(3, 4), kHalf) == iv(Rational(1, 4), 1, false, true));
  // When the interval ends exactly at 0 or 1, the closure picks up the end
  // point and the interior keeps it, so the identity fails there.
  CHECK(s71_basic(B::euclidean_at_x, kHalf, kHalf) == iv(0, 1, false, false));
  CHECK(s71_int_cl_basic(B::euclidean_at_x, kHalf, kHalf) == IntervalSet::unit());

  CHECK_THROWS_AS(s71_basic(B::euclidean_at_x, 0, kHalf), std::invalid_argument);
  CHECK_THROWS_AS(s71_basic(B::punctured_at_0, 0, 0), std::invalid_argument);
}

TEST_CASE("basic neighbourhood identity over a radius sweep") {
  using B = BasicKind;
  for (int q = 2; q <= 12; ++q)
    for (int p = 1; p < q; ++p) {
      const Rational x(p, q);
      for (int r = 2; r <= 12; ++r) {
        const Rational eps(1, r);
        if (x - eps == 0 || x + eps == 1) continue;
        CAPTURE(to_string(x));
        CAPTURE(to_string(eps));
        CHECK(s71_int_cl_basic(B::euclidean_at_x, x, eps) == s71_basic(B::euclidean_at_x, x, eps));
      }
    }
  for (int r = 2; r <= 20; ++r)
    CHECK(s71_int_cl_basic(B::punctured_at_0, 0, Rational(1, r)) == iv(0, Rational(1, r), true, false));
}
