#include <doctest.h>

#include "fixtures.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/space.hpp"

using namespace tsl;
using fixtures::sierpinski;
using fixtures::w3;

TEST_CASE("make_space") {
  const auto s = sierpinski();
  CHECK(s.min_nbhd(0) == Subset{0, 1});
  CHECK(s.min_nbhd(1) == Subset{1});
  CHECK(FiniteSpace::make(3, {Subset{}, Subset{0, 1, 2}}) == FiniteSpace::indiscrete(3));
  CHECK_THROWS_AS(FiniteSpace::make(2, {Subset{}, Subset{0}, Subset{1}}), TopologyError);
  CHECK_THROWS_AS(FiniteSpace::make(2, {Subset{0}, Subset{0, 1}}), TopologyError);
  try {
    FiniteSpace::make(3, {Subset{}, Subset{0}, Subset{1}, Subset{0, 1, 2}});
    FAIL("expected a union violation");
  } catch (const TopologyError& e) {
    CHECK(e.first() == Subset{0});
    CHECK(e.second() == Subset{1});
  }
  CHECK_THROWS_AS(FiniteSpace::make(2, {Subset{}, Subset{2}, Subset{0, 1}}), TopologyError);
}

TEST_CASE("generate_topology") {
  CHECK(generate_topology(3, {}) == FiniteSpace::indiscrete(3));
  CHECK(generate_topology(2, {Subset{1}}) == sierpinski());
  const auto g = generate_topology(3, {Subset{0}, Subset{0, 2}});
  CHECK(g.opens() == std::vector<Subset>{Subset{}, Subset{0}, Subset{0, 2}, Subset{0, 1, 2}});
}

TEST_CASE("closure examples") {
  const auto s = sierpinski();
  CHECK(closure_of(s, Subset{0}, ClosureMode::plain) == Subset{0});
  CHECK(closure_of(s, Subset{0}, ClosureMode::delta) == Subset{0, 1});
  CHECK(closure_of(s, Subset{0}, ClosureMode::theta) == Subset{0, 1});

  const auto w = w3();
  CHECK(closure_of(w, Subset{0}, ClosureMode::plain) == Subset{0, 1});
  CHECK(closure_of(w, Subset{0}, ClosureMode::delta) == Subset{0, 1});
  CHECK(closure_of(w, Subset{0}, ClosureMode::theta) == Subset{0, 1});
  CHECK(closure_of(w, Subset{0, 1}, ClosureMode::theta) == Subset{0, 1, 2});
  CHECK(closure_of(w, Subset{0}, ClosureMode::bigtheta) == Subset{0, 1, 2});

  for (ClosureMode m : kAllClosureModes) {
    CHECK(closure_of(s, Subset{}, m) == Subset{});
    CHECK(closure_of(w, Subset{}, m) == Subset{});
  }
}

TEST_CASE("interior and mode-closedness") {
  const auto s = sierpinski();
  CHECK(interior_of(s, Subset{1}) == Subset{1});
  CHECK(interior_of(s, Subset{0}) == Subset{});
  CHECK(interior_of(s, s.carrier()) == s.carrier());
  CHECK_FALSE(is_mode_closed(w3(), Subset{0, 1}, ClosureMode::theta));
  CHECK(is_mode_closed(s, Subset{0}, ClosureMode::plain));
  for (ClosureMode m : kAllClosureModes) CHECK(is_mode_closed(w3(), Subset{0, 1, 2}, m));
}

TEST_CASE("derived topologies") {
  const auto d = FiniteSpace::discrete(3);
  CHECK(derived_topology(d, ClosureMode::delta) == d);
  CHECK(derived_topology(d, ClosureMode::theta) == d);
  // Sierpiński: δ-closed sets are ∅ and X only.
  CHECK(derived_topology(sierpinski(), ClosureMode::delta) == FiniteSpace::indiscrete(2));
  const auto tt = derived_topology(w3(), ClosureMode::theta);
  CHECK(closure_of(tt, Subset{0}, ClosureMode::plain) == Subset{0, 1, 2});
  CHECK_THROWS(derived_topology(d, ClosureMode::plain));
}

TEST_CASE("separation") {
  const auto d = FiniteSpace::discrete(3);
  for (Separation p : {Separation::t1, Separation::hausdorff, Separation::urysohn, Separation::regular}) {
    CHECK(separation(d, p));
    CHECK_FALSE(separation(sierpinski(), p));
  }
  const auto ind = FiniteSpace::indiscrete(3);
  CHECK_FALSE(separation(ind, Separation::t1));
  CHECK(separation(ind, Separation::regular));
}

TEST_CASE("H-sets and ad_theta") {
  const auto w = w3();
  CHECK(is_H_set(w, Subset{}));
  CHECK(is_H_set(w, Subset{0, 1}));
  CHECK(is_H_set_all_covers(w, Subset{0, 1}));
  CHECK(is_H_set_by_filters(w, Subset{0, 1}));

  const std::vector<Subset> whole{w.carrier()};
  CHECK(ad_theta(w, whole) == w.carrier());
  const std::vector<Subset> zero{Subset{0}};
  CHECK(ad_theta(sierpinski(), zero) == Subset{0, 1});
  const std::vector<Subset> ends{Subset{0}, Subset{2}};
  CHECK(ad_theta(w, ends) == Subset{1});
  CHECK_THROWS(ad_theta(w, std::span<const Subset>{}));
}

TEST_CASE("continuity and subspaces") {
  const auto s = sierpinski();
  const std::vector<Element> swap{1, 0};
  CHECK_FALSE(is_continuous(s, s, swap));
  CHECK_FALSE(is_continuous_by_definition(s, s, swap));
  const std::vector<Element> to_one{1, 1};
  CHECK(is_continuous(s, s, to_one));
  CHECK(preimage_of(swap, 2, Subset{1}) == Subset{0});
  CHECK(image_of(swap, Subset{0}) == Subset{1});

  const auto sub = subspace(w3(), Subset{0, 1});
  CHECK(sub.opens() == std::vector<Subset>{Subset{}, Subset{0}, Subset{0, 1}});
}

TEST_CASE("operator invariants over every topology with n <= 4") {
  for (const auto& sp : enumerate_topologies_up_to(4)) {
    const int n = sp.size();
    const bool regular = separation(sp, Separation::regular);
    for (Subset a : all_subsets(n)) {
      const Subset cl = closure_of(sp, a, ClosureMode::plain);
      const Subset dcl = closure_of(sp, a, ClosureMode::delta);
      const Subset tcl = closure_of(sp, a, ClosureMode::theta);
      const Subset Tcl = closure_of(sp, a, ClosureMode::bigtheta);
      REQUIRE(a.is_subset_of(cl));
      REQUIRE(cl.is_subset_of(dcl));
      REQUIRE(dcl.is_subset_of(tcl));
      REQUIRE(tcl.is_subset_of(Tcl));
      for (ClosureMode m : kAllClosureModes) REQUIRE(closure_by_definition(sp, a, m) == closure_of(sp, a, m));
      REQUIRE(closure_of(sp, cl, ClosureMode::plain) == cl);
      REQUIRE(closure_of(sp, dcl, ClosureMode::delta) == dcl);
      REQUIRE(closure_of(sp, Tcl, ClosureMode::bigtheta) == Tcl);
      REQUIRE(is_mode_closed(sp, Tcl, ClosureMode::theta));
      for (Subset b : all_subsets(n))
        if (a.is_subset_of(b))
          for (ClosureMode m : kAllClosureModes) REQUIRE(closure_of(sp, a, m).is_subset_of(closure_of(sp, b, m)));
      if (regular) {
        REQUIRE(cl == dcl);
        REQUIRE(cl == tcl);
        REQUIRE(cl == Tcl);
      }
      REQUIRE(is_H_set(sp, a));
      REQUIRE(is_H_set_by_filters(sp, a));
      REQUIRE(closure_of(derived_topology(sp, ClosureMode::delta), a, ClosureMode::plain) == dcl);
      REQUIRE(closure_of(derived_topology(sp, ClosureMode::theta), a, ClosureMode::plain) == Tcl);
    }
    for (Subset u : sp.opens()) {
      const Subset reg = interior_of(sp, closure_of(sp, u, ClosureMode::plain));
      REQUIRE(is_mode_closed(sp, reg.complement(n), ClosureMode::delta));
    }
    for (ClosureMode m : {ClosureMode::delta, ClosureMode::theta}) {
      const auto closed = mode_closed_sets(sp, m);
      auto member = [&](Subset s) { return std::find(closed.begin(), closed.end(), s) != closed.end(); };
      REQUIRE(member(Subset{}));
      REQUIRE(member(sp.carrier()));
      for (Subset f : closed)
        for (Subset g : closed) {
          REQUIRE(member(f | g));
          REQUIRE(member(f & g));
        }
    }
    if (sp.opens().size() <= 10 && n <= 3)
      for (Subset a : all_subsets(n)) REQUIRE(is_H_set_all_covers(sp, a));
  }
}

TEST_CASE("theta closure fails idempotence somewhere, other operators never do") {
  bool witnessed = false;
  for (const auto& sp : enumerate_topologies_up_to(3))
    for (Subset a : all_subsets(sp.size())) {
      const Subset t = closure_of(sp, a, ClosureMode::theta);
      if (closure_of(sp, t, ClosureMode::theta) != t) witnessed = true;
    }
  CHECK(witnessed);
}
