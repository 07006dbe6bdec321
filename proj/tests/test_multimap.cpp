#include <doctest.h>

#include "fixtures.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/multimap.hpp"

using namespace tsl;
using fixtures::min_meet;
using fixtures::model;
using fixtures::sierpinski;
using fixtures::w3;

namespace {

TopSemilatticePtr ptr(TopSemilattice ts) { return std::make_shared<const TopSemilattice>(std::move(ts)); }

}  // namespace

TEST_CASE("image and preimage") {
  const auto x = ptr(model(FiniteSpace::discrete(3), min_meet(3)));
  const MultiMap id(x, x, {Subset{0}, Subset{1}, Subset{2}});
  CHECK(mm_image(id, Subset{0, 2}) == Subset{0, 2});
  CHECK(mm_preimage(id, Subset{1}) == Subset{1});
  const MultiMap constant(x, x, {x->space().carrier(), x->space().carrier(), x->space().carrier()});
  CHECK(mm_preimage(constant, Subset{2}) == x->space().carrier());

  const auto two = ptr(model(FiniteSpace::discrete(2), min_meet(2)));
  const auto one = ptr(model(FiniteSpace::discrete(1), MeetTable::validate({{0}})));
  const auto fib = fibers_of(PointMap(two, one, {0, 0}));
  CHECK(fib.value(0) == Subset{0, 1});
  CHECK(mm_preimage(fib, Subset{1}) == Subset{0});
  CHECK_THROWS(MultiMap(x, x, {Subset{0}}));
  CHECK_THROWS(MultiMap(x, x, {Subset{0}, Subset{3}, Subset{1}}));
}

TEST_CASE("multimorphisms") {
  const auto x = ptr(model(sierpinski(), min_meet(2)));
  CHECK(is_multimorphism(MultiMap(x, x, {Subset{0}, Subset{1}})));
  CHECK(is_multimorphism(MultiMap(x, x, {Subset{0, 1}, Subset{0, 1}})));
  CHECK_FALSE(is_multimorphism(MultiMap(x, x, {Subset{1}, Subset{0}})));
}

TEST_CASE("upper semicontinuity") {
  const auto s = ptr(model(sierpinski(), min_meet(2)));
  CHECK(is_upper_semicontinuous(MultiMap(s, s, {Subset{0}, Subset{1}})));
  CHECK(is_upper_semicontinuous(MultiMap(s, s, {Subset{0, 1}, Subset{0, 1}})));
  const auto d = ptr(model(FiniteSpace::discrete(2), min_meet(2)));
  CHECK(is_upper_semicontinuous(MultiMap(d, s, {Subset{1}, Subset{0}})));
}

TEST_CASE("Ti-closed sets") {
  for (Subset f : all_subsets(3)) {
    CHECK(is_Ti_set(FiniteSpace::discrete(3), f, 1));
    CHECK(is_Ti_set(FiniteSpace::discrete(3), f, 2));
  }
  CHECK_FALSE(is_Ti_set(sierpinski(), Subset{1}, 1));
  CHECK_FALSE(is_Ti_set(w3(), Subset{2}, 2));
  CHECK(is_Ti_set(w3(), Subset{2}, 1) == w3().is_closed(Subset{2}));
  const auto x = ptr(model(FiniteSpace::discrete(2), min_meet(2)));
  CHECK(is_Ti_multimorphism(MultiMap(x, x, {Subset{0}, Subset{1}}), 2));
}

TEST_CASE("point maps") {
  const auto x = ptr(model(FiniteSpace::discrete(3), min_meet(3)));
  const PointMap id(x, x, {0, 1, 2});
  CHECK(is_homomorphism(id));
  CHECK(is_continuous(id));
  CHECK(is_closed_map(id));
  CHECK(is_retraction(id));
  CHECK(is_homomorphism(PointMap(x, x, {1, 1, 1})));
  const PointMap r(x, x, {0, 1, 1});
  CHECK(is_homomorphism(r));
  CHECK(is_retraction(r));
  const auto s = ptr(model(sierpinski(), min_meet(2)));
  CHECK(is_retraction(PointMap(s, s, {0, 0})));
  CHECK_FALSE(is_retraction(PointMap(s, s, {1, 0})));
}

TEST_CASE("fibers_of policies") {
  const auto x = ptr(model(FiniteSpace::discrete(3), min_meet(3)));
  const auto id = fibers_of(PointMap(x, x, {0, 1, 2}));
  CHECK(id.values() == std::vector<Subset>{Subset{0}, Subset{1}, Subset{2}});
  const PointMap r(x, x, {0, 1, 1});
  CHECK_THROWS(fibers_of(r));
  CHECK(fibers_of(r, FiberPolicy::allow_empty).value(2).empty());
  const auto restricted = fibers_of(r, FiberPolicy::restrict_to_image);
  CHECK(restricted.dom().size() == 2);
  CHECK(restricted.value(1) == Subset{1, 2});
}

TEST_CASE("transfer theorem checker examples") {
  const auto one = ptr(model(FiniteSpace::discrete(1), MeetTable::validate({{0}})));
  const auto v = check_transfer_theorem(MultiMap(one, one, {Subset{0}}));
  CHECK(v.outcome() == Outcome::hyp_concl);

  const auto s = ptr(model(sierpinski(), min_meet(2)));
  const auto t1 = check_transfer_theorem(MultiMap(one, s, {Subset{1}}));
  CHECK_FALSE(t1.hypotheses_hold());
  CHECK(t1.failed_hypotheses().find("T1 values") != std::string::npos);
  CHECK_THROWS(check_transfer_theorem(MultiMap(one, s, {Subset{}})));

  const auto d = check_disjoint_corollary(MultiMap(one, one, {Subset{0}}));
  CHECK(d.outcome() == Outcome::hyp_concl);
  REQUIRE(d.derived_fact);
  CHECK(*d.derived_fact);
}

TEST_CASE("closed embedding checker examples") {
  const auto y = model(FiniteSpace::discrete(3), min_meet(3));
  const std::vector<Element> id{0, 1, 2};
  CHECK(check_closed_embedding_theorem(y, y.space().carrier(), y, id).outcome() == Outcome::hyp_concl);
  const auto one = model(FiniteSpace::discrete(1), MeetTable::validate({{0}}));
  const std::vector<Element> to_zero{0};
  CHECK(check_closed_embedding_theorem(y, Subset{0}, one, to_zero).conclusion);
  const auto vee = model(FiniteSpace::discrete(3), fixtures::vee_meet());
  CHECK_THROWS(check_closed_embedding_theorem(vee, Subset{1, 2}, one, std::vector<Element>{0, 0}));
}

TEST_CASE("fiber identities over all maps on carriers <= 3") {
  std::vector<TopSemilatticePtr> models;
  for (auto& ts : enumerate_models_up_to(3)) models.push_back(ptr(std::move(ts)));
  // Use one structure per carrier size for the identity (it only depends on h).
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::size_t checked = 0;
      for (const auto& dom : models) {
        if (dom->size() != n) continue;
        for (const auto& cod : models) {
          if (cod->size() != m) continue;
          int maps = 1;
          for (int i = 0; i < n; ++i) maps *= m;
          for (int code = 0; code < maps; ++code) {
            std::vector<Element> h(n);
            for (int i = 0, c = code; i < n; ++i, c /= m) h[i] = c % m;
            const PointMap map(dom, cod, h);
            const auto phi = fibers_of(map, FiberPolicy::allow_empty);
            for (Subset f : all_subsets(n)) REQUIRE(mm_preimage(phi, f) == image_of(h, f));
            if (is_homomorphism(map)) REQUIRE(is_multimorphism(phi));
            ++checked;
          }
        }
      }
      CHECK(checked > 0);
    }
}
