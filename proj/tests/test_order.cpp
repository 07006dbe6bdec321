#include <doctest.h>

#include "fixtures.hpp"
#include "tsl/enumerate.hpp"
#include "tsl/order.hpp"

using namespace tsl;
using fixtures::min_meet;
using fixtures::vee_meet;

TEST_CASE("validate_meet accepts semilattices and names the broken axiom") {
  CHECK_NOTHROW(min_meet(3));
  CHECK_NOTHROW(vee_meet());

  auto v = check_meet_axioms({{0, 0}, {1, 1}});
  REQUIRE(v);
  CHECK(v->axiom == MeetAxiom::commutativity);
  CHECK(v->x == 0);
  CHECK(v->y == 1);

  v = check_meet_axioms({{1, 0}, {0, 1}});
  REQUIRE(v);
  CHECK(v->axiom == MeetAxiom::idempotence);

  v = check_meet_axioms({{0, 2}, {0, 1}});
  REQUIRE(v);
  CHECK(v->axiom == MeetAxiom::range);

  // Commutative and idempotent but not associative: (1·2)·0 = 0·0 vs 1·(2·0) = 1·2.
  v = check_meet_axioms({{0, 1, 2}, {1, 1, 0}, {2, 0, 2}});
  REQUIRE(v);
  CHECK(v->axiom == MeetAxiom::associativity);

  CHECK_THROWS_AS(MeetTable::validate({{0, 0}, {1, 1}}), MeetAxiomError);
}

TEST_CASE("induced order") {
  const auto total = induced_order(min_meet(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(total.leq(x, y) == (x <= y));

  const auto vee = induced_order(vee_meet());
  CHECK(vee.leq(0, 1));
  CHECK(vee.leq(0, 2));
  CHECK_FALSE(vee.comparable(1, 2));

  const auto one = induced_order(MeetTable::validate({{0}}));
  CHECK(one.leq(0, 0));
}

TEST_CASE("up, down and updown sets") {
  const auto total = induced_order(min_meet(3));
  CHECK(total.up_set(1) == Subset{1, 2});
  CHECK(total.up_set(0) == Subset{0, 1, 2});
  CHECK(induced_order(vee_meet()).updown_set(1) == Subset{0, 1});
}

TEST_CASE("chains and directed sets") {
  const auto total = induced_order(min_meet(3));
  CHECK(is_chain(total, Subset{0, 2}));
  const auto vee = induced_order(vee_meet());
  CHECK_FALSE(is_chain(vee, Subset{1, 2}));
  CHECK_FALSE(is_up_directed(vee, Subset{1, 2}));
  CHECK_FALSE(is_down_directed(vee, Subset{1, 2}));  // 0 is outside {1,2}
  CHECK(is_down_directed(vee, Subset{0, 1, 2}));
  CHECK_FALSE(is_chain(total, Subset{}));
  CHECK_FALSE(is_up_directed(total, Subset{}));
  CHECK_THROWS(Chain(vee, Subset{1, 2}));
}

TEST_CASE("enumerate_chains") {
  CHECK(enumerate_chains(induced_order(MeetTable::validate({{0}}))).size() == 1);
  CHECK(enumerate_chains(induced_order(min_meet(3))).size() == 7);
  const auto chains = enumerate_chains(induced_order(vee_meet()));
  CHECK(chains.size() == 5);
  // Lexicographic order on sorted index lists.
  CHECK(chains.front().elements() == Subset{0});
  CHECK(chains[1].elements() == Subset{0, 1});
  CHECK(chains.back().elements() == Subset{2});
}

TEST_CASE("chain bounds") {
  const auto total = induced_order(min_meet(3));
  CHECK(chain_inf(total, Chain(total, Subset{0, 2})) == 0);
  CHECK(chain_sup(total, Chain(total, Subset{0, 2})) == 2);
  CHECK(chain_inf(total, Chain(total, Subset{1})) == 1);
  const auto vee = induced_order(vee_meet());
  CHECK(chain_inf(vee, Chain(vee, Subset{0, 1})) == 0);
  CHECK(chain_sup(vee, Chain(vee, Subset{0, 1})) == 1);
}

TEST_CASE("order invariants over every meet table with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_meet_tables(n)) {
      const auto o = induced_order(m);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          // meet is the glb of {x, y}, computed from leq alone.
          REQUIRE(o.glb(Subset{x, y}) == m.meet(x, y));
          for (int z = 0; z < n; ++z)
            if (o.leq(x, y) && o.leq(y, z)) REQUIRE(o.leq(x, z));
          if (x != y) REQUIRE_FALSE((o.leq(x, y) && o.leq(y, x)));
        }
      std::size_t brute = 0;
      for (Subset s : all_subsets(n)) {
        bool pairwise = !s.empty();
        for (int x : s.elements())
          for (int y : s.elements())
            if (!(m.meet(x, y) == x || m.meet(x, y) == y)) pairwise = false;
        if (pairwise) ++brute;
      }
      const auto chains = enumerate_chains(o);
      REQUIRE(chains.size() == brute);
      for (const auto& c : chains) {
        REQUIRE(is_up_directed(o, c.elements()));
        REQUIRE(is_down_directed(o, c.elements()));
        REQUIRE(c.elements().contains(chain_inf(o, c)));
        REQUIRE(c.elements().contains(chain_sup(o, c)));
      }
    }
  }
}
