#include <doctest.h>

#include "tsl/enumerate.hpp"

using namespace tsl;

TEST_CASE("topology counts by both paths") {
  const std::uint64_t expected[] = {1, 4, 29};
  for (int n = 1; n <= 3; ++n) {
    CHECK(enumerate_topologies(n).size() == expected[n - 1]);
    CHECK(count_topologies_by_families(n) == expected[n - 1]);
  }
  CHECK(enumerate_topologies(4).size() == 355);
  CHECK(enumerate_topologies(5).size() == 6942);
}

TEST_CASE("topology enumeration order for two points") {
  const auto t = enumerate_topologies(2);
  CHECK(t[0] == FiniteSpace::discrete(2));
  CHECK(t[1].opens() == std::vector<Subset>{Subset{}, Subset{1}, Subset{0, 1}});
  CHECK(t[2].opens() == std::vector<Subset>{Subset{}, Subset{0}, Subset{0, 1}});
  CHECK(t[3] == FiniteSpace::indiscrete(2));
}

TEST_CASE("meet table counts by both paths") {
  const std::uint64_t expected[] = {1, 2, 9};
  for (int n = 1; n <= 3; ++n) {
    CHECK(enumerate_meet_tables(n).size() == expected[n - 1]);
    CHECK(count_meet_tables_by_tables(n) == expected[n - 1]);
  }
  CHECK(enumerate_meet_tables(2).front().meet(0, 1) == 0);
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS(enumerate_topologies(6));
  CHECK_THROWS(enumerate_meet_tables(0));
  CHECK_THROWS(count_topologies_by_families(4));
  CHECK_THROWS(enumerate_models(5));
  CHECK(enumerate_models(2).size() == 8);
}
