#pragma once

#include "tsl/order.hpp"
#include "tsl/space.hpp"
#include "tsl/topo_semilattice.hpp"

namespace fixtures {

using tsl::Subset;

// meet(x, y) = min(x, y) on {0, ..., n-1}.
inline tsl::MeetTable min_meet(int n) {
  tsl::RawTable t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = std::min(x, y);
  return tsl::MeetTable::validate(t);
}

// Bottom 0 with incomparable atoms 1 and 2.
inline tsl::MeetTable vee_meet() { return tsl::MeetTable::validate({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}); }

// Opens ∅, {1}, X.
inline tsl::FiniteSpace sierpinski() { return tsl::FiniteSpace::make(2, {Subset{}, Subset{1}, Subset{0, 1}}); }

// Opens ∅, {0}, {2}, {0,2}, X: theta closure is not idempotent here.
inline tsl::FiniteSpace w3() {
  return tsl::FiniteSpace::make(3, {Subset{}, Subset{0}, Subset{2}, Subset{0, 2}, Subset{0, 1, 2}});
}

inline tsl::TopSemilattice model(tsl::FiniteSpace s, tsl::MeetTable m) {
  return tsl::TopSemilattice::make(std::move(s), std::move(m));
}

}  // namespace fixtures
