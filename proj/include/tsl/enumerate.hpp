#pragma once

#include <cstdint>
#include <vector>

#include "tsl/order.hpp"
#include "tsl/space.hpp"
#include "tsl/topo_semilattice.hpp"

namespace tsl {

inline constexpr int kMaxEnumeratedCarrier = 5;
inline constexpr int kMaxEnumeratedModelCarrier = 4;

/// One topology per preorder on n labelled points (n ≤ 5). The preorder is
/// encoded by one bit per ordered pair (a, b), a ≠ b, meaning a ∈ min_nbhd(b);
/// bits are ordered by b, then a, and masks are visited in ascending order.
std::vector<FiniteSpace> enumerate_topologies(int n);

/// Counts families of subsets of an n-point set that contain ∅ and the
/// carrier and are closed under union and intersection, by visiting all
/// 2^(2^n) families. n ≤ 3.
std::uint64_t count_topologies_by_families(int n);

/// One meet table per labelled partial order in which every pair has a
/// greatest lower bound (n ≤ 5). Orders are encoded by one bit per ordered
/// pair (a, b), a ≠ b, meaning a ≤ b; bits in lexicographic pair order,
/// masks ascending.
std::vector<MeetTable> enumerate_meet_tables(int n);

/// Counts all n^(n²) tables that pass the semilattice axioms. n ≤ 3.
std::uint64_t count_meet_tables_by_tables(int n);

/// Every (topology, meet table) pair on n points (n ≤ 4): topologies in the
/// outer loop, meet tables in the inner loop.
std::vector<TopSemilattice> enumerate_models(int n);

/// enumerate_models for every n in 1..n_max, in increasing n.
std::vector<TopSemilattice> enumerate_models_up_to(int n_max);

/// enumerate_topologies for every n in 1..n_max.
std::vector<FiniteSpace> enumerate_topologies_up_to(int n_max);

}  // namespace tsl
