#include "tsl/enumerate.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tsl {

namespace {

void check_bound(int n, int bound, const char* what) {
  if (n < 1 || n > bound)
    throw std::invalid_argument(std::string(what) + " enumeration supports 1.." + std::to_string(bound) +
                                " points, got " + std::to_string(n));
}

}  // namespace

std::vector<FiniteSpace> enumerate_topologies(int n) {
  check_bound(n, kMaxEnumeratedCarrier, "topology");
  std::vector<std::pair<int, int>> pairs;  // (a, b): a ∈ min_nbhd(b)
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<FiniteSpace> out;
  const std::uint32_t masks = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<Subset> nbhd(n);
    for (int x = 0; x < n; ++x) nbhd[x].insert(x);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) nbhd[pairs[i].second].insert(pairs[i].first);
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      nbhd[x].for_each([&](Element y) {
        if (!nbhd[y].is_subset_of(nbhd[x])) transitive = false;
      });
    if (transitive) out.push_back(FiniteSpace::from_min_nbhd(std::move(nbhd)));
  }
  return out;
}

std::uint64_t count_topologies_by_families(int n) {
  check_bound(n, 3, "family");
  const int subsets = 1 << n;
  const std::uint32_t full = (1u << n) - 1;
  std::uint64_t count = 0;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t family = 0; family < families; ++family) {
    auto has = [&](std::uint32_t s) { return (family >> s) & 1u; };
    if (!has(0) || !has(full)) continue;
    bool ok = true;
    for (int a = 0; a < subsets && ok; ++a)
      for (int b = 0; b < subsets && ok; ++b)
        if (has(a) && has(b) && (!has(a | b) || !has(a & b))) ok = false;
    if (ok) ++count;
  }
  return count;
}

std::vector<MeetTable> enumerate_meet_tables(int n) {
  check_bound(n, kMaxEnumeratedCarrier, "meet table");
  std::vector<std::pair<int, int>> pairs;  // (a, b): a ≤ b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<MeetTable> out;
  const std::uint32_t masks = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<Subset> down(n);  // down[b] = {a : a ≤ b}
    for (int x = 0; x < n; ++x) down[x].insert(x);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) down[pairs[i].second].insert(pairs[i].first);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x + 1; y < n && ok; ++y)
        if (down[x].contains(y) && down[y].contains(x)) ok = false;
    for (int x = 0; x < n && ok; ++x)
      down[x].for_each([&](Element y) {
        if (!down[y].is_subset_of(down[x])) ok = false;
      });
    if (!ok) continue;
    RawTable table(n, std::vector<int>(n));
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        const Subset lower = down[x] & down[y];
        int glb = -1;
        lower.for_each([&](Element c) {
          if (lower.is_subset_of(down[c])) glb = c;
        });
        if (glb < 0) ok = false;
        table[x][y] = glb;
      }
    if (ok) out.push_back(MeetTable::validate(table));
  }
  return out;
}

std::uint64_t count_meet_tables_by_tables(int n) {
  check_bound(n, 3, "raw table");
  const int cells = n * n;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  std::uint64_t count = 0;
  RawTable table(n, std::vector<int>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < cells; ++i) {
      table[i / n][i % n] = static_cast<int>(c % n);
      c /= n;
    }
    if (!check_meet_axioms(table)) ++count;
  }
  return count;
}

std::vector<TopSemilattice> enumerate_models(int n) {
  check_bound(n, kMaxEnumeratedModelCarrier, "model");
  const auto spaces = enumerate_topologies(n);
  const auto meets = enumerate_meet_tables(n);
  std::vector<TopSemilattice> out;
  out.reserve(spaces.size() * meets.size());
  for (const auto& s : spaces)
    for (const auto& m : meets) out.push_back(TopSemilattice::make(s, m));
  return out;
}

std::vector<TopSemilattice> enumerate_models_up_to(int n_max) {
  std::vector<TopSemilattice> out;
  for (int n = 1; n <= n_max; ++n) {
    auto models = enumerate_models(n);
    out.insert(out.end(), std::make_move_iterator(models.begin()), std::make_move_iterator(models.end()));
  }
  return out;
}

std::vector<FiniteSpace> enumerate_topologies_up_to(int n_max) {
  std::vector<FiniteSpace> out;
  for (int n = 1; n <= n_max; ++n) {
    auto spaces = enumerate_topologies(n);
    out.insert(out.end(), std::make_move_iterator(spaces.begin()), std::make_move_iterator(spaces.end()));
  }
  return out;
}

}  // namespace tsl
