#include "tsl/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsl {

namespace {

// Largest harmonic index handled; beyond it the cell decomposition near 0
// would list too many unit fractions.
const BigInt kMaxHarmonicCells = 100000;

bool in_unit(const Rational& x) { return x >= 0 && x <= 1; }

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<Rational>& v, const Rational& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

bool Component::contains(const Rational& x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

IntervalSet IntervalSet::make(std::vector<Component> components, std::vector<Rational> plus,
                              std::vector<Rational> minus, std::optional<Harmonic> harmonic) {
  for (const auto& c : components) {
    if (!in_unit(c.lo) || !in_unit(c.hi)) throw std::invalid_argument("interval outside [0,1]");
    if (c.lo > c.hi) throw std::invalid_argument("interval with lo > hi");
  }
  for (const auto& p : plus)
    if (!in_unit(p)) throw std::invalid_argument("point " + tsl::to_string(p) + " outside [0,1]");
  for (const auto& p : minus)
    if (!in_unit(p)) throw std::invalid_argument("point " + tsl::to_string(p) + " outside [0,1]");
  if (harmonic && harmonic->k < 1) throw std::invalid_argument("harmonic index must be at least 1");
  IntervalSet raw;
  raw.components_ = std::move(components);
  raw.plus_ = std::move(plus);
  raw.minus_ = std::move(minus);
  sort_unique(raw.plus_);
  sort_unique(raw.minus_);
  raw.harmonic_ = std::move(harmonic);
  const IntervalSet* sources[] = {&raw};
  return rebuild(sources, [&raw](const Rational& x) { return raw.contains(x); });
}

IntervalSet IntervalSet::unit() { return interval(0, 1, true, true); }

IntervalSet IntervalSet::interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed) {
  return make({Component{std::move(lo), std::move(hi), lo_closed, hi_closed}});
}

IntervalSet IntervalSet::points(std::vector<Rational> pts) { return make({}, std::move(pts)); }

IntervalSet IntervalSet::harmonic_tail(BigInt k) {
  return make({}, {}, {}, Harmonic{HarmonicSign::plus, std::move(k)});
}

bool IntervalSet::contains(const Rational& x) const {
  if (!in_unit(x)) return false;
  const bool tail = harmonic_ && in_harmonic_tail(x, harmonic_->k);
  bool in_comp = false;
  for (const auto& c : components_)
    if (c.contains(x)) {
      in_comp = true;
      break;
    }
  if (in_comp && !sorted_contains(minus_, x) && !(tail && harmonic_->sign == HarmonicSign::minus)) return true;
  if (sorted_contains(plus_, x)) return true;
  return tail && harmonic_->sign == HarmonicSign::plus;
}

std::vector<Rational> IntervalSet::breakpoints() const {
  std::vector<Rational> out{0, 1};
  for (const auto& c : components_) {
    out.push_back(c.lo);
    out.push_back(c.hi);
  }
  out.insert(out.end(), plus_.begin(), plus_.end());
  out.insert(out.end(), minus_.begin(), minus_.end());
  sort_unique(out);
  return out;
}

IntervalSet IntervalSet::rebuild(std::span<const IntervalSet* const> sources,
                                 const std::function<bool(const Rational&)>& member) {
  std::vector<Rational> crit{0, 1};
  std::optional<BigInt> k_max;
  for (const IntervalSet* s : sources) {
    auto b = s->breakpoints();
    crit.insert(crit.end(), b.begin(), b.end());
    if (s->harmonic_) k_max = k_max ? std::max(*k_max, s->harmonic_->k) : s->harmonic_->k;
  }
  sort_unique(crit);

  // With a harmonic tail present, list 1/n for n ≤ n_star so that (0, 1/n_star)
  // holds no breakpoint and every unit fraction in it lies in each source's tail.
  BigInt n_star = 0;
  if (k_max) {
    n_star = *k_max;
    for (const auto& c : crit)
      if (c > 0) {
        const Rational inv = 1 / c;
        const BigInt bound = numerator(inv) / denominator(inv) + 1;
        n_star = std::max(n_star, bound);
        break;
      }
    if (n_star > kMaxHarmonicCells) throw std::length_error("harmonic cell decomposition too large");
    for (BigInt n = 1; n <= n_star; ++n) crit.emplace_back(1, n);
    sort_unique(crit);
  }

  const std::size_t m = crit.size() - 1;  // open cells (crit[i], crit[i+1])
  std::vector<bool> at(crit.size());
  for (std::size_t i = 0; i < crit.size(); ++i) at[i] = member(crit[i]);
  std::vector<bool> cell(m);
  for (std::size_t i = 1; i < m; ++i) cell[i] = member((crit[i] + crit[i + 1]) / 2);
  bool tail_plain = false;
  bool tail_unit = false;
  if (k_max) {
    tail_plain = member(Rational(2, 2 * n_star + 1));
    tail_unit = member(Rational(1, n_star + 1));
  } else {
    tail_plain = tail_unit = member(crit[1] / 2);
  }
  cell[0] = tail_plain;

  IntervalSet out;
  if (tail_plain != tail_unit) {
    const HarmonicSign sign = tail_plain ? HarmonicSign::minus : HarmonicSign::plus;
    // Smallest k such that every 1/n with n ≥ k behaves like the tail.
    BigInt k = n_star + 1;
    while (k > 1 && member(Rational(1, k - 1)) == tail_unit) --k;
    out.harmonic_ = Harmonic{sign, k};
  }
  auto explained_by = [&](const Rational& x, HarmonicSign sign) {
    return out.harmonic_ && out.harmonic_->sign == sign && in_harmonic_tail(x, out.harmonic_->k);
  };

  std::vector<bool> covered(crit.size(), false);
  for (std::size_t i = 0; i < m;) {
    if (!cell[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < m && cell[j + 1]) ++j;
    out.components_.push_back(Component{crit[i], crit[j + 1], static_cast<bool>(at[i]), static_cast<bool>(at[j + 1])});
    for (std::size_t p = i; p <= j + 1; ++p) {
      covered[p] = true;
      const bool endpoint = p == i || p == j + 1;
      const bool removed = explained_by(crit[p], HarmonicSign::minus);
      if (at[p] && removed) out.plus_.push_back(crit[p]);
      if (!at[p] && !endpoint && !removed) out.minus_.push_back(crit[p]);
    }
    i = j + 1;
  }
  for (std::size_t p = 0; p < crit.size(); ++p)
    if (!covered[p] && at[p] && !explained_by(crit[p], HarmonicSign::plus)) out.plus_.push_back(crit[p]);
  sort_unique(out.plus_);
  sort_unique(out.minus_);
  return out;
}

IntervalSet IntervalSet::operator|(const IntervalSet& o) const {
  const IntervalSet* s[] = {this, &o};
  return rebuild(s, [&](const Rational& x) { return contains(x) || o.contains(x); });
}

IntervalSet IntervalSet::operator&(const IntervalSet& o) const {
  const IntervalSet* s[] = {this, &o};
  return rebuild(s, [&](const Rational& x) { return contains(x) && o.contains(x); });
}

IntervalSet IntervalSet::operator-(const IntervalSet& o) const {
  const IntervalSet* s[] = {this, &o};
  return rebuild(s, [&](const Rational& x) { return contains(x) && !o.contains(x); });
}

IntervalSet IntervalSet::complement() const {
  const IntervalSet* s[] = {this};
  return rebuild(s, [&](const Rational& x) { return !contains(x); });
}

bool IntervalSet::is_subset_of(const IntervalSet& o) const { return (*this - o).empty(); }

IntervalSet IntervalSet::euclidean_closure() const {
  const IntervalSet* s[] = {this};
  return rebuild(s, [&](const Rational& x) {
    if (contains(x)) return true;
    if (harmonic_ && harmonic_->sign == HarmonicSign::plus && x == 0) return true;
    for (const auto& c : components_)
      if (x >= c.lo && x <= c.hi) return true;
    return false;
  });
}

IntervalSet IntervalSet::euclidean_interior() const {
  const IntervalSet* s[] = {this};
  const bool tail_removed = harmonic_ && harmonic_->sign == HarmonicSign::minus;
  return rebuild(s, [&](const Rational& x) {
    if (!contains(x)) return false;
    for (const auto& c : components_) {
      if (x > c.lo && x < c.hi) return true;
      if (x == 0 && c.lo == 0 && !tail_removed) return true;
      if (x == 1 && c.hi == 1) return true;
    }
    return false;
  });
}

std::optional<Rational> IntervalSet::inf() const {
  std::optional<Rational> out;
  auto take = [&](const Rational& r) {
    if (!out || r < *out) out = r;
  };
  for (const auto& c : components_) take(c.lo);
  for (const auto& p : plus_) take(p);
  if (harmonic_ && harmonic_->sign == HarmonicSign::plus) take(0);
  return out;
}

std::optional<Rational> IntervalSet::sup() const {
  std::optional<Rational> out;
  auto take = [&](const Rational& r) {
    if (!out || r > *out) out = r;
  };
  for (const auto& c : components_) take(c.hi);
  for (const auto& p : plus_) take(p);
  if (harmonic_ && harmonic_->sign == HarmonicSign::plus) take(Rational(1, harmonic_->k));
  return out;
}

std::string IntervalSet::to_string() const {
  if (empty()) return "∅";
  auto point_list = [](const std::vector<Rational>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? "," : "") + tsl::to_string(pts[i]);
    return out + "}";
  };
  // Reads left to right as (components \ minus \ H⁻) ∪ plus ∪ H⁺.
  std::string out;
  for (const auto& c : components_)
    out += std::string(out.empty() ? "" : " ∪ ") + (c.lo_closed ? "[" : "(") + tsl::to_string(c.lo) + "," +
           tsl::to_string(c.hi) + (c.hi_closed ? "]" : ")");
  const bool adds_tail = harmonic_ && harmonic_->sign == HarmonicSign::plus;
  std::string removed;
  if (!minus_.empty()) removed = point_list(minus_);
  if (harmonic_ && !adds_tail) removed += (removed.empty() ? "" : " ∪ ") + std::string("H_") + harmonic_->k.str();
  if (!removed.empty()) {
    if (components_.size() > 1) out = "(" + out + ")";
    out += " \\ " + removed;
  }
  if (!plus_.empty()) out += (out.empty() ? "" : " ∪ ") + point_list(plus_);
  if (adds_tail) out += (out.empty() ? "" : " ∪ ") + std::string("H_") + harmonic_->k.str();
  return out;
}

}  // namespace tsl
