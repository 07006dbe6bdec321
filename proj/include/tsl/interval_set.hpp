#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl {

/// Interval inside [0,1] with per-end open/closed flags. lo ≤ hi; a
/// degenerate interval [a,a] is the point a.
struct Component {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& x) const;
  friend bool operator==(const Component&, const Component&) = default;
};

enum class HarmonicSign { plus, minus };

/// H_k = {1/n : n ≥ k}.
struct Harmonic {
  HarmonicSign sign;
  BigInt k;
  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// Subset of [0,1] of the form
///   (components \ minus \ H⁻) ∪ plus ∪ H⁺
/// where components is a finite union of intervals, plus and minus are
/// finite point sets and at most one harmonic tail H_k is removed from the
/// components (minus) or added (plus).
///
/// Values are always normalized: the representation is rebuilt from the
/// membership pattern on a cell decomposition, so two IntervalSets are equal
/// as sets exactly when their fields are equal. Canonical form: components
/// are the maximal runs of positive length, with end flags equal to the
/// membership of the end point; gaps inside a run go to minus; points in the
/// set outside every run go to plus; the harmonic index k is as small as
/// possible; points explained by the harmonic tail are not listed.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes arbitrary input. Throws std::invalid_argument for points or
  /// intervals outside [0,1], lo > hi, or k < 1.
  static IntervalSet make(std::vector<Component> components, std::vector<Rational> plus = {},
                          std::vector<Rational> minus = {}, std::optional<Harmonic> harmonic = std::nullopt);

  static IntervalSet empty_set() { return {}; }
  static IntervalSet unit();  ///< [0,1]
  static IntervalSet interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed);
  static IntervalSet points(std::vector<Rational> pts);
  /// H_k.
  static IntervalSet harmonic_tail(BigInt k = 1);

  bool contains(const Rational& x) const;
  bool empty() const { return components_.empty() && plus_.empty() && !harmonic_; }

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Rational>& plus_points() const { return plus_; }
  const std::vector<Rational>& minus_points() const { return minus_; }
  const std::optional<Harmonic>& harmonic() const { return harmonic_; }

  /// Every point where membership can change, plus 0 and 1, sorted.
  std::vector<Rational> breakpoints() const;

  IntervalSet operator|(const IntervalSet& o) const;
  IntervalSet operator&(const IntervalSet& o) const;
  IntervalSet operator-(const IntervalSet& o) const;
  IntervalSet complement() const;  ///< relative to [0,1]
  bool is_subset_of(const IntervalSet& o) const;

  /// Euclidean closure and interior relative to [0,1].
  IntervalSet euclidean_closure() const;
  IntervalSet euclidean_interior() const;

  /// Greatest lower / least upper bound; nullopt for the empty set.
  std::optional<Rational> inf() const;
  std::optional<Rational> sup() const;

  /// e.g. "[0,1/2) ∪ {1} \ H_3".
  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  /// Rebuilds the canonical set whose membership is `member`, which must be
  /// constant on the open cells between the breakpoints of `sources` and,
  /// near 0, constant separately on unit fractions and on the other points.
  static IntervalSet rebuild(std::span<const IntervalSet* const> sources,
                             const std::function<bool(const Rational&)>& member);

 private:
  std::vector<Component> components_;
  std::vector<Rational> plus_;
  std::vector<Rational> minus_;
  std::optional<Harmonic> harmonic_;
};

}  // namespace tsl
