#include <doctest.h>

#include <algorithm>
#include <random>

#include "tsl/interval_set.hpp"

using namespace tsl;

namespace {

const Rational kEnds[] = {0, Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), 1};

struct RawSet {
  std::vector<Component> components;
  std::vector<Rational> plus, minus;
  std::optional<Harmonic> harmonic;
};

RawSet random_raw(std::mt19937& rng) {
  std::uniform_int_distribution<int> end(0, 5), coin(0, 1), count(0, 3), k(1, 6);
  RawSet r;
  for (int i = count(rng); i > 0; --i) {
    Rational a = kEnds[end(rng)], b = kEnds[end(rng)];
    if (a > b) std::swap(a, b);
    r.components.push_back(Component{a, b, coin(rng) == 1, coin(rng) == 1});
  }
  for (int i = count(rng); i > 0; --i) r.plus.push_back(kEnds[end(rng)]);
  for (int i = count(rng); i > 0; --i) r.minus.push_back(kEnds[end(rng)]);
  if (coin(rng)) r.harmonic = Harmonic{coin(rng) ? HarmonicSign::plus : HarmonicSign::minus, k(rng)};
  return r;
}

IntervalSet build(const RawSet& r) { return IntervalSet::make(r.components, r.plus, r.minus, r.harmonic); }

// Direct reading of the raw fields, independent of normalization.
bool raw_contains(const RawSet& r, const Rational& x) {
  if (x < 0 || x > 1) return false;
  const bool tail = r.harmonic && in_harmonic_tail(x, r.harmonic->k);
  bool in = false;
  for (const auto& c : r.components) in = in || c.contains(x);
  in = in && std::find(r.minus.begin(), r.minus.end(), x) == r.minus.end();
  in = in && !(tail && r.harmonic->sign == HarmonicSign::minus);
  in = in || std::find(r.plus.begin(), r.plus.end(), x) != r.plus.end();
  return in || (tail && r.harmonic->sign == HarmonicSign::plus);
}

std::vector<Rational> probes() {
  std::vector<Rational> out;
  for (int k = 0; k <= 720; ++k) out.emplace_back(k, 720);
  for (int n = 1; n <= 60; ++n) out.emplace_back(1, n);
  for (int n = 1; n <= 60; ++n) out.emplace_back(2, 2 * n + 1);
  out.emplace_back(-1, 2);
  out.emplace_back(3, 2);
  return out;
}

}  // namespace

TEST_CASE("canonical forms") {
  const Rational h(1, 2);
  CHECK(IntervalSet::make({Component{0, h, true, true}, Component{h, 1, true, true}}) == IntervalSet::unit());
  CHECK(IntervalSet::make({Component{0, h, true, false}, Component{h, 1, false, true}}, {h}) == IntervalSet::unit());
  const auto gap = IntervalSet::make({Component{0, h, true, false}, Component{h, 1, false, true}});
  CHECK(gap.components().size() == 1);
  CHECK(gap.minus_points() == std::vector<Rational>{h});
  CHECK(IntervalSet::make({Component{h, h, true, true}}) == IntervalSet::points({h}));
  CHECK(IntervalSet::make({Component{h, h, false, true}}).empty());

  const auto punctured = IntervalSet::unit() - IntervalSet::harmonic_tail(1);
  REQUIRE(punctured.harmonic());
  CHECK(punctured.harmonic()->sign == HarmonicSign::minus);
  CHECK(punctured.harmonic()->k == 1);
  CHECK_FALSE(punctured.contains(1));
  CHECK(punctured.contains(0));
  CHECK(punctured.contains(Rational(2, 3)));
  CHECK_FALSE(punctured.contains(Rational(1, 1000)));

  // Listing 1/1,...,1/4 explicitly shrinks to the smallest index.
  CHECK(IntervalSet::make({}, {1, h, Rational(1, 3), Rational(1, 4)}, {}, Harmonic{HarmonicSign::plus, 5}) ==
        IntervalSet::harmonic_tail(1));
  CHECK(IntervalSet::harmonic_tail(3).to_string() == "H_3");
  CHECK(punctured.to_string() == "[0,1) \\ H_1");
  CHECK(IntervalSet::empty_set().to_string() == "∅");
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(IntervalSet::interval(0, 2, true, true), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::interval(Rational(2, 3), Rational(1, 3), true, true), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::points({-1}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::harmonic_tail(0), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
}

TEST_CASE("normalization agrees with raw membership and ignores order") {
  std::mt19937 rng(7);
  const auto pts = probes();
  for (int trial = 0; trial < 300; ++trial) {
    RawSet r = random_raw(rng);
    const IntervalSet s = build(r);
    for (const auto& x : pts) REQUIRE(s.contains(x) == raw_contains(r, x));
    std::shuffle(r.components.begin(), r.components.end(), rng);
    std::reverse(r.plus.begin(), r.plus.end());
    CHECK(build(r) == s);
    CHECK(IntervalSet::make(s.components(), s.plus_points(), s.minus_points(), s.harmonic()) == s);
  }
}

TEST_CASE("set algebra is pointwise") {
  std::mt19937 rng(11);
  const auto pts = probes();
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet a = build(random_raw(rng));
    const IntervalSet b = build(random_raw(rng));
    const IntervalSet u = a | b, i = a & b, d = a - b, c = a.complement();
    for (const auto& x : pts) {
      if (x < 0 || x > 1) continue;
      REQUIRE(u.contains(x) == (a.contains(x) || b.contains(x)));
      REQUIRE(i.contains(x) == (a.contains(x) && b.contains(x)));
      REQUIRE(d.contains(x) == (a.contains(x) && !b.contains(x)));
      REQUIRE(c.contains(x) == !a.contains(x));
    }
    CHECK(c.complement() == a);
    CHECK(i.is_subset_of(a));
    CHECK(a.is_subset_of(u));
    CHECK((d & b).empty());
  }
}

TEST_CASE("Euclidean closure and interior") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalSet a = build(random_raw(rng));
    const IntervalSet cl = a.euclidean_closure();
    const IntervalSet in = a.euclidean_interior();
    CHECK(a.is_subset_of(cl));
    CHECK(in.is_subset_of(a));
    CHECK(cl.euclidean_closure() == cl);
    CHECK(in.euclidean_interior() == in);
    // Duality: Int A = complement of cl(complement A).
    CHECK(in == a.complement().euclidean_closure().complement());
  }
  const Rational h(1, 2);
  CHECK(IntervalSet::harmonic_tail(1).euclidean_closure() == (IntervalSet::harmonic_tail(1) | IntervalSet::points({0})));
  CHECK(IntervalSet::interval(0, h, false, false).euclidean_closure() == IntervalSet::interval(0, h, true, true));
  CHECK(IntervalSet::interval(0, h, true, true).euclidean_interior() == IntervalSet::interval(0, h, true, false));
  CHECK((IntervalSet::unit() - IntervalSet::harmonic_tail(2)).euclidean_interior() ==
        IntervalSet::interval(0, 1, false, true) - IntervalSet::harmonic_tail(2));
}

TEST_CASE("inf and sup") {
  const Rational h(1, 2);
  CHECK_FALSE(IntervalSet::empty_set().inf());
  CHECK(*IntervalSet::harmonic_tail(1).inf() == 0);
  CHECK(*IntervalSet::harmonic_tail(3).sup() == Rational(1, 3));
  CHECK(*IntervalSet::interval(0, 1, false, true).inf() == 0);
  CHECK(*(IntervalSet::interval(0, h, false, false) | IntervalSet::points({Rational(3, 4)})).sup() == Rational(3, 4));
}
