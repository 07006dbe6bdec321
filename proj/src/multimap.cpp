#include "tsl/multimap.hpp"

#include <stdexcept>

namespace tsl {

MultiMap::MultiMap(TopSemilatticePtr dom, TopSemilatticePtr cod, std::vector<Subset> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
  if (!dom_ || !cod_) throw std::invalid_argument("multimap needs a domain and a codomain");
  if (static_cast<int>(values_.size()) != dom_->size())
    throw std::invalid_argument("multimap has " + std::to_string(values_.size()) + " values for " +
                                std::to_string(dom_->size()) + " points");
  for (Subset v : values_)
    if (!v.is_subset_of(cod_->space().carrier()))
      throw std::invalid_argument("multimap value outside the codomain: " + v.to_string());
}

PointMap::PointMap(TopSemilatticePtr dom, TopSemilatticePtr cod, std::vector<Element> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (!dom_ || !cod_) throw std::invalid_argument("point map needs a domain and a codomain");
  if (static_cast<int>(image_.size()) != dom_->size())
    throw std::invalid_argument("point map has " + std::to_string(image_.size()) + " values for " +
                                std::to_string(dom_->size()) + " points");
  for (Element e : image_)
    if (e < 0 || e >= cod_->size()) throw std::invalid_argument("point map value outside the codomain");
}

Subset mm_image(const MultiMap& phi, Subset a) {
  Subset out;
  a.for_each([&](Element x) { out |= phi.value(x); });
  return out;
}

Subset mm_preimage(const MultiMap& phi, Subset b) {
  Subset out;
  for (Element x = 0; x < phi.dom().size(); ++x)
    if (phi.value(x).intersects(b)) out.insert(x);
  return out;
}

namespace {

Subset product(const MeetTable& m, Subset a, Subset b) {
  Subset out;
  a.for_each([&](Element u) { b.for_each([&](Element v) { out.insert(m.meet(u, v)); }); });
  return out;
}

void require_nonempty_values(const MultiMap& phi) {
  for (Element x = 0; x < phi.dom().size(); ++x)
    if (phi.value(x).empty())
      throw std::invalid_argument("theorem checkers need non-empty values; value at " + std::to_string(x) +
                                  " is empty");
}

// Φ(X) complete ⇔ every Φ(x) complete.
bool completeness_transfers(const MultiMap& phi) {
  const TopSemilattice& cod = phi.cod();
  bool each = true;
  for (Element x = 0; x < phi.dom().size(); ++x)
    if (!is_complete_subset(cod, phi.value(x))) each = false;
  const bool whole = is_complete_subset(cod, mm_image(phi, phi.dom().space().carrier()));
  return whole == each;
}

}  // namespace

bool is_multimorphism(const MultiMap& phi) {
  const int n = phi.dom().size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!product(phi.cod().meet(), phi.value(x), phi.value(y))
               .is_subset_of(phi.value(phi.dom().meet().meet(x, y))))
        return false;
  return true;
}

bool is_upper_semicontinuous(const MultiMap& phi) {
  for (Subset f : phi.cod().space().closed_sets())
    if (!phi.dom().space().is_closed(mm_preimage(phi, f))) return false;
  return true;
}

bool is_Ti_set(const FiniteSpace& space, Subset f, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("separation index must be 1 or 2");
  for (Element x = 0; x < space.size(); ++x) {
    if (f.contains(x)) continue;
    bool found = false;
    for (Subset u : space.opens()) {
      if (!u.contains(x)) continue;
      const Subset nbhd = i == 1 ? u : closure_of(space, u, ClosureMode::plain);
      if (!nbhd.intersects(f)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_Ti_multimorphism(const MultiMap& phi, int i) {
  if (!is_multimorphism(phi)) return false;
  for (Subset v : phi.values())
    if (!is_Ti_set(phi.cod().space(), v, i)) return false;
  return true;
}

bool is_homomorphism(const PointMap& h) {
  const int n = h.dom().size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (h(h.dom().meet().meet(x, y)) != h.cod().meet().meet(h(x), h(y))) return false;
  return true;
}

bool is_continuous(const PointMap& h) {
  return is_continuous(h.dom().space(), h.cod().space(), h.image());
}

bool is_closed_map(const PointMap& h) {
  for (Subset f : h.dom().space().closed_sets())
    if (!h.cod().space().is_closed(image_of(h.image(), f))) return false;
  return true;
}

bool is_retraction(const PointMap& h) {
  if (!(h.dom().space() == h.cod().space()) || !(h.dom().meet() == h.cod().meet())) return false;
  for (Element x = 0; x < h.dom().size(); ++x)
    if (h(h(x)) != h(x)) return false;
  return is_continuous(h);
}

MultiMap fibers_of(const PointMap& h, FiberPolicy policy) {
  const int m = h.cod().size();
  std::vector<Subset> fibers(m);
  for (Element x = 0; x < h.dom().size(); ++x) fibers[h(x)].insert(x);
  const Subset image = image_of(h.image(), h.dom().space().carrier());
  if (image == h.cod().space().carrier() || policy == FiberPolicy::allow_empty)
    return MultiMap(h.cod_ptr(), h.dom_ptr(), std::move(fibers));
  if (policy == FiberPolicy::strict)
    throw std::invalid_argument("map is not surjective; empty fibers over " +
                                (h.cod().space().carrier() - image).to_string());
  auto restricted = std::make_shared<const TopSemilattice>(induced_substructure(h.cod(), image));
  std::vector<Subset> kept;
  image.for_each([&](Element e) { kept.push_back(fibers[e]); });
  return MultiMap(std::move(restricted), h.dom_ptr(), std::move(kept));
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::hyp_concl: return "hypotheses hold, conclusion holds";
    case Outcome::hyp_not_concl: return "hypotheses hold, conclusion fails";
    case Outcome::not_hyp_concl: return "hypotheses fail, conclusion holds";
    case Outcome::not_hyp_not_concl: return "hypotheses fail, conclusion fails";
  }
  return "unknown";
}

bool TheoremVerdict::hypotheses_hold() const {
  for (const auto& [name, ok] : hypotheses)
    if (!ok) return false;
  return true;
}

Outcome TheoremVerdict::outcome() const {
  if (hypotheses_hold()) return conclusion ? Outcome::hyp_concl : Outcome::hyp_not_concl;
  return conclusion ? Outcome::not_hyp_concl : Outcome::not_hyp_not_concl;
}

std::string TheoremVerdict::failed_hypotheses() const {
  std::string out;
  for (const auto& [name, ok] : hypotheses)
    if (!ok) out += (out.empty() ? "" : ",") + name;
  return out;
}

namespace {

std::vector<std::pair<std::string, bool>> shared_transfer_hypotheses(const MultiMap& phi) {
  bool t1 = true;
  for (Subset v : phi.values())
    if (!is_Ti_set(phi.cod().space(), v, 1)) t1 = false;
  return {
      {"domain complete", is_complete(phi.dom(), ClosureMode::plain)},
      {"codomain updown-closed", is_updown_closed(phi.cod(), ClosureMode::plain)},
      {"upper semicontinuous", is_upper_semicontinuous(phi)},
      {"multimorphism", is_multimorphism(phi)},
      {"T1 values", t1},
  };
}

}  // namespace

TheoremVerdict check_transfer_theorem(const MultiMap& phi) {
  require_nonempty_values(phi);
  TheoremVerdict v;
  v.hypotheses = shared_transfer_hypotheses(phi);
  bool order_condition = true;
  const OrderRelation& o = phi.dom().order();
  for (Element x = 0; x < phi.dom().size(); ++x)
    for (Element y = 0; y < phi.dom().size(); ++y)
      if (o.leq(x, y) && !(phi.value(x) & phi.cod().order().up_closure(phi.value(y))).is_subset_of(phi.value(y)))
        order_condition = false;
  v.hypotheses.emplace_back("order condition", order_condition);
  v.conclusion = completeness_transfers(phi);
  return v;
}

TheoremVerdict check_disjoint_corollary(const MultiMap& phi) {
  require_nonempty_values(phi);
  TheoremVerdict v;
  v.hypotheses = shared_transfer_hypotheses(phi);
  const int n = phi.dom().size();
  bool disjoint = true;
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (phi.value(x).intersects(phi.value(y))) disjoint = false;
  v.hypotheses.emplace_back("disjoint values", disjoint);
  v.conclusion = completeness_transfers(phi);
  if (v.hypotheses_hold()) {
    bool fact = true;
    const OrderRelation& o = phi.dom().order();
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (x != y && o.leq(x, y) && phi.value(x).intersects(phi.cod().order().up_closure(phi.value(y))))
          fact = false;
    v.derived_fact = fact;
  }
  return v;
}

TheoremVerdict check_closed_embedding_theorem(const TopSemilattice& y, Subset x_sub, const TopSemilattice& e,
                                              std::span<const Element> h, EmbeddingVariant variant) {
  auto x = std::make_shared<const TopSemilattice>(induced_substructure(y, x_sub));
  if (static_cast<int>(h.size()) != x->size())
    throw std::invalid_argument("homomorphism has " + std::to_string(h.size()) + " values for " +
                                std::to_string(x->size()) + " points");
  const PointMap map(x, std::make_shared<const TopSemilattice>(e), std::vector<Element>(h.begin(), h.end()));
  const std::vector<Element> members = x_sub.elements();

  TheoremVerdict v;
  if (variant == EmbeddingVariant::theta_fibers) {
    v.hypotheses.emplace_back("ambient topological", is_topological(y));
  } else {
    v.hypotheses.emplace_back("ambient semitopological", is_semitopological(y));
    v.hypotheses.emplace_back("ambient regular", separation(y.space(), Separation::regular));
  }
  v.hypotheses.emplace_back("homomorphism", is_homomorphism(map));
  v.hypotheses.emplace_back("closed map", is_closed_map(map));
  v.hypotheses.emplace_back("target complete", is_complete(e, ClosureMode::plain));
  bool fibers_ok = true;
  for (Element point = 0; point < e.size(); ++point) {
    Subset fiber;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (h[i] == point) fiber.insert(members[i]);
    const bool closed = variant == EmbeddingVariant::theta_fibers
                            ? is_mode_closed(y.space(), fiber, ClosureMode::theta)
                            : y.space().is_closed(fiber);
    if (!closed) fibers_ok = false;
  }
  v.hypotheses.emplace_back(variant == EmbeddingVariant::theta_fibers ? "fibers theta-closed" : "fibers closed",
                            fibers_ok);
  v.conclusion = y.space().is_closed(x_sub);
  return v;
}

}  // namespace tsl
