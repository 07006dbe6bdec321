#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsl/topo_semilattice.hpp"

namespace tsl {

using TopSemilatticePtr = std::shared_ptr<const TopSemilattice>;

/// A multi-valued map dom ⊸ cod. Values may be empty here; the theorem
/// checkers reject empty values.
class MultiMap {
 public:
  /// Throws std::invalid_argument on size mismatch or values outside cod.
  MultiMap(TopSemilatticePtr dom, TopSemilatticePtr cod, std::vector<Subset> values);

  const TopSemilattice& dom() const { return *dom_; }
  const TopSemilattice& cod() const { return *cod_; }
  const TopSemilatticePtr& dom_ptr() const { return dom_; }
  const TopSemilatticePtr& cod_ptr() const { return cod_; }
  Subset value(Element x) const { return values_[x]; }
  const std::vector<Subset>& values() const { return values_; }

 private:
  TopSemilatticePtr dom_;
  TopSemilatticePtr cod_;
  std::vector<Subset> values_;
};

/// A single-valued map dom → cod.
class PointMap {
 public:
  PointMap(TopSemilatticePtr dom, TopSemilatticePtr cod, std::vector<Element> image);

  const TopSemilattice& dom() const { return *dom_; }
  const TopSemilattice& cod() const { return *cod_; }
  const TopSemilatticePtr& dom_ptr() const { return dom_; }
  const TopSemilatticePtr& cod_ptr() const { return cod_; }
  Element operator()(Element x) const { return image_[x]; }
  const std::vector<Element>& image() const { return image_; }

 private:
  TopSemilatticePtr dom_;
  TopSemilatticePtr cod_;
  std::vector<Element> image_;
};

Subset mm_image(const MultiMap& phi, Subset a);
/// {x : Φ(x) ∩ b ≠ ∅}.
Subset mm_preimage(const MultiMap& phi, Subset b);

/// Φ(x)Φ(y) ⊆ Φ(xy) for all x, y.
bool is_multimorphism(const MultiMap& phi);
/// Preimage of every closed subset of cod is closed in dom.
bool is_upper_semicontinuous(const MultiMap& phi);

/// i = 1: every point outside f has an open neighbourhood missing f.
/// i = 2: every point outside f has an open neighbourhood whose closure
/// misses f.
bool is_Ti_set(const FiniteSpace& space, Subset f, int i);
/// Multimorphism whose values are all Ti-closed in cod.
bool is_Ti_multimorphism(const MultiMap& phi, int i);

bool is_homomorphism(const PointMap& h);
bool is_continuous(const PointMap& h);
/// Images of closed sets are closed.
bool is_closed_map(const PointMap& h);
/// dom and cod hold the same structure, h∘h = h and h is continuous.
bool is_retraction(const PointMap& h);

/// What fibers_of does with points of cod that h misses.
enum class FiberPolicy {
  strict,             ///< throw std::invalid_argument
  allow_empty,        ///< keep them with empty fibers
  restrict_to_image,  ///< restrict cod to the image of h (must be meet-closed)
};

/// Φ : cod ⊸ dom with Φ(e) = h⁻¹(e).
MultiMap fibers_of(const PointMap& h, FiberPolicy policy = FiberPolicy::strict);

/// Four-way outcome of evaluating a theorem on one instance. The
/// hypotheses and the conclusion are computed independently.
enum class Outcome { hyp_concl, hyp_not_concl, not_hyp_concl, not_hyp_not_concl };
std::string to_string(Outcome outcome);

struct TheoremVerdict {
  /// Each named hypothesis with its truth value, in a fixed order.
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool conclusion = false;
  /// Extra fact taken from a proof, evaluated only when the hypotheses hold.
  std::optional<bool> derived_fact;

  bool hypotheses_hold() const;
  Outcome outcome() const;
  /// Names of failed hypotheses, comma separated.
  std::string failed_hypotheses() const;
};

/// Hypotheses: dom complete; cod ↑↓-closed; Φ upper semicontinuous; Φ a
/// multimorphism; every Φ(x) T1-closed; x ≤ y ⇒ Φ(x) ∩ ↑Φ(y) ⊆ Φ(y).
/// Conclusion: Φ(X) complete ⇔ every Φ(x) complete, each as a subset of
/// cod with the subspace topology. Throws if some Φ(x) is empty.
TheoremVerdict check_transfer_theorem(const MultiMap& phi);

/// As check_transfer_theorem with Φ(x) ∩ Φ(y) = ∅ for x ≠ y in place of the
/// order condition. derived_fact: x < y ⇒ Φ(x) ∩ ↑Φ(y) = ∅.
TheoremVerdict check_disjoint_corollary(const MultiMap& phi);

enum class EmbeddingVariant {
  theta_fibers,    ///< y topological; fibers theta-closed in y
  regular_closed,  ///< y regular semitopological; fibers closed in y
};

/// x_sub is a subsemilattice of y; h maps x_sub (listed ascending, with the
/// induced structure) to e. Hypotheses: the variant's condition on y; h a
/// homomorphism; h a closed map; e complete; every fiber h⁻¹(point) closed
/// in the variant's sense. Conclusion: x_sub closed in y. Throws
/// std::invalid_argument if x_sub is not a non-empty subsemilattice or h
/// has the wrong length.
TheoremVerdict check_closed_embedding_theorem(const TopSemilattice& y, Subset x_sub, const TopSemilattice& e,
                                              std::span<const Element> h,
                                              EmbeddingVariant variant = EmbeddingVariant::theta_fibers);

}  // namespace tsl
