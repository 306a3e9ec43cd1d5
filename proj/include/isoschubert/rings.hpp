#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "isoschubert/combination.hpp"
#include "isoschubert/giambelli.hpp"
#include "isoschubert/partition.hpp"

namespace isoschubert {

/// The stable ring IH(IG_k) or IH(OG_k). Products are exact as long as every
/// class touched has weight <= truncation_weight; exceeding it is an error.
struct StableRingHandle {
  Family family = Family::IG;
  int k = 0;
  int truncation_weight = 0;
};

/// H*(IG), H*(OG) or a stable ring, with memoized Pieri products. Copies
/// share the cache; concurrent use is safe.
class ClassicalRing {
 public:
  explicit ClassicalRing(const SpaceContext& ctx);
  explicit ClassicalRing(const StableRingHandle& handle);

  Family family() const;
  int k() const;

  const ClassicalCombination& pieri(int p, const Partition& lambda) const;
  ClassicalCombination multiply_special(int p, const ClassicalCombination& x) const;

  /// Substitutes generators by special classes, multiplying generators of
  /// each monomial onto `start` in descending degree. Accepts σ generators
  /// for IG, τ or c generators for OG. The result must be integral.
  ClassicalCombination evaluate(const GiambelliPolynomial& poly) const;
  ClassicalCombination evaluate(const GiambelliPolynomial& poly,
                                const ClassicalCombination& start) const;

 private:
  struct Cache;
  std::optional<SpaceContext> ctx_;
  StableRingHandle handle_;
  std::shared_ptr<Cache> cache_;
};

/// QH*(IG) or QH*(OG) with memoized quantum Pieri products, quantum
/// products of Schubert classes, and π / π̃ images.
class QuantumRing {
 public:
  explicit QuantumRing(const SpaceContext& ctx);

  const SpaceContext& context() const { return ctx_; }

  const QuantumCombination& pieri(int p, const Partition& lambda) const;
  QuantumCombination multiply_special(int p, const QuantumCombination& x) const;

  /// Dyadic coefficients are kept; callers decide when integrality is due.
  QuantumCombination evaluate(const GiambelliPolynomial& poly) const;
  QuantumCombination evaluate(const GiambelliPolynomial& poly,
                              const QuantumCombination& start) const;

  /// σ_λ * σ_μ via the quantum Giambelli polynomial of μ.
  const QuantumCombination& multiply(const Partition& lambda, const Partition& mu) const;
  QuantumCombination multiply(const QuantumCombination& a,
                              const QuantumCombination& b) const;

  /// π(σ_i) for IG, π̃(τ_i) for OG.
  const QuantumCombination& special_image(int i) const;

  /// Evaluates the quantum Giambelli polynomial of λ and checks that it is
  /// exactly the class of λ. Throws InternalError with the discrepancy.
  QuantumCombination schubert(const Partition& lambda) const;

 private:
  QuantumCombination forced_image(int i) const;

  struct Cache;
  SpaceContext ctx_;
  std::shared_ptr<Cache> cache_;
};

inline QuantumCombination unit_class() { return QuantumCombination({Partition{}, 0}, 1); }
inline QuantumCombination schubert_class(const Partition& lambda) {
  return QuantumCombination({lambda, 0}, 1);
}

ClassicalCombination evaluate_classical(const SpaceContext& ctx,
                                        const GiambelliPolynomial& poly);
ClassicalCombination evaluate_classical(const StableRingHandle& handle,
                                        const GiambelliPolynomial& poly);
/// Asserts integrality of the result.
QuantumCombination evaluate_quantum(const SpaceContext& ctx,
                                    const GiambelliPolynomial& poly);
QuantumCombination schubert_quantum(const Partition& lambda, const SpaceContext& ctx);
QuantumCombination qh_multiply(const SpaceContext& ctx, const Partition& lambda,
                               const Partition& mu);
QuantumCombination pi_image(const SpaceContext& ctx, int i);
QuantumCombination pi_tilde_image(const SpaceContext& ctx, int i);

/// Coefficients a_{p,μ} with σ_λ = Σ a_{p,μ} σ_p σ_μ in the stable ring.
struct RecursionExpansion {
  std::map<std::pair<int, Partition>, Integer> coefficients;
};

/// First-part elimination: σ_λ = σ_{λ_1}σ_{λ*} − (other Pieri terms), each
/// other term expanded the same way in order of increasing first part.
/// Throws DomainError when a first part exceeds degree_cap.
RecursionExpansion recursion_expand(const StableRingHandle& handle,
                                    const Partition& lambda, int degree_cap);

/// Σ a_{p,μ} σ_p σ_μ evaluated by stable Pieri.
ClassicalCombination recursion_sum(const StableRingHandle& handle,
                                   const RecursionExpansion& expansion);

/// σ_r² + 2 Σ_{i=1}^r (−1)^i δ_{r−i} σ_{r+i} σ_{r−i} in the stable ring
/// (δ ≡ 1 for IG).
ClassicalCombination stable_relation_value(const StableRingHandle& handle, int r);
bool stable_relation_check(const StableRingHandle& handle, int r);

}  // namespace isoschubert
