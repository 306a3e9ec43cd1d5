#pragma once

#include <optional>
#include <vector>

#include "isoschubert/combination.hpp"
#include "isoschubert/partition.hpp"

namespace isoschubert {

/// One target μ of the relation λ → μ together with the box data the
/// multiplicity exponents are read from.
struct ArrowWitness {
  Partition target;
  std::vector<Box> removed_boxes;  ///< λ ∖ μ, inside the first k columns
  std::vector<Box> added_boxes;    ///< μ ∖ λ
  std::vector<Box> set_a;          ///< added boxes in columns > k not tied by conditions (1)/(2)
  int components = 0;              ///< connected components of set_a (8-neighbourhood)
  int components_avoiding_col_kp1 = 0;  ///< those with no box in column k+1

  /// N(λ,μ), the IG exponent.
  int n_ig() const { return components_avoiding_col_kp1; }
  /// N'(λ,μ), the OG exponent for a product with σ_p.
  int n_og(int p, int k) const { return components - (p > k ? 1 : 0); }
};

/// All k-strict μ with λ → μ and |μ| = |λ| + p, subject to ℓ(μ) <= row_bound
/// and μ_1 <= col_bound when given. Throws ValidationError if λ is not
/// k-strict or p < 1.
std::vector<ArrowWitness> arrow_targets(const Partition& lambda, int p, int k,
                                        std::optional<int> row_bound = std::nullopt,
                                        std::optional<int> col_bound = std::nullopt);

/// σ_p·σ_λ in H*(IG) (coefficients 2^N) or τ_p·τ_λ in H*(OG) (2^N').
ClassicalCombination classical_pieri(const SpaceContext& ctx, int p,
                                     const Partition& lambda);

/// The same product in the stable ring, no rectangle bound.
ClassicalCombination stable_pieri(int k, int p, const Partition& lambda,
                                  Family family = Family::IG);

/// Quantum Pieri rules. The q^0 part agrees with classical_pieri.
QuantumCombination quantum_pieri_ig(const SpaceContext& ctx, int p,
                                    const Partition& lambda);
QuantumCombination quantum_pieri_og(const SpaceContext& ctx, int p,
                                    const Partition& lambda);
QuantumCombination quantum_pieri(const SpaceContext& ctx, int p,
                                 const Partition& lambda);

}  // namespace isoschubert
