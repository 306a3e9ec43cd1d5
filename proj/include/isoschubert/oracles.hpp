#pragma once

// Reference implementations used only for cross-checking. None of them call
// into the Pieri or raising-operator code; they work from classical
// formulations of the k = 0 and type A degenerations.

#include "isoschubert/combination.hpp"
#include "isoschubert/giambelli.hpp"
#include "isoschubert/partition.hpp"

namespace isoschubert::oracle {

/// q_r · Q_λ for Schur Q-functions: strict μ with μ/λ a horizontal strip,
/// coefficient 2^{a(μ/λ) − [ℓ(μ) > ℓ(λ)]} where a counts columns i (of the
/// ordinary diagram) holding a box of μ/λ with column i+1 empty.
ClassicalCombination schur_q_pieri(int r, const Partition& lambda);

/// Q_λ as a polynomial in q_1, q_2, ... via Schur's Pfaffian of two-row
/// functions Q_{(a,b)} = q_a q_b + 2 Σ_{m=1}^{b} (−1)^m q_{a+m} q_{b−m}.
GiambelliPolynomial schur_q_pfaffian(const Partition& lambda);

/// det(h_{λ_i − i + j}) expanded over permutations.
GiambelliPolynomial jacobi_trudi(const Partition& lambda);

}  // namespace isoschubert::oracle
