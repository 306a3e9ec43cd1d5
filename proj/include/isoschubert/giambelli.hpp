#pragma once

#include <vector>

#include "isoschubert/combination.hpp"
#include "isoschubert/partition.hpp"

namespace isoschubert {

/// Monomial q^q * prod gen_d over the multiset `degrees` (descending, no zeros).
struct GeneratorMonomial {
  std::vector<int> degrees;
  int q = 0;

  /// Sorts descending and drops zeros. Throws InternalError on negatives.
  static GeneratorMonomial normalized(std::vector<int> degrees, int q = 0);

  int degree_sum() const;
  int max_degree() const { return degrees.empty() ? 0 : degrees.front(); }

  friend bool operator==(const GeneratorMonomial&, const GeneratorMonomial&) = default;
  friend auto operator<=>(const GeneratorMonomial& a, const GeneratorMonomial& b) {
    if (auto c = a.q <=> b.q; c != 0) return c;
    // lexicographically smallest first, so the leading monomial m_λ prints first
    return a.degrees <=> b.degrees;
  }
};

/// Which special classes the generators denote: σ_p (IG), the OG Chern
/// classes c_p, or the OG special Schubert classes τ_p.
enum class GeneratorFamily { sigma, c, tau };

std::string to_string(GeneratorFamily f);
GeneratorFamily generator_family_from_string(const std::string& s);

struct GiambelliPolynomial {
  GeneratorFamily family = GeneratorFamily::sigma;
  LinearCombination<GeneratorMonomial, Dyadic> terms;

  int max_degree() const;
  bool has_q() const;
  friend bool operator==(const GiambelliPolynomial&, const GiambelliPolynomial&) = default;
};

/// Full expansion of R^λ m_λ as a polynomial in σ_1, σ_2, ... (no truncation).
/// Throws ValidationError unless λ is k-strict.
GiambelliPolynomial raising_expand(const Partition& lambda, int k);

struct OgGiambelli {
  GiambelliPolynomial c_form;    ///< 2^{-ℓ_k(λ)} R^λ m_λ in the c_p
  GiambelliPolynomial tau_form;  ///< after c_p = δ_p τ_p
};

/// δ_p: 1 for p <= k, 2 otherwise.
inline int delta(int p, int k) { return p <= k ? 1 : 2; }

OgGiambelli giambelli_og(const Partition& lambda, int k);

/// Converts a c-form polynomial to the τ generators.
GiambelliPolynomial c_to_tau(const GiambelliPolynomial& c_form, int k);

/// Drops monomials with a generator above n+k+1 and turns every σ_{n+k+1}
/// into q/2.
GiambelliPolynomial quantum_giambelli_ig(const Partition& lambda,
                                         const SpaceContext& ctx);

/// τ-form with monomials involving a generator above n+k deleted.
GiambelliPolynomial quantum_giambelli_og(const Partition& lambda,
                                         const SpaceContext& ctx);

/// Family dispatch: σ raising expansion for IG, τ-form for OG.
/// Deletes every monomial containing a generator of degree > `degree`.
GiambelliPolynomial drop_generators_above(const GiambelliPolynomial& poly, int degree);

GiambelliPolynomial classical_giambelli(const Partition& lambda, Family family, int k);
GiambelliPolynomial quantum_giambelli(const Partition& lambda, const SpaceContext& ctx);

/// e.g. "s4*s3 - q*s2", "1/2^1*c2*c1 - 1/2^1*c3".
std::string format(const GiambelliPolynomial& poly);

}  // namespace isoschubert
