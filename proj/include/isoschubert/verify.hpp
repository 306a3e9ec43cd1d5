#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isoschubert/serialize.hpp"

namespace isoschubert::verify {

/// Outcome of one verification suite. `reports` holds per-partition JSON
/// lines where the suite produces them.
struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<json> reports;

  void fail(std::string what);
  void merge(CheckResult other);
};

/// Grid points as (k, n).
using Grid = std::vector<std::pair<int, int>>;

Grid default_grid();
/// "0:2,0:3,1:2" -> {(0,2),(0,3),(1,2)}. Throws ValidationError.
Grid parse_grid(const std::string& text);

// Per grid point (k, n).
CheckResult classical_giambelli(int k, int n);     // IG: R^λ m_λ = σ_λ
CheckResult quantum_giambelli_ig(int k, int n);    // σ_{n+k+1} -> q/2
CheckResult giambelli_og(int k, int n);            // classical and quantum OG
CheckResult pi_consistency(int k, int n);          // π applied to the stable polynomial
CheckResult ig_og_correspondence(int k, int n);
CheckResult recursion_closed_form(int k, int n);
CheckResult ring_axioms(int k, int n, int triples, unsigned seed);
CheckResult degenerations(int k, int n);

// Global suites.
CheckResult stable_relations(int max_k, int max_r);
CheckResult index_vectors(int max_weight, int max_k);
CheckResult pieri_stability(int instances, unsigned seed);
CheckResult small_quantum_rings();

/// Runs a per-grid-point suite over every point and merges the results.
template <class F>
CheckResult over_grid(const std::string& name, const Grid& grid, F&& suite) {
  CheckResult total;
  total.name = name;
  for (const auto& [k, n] : grid) total.merge(suite(k, n));
  return total;
}

}  // namespace isoschubert::verify
