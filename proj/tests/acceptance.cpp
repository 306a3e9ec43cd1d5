// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "isoschubert/verify.hpp"

using namespace isoschubert;
using verify::CheckResult;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<CheckResult()> run;
};

}  // namespace

int main() {
  const verify::Grid grid = verify::default_grid();
  const std::vector<Criterion> criteria = {
      {1, "classical Giambelli (IG)", 60,
       [&] { return verify::over_grid("classical_giambelli", grid, verify::classical_giambelli); }},
      {2, "quantum Giambelli (IG)", 120,
       [&] {
         CheckResult r = verify::over_grid("quantum_giambelli", grid, verify::quantum_giambelli_ig);
         r.merge(verify::over_grid("pi_consistency", grid, verify::pi_consistency));
         return r;
       }},
      {3, "classical and quantum Giambelli (OG)", 120,
       [&] { return verify::over_grid("giambelli_og", grid, verify::giambelli_og); }},
      {4, "stable relations", 30, [] { return verify::stable_relations(3, 8); }},
      {5, "index vectors and degree bounds", 60, [] { return verify::index_vectors(12, 3); }},
      {6, "Pieri stability", 10, [] { return verify::pieri_stability(200, 7); }},
      {7, "IG/OG exponent correspondence", 30,
       [&] { return verify::over_grid("ig_og_correspondence", grid, verify::ig_og_correspondence); }},
      {8, "small quantum rings", 5, [] { return verify::small_quantum_rings(); }},
      {9, "recursion closed form", 30,
       [&] { return verify::over_grid("recursion_closed_form", grid, verify::recursion_closed_form); }},
      {10, "ring axioms", 120,
       [&] {
         return verify::over_grid("ring_axioms", grid,
                                  [](int k, int n) { return verify::ring_axioms(k, n, 100, 7); });
       }},
      {11, "degeneration oracles", 60,
       [&] { return verify::over_grid("degenerations", grid, verify::degenerations); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = r.ok && in_time && r.cases > 0;
    if (!ok) ++failed;
    std::printf("%s [%d] %s: %zu cases, %.2fs (limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), r.cases, secs, c.limit_seconds);
    std::size_t shown = 0;
    for (const auto& f : r.failures) {
      if (++shown > 20) {
        std::printf("    ... %zu more\n", r.failures.size() - 20);
        break;
      }
      std::printf("    %s\n", f.c_str());
    }
    if (!in_time) std::printf("    exceeded time limit\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
