#include "isoschubert/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace isoschubert::oracle {

namespace {

using Poly = std::map<std::vector<int>, Integer>;

std::vector<int> sorted_monomial(std::vector<int> gens) {
  std::erase(gens, 0);
  std::sort(gens.begin(), gens.end(), std::greater<>());
  return gens;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[sorted_monomial(std::move(m))] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GiambelliPolynomial to_polynomial(const Poly& p) {
  GiambelliPolynomial g;
  for (const auto& [m, c] : p) g.terms.add(GeneratorMonomial{m, 0}, Dyadic(c));
  return g;
}

// Q_{(a,b)} for a > b >= 0 (or the degenerate a >= 0, b = 0).
Poly two_row(int a, int b) {
  Poly p;
  p[sorted_monomial({a, b})] += 1;
  for (int m = 1; m <= b; ++m)
    p[sorted_monomial({a + m, b - m})] += (m % 2 ? -2 : 2);
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

Poly pfaffian(const std::vector<int>& parts, std::vector<int> idx) {
  if (idx.empty()) return Poly{{{}, Integer(1)}};
  Poly out;
  const int first = idx.front();
  for (std::size_t t = 1; t < idx.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t s = 1; s < idx.size(); ++s)
      if (s != t) rest.push_back(idx[s]);
    Poly term = multiply(two_row(parts[static_cast<std::size_t>(first)],
                                 parts[static_cast<std::size_t>(idx[t])]),
                         pfaffian(parts, rest));
    const int sign = (t % 2 == 1) ? 1 : -1;
    for (const auto& [m, c] : term) out[m] += sign * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void interlace(const Partition& lambda, int row, int budget, std::vector<int>& mu,
               ClassicalCombination& out) {
  const int len = lambda.length();
  if (row == len + 2) {
    if (budget != 0) return;
    Partition m(mu);
    for (int i = 1; i < m.length(); ++i)
      if (m[i] == m[i - 1]) return;
    // columns holding a new box: row i covers λ_i + 1 .. μ_i
    std::set<int> cols;
    for (int i = 1; i <= len + 1; ++i)
      for (int c = lambda[i - 1] + 1; c <= m[i - 1]; ++c) cols.insert(c);
    int a = 0;
    for (int c : cols)
      if (!cols.count(c + 1)) ++a;
    const int e = a - (m.length() > len ? 1 : 0);
    Integer coeff;
    mpz_ui_pow_ui(coeff.get_mpz_t(), 2, static_cast<unsigned long>(e));
    out.add(m, coeff);
    return;
  }
  const int lo = lambda[row - 1];
  const int hi = row == 1 ? lambda[0] + budget : lambda[row - 2];
  for (int v = lo; v <= hi && v - lo <= budget; ++v) {
    mu.push_back(v);
    interlace(lambda, row + 1, budget - (v - lo), mu, out);
    mu.pop_back();
  }
}

}  // namespace

ClassicalCombination schur_q_pieri(int r, const Partition& lambda) {
  ClassicalCombination out;
  std::vector<int> mu;
  interlace(lambda, 1, r, mu, out);
  return out;
}

GiambelliPolynomial schur_q_pfaffian(const Partition& lambda) {
  std::vector<int> parts = lambda.vec();
  if (parts.size() % 2) parts.push_back(0);
  std::vector<int> idx(parts.size());
  std::iota(idx.begin(), idx.end(), 0);
  return to_polynomial(pfaffian(parts, idx));
}

GiambelliPolynomial jacobi_trudi(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<int> perm(static_cast<std::size_t>(len));
  std::iota(perm.begin(), perm.end(), 0);
  Poly out;
  do {
    std::vector<int> gens;
    bool vanishes = false;
    for (int i = 0; i < len && !vanishes; ++i) {
      const int d = lambda[i] - i + perm[static_cast<std::size_t>(i)];
      if (d < 0) vanishes = true;
      gens.push_back(d);
    }
    if (vanishes) continue;
    int inversions = 0;
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
          ++inversions;
    out[sorted_monomial(std::move(gens))] += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return to_polynomial(out);
}

}  // namespace isoschubert::oracle
