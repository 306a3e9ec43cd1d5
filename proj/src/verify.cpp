#include "isoschubert/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "isoschubert/giambelli.hpp"
#include "isoschubert/oracles.hpp"
#include "isoschubert/pieri.hpp"
#include "isoschubert/rings.hpp"

namespace isoschubert::verify {

void CheckResult::fail(std::string what) {
  ok = false;
  failures.push_back(std::move(what));
}

void CheckResult::merge(CheckResult other) {
  ok = ok && other.ok;
  cases += other.cases;
  for (auto& f : other.failures) failures.push_back(std::move(f));
  for (auto& r : other.reports) reports.push_back(std::move(r));
}

Grid default_grid() {
  return {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}};
}

Grid parse_grid(const std::string& text) {
  Grid grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("grid entry '" + item + "' is not k:n");
    try {
      const int k = std::stoi(item.substr(0, colon));
      const int n = std::stoi(item.substr(colon + 1));
      SpaceContext(Family::IG, n, k);
      grid.emplace_back(k, n);
    } catch (const std::logic_error& e) {
      throw ValidationError("bad grid entry '" + item + "': " + e.what());
    }
  }
  if (grid.empty()) throw ValidationError("empty grid");
  return grid;
}

namespace {

std::string where(const SpaceContext& ctx, const Partition& lambda) {
  return ctx.to_string() + " lambda=" + lambda.to_string();
}

// Runs `body` for one case, turning exceptions into failures.
template <class F>
void run_case(CheckResult& res, const std::string& label, F&& body) {
  ++res.cases;
  try {
    if (!body()) res.fail(label);
  } catch (const std::exception& e) {
    res.fail(label + ": " + e.what());
  }
}

// The polynomial evaluates to the single class λ both in the stable ring and
// in H*, where generators above n+k vanish.
bool holds_classically(const ClassicalRing& bounded, const SpaceContext& ctx,
                       const GiambelliPolynomial& poly, const Partition& lambda) {
  const ClassicalCombination expected(lambda, 1);
  const ClassicalRing stable(StableRingHandle{ctx.family(), ctx.k(), lambda.weight()});
  return stable.evaluate(poly) == expected &&
         bounded.evaluate(drop_generators_above(poly, ctx.max_special())) == expected;
}

}  // namespace

CheckResult classical_giambelli(int k, int n) {
  CheckResult res{"classical_giambelli"};
  const SpaceContext ctx(Family::IG, n, k);
  const ClassicalRing ring(ctx);
  for (const auto& lambda : enumerate_P(k, n)) {
    bool ok = false;
    run_case(res, where(ctx, lambda), [&] {
      ok = holds_classically(ring, ctx, raising_expand(lambda, k), lambda);
      return ok;
    });
    res.reports.push_back(verification_report("classical_giambelli", ctx, lambda, ok));
  }
  return res;
}

CheckResult quantum_giambelli_ig(int k, int n) {
  CheckResult res{"quantum_giambelli"};
  const SpaceContext ctx(Family::IG, n, k);
  const QuantumRing ring(ctx);
  for (const auto& lambda : enumerate_P(k, n)) {
    bool ok = false;
    run_case(res, where(ctx, lambda), [&] {
      ring.schubert(lambda);
      return ok = true;
    });
    res.reports.push_back(verification_report("quantum_giambelli", ctx, lambda, ok));
  }
  return res;
}

CheckResult giambelli_og(int k, int n) {
  CheckResult res{"giambelli_og"};
  const SpaceContext ctx(Family::OG, n, k);
  const ClassicalRing classical(ctx);
  const QuantumRing quantum(ctx);
  for (const auto& lambda : enumerate_P(k, n)) {
    bool ok_c = false;
    run_case(res, "classical " + where(ctx, lambda), [&] {
      const OgGiambelli g = isoschubert::giambelli_og(lambda, k);
      return ok_c = holds_classically(classical, ctx, g.c_form, lambda) &&
                    holds_classically(classical, ctx, g.tau_form, lambda);
    });
    res.reports.push_back(verification_report("classical_giambelli", ctx, lambda, ok_c));
    bool ok_q = false;
    run_case(res, "quantum " + where(ctx, lambda), [&] {
      quantum.schubert(lambda);
      return ok_q = true;
    });
    res.reports.push_back(verification_report("quantum_giambelli", ctx, lambda, ok_q));
  }
  return res;
}

CheckResult pi_consistency(int k, int n) {
  CheckResult res{"pi_consistency"};
  for (Family fam : {Family::IG, Family::OG}) {
    const SpaceContext ctx(fam, n, k);
    const QuantumRing ring(ctx);
    for (const auto& lambda : enumerate_P(k, n)) {
      run_case(res, where(ctx, lambda), [&] {
        const GiambelliPolynomial stable = classical_giambelli(lambda, fam, k);
        QuantumCombination total;
        for (const auto& [mono, coeff] : stable.terms) {
          QuantumCombination x = unit_class();
          for (int d : mono.degrees) {
            if (x.empty()) break;
            x = ring.multiply(x, ring.special_image(d));
          }
          total.add_scaled(x, coeff);
        }
        return total == schubert_class(lambda);
      });
    }
  }
  return res;
}

CheckResult ig_og_correspondence(int k, int n) {
  CheckResult res{"ig_og_correspondence"};
  const SpaceContext ctx(Family::IG, n, k);
  for (const auto& lambda : enumerate_P(k, n)) {
    for (int p = 1; p <= n + k; ++p) {
      for (const auto& w : arrow_targets(lambda, p, k, ctx.rows(), ctx.cols())) {
        const int lhs = w.n_ig() + w.target.count_greater(k);
        const int rhs = w.n_og(p, k) + lambda.count_greater(k) + (p > k ? 1 : 0);
        run_case(res,
                 where(ctx, lambda) + " p=" + std::to_string(p) + " mu=" +
                     w.target.to_string(),
                 [&] { return lhs == rhs; });
      }
    }
  }
  return res;
}

CheckResult recursion_closed_form(int k, int n) {
  CheckResult res{"recursion_closed_form"};
  const SpaceContext ctx(Family::IG, n, k);
  for (const auto& lambda : enumerate_P(k, n)) {
    if (lambda.first() < lambda.length() + 2 * k - 1) continue;
    run_case(res, where(ctx, lambda), [&] {
      const StableRingHandle handle{Family::IG, k, lambda.weight()};
      const RecursionExpansion rec = recursion_expand(handle, lambda, lambda.weight());
      if (!(recursion_sum(handle, rec) == ClassicalCombination(lambda, 1))) return false;
      std::map<std::pair<int, Partition>, Integer> closed;
      if (lambda.empty()) {
        closed[{0, Partition{}}] = 1;
      } else {
        for (const auto& [nu, c] : stable_pieri(k, lambda.first(), lambda.tail())) {
          const int sign = (nu.first() - lambda.first()) % 2 ? -1 : 1;
          closed[{nu.first(), nu.tail()}] = sign * c;
        }
      }
      return closed == rec.coefficients;
    });
  }
  return res;
}

CheckResult ring_axioms(int k, int n, int triples, unsigned seed) {
  CheckResult res{"ring_axioms"};
  const auto classes = enumerate_P(k, n);
  for (Family fam : {Family::IG, Family::OG}) {
    const SpaceContext ctx(fam, n, k);
    const QuantumRing ring(ctx);
    for (const auto& a : classes)
      for (const auto& b : classes) {
        if (b < a) continue;
        run_case(res, "commutativity " + ctx.to_string() + " " + a.to_string() + "*" +
                          b.to_string(),
                 [&] {
                   const auto& ab = ring.multiply(a, b);
                   return ab == ring.multiply(b, a) && is_integral(ab);
                 });
      }
    std::mt19937 rng(seed + static_cast<unsigned>(100 * k + n));
    std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
    for (int t = 0; t < triples; ++t) {
      const Partition& a = classes[pick(rng)];
      const Partition& b = classes[pick(rng)];
      const Partition& c = classes[pick(rng)];
      run_case(res, "associativity " + ctx.to_string() + " " + a.to_string() + "*" +
                        b.to_string() + "*" + c.to_string(),
               [&] {
                 const auto left = ring.multiply(ring.multiply(a, b), schubert_class(c));
                 const auto right = ring.multiply(schubert_class(a), ring.multiply(b, c));
                 return left == right;
               });
    }
  }
  return res;
}

CheckResult degenerations(int k, int n) {
  CheckResult res{"degenerations"};
  const SpaceContext ctx(Family::IG, n, k);
  for (const auto& lambda : enumerate_P(k, n)) {
    if (index_data(lambda, k).pairs_c.empty()) {
      run_case(res, "jacobi-trudi " + where(ctx, lambda),
               [&] { return raising_expand(lambda, k) == oracle::jacobi_trudi(lambda); });
    }
    if (k != 0) continue;
    run_case(res, "schur-Q giambelli " + where(ctx, lambda),
             [&] { return raising_expand(lambda, 0) == oracle::schur_q_pfaffian(lambda); });
    for (int p = 1; p <= n; ++p) {
      run_case(res, "schur-Q pieri " + where(ctx, lambda) + " p=" + std::to_string(p), [&] {
        const ClassicalCombination expected = oracle::schur_q_pieri(p, lambda);
        ClassicalCombination bounded;
        for (const auto& [mu, c] : expected)
          if (ctx.admits(mu)) bounded.add(mu, c);
        return stable_pieri(0, p, lambda) == expected &&
               classical_pieri(ctx, p, lambda) == bounded;
      });
    }
  }
  return res;
}

CheckResult stable_relations(int max_k, int max_r) {
  CheckResult res{"stable_relations"};
  for (Family fam : {Family::IG, Family::OG})
    for (int k = 0; k <= max_k; ++k)
      for (int r = k + 1; r <= max_r; ++r)
        run_case(res,
                 to_string(fam) + " k=" + std::to_string(k) + " r=" + std::to_string(r),
                 [&] { return stable_relation_check({fam, k, 2 * r}, r); });
  return res;
}

CheckResult index_vectors(int max_weight, int max_k) {
  CheckResult res{"index_vectors"};
  for (int k = 0; k <= max_k; ++k)
    for (int w = 0; w <= max_weight; ++w)
      for (const auto& lambda : k_strict_of_weight(w, k)) {
        run_case(res, "k=" + std::to_string(k) + " lambda=" + lambda.to_string(), [&] {
          const IndexData d = index_data(lambda, k);
          const int len = lambda.length();
          for (int i = 0; i + 1 < len; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            if (lambda[i] - d.c[iu] < lambda[i + 1] - d.c[iu + 1]) return false;
            if (lambda[i] + d.a[iu] <= lambda[i + 1] + d.a[iu + 1]) return false;
          }
          if (d.pairs_a.size() + d.pairs_c.size() !=
              static_cast<std::size_t>(len * (len - 1) / 2))
            return false;
          const GiambelliPolynomial g = raising_expand(lambda, k);
          const int top = g.max_degree();
          if (len == 1 && top != lambda[0]) return false;
          if (len >= 2 && top > lambda[0] + d.a[0] + lambda[1] + d.a[1]) return false;
          // smallest n with λ in P(k,n)
          const int n = std::max({k + 1, len + k, lambda.first() - k});
          return top <= std::max(2 * n + 2 * k - 1, 0);
        });
      }
  return res;
}

CheckResult pieri_stability(int instances, unsigned seed) {
  CheckResult res{"pieri_stability"};
  std::mt19937 rng(seed);
  int done = 0;
  int attempts = 0;
  while (done < instances && attempts < 100 * instances) {
    ++attempts;
    const int k = std::uniform_int_distribution<int>(0, 3)(rng);
    const int w = std::uniform_int_distribution<int>(0, 8)(rng);
    const auto pool = k_strict_of_weight(w, k);
    const Partition lambda = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const int p = std::uniform_int_distribution<int>(1, 8)(rng);
    const int bound = std::max(lambda.first(), lambda.length() + 2 * k);

    const ClassicalCombination lower = stable_pieri(k, p, lambda);
    const ClassicalCombination upper = stable_pieri(k, p + 1, lambda);
    std::vector<Partition> candidates;
    for (const auto& [nu, c] : lower)
      if (nu.first() > bound) candidates.push_back(nu);
    for (const auto& [nu, c] : upper)
      if (nu.first() - 1 > bound) {
        std::vector<int> parts = nu.vec();
        --parts[0];
        candidates.emplace_back(parts);
      }
    // also sample arbitrary k-strict ν of the right weight, where the
    // coefficient is usually zero on both sides
    for (const auto& nu : k_strict_of_weight(lambda.weight() + p, k))
      if (nu.first() > bound && std::uniform_int_distribution<int>(0, 9)(rng) == 0)
        candidates.push_back(nu);
    if (candidates.empty()) continue;
    const Partition nu =
        candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    if (!is_k_strict(nu, k)) continue;
    std::vector<int> raised = nu.vec();
    ++raised[0];
    const Partition nu_up(raised);
    ++done;
    run_case(res,
             "k=" + std::to_string(k) + " lambda=" + lambda.to_string() +
                 " p=" + std::to_string(p) + " nu=" + nu.to_string(),
             [&] { return lower.coeff(nu) == upper.coeff(nu_up); });
  }
  if (done < instances) res.fail("could only generate " + std::to_string(done) + " instances");
  return res;
}

CheckResult small_quantum_rings() {
  CheckResult res{"small_quantum_rings"};
  const SpaceContext p3(Family::IG, 2, 1);
  const SpaceContext q3(Family::OG, 2, 1);
  run_case(res, "IG(1,4): s1^4 = q", [&] {
    GiambelliPolynomial m;
    m.family = GeneratorFamily::sigma;
    m.terms.add(GeneratorMonomial{{1, 1, 1, 1}, 0}, 1);
    return evaluate_quantum(p3, m) == QuantumCombination({Partition{}, 1}, 1);
  });
  run_case(res, "OG(1,5): t1*t3 = q t1", [&] {
    return qh_multiply(q3, {3}, {1}) == QuantumCombination({Partition{1}, 1}, 1) &&
           quantum_pieri_og(q3, 1, {3}) == QuantumCombination({Partition{1}, 1}, 1);
  });
  run_case(res, "OG(1,5): t3*t3 = q^2", [&] {
    return qh_multiply(q3, {3}, {3}) == QuantumCombination({Partition{}, 2}, 1) &&
           quantum_pieri_og(q3, 3, {3}) == QuantumCombination({Partition{}, 2}, 1);
  });
  return res;
}

}  // namespace isoschubert::verify
