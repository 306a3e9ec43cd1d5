#include <doctest.h>

#include "isoschubert/pieri.hpp"

using namespace isoschubert;

namespace {

ClassicalCombination cc(std::initializer_list<std::pair<Partition, long>> terms) {
  ClassicalCombination c;
  for (const auto& [p, v] : terms) c.add(p, Integer(v));
  return c;
}

QuantumCombination qc(std::initializer_list<std::tuple<Partition, int, long>> terms) {
  QuantumCombination c;
  for (const auto& [p, q, v] : terms) c.add({p, q}, Dyadic(v));
  return c;
}

const ArrowWitness* find(const std::vector<ArrowWitness>& ws, const Partition& mu) {
  for (const auto& w : ws)
    if (w.target == mu) return &w;
  return nullptr;
}

bool power_of_two(const Integer& v) {
  return v > 0 && mpz_popcount(v.get_mpz_t()) == 1;
}

}  // namespace

TEST_CASE("arrow_targets at k=0") {
  // (1,1) is not 0-strict, so the only target is (2)
  const auto ws = arrow_targets({1}, 1, 0);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].target == Partition{2});
  CHECK(ws[0].n_ig() == 1);
}

TEST_CASE("arrow_targets with a k-related bottom box") {
  const auto ws = arrow_targets({2}, 1, 1);
  REQUIRE(ws.size() == 2);
  const auto* three = find(ws, {3});
  REQUIRE(three != nullptr);
  CHECK(three->added_boxes == std::vector<Box>{{1, 3}});
  CHECK(three->set_a.empty());
  CHECK(three->n_ig() == 0);
  const auto* two_one = find(ws, {2, 1});
  REQUIRE(two_one != nullptr);
  CHECK(two_one->n_ig() == 0);
}

TEST_CASE("arrow_targets from the empty partition") {
  for (int k = 0; k < 4; ++k)
    for (int p = 1; p < 7; ++p) {
      const auto ws = arrow_targets({}, p, k);
      REQUIRE(ws.size() == 1);
      CHECK(ws[0].target == Partition{p});
      std::vector<Box> expected;
      for (int c = k + 1; c <= p; ++c) expected.push_back({1, c});
      CHECK(ws[0].set_a == expected);
      CHECK(ws[0].components == (p > k ? 1 : 0));
      CHECK(ws[0].n_ig() == 0);
    }
}

TEST_CASE("arrow_targets rejects non-k-strict input and honours bounds") {
  CHECK_THROWS_AS(arrow_targets({2, 2}, 1, 1), ValidationError);
  for (const auto& w : arrow_targets({3, 1}, 3, 1, 2, 4)) {
    CHECK(w.target.length() <= 2);
    CHECK(w.target.first() <= 4);
  }
}

TEST_CASE("classical Pieri examples") {
  CHECK(classical_pieri(SpaceContext(Family::IG, 3, 1), 2, {1}) == cc({{{3}, 1}, {{2, 1}, 1}}));
  for (int n = 2; n < 5; ++n)
    CHECK(classical_pieri(SpaceContext(Family::IG, n, 0), 1, {1}) == cc({{{2}, 2}}));
  const SpaceContext q3(Family::OG, 2, 1);
  CHECK(classical_pieri(q3, 1, {1}) == cc({{{2}, 2}}));
  CHECK(classical_pieri(q3, 1, {2}) == cc({{{3}, 1}}));
  CHECK(classical_pieri(q3, 1, {3}).empty());
}

TEST_CASE("classical Pieri errors") {
  const SpaceContext ctx(Family::IG, 3, 1);
  CHECK_THROWS_AS(classical_pieri(ctx, 0, {1}), DomainError);
  CHECK_THROWS_AS(classical_pieri(ctx, 5, {1}), DomainError);
  CHECK_THROWS_AS(classical_pieri(ctx, 1, {5}), DomainError);
  CHECK_THROWS_AS(classical_pieri(ctx, 1, {1, 1, 1}), DomainError);
}

TEST_CASE("stable Pieri examples") {
  CHECK(stable_pieri(0, 1, {1}) == cc({{{2}, 2}}));
  CHECK(stable_pieri(2, 1, {1}) == cc({{{2}, 1}, {{1, 1}, 1}}));
  for (int k = 0; k < 4; ++k)
    for (int p = 1; p < 6; ++p) CHECK(stable_pieri(k, p, {}) == cc({{{p}, 1}}));
  CHECK_THROWS_AS(stable_pieri(1, 0, {1}), DomainError);
  CHECK_THROWS_AS(stable_pieri(1, 1, {3, 3}), ValidationError);
}

TEST_CASE("quantum Pieri IG examples") {
  const SpaceContext p3(Family::IG, 2, 1);
  CHECK(quantum_pieri(p3, 1, {3}) == qc({{{}, 1, 1}}));
  CHECK(quantum_pieri(p3, 1, {1}) == qc({{{2}, 0, 1}}));
  const SpaceContext ctx(Family::IG, 3, 1);
  for (const auto& lambda : enumerate_P(1, 3)) {
    if (lambda.weight() + 1 >= 5) continue;
    for (const auto& [key, c] : quantum_pieri(ctx, 1, lambda)) CHECK(key.q == 0);
  }
}

TEST_CASE("quantum Pieri OG examples on the quadric Q3") {
  const SpaceContext q3(Family::OG, 2, 1);
  CHECK(quantum_pieri(q3, 1, {3}) == qc({{{1}, 1, 1}}));
  CHECK(quantum_pieri(q3, 3, {3}) == qc({{{}, 2, 1}}));
  CHECK(quantum_pieri(q3, 2, {3}) == qc({{{2}, 1, 1}}));
  CHECK(quantum_pieri(q3, 3, {1}) == qc({{{1}, 1, 1}}));
}

TEST_CASE("quantum Pieri family checks") {
  CHECK_THROWS_AS(quantum_pieri_ig(SpaceContext(Family::OG, 2, 1), 1, {}), ContextError);
  CHECK_THROWS_AS(quantum_pieri_og(SpaceContext(Family::IG, 2, 1), 1, {}), ContextError);
}

TEST_CASE("Pieri grading, coefficients and q0 truncation") {
  for (Family fam : {Family::IG, Family::OG})
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k < n; ++k) {
        const SpaceContext ctx(fam, n, k);
        for (const auto& lambda : enumerate_P(k, n))
          for (int p = 1; p <= n + k; ++p) {
            CAPTURE(ctx.to_string());
            CAPTURE(lambda.to_string());
            CAPTURE(p);
            const auto classical = classical_pieri(ctx, p, lambda);
            for (const auto& [mu, c] : classical) {
              CHECK(mu.weight() == lambda.weight() + p);
              CHECK(power_of_two(c));
              CHECK(ctx.admits(mu));
            }
            const auto quantum = quantum_pieri(ctx, p, lambda);
            for (const auto& [key, c] : quantum) {
              CHECK(key.partition.weight() + key.q * ctx.q_degree() == lambda.weight() + p);
              REQUIRE(c.is_integer());
              CHECK(power_of_two(c.to_integer()));
              CHECK(ctx.admits(key.partition));
            }
            CHECK(classical_part(quantum) == classical);
          }
      }
}

TEST_CASE("Pieri operators commute") {
  for (Family fam : {Family::IG, Family::OG})
    for (int n = 2; n <= 4; ++n)
      for (int k = 0; k < n; ++k) {
        const SpaceContext ctx(fam, n, k);
        auto apply = [&](int p, const QuantumCombination& x) {
          QuantumCombination out;
          for (const auto& [key, c] : x)
            out.add_scaled(shift_q(quantum_pieri(ctx, p, key.partition), key.q), c);
          return out;
        };
        for (const auto& lambda : enumerate_P(k, n))
          for (int p = 1; p <= n + k; ++p)
            for (int r = p + 1; r <= n + k; ++r) {
              CAPTURE(ctx.to_string());
              CAPTURE(lambda.to_string());
              const QuantumCombination start({lambda, 0}, 1);
              CHECK(apply(r, apply(p, start)) == apply(p, apply(r, start)));
            }
      }
}

TEST_CASE("stable Pieri agrees with bounded Pieri when bounds do not bind") {
  for (Family fam : {Family::IG, Family::OG})
    for (int k = 0; k < 3; ++k) {
      const SpaceContext ctx(fam, k + 8, k);
      for (int w = 0; w <= 4; ++w)
        for (const auto& lambda : k_strict_of_weight(w, k))
          for (int p = 1; p <= 4; ++p)
            CHECK(stable_pieri(k, p, lambda, fam) == classical_pieri(ctx, p, lambda));
    }
}
