#include "isoschubert/rings.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "isoschubert/pieri.hpp"

namespace isoschubert {

namespace {

// Insert-once memo table. References into std::map stay valid across inserts,
// so a returned reference may be used without holding the lock.
template <class K, class V>
class Memo {
 public:
  template <class F>
  const V& get(const K& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<K, V> map_;
};

using PieriKey = std::pair<int, Partition>;

// Weight w_j of (−1)^i x_{r+i} x_{r−i}, j = r − i, in the quadratic relation
// x_r^2 + Σ_{i=1}^{r} (−1)^i w_{r−i} x_{r+i} x_{r−i} = 0 (r > k). For IG it is
// 2; for OG it is δ_j, which is what c_p = δ_p τ_p turns the IG relation into.
int relation_weight(Family family, int j, int k) {
  return family == Family::IG ? 2 : delta(j, k);
}

}  // namespace

struct ClassicalRing::Cache {
  Memo<PieriKey, ClassicalCombination> pieri;
};

struct QuantumRing::Cache {
  Memo<PieriKey, QuantumCombination> pieri;
  Memo<std::pair<Partition, Partition>, QuantumCombination> products;
  Memo<int, QuantumCombination> images;
};

// ---------------------------------------------------------------------------
// ClassicalRing

ClassicalRing::ClassicalRing(const SpaceContext& ctx)
    : ctx_(ctx),
      handle_{ctx.family(), ctx.k(), ctx.rows() * ctx.cols()},
      cache_(std::make_shared<Cache>()) {}

ClassicalRing::ClassicalRing(const StableRingHandle& handle)
    : handle_(handle), cache_(std::make_shared<Cache>()) {
  if (handle.k < 0) throw ContextError("stable ring needs k >= 0");
}

Family ClassicalRing::family() const { return handle_.family; }
int ClassicalRing::k() const { return handle_.k; }

const ClassicalCombination& ClassicalRing::pieri(int p, const Partition& lambda) const {
  return cache_->pieri.get({p, lambda}, [&] {
    if (ctx_) return classical_pieri(*ctx_, p, lambda);
    if (lambda.weight() + p > handle_.truncation_weight)
      throw DomainError("stable product of weight " +
                        std::to_string(lambda.weight() + p) +
                        " exceeds truncation weight " +
                        std::to_string(handle_.truncation_weight));
    return stable_pieri(handle_.k, p, lambda, handle_.family);
  });
}

ClassicalCombination ClassicalRing::multiply_special(int p,
                                                     const ClassicalCombination& x) const {
  ClassicalCombination out;
  for (const auto& [lambda, coeff] : x) out.add_scaled(pieri(p, lambda), coeff);
  return out;
}

ClassicalCombination ClassicalRing::evaluate(const GiambelliPolynomial& poly) const {
  return evaluate(poly, ClassicalCombination(Partition{}, 1));
}

ClassicalCombination ClassicalRing::evaluate(const GiambelliPolynomial& poly,
                                             const ClassicalCombination& start) const {
  if (poly.family == GeneratorFamily::c) return evaluate(c_to_tau(poly, k()), start);
  const GeneratorFamily expected =
      family() == Family::IG ? GeneratorFamily::sigma : GeneratorFamily::tau;
  if (poly.family != expected)
    throw ValidationError("polynomial in " + to_string(poly.family) +
                          " generators cannot be evaluated in " + to_string(family()));

  LinearCombination<Partition, Dyadic> acc;
  for (const auto& [mono, coeff] : poly.terms) {
    if (mono.q != 0) throw ValidationError("q in a classical evaluation");
    ClassicalCombination x = start;
    for (int d : mono.degrees) x = multiply_special(d, x);
    for (const auto& [lambda, c] : x) acc.add(lambda, coeff * Dyadic(c));
  }
  ClassicalCombination out;
  for (const auto& [lambda, c] : acc) out.add(lambda, c.to_integer());
  return out;
}

// ---------------------------------------------------------------------------
// QuantumRing

QuantumRing::QuantumRing(const SpaceContext& ctx)
    : ctx_(ctx), cache_(std::make_shared<Cache>()) {}

const QuantumCombination& QuantumRing::pieri(int p, const Partition& lambda) const {
  return cache_->pieri.get({p, lambda}, [&] { return quantum_pieri(ctx_, p, lambda); });
}

QuantumCombination QuantumRing::multiply_special(int p,
                                                 const QuantumCombination& x) const {
  QuantumCombination out;
  for (const auto& [key, coeff] : x)
    out.add_scaled(key.q == 0 ? pieri(p, key.partition)
                              : shift_q(pieri(p, key.partition), key.q),
                   coeff);
  return out;
}

QuantumCombination QuantumRing::evaluate(const GiambelliPolynomial& poly) const {
  return evaluate(poly, unit_class());
}

QuantumCombination QuantumRing::evaluate(const GiambelliPolynomial& poly,
                                         const QuantumCombination& start) const {
  if (poly.family == GeneratorFamily::c) return evaluate(c_to_tau(poly, ctx_.k()), start);
  const GeneratorFamily expected =
      ctx_.family() == Family::IG ? GeneratorFamily::sigma : GeneratorFamily::tau;
  if (poly.family != expected)
    throw ValidationError("polynomial in " + to_string(poly.family) +
                          " generators cannot be evaluated in " + ctx_.to_string());
  QuantumCombination acc;
  for (const auto& [mono, coeff] : poly.terms) {
    QuantumCombination x = start;
    for (int d : mono.degrees) x = multiply_special(d, x);
    acc.add_scaled(shift_q(x, mono.q), coeff);
  }
  return acc;
}

const QuantumCombination& QuantumRing::multiply(const Partition& lambda,
                                                const Partition& mu) const {
  return cache_->products.get({lambda, mu}, [&] {
    ctx_.require(lambda);
    return evaluate(quantum_giambelli(mu, ctx_), schubert_class(lambda));
  });
}

QuantumCombination QuantumRing::multiply(const QuantumCombination& a,
                                         const QuantumCombination& b) const {
  QuantumCombination out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      out.add_scaled(shift_q(multiply(ka.partition, kb.partition), ka.q + kb.q),
                     ca * cb);
  return out;
}

const QuantumCombination& QuantumRing::special_image(int i) const {
  if (i < 1) throw DomainError("special class index must be positive");
  return cache_->images.get(i, [&]() -> QuantumCombination {
    const int top = ctx_.max_special();
    if (i <= top) return schubert_class(Partition{i});
    if (ctx_.family() == Family::IG) {
      if (i == top + 1) return QuantumCombination({Partition{}, 1}, Dyadic::pow2(-1));
      if (i <= 2 * top || i % 2 == 1) return {};
    } else {
      if (i < 2 * top || i % 2 == 1) return {};
    }
    return forced_image(i);
  });
}

// Solves the quadratic relation of index r = i/2 for the image of the degree
// i generator.
QuantumCombination QuantumRing::forced_image(int i) const {
  const int r = i / 2;
  const Family fam = ctx_.family();
  const int k = ctx_.k();
  QuantumCombination rest = multiply(special_image(r), special_image(r));
  for (int m = 1; m < r; ++m) {
    const QuantumCombination& hi = special_image(r + m);
    const QuantumCombination& lo = special_image(r - m);
    if (hi.empty() || lo.empty()) continue;
    const long scale = relation_weight(fam, r - m, k) * (m % 2 ? -1L : 1L);
    rest.add_scaled(multiply(hi, lo), Dyadic(scale));
  }
  // (−1)^r w_0 x + rest = 0, with w_0 = 2 (IG) or 1 (OG)
  const Dyadic inverse = fam == Family::IG ? Dyadic(Integer(1), 1) : Dyadic(1);
  return rest.scaled(r % 2 ? inverse : -inverse);
}

QuantumCombination QuantumRing::schubert(const Partition& lambda) const {
  ctx_.require(lambda);
  const GiambelliPolynomial poly = quantum_giambelli(lambda, ctx_);
  QuantumCombination result = evaluate(poly);
  if (!(result == schubert_class(lambda)))
    throw InternalError("quantum Giambelli mismatch for lambda=" + lambda.to_string() +
                        " in " + ctx_.to_string() + ": polynomial " + format(poly) +
                        " evaluates to " +
                        format(result, class_symbol(ctx_.family())));
  return result;
}

// ---------------------------------------------------------------------------
// Free functions

ClassicalCombination evaluate_classical(const SpaceContext& ctx,
                                        const GiambelliPolynomial& poly) {
  return ClassicalRing(ctx).evaluate(poly);
}

ClassicalCombination evaluate_classical(const StableRingHandle& handle,
                                        const GiambelliPolynomial& poly) {
  return ClassicalRing(handle).evaluate(poly);
}

QuantumCombination evaluate_quantum(const SpaceContext& ctx,
                                    const GiambelliPolynomial& poly) {
  QuantumCombination out = QuantumRing(ctx).evaluate(poly);
  if (!is_integral(out))
    throw InternalError("non-integral quantum evaluation: " +
                        format(out, class_symbol(ctx.family())));
  return out;
}

QuantumCombination schubert_quantum(const Partition& lambda, const SpaceContext& ctx) {
  return QuantumRing(ctx).schubert(lambda);
}

QuantumCombination qh_multiply(const SpaceContext& ctx, const Partition& lambda,
                               const Partition& mu) {
  ctx.require(mu);
  QuantumCombination out = QuantumRing(ctx).multiply(lambda, mu);
  if (!is_integral(out))
    throw InternalError("non-integral quantum product " + lambda.to_string() + " * " +
                        mu.to_string() + " in " + ctx.to_string());
  return out;
}

QuantumCombination pi_image(const SpaceContext& ctx, int i) {
  if (ctx.family() != Family::IG) throw ContextError("pi_image needs an IG context");
  return QuantumRing(ctx).special_image(i);
}

QuantumCombination pi_tilde_image(const SpaceContext& ctx, int i) {
  if (ctx.family() != Family::OG) throw ContextError("pi_tilde_image needs an OG context");
  return QuantumRing(ctx).special_image(i);
}

RecursionExpansion recursion_expand(const StableRingHandle& handle,
                                    const Partition& lambda, int degree_cap) {
  if (!is_k_strict(lambda, handle.k))
    throw ValidationError(lambda.to_string() + " is not " + std::to_string(handle.k) +
                          "-strict");
  if (degree_cap < lambda.weight())
    throw DomainError("degree cap below |lambda|");
  const ClassicalRing ring(handle);
  const Partition tail = lambda.tail();

  // keyed by (first part, partition) so elimination runs by increasing first part
  std::map<PieriKey, Integer> pending{{{lambda.first(), lambda}, Integer(1)}};
  RecursionExpansion out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& [p, nu] = node.key();
    const Integer c = node.mapped();
    if (p > degree_cap)
      throw DomainError("recursion reached " + nu.to_string() + " beyond degree cap " +
                        std::to_string(degree_cap));
    const Partition nu_tail = nu.tail();
    if (!tail.contains(nu_tail))
      throw InternalError("recursion left the diagram of lambda*: " + nu.to_string());
    if (p == 0) {
      out.coefficients[{0, Partition{}}] += c;
      continue;
    }
    out.coefficients[{p, nu_tail}] += c;
    const ClassicalCombination& product = ring.pieri(p, nu_tail);
    if (product.coeff(nu) != 1)
      throw InternalError("leading Pieri coefficient of " + nu.to_string() + " is not 1");
    for (const auto& [mu, d] : product) {
      if (mu == nu) continue;
      if (mu.first() <= p)
        throw InternalError("Pieri term " + mu.to_string() + " does not raise the first part of " +
                            nu.to_string());
      Integer& slot = pending[{mu.first(), mu}];
      slot -= c * d;
      if (slot == 0) pending.erase({mu.first(), mu});
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ClassicalCombination recursion_sum(const StableRingHandle& handle,
                                   const RecursionExpansion& expansion) {
  const ClassicalRing ring(handle);
  ClassicalCombination out;
  for (const auto& [key, a] : expansion.coefficients) {
    const auto& [p, mu] = key;
    if (p == 0) out.add(mu, a);
    else out.add_scaled(ring.pieri(p, mu), a);
  }
  return out;
}

ClassicalCombination stable_relation_value(const StableRingHandle& handle, int r) {
  if (r <= handle.k)
    throw DomainError("stable relations are indexed by r > k");
  if (2 * r > handle.truncation_weight)
    throw DomainError("relation of degree " + std::to_string(2 * r) +
                      " exceeds truncation weight");
  const ClassicalRing ring(handle);
  ClassicalCombination out = ring.pieri(r, Partition{r});
  for (int i = 1; i < r; ++i) {
    const long scale = relation_weight(handle.family, r - i, handle.k) * (i % 2 ? -1L : 1L);
    out.add_scaled(ring.pieri(r + i, Partition{r - i}), Integer(scale));
  }
  const int top = relation_weight(handle.family, 0, handle.k);
  out.add(Partition{2 * r}, Integer(r % 2 ? -top : top));
  return out;
}

bool stable_relation_check(const StableRingHandle& handle, int r) {
  return stable_relation_value(handle, r).empty();
}

}  // namespace isoschubert
