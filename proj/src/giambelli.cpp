#include "isoschubert/giambelli.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace isoschubert {

GeneratorMonomial GeneratorMonomial::normalized(std::vector<int> degrees, int q) {
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 0; }))
    throw InternalError("negative generator degree in monomial");
  std::erase(degrees, 0);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return {std::move(degrees), q};
}

int GeneratorMonomial::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0);
}

std::string to_string(GeneratorFamily f) {
  switch (f) {
    case GeneratorFamily::sigma: return "sigma";
    case GeneratorFamily::c: return "c";
    case GeneratorFamily::tau: return "tau";
  }
  return "?";
}

GeneratorFamily generator_family_from_string(const std::string& s) {
  if (s == "sigma") return GeneratorFamily::sigma;
  if (s == "c") return GeneratorFamily::c;
  if (s == "tau") return GeneratorFamily::tau;
  throw ValidationError("unknown generator family '" + s + "'");
}

int GiambelliPolynomial::max_degree() const {
  int m = 0;
  for (const auto& [mono, coeff] : terms) m = std::max(m, mono.max_degree());
  return m;
}

bool GiambelliPolynomial::has_q() const {
  return std::any_of(terms.begin(), terms.end(),
                     [](const auto& t) { return t.first.q != 0; });
}

GiambelliPolynomial raising_expand(const Partition& lambda, int k) {
  index_data(lambda, k);  // validates
  const int len = lambda.length();

  // Vectors keep positional identity until the end. Stage j applies every
  // factor with second index j. Component j is only raised by factors (j, l)
  // with l > j, which ran in earlier stages, so during stage j it only
  // decreases and a negative entry can be dropped at once.
  using Vec = std::vector<int>;
  std::map<Vec, Integer> current{{lambda.vec(), Integer(1)}};

  for (int j = len; j >= 2; --j) {
    const auto ju = static_cast<std::size_t>(j - 1);
    // (1 - R_ij) factors first, then the C(λ) series, each by ascending i
    std::vector<std::pair<int, bool>> factors;
    for (int i = 1; i < j; ++i)
      if (!is_c_pair(lambda, i, j, k)) factors.emplace_back(i, false);
    for (int i = 1; i < j; ++i)
      if (is_c_pair(lambda, i, j, k)) factors.emplace_back(i, true);
    for (const auto& [i, series] : factors) {
      const auto iu = static_cast<std::size_t>(i - 1);
      std::map<Vec, Integer> next;
      for (const auto& [vec, coeff] : current) {
        next[vec] += coeff;
        if (!series) {
          // 1 - R_ij
          if (vec[ju] >= 1) {
            Vec moved = vec;
            ++moved[iu];
            --moved[ju];
            next[moved] -= coeff;
          }
        } else {
          // (1 - R_ij)/(1 + R_ij) = 1 + 2 sum_{m>=1} (-1)^m R_ij^m
          Vec moved = vec;
          for (int m = 1; m <= vec[ju]; ++m) {
            ++moved[iu];
            --moved[ju];
            Integer c = 2 * coeff;
            if (m % 2) c = -c;
            next[moved] += c;
          }
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      current = std::move(next);
    }
  }

  GiambelliPolynomial poly;
  poly.family = GeneratorFamily::sigma;
  for (auto& [vec, coeff] : current)
    poly.terms.add(GeneratorMonomial::normalized(vec), Dyadic(coeff));
  return poly;
}

GiambelliPolynomial c_to_tau(const GiambelliPolynomial& c_form, int k) {
  if (c_form.family != GeneratorFamily::c)
    throw ValidationError("c_to_tau expects a c-form polynomial");
  GiambelliPolynomial tau;
  tau.family = GeneratorFamily::tau;
  for (const auto& [mono, coeff] : c_form.terms) {
    int twos = 0;
    for (int d : mono.degrees)
      if (delta(d, k) == 2) ++twos;
    tau.terms.add(mono, coeff * Dyadic::pow2(twos));
  }
  return tau;
}

OgGiambelli giambelli_og(const Partition& lambda, int k) {
  GiambelliPolynomial sigma = raising_expand(lambda, k);
  OgGiambelli out;
  out.c_form.family = GeneratorFamily::c;
  out.c_form.terms = sigma.terms.scaled(Dyadic::pow2(-lambda.count_greater(k)));
  out.tau_form = c_to_tau(out.c_form, k);
  return out;
}

GiambelliPolynomial quantum_giambelli_ig(const Partition& lambda,
                                         const SpaceContext& ctx) {
  if (ctx.family() != Family::IG) throw ContextError("quantum_giambelli_ig needs IG");
  ctx.require(lambda);
  const int top = ctx.max_special() + 1;
  const GiambelliPolynomial stable = raising_expand(lambda, ctx.k());
  GiambelliPolynomial out;
  out.family = GeneratorFamily::sigma;
  for (const auto& [mono, coeff] : stable.terms) {
    if (mono.max_degree() > top) continue;
    std::vector<int> kept;
    int qs = 0;
    for (int d : mono.degrees) {
      if (d == top) ++qs;
      else kept.push_back(d);
    }
    out.terms.add(GeneratorMonomial::normalized(std::move(kept), mono.q + qs),
                  coeff * Dyadic::pow2(-qs));
  }
  return out;
}

GiambelliPolynomial quantum_giambelli_og(const Partition& lambda,
                                         const SpaceContext& ctx) {
  if (ctx.family() != Family::OG) throw ContextError("quantum_giambelli_og needs OG");
  ctx.require(lambda);
  return drop_generators_above(giambelli_og(lambda, ctx.k()).tau_form, ctx.max_special());
}

GiambelliPolynomial drop_generators_above(const GiambelliPolynomial& poly, int degree) {
  GiambelliPolynomial out;
  out.family = poly.family;
  for (const auto& [mono, coeff] : poly.terms)
    if (mono.max_degree() <= degree) out.terms.add(mono, coeff);
  return out;
}

GiambelliPolynomial classical_giambelli(const Partition& lambda, Family family, int k) {
  return family == Family::IG ? raising_expand(lambda, k)
                              : giambelli_og(lambda, k).tau_form;
}

GiambelliPolynomial quantum_giambelli(const Partition& lambda, const SpaceContext& ctx) {
  return ctx.family() == Family::IG ? quantum_giambelli_ig(lambda, ctx)
                                    : quantum_giambelli_og(lambda, ctx);
}

std::string format(const GiambelliPolynomial& poly) {
  const std::string gen = poly.family == GeneratorFamily::sigma ? "s"
                          : poly.family == GeneratorFamily::c   ? "c"
                                                                : "t";
  if (poly.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : poly.terms) {
    Dyadic c = coeff;
    if (!first) out += c.num() < 0 ? " - " : " + ";
    else if (c.num() < 0) out += "-";
    if (c.num() < 0) c = -c;
    first = false;

    std::vector<std::string> factors;
    if (!(c == Dyadic(1))) factors.push_back(c.to_string());
    if (mono.q == 1) factors.emplace_back("q");
    if (mono.q > 1) factors.push_back("q^" + std::to_string(mono.q));
    for (int d : mono.degrees) factors.push_back(gen + std::to_string(d));
    if (factors.empty()) factors.emplace_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

}  // namespace isoschubert
