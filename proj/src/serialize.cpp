#include "isoschubert/serialize.hpp"

namespace isoschubert {

namespace {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw ValidationError("expected an integer, got " + j.dump());
}

json coefficient_fields(json term, const Dyadic& d) {
  term["num"] = integer_to_json(d.num());
  term["den2"] = d.den2();
  return term;
}

Dyadic coefficient_from_json(const json& term) {
  return Dyadic(integer_from_json(term.at("num")), term.value("den2", 0));
}

}  // namespace

json to_json(const Partition& lambda) { return json(lambda.vec()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

json to_json(const SpaceContext& ctx) {
  return {{"family", to_string(ctx.family())}, {"n", ctx.n()}, {"k", ctx.k()}};
}

SpaceContext context_from_json(const json& j) {
  return SpaceContext(family_from_string(j.at("family").get<std::string>()),
                      j.at("n").get<int>(), j.at("k").get<int>());
}

json to_json(const QuantumCombination& c) {
  json terms = json::array();
  for (const auto& [key, coeff] : c)
    terms.push_back(
        coefficient_fields({{"parts", to_json(key.partition)}, {"q", key.q}}, coeff));
  return {{"terms", terms}};
}

QuantumCombination quantum_from_json(const json& j) {
  QuantumCombination c;
  for (const auto& t : j.at("terms"))
    c.add({partition_from_json(t.at("parts")), t.value("q", 0)}, coefficient_from_json(t));
  return c;
}

json to_json(const ClassicalCombination& c) { return to_json(to_quantum(c)); }

ClassicalCombination classical_from_json(const json& j) {
  const QuantumCombination q = quantum_from_json(j);
  for (const auto& [key, coeff] : q)
    if (key.q != 0) throw ValidationError("classical combination with q term");
  return classical_part(q);
}

json to_json(const GiambelliPolynomial& poly) {
  json terms = json::array();
  for (const auto& [mono, coeff] : poly.terms)
    terms.push_back(coefficient_fields({{"gens", mono.degrees}, {"q", mono.q}}, coeff));
  return {{"family", to_string(poly.family)}, {"terms", terms}};
}

GiambelliPolynomial giambelli_from_json(const json& j) {
  GiambelliPolynomial poly;
  poly.family = generator_family_from_string(j.at("family").get<std::string>());
  for (const auto& t : j.at("terms"))
    poly.terms.add(GeneratorMonomial::normalized(t.at("gens").get<std::vector<int>>(),
                                                 t.value("q", 0)),
                   coefficient_from_json(t));
  return poly;
}

json verification_report(const std::string& check, const SpaceContext& ctx,
                         const Partition& lambda, bool ok) {
  json j;
  j["check"] = check;
  j["family"] = to_string(ctx.family());
  j["n"] = ctx.n();
  j["k"] = ctx.k();
  j["lambda"] = to_json(lambda);
  j["ok"] = ok;
  return j;
}

}  // namespace isoschubert
