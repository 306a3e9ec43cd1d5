#include <doctest.h>

#include "isoschubert/pieri.hpp"
#include "isoschubert/rings.hpp"
#include "isoschubert/serialize.hpp"

using namespace isoschubert;

TEST_CASE("quantum combination schema") {
  const QuantumCombination c({Partition{2}, 0}, 1);
  CHECK(to_json(c).dump() == R"({"terms":[{"parts":[2],"q":0,"num":1,"den2":0}]})");
  const auto parsed = quantum_from_json(
      json::parse(R"({"terms":[{"parts":[],"q":1,"num":3,"den2":2},{"parts":[2],"q":0,"num":1,"den2":0}]})"));
  QuantumCombination expected({Partition{2}, 0}, 1);
  expected.add({Partition{}, 1}, Dyadic(Integer(3), 2));
  CHECK(parsed == expected);
}

TEST_CASE("Giambelli polynomial schema") {
  const auto g = quantum_giambelli({4, 3}, SpaceContext(Family::IG, 3, 1));
  CHECK(to_json(g).dump() ==
        R"({"family":"sigma","terms":[{"gens":[4,3],"q":0,"num":1,"den2":0},{"gens":[2],"q":1,"num":-1,"den2":0}]})");
  CHECK(giambelli_from_json(to_json(g)) == g);
}

TEST_CASE("verification report line") {
  CHECK(verification_report("quantum_giambelli", SpaceContext(Family::IG, 3, 1), {4, 3}, true)
            .dump() ==
        R"({"check":"quantum_giambelli","family":"IG","n":3,"k":1,"lambda":[4,3],"ok":true})");
}

TEST_CASE("round trips") {
  for (Family fam : {Family::IG, Family::OG}) {
    const SpaceContext ctx(fam, 3, 1);
    CHECK(context_from_json(to_json(ctx)) == ctx);
    const QuantumRing ring(ctx);
    for (const auto& a : enumerate_P(1, 3)) {
      CHECK(partition_from_json(to_json(a)) == a);
      const auto product = ring.multiply(a, {2, 1});
      CHECK(quantum_from_json(to_json(product)) == product);
      const auto classical = classical_pieri(ctx, 2, a);
      CHECK(classical_from_json(to_json(classical)) == classical);
      const auto g = classical_giambelli(a, fam, 1);
      CHECK(giambelli_from_json(to_json(g)) == g);
    }
    const auto og = giambelli_og({3, 2, 1}, 0).c_form;
    CHECK(giambelli_from_json(to_json(og)) == og);
  }
}

TEST_CASE("large coefficients survive serialization") {
  const Integer big("123456789012345678901234567890");
  const QuantumCombination c({Partition{1}, 0}, Dyadic(big));
  const json j = to_json(c);
  CHECK(j["terms"][0]["num"].is_string());
  CHECK(quantum_from_json(j) == c);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(partition_from_json(json::parse("3")), ValidationError);
  CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), ValidationError);
  CHECK_THROWS_AS(classical_from_json(json::parse(
                      R"({"terms":[{"parts":[1],"q":1,"num":1,"den2":0}]})")),
                  ValidationError);
  CHECK_THROWS_AS(quantum_from_json(json::parse(R"({"terms":[{"parts":[1],"num":1.5}]})")),
                  ValidationError);
}
