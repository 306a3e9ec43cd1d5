#pragma once

#include <json.hpp>

#include "isoschubert/combination.hpp"
#include "isoschubert/giambelli.hpp"
#include "isoschubert/partition.hpp"

namespace isoschubert {

// JSON encodings.
//   partition            [4,3]
//   context              {"family":"IG","n":3,"k":1}
//   quantum combination  {"terms":[{"parts":[2],"q":0,"num":1,"den2":0}]}
//   classical combination: same shape, q and den2 always 0
//   giambelli polynomial {"family":"sigma","terms":[{"gens":[4,3],"q":0,"num":1,"den2":0}]}
// Numerators that do not fit in 64 bits are written as decimal strings.

using json = nlohmann::ordered_json;

json to_json(const Partition& lambda);
Partition partition_from_json(const json& j);

json to_json(const SpaceContext& ctx);
SpaceContext context_from_json(const json& j);

json to_json(const QuantumCombination& c);
QuantumCombination quantum_from_json(const json& j);

json to_json(const ClassicalCombination& c);
ClassicalCombination classical_from_json(const json& j);

json to_json(const GiambelliPolynomial& poly);
GiambelliPolynomial giambelli_from_json(const json& j);

/// One verification report line.
json verification_report(const std::string& check, const SpaceContext& ctx,
                         const Partition& lambda, bool ok);

}  // namespace isoschubert
