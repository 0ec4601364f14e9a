#pragma once

// JSON encodings of the domain values. Roots are written as coefficient
// vectors over the simple roots; decoders that need root indices take the
// root system as context.

#include "json.hpp"

#include "iwahori/chevalley.hpp"
#include "iwahori/galois.hpp"
#include "iwahori/generators.hpp"
#include "iwahori/modmatrix.hpp"
#include "iwahori/rootdata.hpp"
#include "iwahori/verify.hpp"

namespace iwahori {

using json = nlohmann::ordered_json;

/// Components, roots, heights, highest roots; S when p is given.
json to_json(const RootDatum& rd, std::optional<int> p = std::nullopt);
/// Rebuilds the root system from its components and checks the listed roots.
RootSystem root_system_from_json(const json& j);

json to_json(const CommutatorExpansion& e, const RootSystem& rs);
CommutatorExpansion commutator_from_json(const json& j, const RootSystem& rs);

json to_json(const ModMatrix& m);
ModMatrix mod_matrix_from_json(const json& j);

json to_json(const Generator& g, const RootSystem& rs);
Generator generator_from_json(const json& j, const RootSystem& rs);
json to_json(const GeneratorSpec& g, const RootSystem& rs);
GeneratorSpec generator_spec_from_json(const json& j, const RootSystem& rs);

json to_json(const FrattiniModule& m);
FrattiniModule frattini_module_from_json(const json& j);

json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const json& j);

json to_json(const CharacterAssignment& a);
CharacterAssignment assignment_from_json(const json& j);
json to_json(const CriterionReport& r);
CriterionReport criterion_report_from_json(const json& j);

}  // namespace iwahori
