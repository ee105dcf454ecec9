#pragma once

// JSON scenario files, serialized structures and certificates.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "hforge/pipeline.hpp"

namespace hforge {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "hopf-forge/1";
inline constexpr const char* kVersion = "0.1.0";

Field field_from_json(const Json& j);
Json field_to_json(const Field& f);
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

/// One realization problem; `factors` is non-empty for tensor scenarios.
struct Scenario {
    std::string name;
    std::string pipeline = "realize";  // A | H | X | realize | tensor
    Depth depth = Depth::exhaustive;
    RealizeInput input;
    std::vector<Scenario> factors;
    Json source;  // the parsed file, for hashing
};

/// Throws InputError on anything malformed or unresolvable.
Scenario scenario_from_json(const Json& j);

/// Lower-case hex SHA-256 of the compact dump of j.
std::string sha256_hex(const Json& j);

std::string element_string(const FieldElement& x);

Json algebra_to_json(const StructureAlgebra& a);
Json hopf_to_json(const HopfStructure& h);
/// A serialized algebra ("kind": "algebra") or Hopf structure ("kind": "hopf").
struct LoadedStructure {
    StructureAlgebra algebra;
    std::optional<HopfStructure> hopf;
};
LoadedStructure structure_from_json(const Json& j);

Json axioms_to_json(const AxiomCertificate& c, const StructureAlgebra& a);
Json semisimple_to_json(const SemisimplicityReport& r);
Json hom_to_json(const HomCheck& c);

/// Stage results; stages that did not run are listed as skipped.
Json realization_to_json(const Realization& r, const std::optional<StageError>& error);
Json tensor_to_json(const TensorRealization& t);
Json cocycle_to_json(const TwoCocycle& a);

}  // namespace hforge
