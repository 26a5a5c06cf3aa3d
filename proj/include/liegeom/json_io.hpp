#pragma once

#include <string>

#include "json.hpp"
#include "liegeom/extensions.hpp"

namespace liegeom {

using Json = nlohmann::ordered_json;

/// Version tag written into every bundle and required when reading one.
inline constexpr const char* kSchemaVersion = "liegeom/1";

/// Malformed or schema-violating JSON input.
class JsonError : public MathError {
 public:
  using MathError::MathError;
};

/// {"schema", "type": "metric_lie_algebra", "algebra", "metric"}
Json to_json(const MetricLieAlgebra& m);
/// {"schema", "type": "sasaki", "algebra", "metric", "phi", "xi", "eta"}
Json to_json(const AlmostContactMetric& s);
/// {"schema", "type": "pseudo_kahler", "algebra", "metric", "J", "omega"}
Json to_json(const PseudoKahler& s);
/// {"schema", "type": "z_standard_data", "reduction": {...}, "D", "tau", "h"}
Json to_json(const ZStandardData& d);
/// {"ideal": [...], "e0", "tau", "D"}
Json to_json(const StandardDecomposition& dec);
Json to_json(const Verdict& v);

/// The algebra and metric of any bundle above (the "reduction" of a
/// z_standard_data bundle).
MetricLieAlgebra metric_lie_algebra_from_json(const Json& j);
AlmostContactMetric sasaki_from_json(const Json& j);
/// Accepts "J", "omega" or both; missing "metric" is reconstructed as
/// g = −ΩJ when both are present.
PseudoKahler pseudo_kahler_from_json(const Json& j);
ZStandardData z_standard_data_from_json(const Json& j);

/// Reads a file as JSON when it parses as an object, otherwise as plain
/// algebra text (a .salg file). Throws JsonError on I/O failure.
Json read_bundle_file(const std::string& path);

}  // namespace liegeom
