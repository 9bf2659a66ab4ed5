#pragma once

#include <variant>

#include <json.hpp>

#include "gdz/formulas.hpp"
#include "gdz/generator.hpp"

namespace gdz {

using nlohmann::json;

/// Matrix object: {"rows": m, "cols": n, "mode": "exact"|"float",
/// "data": [...]} with row-major scalar strings (exact) or [re, im]
/// pairs (float). Exact mode round-trips bit-exactly.
json matrix_to_json(const ExactMatrix& m);
json matrix_to_json(const FloatMatrix& m);

using AnyMatrix = std::variant<ExactMatrix, FloatMatrix>;
AnyMatrix matrix_from_json(const json& j);

ExactMatrix exact_matrix_from_json(const json& j);

json hypothesis_report_to_json(const HypothesisReport& rep);
json provenance_to_json(const Provenance& prov);

json instance_to_json(const Instance& inst, HypothesisId id, std::uint64_t seed);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace gdz
