#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ohpade/catalog.hpp"
#include "ohpade/hp_solver.hpp"
#include "ohpade/ortho_basis.hpp"
#include "ohpade/poles.hpp"

namespace ohpade {

using Json = nlohmann::json;

// Complex numbers are [re, im]; a bare number is accepted on input.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

// All from_json functions throw ConfigError on malformed input.
Json to_json(const Domain& d);
Domain domain_from_json(const Json& j);

Json to_json(const MeasureSpec& m);
MeasureSpec measure_from_json(const Json& j);

// Tree form, e.g. {"sum": [{"pole": {"a": [1.5, 0]}}, {"log": {"a": 3}}]}.
Json to_json(const AnalyticFunction& f);
AnalyticFunction function_from_json(const Json& j);

Json to_json(const MultiIndex& m);
MultiIndex multi_index_from_json(const Json& j);

Json to_json(const FunctionSystem& s);
FunctionSystem system_from_json(const Json& j);

Json to_json(const GroundTruth& t);
GroundTruth ground_truth_from_json(const Json& j);

// {n, q_coeffs, singular_values, unique, degree_deficient, ...}
Json to_json(const DenominatorResult& r);

Json to_json(const CatalogEntry& e);

// Reads and parses a JSON file; ConfigError when unreadable or malformed.
Json read_json_file(const std::string& path);
// Writes through a temporary file and rename.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace ohpade
