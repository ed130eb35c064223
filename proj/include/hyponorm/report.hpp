#pragma once

// JSON serialization. Every rational is written as a "p/q" string.

#include <json.hpp>

#include "hyponorm/exact_matrix.hpp"
#include "hyponorm/polynomial.hpp"
#include "hyponorm/positivity.hpp"
#include "hyponorm/rational_function.hpp"
#include "hyponorm/weights.hpp"

namespace hyponorm {

using Json = nlohmann::ordered_json;

/// Array of rows, each an array of "p/q" strings.
Json to_json(const ExactMatrix& m);
/// Throws std::invalid_argument on ragged rows or malformed entries.
ExactMatrix matrix_from_json(const Json& j);

/// Ascending coefficient list of "p/q" strings.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const std::string& variable = "n");
Json to_json(const RationalFunction& f);

Json to_json(const HypothesisReport& h);
Json to_json(const BoundReport& b);

/// Deterministic for identical inputs; timings only appear when requested.
Json to_json(const CertificationReport& r, bool include_timings = false, bool include_deltas = false);

}  // namespace hyponorm
