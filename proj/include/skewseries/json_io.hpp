#pragma once

#include <json.hpp>

#include "skewseries/factor.hpp"
#include "skewseries/homtools.hpp"
#include "skewseries/taxonomy.hpp"

namespace skewseries {

using Json = nlohmann::json;

// Series: {"val": v, "prec": absolute precision, "coeffs": ["c", ...]} with
// exact scalar strings; the window covers X^val .. X^{prec-1} and a zero value
// has empty coeffs with val == prec.
Json to_json(const Series& s);
Series series_from_json(const Json& j, Field field);

// SkewPoly: {"context": "S"|"T", "coeffs": {"0": series, ...}}.
Json to_json(const SkewPoly& z);
SkewPoly skew_from_json(const Json& j, ContextPtr ctx);

// Shape: "unit" | "A:X" | "A:theta" | "B" | "C" (+ "f", "n" for C).
Json to_json(const Shape& shape);

Json to_json(const NormalizationCertificate& cert);
Json to_json(const EisensteinCertificate& cert);

// Context envelope {"field": "q"|"fp:<p>", "q": series, "prec": N, "vmax": V};
// embedded in every witness document so `verify` can rebuild the ring.
Json context_to_json(const RingContext& ctx);
ContextPtr context_from_json(const Json& j);

// Self-contained witness documents (inputs + outputs + context + "kind").
Json witness_to_json(const SkewPoly& input, const RightFactorWitness& w);
Json witness_to_json(const SkewPoly& c, const SkewPoly& b, const CommutationWitness& w);
Json witness_to_json(const SkewPoly& a, const SkewPoly& b, const SimilarityWitness& w);
Json witness_to_json(const SkewPoly& a, const SkewPoly& b, const ExtWitness& w);
Json report_to_json(const SkewPoly& input, const FactorizationReport& report);

// Re-verifies a witness document produced by the functions above from scratch
// (context rebuilt from the envelope). Returns an empty string on success and
// a description of the first failed check otherwise.
std::string verify_witness_json(const Json& doc);

}  // namespace skewseries
