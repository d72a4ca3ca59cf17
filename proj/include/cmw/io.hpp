#pragma once

// JSON and CSV loaders for the module data formats. Every malformed input
// surfaces as Error(ParseError) naming the offending field.

#include <string>
#include <vector>

#include <json.hpp>

#include "cmw/analysis/grid.hpp"
#include "cmw/cayley.hpp"
#include "cmw/linalg.hpp"
#include "cmw/measure.hpp"
#include "cmw/metric.hpp"
#include "cmw/numbers/rational.hpp"

namespace cmw::io {

using Json = nlohmann::json;

Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// "p", "p/q" or a JSON integer.
numbers::Rational rational_from_json(const Json& j);
// "re" / "im" object, or a plain rational entry.
numbers::ComplexRational complex_from_json(const Json& j);

// Array of equal-length rows.
linalg::RationalMatrix matrix_from_json(const Json& j);
linalg::ComplexMatrix complex_matrix_from_json(const Json& j);
// True if any entry is a {"re", "im"} object.
bool matrix_json_is_complex(const Json& j);
Json matrix_to_json(const linalg::RationalMatrix& m);
Json matrix_to_json(const linalg::ComplexMatrix& m);

// {"elements": [labels], "table": [[labels or indices]]}.
groups::CayleyTable cayley_from_json(const Json& j);
// {"points": [ids], "distances": [[rationals]]}.
metric::FiniteMetricSpace metric_from_json(const Json& j);
// [[lo, hi], ...] of half-open intervals.
measure::IntervalUnion interval_union_from_json(const Json& j);
Json interval_union_to_json(const measure::IntervalUnion& u);
// [{"value": c, "support": [[lo, hi], ...]}, ...], canonicalized on load.
measure::SimpleFunction simple_function_from_json(const Json& j);

// {"dim", "origin", "spacing", "shape", "values"}; every extent >= 2.
analysis::SampledFunction sampled_function_from_json(const Json& j);
// Rows "x_1,...,x_n,value", optional header line. The rows must cover a
// complete uniform grid with one common spacing, in any order.
analysis::SampledFunction sampled_function_from_csv(const std::string& text);
// Dispatches on a ".csv" suffix, JSON otherwise.
analysis::SampledFunction load_sampled_function(const std::string& path);
Json sampled_function_to_json(const analysis::SampledFunction& f);

}  // namespace cmw::io
