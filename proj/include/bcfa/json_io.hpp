#pragma once

// JSON encodings of scalars, vectors, functionals, maps, sets and
// certificates. Malformed input raises SchemaError.
//
// Rationals are written as integers when integral and as "p/q" strings
// otherwise. On input, JSON numbers are read exactly from their decimal
// literal, and strings may hold "p/q" or a decimal.

#include "json.hpp"

#include "bcfa/analysis.hpp"
#include "bcfa/convex.hpp"
#include "bcfa/metric.hpp"

namespace bcfa::io {

using nlohmann::json;

json parse_document(const std::string& text);
json read_file(const std::string& path);

json to_json(const Rational& q);
json to_json(const ComplexQ& z);
json to_json(const HyperbolicQ& h);
json to_json(const BicomplexQ& z);
json to_json(const RealVec& v);
json to_json(const DVectorQ& v);
json to_json(const BCVectorQ& v);
json to_json(const DFunctionalQ& f);
json to_json(const BCFunctionalQ& h);
json to_json(const BCMapQ& t);
json to_json(const RectSet& r);
json to_json(const RealPolytope& p);
json to_json(const DConvexSet& s);
json to_json(const SeparationCertificate& c);
json to_json(const Error& e);

Rational rational_from(const json& j);
ComplexQ complex_from(const json& j);
HyperbolicQ hyperbolic_from(const json& j);
BicomplexQ bicomplex_from(const json& j);
RealVec real_vector_from(const json& j);
/// An array of hyperbolic scalars, or a single one for D^1.
DVectorQ dvector_from(const json& j);
BCVectorQ bcvector_from(const json& j);
DFunctionalQ dfunctional_from(const json& j);
BCFunctionalQ bcfunctional_from(const json& j);
BCMapQ map_from(const json& j);
RectSet rect_from(const json& j);
RealPolytope polytope_from(const json& j);
/// {"p1", "p2", "open"}, or a single polytope used for both components.
DConvexSet dconvex_from(const json& j);

struct CoverFile {
    RectSet box;
    std::vector<RectSet> sets;
};
/// {"box": RectSet, "sets": [RectSet...]}.
CoverFile cover_from(const json& j);

}  // namespace bcfa::io
