#include "bcfa/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bcfa::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
    return *it;
}

const json& array(const json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array");
    return j;
}

template <typename T, typename F>
std::vector<T> list(const json& j, const char* what, F&& item) {
    std::vector<T> out;
    for (const auto& e : array(j, what)) out.push_back(item(e));
    return out;
}

std::vector<RealVec> point_list(const json& j, const char* what) {
    auto pts = list<RealVec>(j, what, real_vector_from);
    if (pts.empty()) fail(std::string(what) + " must not be empty");
    for (const auto& p : pts)
        if (p.size() != pts.front().size()) fail(std::string(what) + " have different dimensions");
    return pts;
}

}  // namespace

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

// ---------------------------------------------------------------------------
// Output

json to_json(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
    return format_rational(c);
}

json to_json(const ComplexQ& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }
json to_json(const HyperbolicQ& h) { return {{"e1", to_json(h.a1())}, {"e2", to_json(h.a2())}}; }
json to_json(const BicomplexQ& z) { return {{"z1", to_json(z.z1())}, {"z2", to_json(z.z2())}}; }

json to_json(const RealVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const DVectorQ& v) {
    json out = json::array();
    for (const auto& x : v.coords) out.push_back(to_json(x));
    return out;
}

json to_json(const BCVectorQ& v) {
    json out = json::array();
    for (const auto& x : v.coords) out.push_back(to_json(x));
    return out;
}

json to_json(const DFunctionalQ& f) { return {{"coeffs", to_json(f.coeffs)}}; }
json to_json(const BCFunctionalQ& h) { return {{"coeffs", to_json(h.coeffs)}}; }

json to_json(const BCMapQ& t) {
    json rows = json::array();
    for (const auto& r : t.entries) {
        json row = json::array();
        for (const auto& z : r) row.push_back(to_json(z));
        rows.push_back(std::move(row));
    }
    return {{"rows", std::move(rows)}};
}

json to_json(const RectSet& r) {
    return {{"c1", {to_json(r.lo1), to_json(r.hi1)}}, {"c2", {to_json(r.lo2), to_json(r.hi2)}}};
}

json to_json(const RealPolytope& p) {
    json out;
    if (p.has_vertices()) {
        json vs = json::array();
        for (const auto& v : p.vertices()) vs.push_back(to_json(v));
        out["vertices"] = std::move(vs);
    } else {
        json hs = json::array();
        for (const auto& h : p.halfspaces()) hs.push_back({{"a", to_json(h.a)}, {"b", to_json(h.b)}, {"strict", h.strict}});
        out["halfspaces"] = std::move(hs);
        out["dim"] = p.dim();
    }
    return out;
}

json to_json(const DConvexSet& s) { return {{"p1", to_json(s.p1)}, {"p2", to_json(s.p2)}, {"open", s.open}}; }

json to_json(const SeparationCertificate& c) {
    json gauges = json::array();
    for (const auto& g : c.trace.gauge_values) gauges.push_back(to_json(g));
    json trace = {{"a0", to_json(c.trace.a0)},
                  {"b0", to_json(c.trace.b0)},
                  {"x0", to_json(c.trace.x0)},
                  {"g", to_json(c.trace.g)},
                  {"gauge_values", std::move(gauges)}};
    json checks = json::array();
    for (const auto& ch : c.checks)
        checks.push_back({{"vertex", to_json(ch.vertex)}, {"side", ch.side_a ? "A" : "B"}, {"value", to_json(ch.value)}});
    return {{"f", to_json(c.f)}, {"gamma", to_json(c.gamma)}, {"trace", std::move(trace)}, {"checks", std::move(checks)}};
}

json to_json(const Error& e) {
    json out = {{"error", e.kind()}, {"message", e.what()}};
    if (const auto* nd = dynamic_cast<const NotDisjointError*>(&e)) out["witness"] = to_json(nd->witness());
    if (const auto* ce = dynamic_cast<const ComponentError*>(&e)) out["component"] = ce->component();
    if (const auto* nc = dynamic_cast<const NotACoverError*>(&e))
        out["witness"] = to_json(HyperbolicQ(nc->witness_e1(), nc->witness_e2()));
    return out;
}

// ---------------------------------------------------------------------------
// Input

Rational rational_from(const json& j) {
    std::optional<Rational> q;
    if (j.is_number_integer() || j.is_number_unsigned()) {
        q = parse_rational(j.dump());
    } else if (j.is_number_float()) {
        // The shortest round-trip literal reproduces the decimal as written.
        q = parse_rational(j.dump());
    } else if (j.is_string()) {
        q = parse_rational(j.get<std::string>());
    } else {
        fail("expected a number or a \"p/q\" string, got " + j.dump());
    }
    if (!q) fail("not a rational: " + j.dump());
    return *q;
}

ComplexQ complex_from(const json& j) {
    if (j.is_number() || j.is_string()) return ComplexQ(rational_from(j), Rational(0));
    return {rational_from(field(j, "re")), rational_from(field(j, "im"))};
}

HyperbolicQ hyperbolic_from(const json& j) { return {rational_from(field(j, "e1")), rational_from(field(j, "e2"))}; }

BicomplexQ bicomplex_from(const json& j) { return {complex_from(field(j, "z1")), complex_from(field(j, "z2"))}; }

RealVec real_vector_from(const json& j) { return list<Rational>(j, "real vector", rational_from); }

DVectorQ dvector_from(const json& j) {
    if (j.is_object()) return DVectorQ{hyperbolic_from(j)};
    DVectorQ v;
    v.coords = list<HyperbolicQ>(j, "D-vector", hyperbolic_from);
    return v;
}

BCVectorQ bcvector_from(const json& j) {
    if (j.is_object()) return BCVectorQ{bicomplex_from(j)};
    BCVectorQ v;
    v.coords = list<BicomplexQ>(j, "BC-vector", bicomplex_from);
    return v;
}

DFunctionalQ dfunctional_from(const json& j) { return DFunctionalQ(dvector_from(field(j, "coeffs"))); }
BCFunctionalQ bcfunctional_from(const json& j) { return BCFunctionalQ(bcvector_from(field(j, "coeffs"))); }

BCMapQ map_from(const json& j) {
    auto rows = list<std::vector<BicomplexQ>>(field(j, "rows"), "map rows",
                                              [](const json& r) { return list<BicomplexQ>(r, "map row", bicomplex_from); });
    try {
        return BCMapQ(std::move(rows));
    } catch (const DimensionMismatch& e) {
        fail(e.what());
    }
}

RectSet rect_from(const json& j) {
    auto interval = [&](const char* key) {
        const auto v = real_vector_from(field(j, key));
        if (v.size() != 2) fail(std::string(key) + " must be [lo, hi]");
        return v;
    };
    const auto c1 = interval("c1"), c2 = interval("c2");
    try {
        return RectSet(c1[0], c1[1], c2[0], c2[1]);
    } catch (const DegenerateSetError& e) {
        fail(e.what());
    }
}

RealPolytope polytope_from(const json& j) {
    if (!j.is_object()) fail("polytope must be an object");
    const bool open = j.contains("open") ? j.at("open").is_boolean() && j.at("open").get<bool>() : false;
    if (j.contains("open") && !j.at("open").is_boolean()) fail("\"open\" must be a boolean");
    if (j.contains("vertices")) return RealPolytope::from_vertices(point_list(j.at("vertices"), "vertices"), open);
    if (j.contains("halfspaces")) {
        std::vector<Halfspace> faces;
        for (const auto& h : array(j.at("halfspaces"), "halfspaces")) {
            Halfspace f{real_vector_from(field(h, "a")), rational_from(field(h, "b")), false};
            if (h.contains("strict")) {
                if (!h.at("strict").is_boolean()) fail("\"strict\" must be a boolean");
                f.strict = h.at("strict").get<bool>();
            }
            faces.push_back(std::move(f));
        }
        std::size_t dim = 0;
        if (j.contains("dim")) {
            if (!j.at("dim").is_number_unsigned()) fail("\"dim\" must be a nonnegative integer");
            dim = j.at("dim").get<std::size_t>();
        } else if (!faces.empty()) {
            dim = faces.front().a.size();
        }
        for (const auto& f : faces)
            if (f.a.size() != dim) fail("halfspace normals have different dimensions");
        if (dim == 0) fail("polytope dimension must be positive");
        return RealPolytope::from_halfspaces(dim, std::move(faces), open);
    }
    fail("polytope needs \"vertices\" or \"halfspaces\"");
}

DConvexSet dconvex_from(const json& j) {
    if (!j.is_object()) fail("D-convex set must be an object");
    bool open = false;
    if (j.contains("open")) {
        if (!j.at("open").is_boolean()) fail("\"open\" must be a boolean");
        open = j.at("open").get<bool>();
    }
    try {
        if (j.contains("p1") || j.contains("p2"))
            return DConvexSet(polytope_from(field(j, "p1")), polytope_from(field(j, "p2")), open);
        const auto p = polytope_from(j);
        return DConvexSet(p, p, open);
    } catch (const DimensionMismatch& e) {
        fail(e.what());
    }
}

CoverFile cover_from(const json& j) {
    return {rect_from(field(j, "box")), list<RectSet>(field(j, "sets"), "cover sets", rect_from)};
}

}  // namespace bcfa::io
