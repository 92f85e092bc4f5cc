// Python module bcfa._core. Values cross the boundary as JSON text in the
// same encoding the command-line tool uses; the bcfa package converts to
// and from Python objects.

#include <pybind11/pybind11.h>

#include "bcfa/json_io.hpp"
#include "bcfa/suites.hpp"

namespace py = pybind11;
using namespace bcfa;
using io::json;

namespace {

py::object error_type;

json hyperbolic_json(const HyperbolicD& h) { return {{"e1", h.a1()}, {"e2", h.a2()}}; }

HyperbolicD hyperbolic_double(const json& j) { return {j.at("e1").get<double>(), j.at("e2").get<double>()}; }

/// Runs `body` on the parsed argument array and returns the JSON result as
/// text. Library errors become bcfa._core.Error carrying the error record.
template <class F>
std::string call(const std::string& args, F body) {
    try {
        return body(json::parse(args)).dump();
    } catch (const Error& e) {
        PyErr_SetObject(error_type.ptr(), py::str(io::to_json(e).dump()).ptr());
        throw py::error_already_set();
    } catch (const json::exception& e) {
        PyErr_SetObject(error_type.ptr(),
                        py::str(json{{"error", "SchemaError"}, {"message", e.what()}}.dump()).ptr());
        throw py::error_already_set();
    }
}

Conjugation conjugation_from(int kind) {
    switch (kind) {
        case 1: return Conjugation::dagger1;
        case 2: return Conjugation::dagger2;
        case 3: return Conjugation::dagger3;
    }
    throw SchemaError("conjugation kind must be 1, 2 or 3");
}

FunctionalForm form_from(const std::string& name) {
    for (auto f : kAllFunctionalForms)
        if (name == to_string(f)) return f;
    throw SchemaError("unknown functional form " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact hyperbolic and bicomplex functional analysis";
    error_type = py::reinterpret_borrow<py::object>(PyErr_NewException("bcfa._core.Error", PyExc_Exception, nullptr));
    m.attr("Error") = error_type;

    m.def("bc_mul", [](const std::string& a) {
        return call(a, [](const json& j) { return io::to_json(io::bicomplex_from(j[0]) * io::bicomplex_from(j[1])); });
    });
    m.def("bc_add", [](const std::string& a) {
        return call(a, [](const json& j) { return io::to_json(io::bicomplex_from(j[0]) + io::bicomplex_from(j[1])); });
    });
    m.def("bc_conjugate", [](const std::string& a) {
        return call(a, [](const json& j) {
            return io::to_json(conjugate(io::bicomplex_from(j[0]), conjugation_from(j[1].get<int>())));
        });
    });
    m.def("bc_inverse", [](const std::string& a) {
        return call(a, [](const json& j) { return io::to_json(bc_inverse(io::bicomplex_from(j[0]))); });
    });
    m.def("bc_from_w", [](const std::string& a) {
        return call(a, [](const json& j) { return io::to_json(bc_from_w(io::complex_from(j[0]), io::complex_from(j[1]))); });
    });
    m.def("modulus_k_squared", [](const std::string& a) {
        return call(a, [](const json& j) { return io::to_json(dnorm_k(io::bicomplex_from(j[0])).squared()); });
    });

    m.def("hyperbolic_part", [](const std::string& a) {
        return call(a, [](const json& j) {
            const auto h = io::bcfunctional_from(j[0]);
            return io::to_json(j[1].is_null() ? hyperbolic_part(h) : hyperbolic_part_via(h, form_from(j[1])));
        });
    });
    m.def("reconstruct", [](const std::string& a) {
        return call(a, [](const json& j) {
            const auto axis = j[1].get<std::string>();
            if (axis != "i" && axis != "j") throw SchemaError("axis must be \"i\" or \"j\"");
            return io::to_json(reconstruct(io::dfunctional_from(j[0]), axis == "i" ? ReconstructAxis::i : ReconstructAxis::j));
        });
    });

    m.def("minkowski_gauge", [](const std::string& a) {
        return call(a, [](const json& j) {
            const auto set = io::dconvex_from(j[0]);
            if (!is_dabsorbing(set)) throw NotAbsorbingError("0 is not interior to the set");
            return io::to_json(minkowski_gauge(set, io::dvector_from(j[1])).value());
        });
    });
    m.def("separate", [](const std::string& a) {
        return call(a, [](const json& j) {
            return io::to_json(separate_hyperbolic(io::dconvex_from(j[0]), io::dconvex_from(j[1])));
        });
    });

    m.def("omt_delta", [](const std::string& a) {
        return call(a, [](const json& j) { return hyperbolic_json(omt_delta(io::map_from(j[0])).delta); });
    });
    m.def("inverse_map", [](const std::string& a) {
        return call(a, [](const json& j) {
            const auto r = inverse_map(io::map_from(j[0]));
            return json{{"inverse", io::to_json(r.inverse)}, {"bound", hyperbolic_json(r.bound)}};
        });
    });
    m.def("map_from_graph", [](const std::string& a) {
        return call(a, [](const json& j) {
            std::vector<BCVectorQ> basis;
            for (const auto& v : j[0]) basis.push_back(io::bcvector_from(v));
            return io::to_json(map_from_graph(basis, j[1].get<std::size_t>()));
        });
    });
    m.def("ubp_bound", [](const std::string& a) {
        return call(a, [](const json& j) {
            MapFamily family;
            for (const auto& t : j[0]) family.push_back(io::map_from(t));
            const auto b = ubp_bound(family, hyperbolic_double(j[1]));
            return json{{"m", hyperbolic_json(b.m)}, {"delta", hyperbolic_json(b.delta)}};
        });
    });

    m.def("verify", [](const std::string& a) {
        return call(a, [](const json& j) {
            const auto backend = j[3].get<std::string>();
            if (backend != "exact" && backend != "float") throw SchemaError("backend must be exact or float");
            const auto name = j[0].get<std::string>();
            if (name != "all" && !is_suite_name(name)) throw SchemaError("unknown suite " + name);
            return to_json(run_suite(name, j[1].get<std::uint64_t>(), j[2].get<std::size_t>(),
                                     backend == "float" ? Backend::floating : Backend::exact));
        });
    });
}
