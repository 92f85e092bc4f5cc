// Command-line front end: verification suites, separation certificates and
// hyperbolic gauges from JSON files.
//
// Exit codes: 0 success, 1 a mathematical failure (suite failures, sets not
// disjoint, set not absorbing), 2 bad flags or malformed input.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "bcfa/json_io.hpp"
#include "bcfa/suites.hpp"

using namespace bcfa;
using io::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << text;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t cases, const std::string& backend,
               const std::string& report_path, const std::string& format) {
    const auto report = run_suite(suite, seed, cases, backend == "float" ? Backend::floating : Backend::exact);
    const std::string json_text = to_json(report).dump(2) + "\n";
    if (!report_path.empty()) {
        write_output(report_path, format == "text" ? to_text(report) : json_text);
        std::cout << to_text(report);
    } else {
        std::cout << (format == "json" ? json_text : to_text(report));
    }
    return report.passed() ? kOk : kFailed;
}

int cmd_separate(const std::string& input, const std::string& output) {
    DConvexSet a, b;
    try {
        const json doc = io::read_file(input);
        a = io::dconvex_from(doc.at("A"));
        b = io::dconvex_from(doc.at("B"));
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kUsage;
    }
    try {
        const auto cert = separate_hyperbolic(a, b);
        write_output(output, io::to_json(cert).dump(2) + "\n");
        return kOk;
    } catch (const NotDisjointError& e) {
        write_output(output, io::to_json(e).dump(2) + "\n");
        return kFailed;
    } catch (const Error& e) {
        std::cerr << io::to_json(e).dump() << "\n";
        return kFailed;
    }
}

int cmd_gauge(const std::string& polytope_path, const std::string& point_path, const std::string& backend) {
    DConvexSet set;
    DVectorQ x;
    try {
        set = io::dconvex_from(io::read_file(polytope_path));
        x = io::dvector_from(io::read_file(point_path));
        if (x.dim() != set.dim()) throw SchemaError("point and set dimensions differ");
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kUsage;
    }
    try {
        if (!is_dabsorbing(set)) throw NotAbsorbingError("0 is not interior to the set");
        if (backend == "float") {
            std::string out;
            for (int l = 1; l <= 2; ++l) {
                const auto p = with_both_representations(set.component(l));
                std::vector<double> xd;
                for (const auto& v : x.component(l)) xd.push_back(v.get_d());
                out += (l == 1 ? "" : " ") + format_real(gauge_from_faces(p.halfspaces(), xd));
            }
            std::cout << out << "\n";
        } else {
            const auto q = minkowski_gauge(set, x).value();
            std::cout << format_rational(q.a1()) << " " << format_rational(q.a2()) << "\n";
        }
        return kOk;
    } catch (const NotAbsorbingError& e) {
        std::cerr << io::to_json(e).dump() << "\n";
        return kFailed;
    } catch (const Error& e) {
        std::cerr << io::to_json(e).dump() << "\n";
        return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic and bicomplex functional analysis toolkit"};
    app.require_subcommand(1);

    std::string suite = "all", backend = "exact", report_path, format = "text";
    std::uint64_t seed = 0;
    std::size_t cases = 1000;
    auto* verify = app.add_subcommand("verify", "Run seeded property suites");
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);
    verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites));
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--cases", cases, "Random cases per property")->check(CLI::PositiveNumber);
    verify->add_option("--backend", backend, "Arithmetic backend")->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--report", report_path, "Write the report to this file");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

    std::string input, output;
    auto* separate = app.add_subcommand("separate", "Separate an open D-convex set A from B");
    separate->add_option("input", input, "JSON file with keys A and B")->required();
    separate->add_option("-o,--output", output, "Certificate output file (default stdout)");

    std::string polytope_path, point_path, gauge_backend = "exact";
    auto* gauge = app.add_subcommand("gauge", "Hyperbolic Minkowski gauge of a point");
    gauge->add_option("polytope", polytope_path, "D-convex set JSON")->required();
    gauge->add_option("point", point_path, "Point JSON")->required();
    gauge->add_option("--backend", gauge_backend, "Arithmetic backend")->check(CLI::IsMember({"exact", "float"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, seed, cases, backend, report_path, format);
        if (separate->parsed()) return cmd_separate(input, output);
        if (gauge->parsed()) return cmd_gauge(polytope_path, point_path, gauge_backend);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
