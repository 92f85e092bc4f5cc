#pragma once

// Seeded property suites behind `bcfa verify`. Each suite draws its cases
// from the seed alone, so a report reproduces from (suite, seed, cases,
// backend).

#include <cstdint>
#include <string>
#include <vector>

#include "bcfa/json_io.hpp"

namespace bcfa {

struct SuiteFailure {
    std::string suite;
    std::string check;
    std::size_t case_index = 0;
    io::json inputs;
    std::string expected;
    io::json observed;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    Backend backend = Backend::exact;
    std::size_t cases_run = 0;
    std::vector<SuiteFailure> failures;  ///< the first records; failure_count has the total
    std::size_t failure_count = 0;
    double wall_ms = 0.0;

    bool passed() const { return failure_count == 0; }
};

/// The individual suites, in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite or "all". `cases` is the number of random cases for the
/// scalar suites; the LP-backed suites scale it down (see the README).
/// Throws std::invalid_argument on an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t cases, Backend backend);

/// JSON report; the "timestamp" object holds everything that varies
/// between identical runs.
io::json to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

}  // namespace bcfa
