#pragma once

#include <string>
#include <vector>

namespace gfkit {

/// Bound profile for the reproduction suites: normal runs the contractual
// bounds, small shrinks them for quick iteration.
enum class Scale { small, normal };

struct SuiteCheck {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    double seconds = 0.0;

    bool all_pass() const;
};

// Sorted names of every registered suite.
std::vector<std::string> list_suites();

/// Runs one named suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, Scale scale = Scale::normal);

}  // namespace gfkit
