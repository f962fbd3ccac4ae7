#pragma once

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgc {

class UnknownSuite : public std::invalid_argument {
public:
    explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

struct Check {
    std::string id;        // frozen, e.g. "L1.3.ii"
    std::string suite;
    std::string paper_ref;
    std::string claim;
    std::string status;    // "pass", "fail", "skipped"
    nlohmann::ordered_json witness;
    double elapsed_ms = 0;
};

struct RunConfig {
    std::vector<std::string> suites;
    std::filesystem::path fixtures_dir;
    std::string format = "json";
};

struct Report {
    std::string suite;  // requested suites joined by ','
    std::vector<Check> checks;
    std::vector<std::string> warnings;
    nlohmann::ordered_json config;

    bool all_pass() const;
    std::size_t count(const std::string& status) const;
};

/// group, orbits, picard, noether, funfield, a5; "all" expands to every suite.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for a bad name and FixtureError for unreadable fixtures.
Report run_suite(const RunConfig& config);

/// Checks sorted by id, fixed key order; elapsed_ms only when timings is set.
std::string emit_json(const Report& report, bool timings = false);
/// One block per suite with PASS/FAIL/SKIP lines; failing witnesses printed in full.
std::string emit_text(const Report& report, bool timings = false);

/// $VGC_FIXTURES if set, else the directory compiled in.
std::filesystem::path default_fixtures_dir();

}  // namespace vgc
