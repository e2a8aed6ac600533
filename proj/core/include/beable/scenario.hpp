#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "beable/matrix_ops.hpp"
#include "beable/tolerances.hpp"

namespace beable {

/// Declarative description of one verification scenario.
struct ScenarioConfig {
    std::string name;
    std::string kind;  ///< singlet | theorem1 | weyl_finite | custom

    // theorem1 layout: either tensor factor dimensions ...
    std::vector<int> dims;
    // ... or a site lattice with two disjoint regions of sites
    std::vector<int> lattice_sites;
    std::vector<int> region1, region2;

    // weyl_finite parameters
    int d = 2, u = 0, v = 0, a = 1, b = 1;

    int max_power = 4;
    int n_symmetry_samples = 8;
    std::uint64_t seed = 1;

    // custom factor generators and Howard-style candidate pool
    std::vector<OperatorMatrix> generators1, generators2, pool;

    ToleranceConfig tol;
};

struct CheckResult {
    std::string id;
    std::string anchor;   ///< which result of the analysis the check verifies
    std::string status;   ///< pass | fail | skipped
    std::map<std::string, double> measured;
    std::string note;  ///< skip reason or error message, empty otherwise
    double tolerance = 0.0;
    double time_ms = 0.0;
};

struct Report {
    std::string scenario;
    std::uint64_t seed = 0;
    ToleranceConfig tol;
    std::vector<CheckResult> checks;
    nlohmann::json witnesses;

    [[nodiscard]] bool pass() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

/// Parse a scenario config from JSON; throws InvalidInput with a
/// field-level message on malformed input.
ScenarioConfig parse_config(const nlohmann::json& j);

/// All built-in scenarios.
std::vector<ScenarioConfig> list_builtin_scenarios();

/// Execute every check of the scenario. Numerical failures become failed
/// checks, not exceptions; deterministic given (config, seed).
Report run_scenario(const ScenarioConfig& config);

/// Serialize a report. Formats: "json" (sorted keys, floats rounded to 15
/// significant digits) or "text" (one line per check). Timings are
/// excluded from JSON unless requested, keeping JSON output byte-stable
/// for identical (config, seed).
std::string emit_report(const Report& report, const std::string& format,
                        bool include_timing = false);

nlohmann::json report_to_json(const Report& report, bool include_timing = false);

/// Round to 15 significant digits; used for stable report serialization.
double round_sig15(double x);

}  // namespace beable
