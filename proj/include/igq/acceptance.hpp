#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

// Oracle-versus-closed-form verification suite. Shared by the acceptance
// binary, the CLI `verify` command and the Python bindings.
namespace igq::acceptance {

struct CheckResult {
    int id = 0;
    std::string name;
    std::string group;
    bool pass = false;
    double residual = 0.0;   // the headline quantity compared against tolerance
    double tolerance = 0.0;
    double seconds = 0.0;
    double time_limit = 0.0;
    std::string detail;
    std::map<std::string, double> metrics;  // secondary residuals, keyed for JSON
};

struct SuiteOptions {
    // Groups or numeric ids to run; empty runs everything.
    std::set<std::string> only;
    // Criterion id -> replacement for its headline tolerance.
    std::map<int, double> tolerance_override;
    // Offset injected into g_00 of the correlated 3D metric (negative control).
    double metric_fault = 0.0;
};

struct CriterionInfo {
    int id;
    const char* name;
    const char* group;
};
const std::vector<CriterionInfo>& criteria();

std::vector<CheckResult> run(const SuiteOptions& opt = {});
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace igq::acceptance
