// Verification suites: default grids, flag overrides, and the parallel runner.
#pragma once

#include "hz/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hz {

// Grid overrides from the command line or config; empty lists keep the suite defaults.
struct SuiteParams {
    std::vector<double> k, N, m, a;
    std::vector<cplx> x, alpha;
    std::optional<double> tolerance;  // replaces every per-identity default tolerance
};

struct GridTask {
    std::string identity;
    std::function<IdentityReport()> run;
};

// Suite ids accepted by `verify`, without "all".
const std::vector<std::string>& suite_ids();
bool is_suite(const std::string& id);

// Identity names that `verify all` must produce.
const std::vector<std::string>& identity_manifest();

// Throws DomainError for unknown ids.
std::vector<GridTask> build_suite(const std::string& id, const SuiteParams& p);

struct RunResult {
    std::vector<IdentityReport> reports;  // grid order
    bool domain_error = false;
    std::string error;
};

// Runs tasks on `parallelism` workers. A DomainError in any task sets domain_error; any
// other exception becomes a failing report.
RunResult run_tasks(const std::vector<GridTask>& tasks, int parallelism, bool timing = false);

}  // namespace hz
