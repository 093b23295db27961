// Identity reports and their JSON / CSV / text serializations.
#pragma once

#include "hz/common.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hz {

using ParamValue = std::variant<long long, double, cplx, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

struct IdentityReport {
    std::string identity;
    ParamList params;
    cplx lhs{};
    cplx rhs{};
    double lhs_err = 0.0;
    double rhs_err = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    long long terms_used = 0;
    double runtime_ms = 0.0;
    std::vector<std::string> notes;
};

inline IdentityReport make_report(std::string identity, ParamList params) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    return r;
}

// Fill residuals, tolerance = max(tol, 3 (lhs_err + rhs_err)), and the pass flag.
void finalize(IdentityReport& r, double tol);

enum class OutputFormat { json, csv, text };

// 17 significant digits, fixed key order.
std::string format_double(double v);
std::string to_json(const IdentityReport& r);
std::string to_json(const std::vector<IdentityReport>& rs);
std::string to_csv(const std::vector<IdentityReport>& rs);
std::string to_text(const std::vector<IdentityReport>& rs);
std::string render(const std::vector<IdentityReport>& rs, OutputFormat f);

// Inverse of to_json, for round-trip checks and downstream tooling.
std::vector<IdentityReport> reports_from_json(const std::string& text);

}  // namespace hz
