// Truncated asymptotic expansions with optimal truncation and remainder estimates.
#pragma once

#include "hz/common.hpp"
#include "hz/herglotz.hpp"
#include "hz/report.hpp"

#include <string>
#include <vector>

namespace hz {

enum class AsymTarget { FkN_inf, FkN_zero, pair_inf, pair_zero, lambert };

// Parses FkN-inf, FkN-zero, pair-inf, pair-zero, lambert.
AsymTarget parse_asym_target(const std::string& s);
std::string asym_target_name(AsymTarget t);

struct AsymOptions {
    int max_terms = 200;   // raw series indices examined
    int fixed_terms = -1;  // >= 0: sum exactly this many nonzero terms, no optimal stop
    bool printed = false;  // use the series coefficients exactly as printed (comparison only)
};

struct AsymResult {
    cplx value{};
    int truncation_index = 0;  // raw index of the last included term (0: leading part only)
    int terms_used = 0;        // nonzero series terms included
    double first_omitted = 0;  // |first omitted nonzero term|, 0 if none remains
    double omitted_power = 0;  // exponent of the variable in that term
    double exp_estimate = 0;   // envelope of the beyond-all-orders contributions
    cplx first_omitted_value{};
    cplx exp_part{};           // those contributions summed with their phases, where known in closed form
    double remainder_bound = 0;

    EvalOutcome outcome() const { return {value, remainder_bound, terms_used, Method::asymptotic}; }
};

// x -> inf: -zeta(k+N)/(2x) - sum B_{2n} zeta(k+2nN) x^{-2n}/(2n)
AsymResult ext_F_asym_inf(const HerglotzParams& p, cplx x, const AsymOptions& opt = {});
// x -> 0 for integers 1 < k <= N, or k = 1.
AsymResult ext_F_asym_zero(const HerglotzParams& p, cplx x, const AsymOptions& opt = {});
// F_{k,N}(ix/2pi) + F_{k,N}(-ix/2pi) as x -> inf and, for odd k, N, as x -> 0.
AsymResult pair_asym_inf(const HerglotzParams& p, double x, const AsymOptions& opt = {});
AsymResult pair_asym_zero(const HerglotzParams& p, double x, const AsymOptions& opt = {});
// sum n^{N-1-2Nm}/(e^{(2n)^N alpha} - 1) as alpha -> 0; m >= 1, N odd.
AsymResult lambert_asym(int m, int N, double alpha, const AsymOptions& opt = {});

struct AsymQuery {
    AsymTarget target = AsymTarget::FkN_inf;
    double k = 2, N = 1;
    int m = 1;
};

AsymResult asym_eval(const AsymQuery& q, cplx x, const AsymOptions& opt = {});
EvalOutcome asym_direct(const AsymQuery& q, cplx x);

// Report comparing expansion and direct value; passes iff |diff| <= remainder bound + direct error.
IdentityReport check_asym(const AsymQuery& q, cplx x);

// Moves x a factor 2 toward the limit point with the truncation held fixed, and compares the
// measured error exponent with the predicted one (15% relative).
IdentityReport check_asym_scaling(const AsymQuery& q, double x);

}  // namespace hz
