// Error bookkeeping for one side of an identity.
#pragma once

#include "hz/herglotz.hpp"
#include "hz/report.hpp"

namespace hz {

struct Track {
    double err = 0.0;
    long long terms = 0;

    // c * e.value, charging |c| times the evaluation error plus one rounding.
    cplx take(cplx c, const EvalOutcome& e) {
        cplx v = c * e.value;
        err += std::abs(c) * e.abs_err + 2e-16 * std::abs(v);
        terms += e.terms_used;
        return v;
    }
    cplx take(cplx c, cplx value, double abs_err, long long n) { return take(c, EvalOutcome{value, abs_err, n, Method::direct_sum}); }

    // A closed-form term; only rounding is charged.
    cplx add(cplx v) {
        err += 4e-16 * std::abs(v);
        return v;
    }

    cplx F(cplx c, double k, double N, cplx x) { return take(c, ext_F(k, N, x)); }
    cplx Fk(cplx c, int k, cplx x) { return take(c, higher_F_k(k, x)); }

    IdentityReport close(IdentityReport& r, const Track& rhs, double tol) const {
        r.lhs_err = err;
        r.rhs_err = rhs.err;
        r.terms_used = terms + rhs.terms;
        finalize(r, tol);
        return r;
    }
};

}  // namespace hz
