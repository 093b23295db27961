// J_{k,N} integrals against their F_{k,N} evaluations.
#include "hz/identities.hpp"

#include "hz/special.hpp"
#include "hz/track.hpp"

namespace hz {

IdentityReport check_thm28(int k, int N, double x, double tol, const JkNOptions& opt) {
    if (k < 1 || N < 1) throw DomainError("J_{k,N} needs positive integers k, N");
    if (!(x > 0)) throw DomainError("J_{k,N} needs x > 0");
    Track L, R;
    IdentityReport r = make_report("thm28", {{"k", (long long)k}, {"N", (long long)N}, {"x", x}});
    QuadResult q = J_kN(k, N, x, opt);
    r.lhs = L.take(1.0, q.value, q.abs_err, q.panels);
    const double P = std::ldexp(1.0, N), c = std::ldexp(1.0, k - 1) + std::ldexp(1.0, 1 - k);
    r.rhs = R.F(1.0, k, N, P * x) + R.F(-c, k, N, x) + R.F(1.0, k, N, x / P);
    r.rhs += R.add((P + 1.0 / P - c) * zeta(k + N) / x);
    return L.close(r, R, tol);
}

IdentityReport check_cor29(int k, double x, double tol) {
    if (k < 2) throw DomainError("cor29 needs integer k >= 2");
    if (!(x > 0)) throw DomainError("cor29 needs x > 0");
    Track L, R;
    IdentityReport r = make_report("cor29", {{"k", (long long)k}, {"x", x}});
    QuadResult q = J_kN(k, 1, x);
    r.lhs = L.take(1.0, q.value, q.abs_err, q.panels);
    const double c = std::ldexp(1.0, k - 1) + std::ldexp(1.0, 1 - k);
    r.rhs = R.Fk(1.0, k, 2.0 * x) + R.Fk(-c, k, x) + R.Fk(1.0, k, x / 2.0);
    r.rhs += R.add((2.0 - c) * (zeta_deriv(k) - zeta(k) * std::log(x) + zeta(k + 1) / x) + zeta(k + 1) / (2.0 * x));
    return L.close(r, R, tol);
}

IdentityReport check_cor210(int k, double tol) {
    if (k < 3 || k % 2 == 0) throw DomainError("cor210 needs odd k >= 3");
    Track L, R;
    IdentityReport r = make_report("cor210", {{"k", (long long)k}});
    QuadResult q = J_kN(k, 1, 1.0);
    r.lhs = L.take(1.0, q.value, q.abs_err, q.panels);
    const double p = std::ldexp(1.0, k - 1), pm = std::ldexp(1.0, -k);
    r.rhs = R.Fk(1.0 - 2.0 * pm, k, 2.0);
    r.rhs += R.add((p - 1.0) * euler_gamma * zeta(k) + (0.5 - pm) * zeta(k + 1) + (2.0 - p - 2.0 * pm) * zeta_deriv(k));
    for (int s = 2; s <= k - 1; ++s)
        r.rhs += R.add(sign_pow(s - 1) * (p / 2.0 + pm - std::ldexp(1.0, s - k)) * zeta(s) * zeta(k + 1 - s));
    return L.close(r, R, tol);
}

}  // namespace hz
