// Ramanujan-type transformations of generalized Lambert series.
#include "hz/identities.hpp"

#include "hz/lambert.hpp"
#include "hz/special.hpp"
#include "hz/track.hpp"

#include <vector>

namespace hz {

namespace {

cplx lam(Track& t, cplx c, double p, int N, cplx alpha, double a = 1.0) {
    return t.take(c, lambert_sum(LambertSpec{p, N, alpha, a}));
}

double bern_ratio(int n) { return bernoulli_number(n) / factorial(n); }

std::vector<int> half_range(int N) {
    std::vector<int> js;
    for (int j = -(N - 1) / 2; j <= (N - 1) / 2; ++j) js.push_back(j);
    return js;
}

void need_odd(int N, const char* what) {
    if (N < 1 || N % 2 == 0) throw DomainError(std::string(what) + " needs odd N >= 1");
}

}  // namespace

IdentityReport check_ramanujan(int m, cplx alpha, double tol) {
    if (m == 0) throw DomainError("ramanujan needs m != 0");
    if (!(alpha.real() > 0)) throw DomainError("ramanujan needs Re alpha > 0");
    Track L, R;
    IdentityReport r = make_report("ramanujan", {{"m", (long long)m}, {"alpha", alpha}});
    cplx beta = pi * pi / alpha;
    const double z = zeta(2 * m + 1) / 2.0;
    cplx am = std::pow(alpha, -m), bm = std::pow(-beta, -m);
    r.lhs = L.add(am * z) + lam(L, am, -2 * m - 1, 1, alpha);
    r.rhs = R.add(bm * z) + lam(R, bm, -2 * m - 1, 1, beta);
    const double p2 = std::ldexp(1.0, 2 * m);
    for (int j = 0; j <= m + 1; ++j)
        r.rhs += R.add(-p2 * sign_pow(j) * bern_ratio(2 * j) * bern_ratio(2 * m + 2 - 2 * j) * std::pow(alpha, m + 1 - j) *
                       std::pow(beta, j));
    return L.close(r, R, tol);
}

IdentityReport check_companion(int m, cplx alpha, double tol) {
    if (m < 1) throw DomainError("companion needs m >= 1");
    if (!(alpha.real() > 0)) throw DomainError("companion needs Re alpha > 0");
    Track L, R;
    IdentityReport r = make_report("companion", {{"m", (long long)m}, {"alpha", alpha}});
    cplx beta = pi * pi / alpha;
    cplx am = std::pow(alpha, -(m - 0.5));
    r.lhs = L.add(am * zeta(2 * m) / 2.0) + lam(L, am, -2 * m, 1, alpha);
    for (int j = 0; j <= m - 1; ++j)
        r.lhs += L.add(-std::ldexp(1.0, 2 * j - 1) * bern_ratio(2 * j) * zeta(2 * m - 2 * j + 1) * std::pow(alpha, 2 * j - m - 0.5));
    cplx pre = sign_pow(m + 1) * std::pow(beta, -(m - 0.5));
    r.rhs = R.add(pre * euler_gamma * zeta(2 * m) / pi) +
            R.take(pre / (2.0 * pi), psi_pair_sum(2 * m, 1, cplx(0, 1) * beta / pi));
    return L.close(r, R, tol);
}

IdentityReport check_thm211(int m, int N, cplx alpha, double tol) {
    if (m < 1) throw DomainError("thm211 needs m >= 1");
    need_odd(N, "thm211");
    if (!(alpha.real() > 0)) throw DomainError("thm211 needs Re alpha > 0");
    Track L, R;
    IdentityReport r = make_report("thm211", {{"m", (long long)m}, {"N", (long long)N}, {"alpha", alpha}});
    cplx beta = lambert_beta(alpha, N);
    const double e = 2.0 * N * m / (N + 1.0);
    cplx am = std::pow(alpha, -(e - 0.5));
    r.lhs = L.add(am * zeta(2.0 * N * m + 1 - N) / 2.0) + lam(L, am, -2.0 * N * m - 1 + N, N, alpha);
    for (int j = 0; j <= m - 1; ++j)
        r.lhs += L.add(-bern_ratio(2 * j) * zeta(2.0 * N * m + 1 - 2.0 * N * j) * std::ldexp(1.0, N * (2 * j - 1)) *
                       std::pow(alpha, 2 * j - e - 0.5));
    cplx pre = std::ldexp(1.0, 2 * m * (N - 1)) / (N * std::pow(pi, (N + 1) / 2.0)) * sign_pow(m + 1) *
               std::pow(beta, -(e - N / 2.0));
    r.rhs = R.add(pre * double(N) * euler_gamma / std::ldexp(1.0, N - 1) * zeta(2 * m));
    const double c = std::pow(2.0, 1.0 / N) / (2.0 * pi);
    for (int j : half_range(N))
        r.rhs += R.take(pre / std::ldexp(1.0, N), psi_pair_sum(2 * m, 1.0 / N, cplx(0, 1) * beta * c * expipi(double(j) / N)));
    return L.close(r, R, tol);
}

namespace {

// sum_n sum_j [log w - (psi(iw) + psi(-iw))/2], w = c n^{1/N} e^{i pi j/N}
EvalOutcome divisor_dual_sum(int N, double c) {
    EvalOutcome out;
    out.method = Method::series_tail;
    const double W = 41.5 / (2.0 * pi * std::sin(pi / (2.0 * N)));
    const long long M = std::max<long long>(1, static_cast<long long>(std::ceil(std::pow(W / c, N))));
    Accumulator<cplx> acc;
    std::vector<cplx> ph;
    for (int j : half_range(N)) ph.push_back(expipi(double(j) / N));
    for (long long n = 1; n <= M; ++n) {
        double r = c * std::pow(static_cast<double>(n), 1.0 / N);
        for (cplx p : ph) {
            cplx w = r * p;
            acc.add(-0.5 * (psi_minus_log(cplx(0, 1) * w) + psi_minus_log(cplx(0, -1) * w)));
        }
    }
    // n > M: only powers w^{-2lN} survive the j-sum.
    double last = 0.0;
    for (int l = 1; l <= 40; ++l) {
        int q = l * N;
        double t = N * bernoulli_number(2 * q) / (2.0 * q) * sign_pow(q) * std::pow(c, -2.0 * q) * zeta_tail(2.0 * l, M);
        acc.add(t);
        last = std::abs(t);
        if (last < 1e-19 * std::max(1.0, std::abs(acc.value()))) break;
    }
    out.value = acc.value();
    out.abs_err = last + 4e-16 * std::abs(out.value);
    out.terms_used = M * N;
    return out;
}

}  // namespace

IdentityReport check_thm212(int N, double alpha, double tol) {
    need_odd(N, "thm212");
    if (!(alpha > 0)) throw DomainError("thm212 needs alpha > 0");
    Track L, R;
    IdentityReport r = make_report("thm212", {{"N", (long long)N}, {"alpha", alpha}});
    const double beta = lambert_beta(alpha, N).real();
    const double P = std::ldexp(1.0, N);
    r.lhs = lam(L, 1.0, N - 1, N, alpha);
    const double c0 = (N * euler_gamma - log_2pi - (N - 1) * ln2) / (P * alpha * N);
    r.lhs += L.add(-c0);
    r.rhs = R.add(std::log(beta / alpha) / (P * alpha * (N + 1)));
    EvalOutcome d = divisor_dual_sum(N, beta * std::pow(2.0, 1.0 / N) / (2.0 * pi));
    r.rhs += R.take(2.0 / (P * alpha * N), d);
    if (N == 1) r.rhs += R.add(0.25);
    IdentityReport out = L.close(r, R, tol);
    // Printed form: log(alpha/beta), (N-1)(log 2 - gamma), and alpha/2 at N = 1.
    cplx printed_lhs = out.lhs + c0 - (N * euler_gamma - log_2pi - (N - 1) * (ln2 - euler_gamma)) / (P * alpha * N);
    cplx printed_rhs = out.rhs - 2.0 * std::log(beta / alpha) / (P * alpha * (N + 1)) + (N == 1 ? alpha / 2.0 - 0.25 : 0.0);
    out.notes.push_back("corrected form used; printed form gives residual " + format_double(std::abs(printed_lhs - printed_rhs)));
    return out;
}

IdentityReport check_zetagen_a(double a, int m, int N, double alpha, double tol) {
    if (!(a > 0 && a <= 1)) throw DomainError("zetagen-a needs 0 < a <= 1");
    if (m < 1) throw DomainError("zetagen-a needs m >= 1");
    need_odd(N, "zetagen-a");
    if (!(alpha > 0)) throw DomainError("zetagen-a needs alpha > 0");
    Track L, R;
    IdentityReport r = make_report("zetagen-a", {{"a", a}, {"m", (long long)m}, {"N", (long long)N}, {"alpha", alpha}});
    const double beta = lambert_beta(alpha, N).real();
    const double P2 = std::ldexp(1.0, N);
    const double am = std::pow(alpha, -2.0 * N * m / (N + 1.0));
    r.lhs = L.add(am * (a - 0.5) * zeta(2.0 * N * m + 1));
    for (int j = 1; j <= m - 1; ++j)
        r.lhs += L.add(am * bernoulli_poly(2 * j + 1, a) / factorial(2 * j + 1) * zeta(2.0 * N * m + 1 - 2.0 * j * N) *
                       std::pow(P2 * alpha, 2 * j));
    r.lhs += lam(L, am, -2.0 * N * m - 1, N, alpha, a);

    const double s0 = sign_pow((N + 3) / 2);
    const double pre = std::pow(-std::pow(beta, 2.0 * N / (N + 1.0)), -m) * std::ldexp(1.0, 2 * m * (N - 1)) / N;
    r.rhs = R.add(pre * sign_pow(m + 1) * std::pow(2.0 * pi, 2 * m) * bernoulli_poly(2 * m + 1, a) * N * euler_gamma /
                  factorial(2 * m + 1));
    r.rhs += R.add(pre * 0.5 * polylog(2 * m + 1, std::exp(cplx(0, 2.0 * pi * a))).real());

    // Exponentially convergent cosine sum.
    for (int j : half_range(N)) {
        Accumulator<cplx> acc;
        cplx ph = beta * expipi(double(j) / N);
        long long n = 1;
        for (;; ++n) {
            cplx y = std::pow(2.0 * n, 1.0 / N) * ph;
            cplx t = std::pow(double(n), -2.0 * m - 1) * std::cos(2.0 * pi * n * a) / cexpm1(y);
            acc.add(t);
            if (y.real() > 46.0) break;
        }
        r.rhs += R.take(pre * s0 * sign_pow(j), acc.value(), 1e-20, n);
    }

    // Digamma sine sum. The inner (-1)^{j+(N+3)/2} cancels the outer signs.
    // Partial sums of sin(2 pi n a) are bounded by 1/|sin(pi a)|.
    const double sa = std::abs(std::sin(pi * a));
    if (sa > 1e-14 && std::abs(a - 0.5) > 1e-15) {
        const long long M = 20000;
        for (int j : half_range(N)) {
            Accumulator<cplx> acc;
            cplx z = cplx(0, 1) * beta * expipi(double(j) / N) / (2.0 * pi);
            double last = 0.0;
            for (long long n = 1; n <= M; ++n) {
                cplx w = std::pow(2.0 * n, 1.0 / N) * z;
                cplx f = (digamma(w) + digamma(-w)) * std::pow(double(n), -2.0 * m - 1);
                acc.add(std::sin(2.0 * pi * n * a) * f);
                last = std::abs(f);
            }
            r.rhs += R.take(pre / (2.0 * pi), acc.value(), 2.0 * last / sa + 1e-14 * std::abs(acc.value()), M);
        }
    }

    // Bernoulli double product.
    const int top = static_cast<int>(std::floor((N + 1.0) / (2.0 * N) + m));
    const double lead = sign_pow(m + (N + 3) / 2) * std::ldexp(1.0, 2 * N * m);
    for (int j = 0; j <= top; ++j) {
        int n2 = N + 1 + 2 * N * (m - j);
        r.rhs += R.add(lead * sign_pow(j) * bernoulli_poly(2 * j, a) / factorial(2 * j) * bern_ratio(n2) *
                       std::pow(alpha, 2.0 * j / (N + 1)) * std::pow(beta, N + 2.0 * N * N * (m - j) / (N + 1.0)));
    }
    IdentityReport out = L.close(r, R, tol);
    return out;
}

}  // namespace hz
