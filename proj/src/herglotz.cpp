#include "hz/herglotz.hpp"

#include "hz/lambert.hpp"
#include "hz/quadrature.hpp"
#include "hz/special.hpp"

#include <algorithm>

namespace hz {

void HerglotzParams::validate() const {
    if (!(k > 0) || !(N > 0)) throw DomainError("k and N must be positive");
    if (!(k + N > 1)) throw DomainError("k + N must exceed 1");
}

void check_off_cut(cplx x, const char* what) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw DomainError(std::string(what) + ": non-finite argument");
    if (x.imag() == 0.0 && x.real() <= 0.0) throw DomainError(std::string(what) + ": argument on the cut (-inf, 0]");
}

namespace {

// Exact exponentially small part of psi(w) - log(w) for Re w < 0 beyond the algebraic tail.
cplx reflection_excess(cplx w) {
    if (w.imag() > 0) {
        cplx u = 2.0 * pi * cplx(0, 1) * w;
        return 2.0 * pi * cplx(0, 1) * std::exp(u) / (-cexpm1(u));
    }
    cplx u = -2.0 * pi * cplx(0, 1) * w;
    return -2.0 * pi * cplx(0, 1) * std::exp(u) / (-cexpm1(u));
}

}  // namespace

EvalOutcome ext_F(const HerglotzParams& p, cplx x, double tol) {
    p.validate();
    check_off_cut(x, "ext_F");
    const double k = p.k, N = p.N;
    const double ax = std::abs(x);
    tol = std::max(tol, 1e-300);
    double W = 10.0;
    for (int attempt = 0; attempt < 6; ++attempt, W *= 2.0) {
        const double Md = ax >= W ? 0.0 : std::ceil(std::pow(W / ax, 1.0 / N));
        if (Md > 5e7) throw ConvergenceError("ext_F head too long; |x| too small for this N");
        const long long M = static_cast<long long>(Md);

        Accumulator<cplx> acc;
        double mag = 0.0;
        for (long long n = M; n >= 1; --n) {
            double dn = static_cast<double>(n);
            cplx w = std::pow(dn, N) * x;
            cplx t = psi_minus_log(w) * std::pow(dn, -k);
            acc.add(t);
            mag += std::abs(t);
            // below |w| = 10 the value comes from psi(w) - log(w), which cancels
            if (std::abs(w) < 10.0) mag += 2.0 * std::abs(std::log(w)) * std::pow(dn, -k);
        }
        cplx xinv = 1.0 / x;
        cplx t0 = -0.5 * zeta_tail(k + N, M) * xinv;
        acc.add(t0);
        mag += std::abs(t0);
        cplx xp = xinv * xinv;
        double omitted = INFINITY;
        int orders = 0;
        for (int m = 1; m <= 14; ++m) {
            cplx t = -bernoulli_number(2 * m) / (2.0 * m) * xp * zeta_tail(k + 2.0 * m * N, M);
            orders = m;
            double at = std::abs(t);
            acc.add(t);
            mag += at;
            if (at < std::max(0.01 * tol, 1e-18 * std::abs(acc.value()))) {
                omitted = at;
                break;
            }
            xp *= xinv * xinv;
        }
        if (!std::isfinite(omitted)) continue;

        long long extra = 0;
        if (x.real() < 0.0) {
            // Exponentially small pieces of the tail; |q_n| = exp(-2 pi n^N |Im x|).
            double scale = std::max(std::abs(acc.value()), 1e-300);
            for (long long n = M + 1;; ++n) {
                if (n - M > 20'000'000) throw ConvergenceError("ext_F: x too close to the negative axis");
                double dn = static_cast<double>(n);
                cplx w = std::pow(dn, N) * x;
                cplx t = reflection_excess(w) * std::pow(dn, -k);
                acc.add(t);
                ++extra;
                if (std::abs(t) < 1e-19 * scale) break;
            }
        }
        EvalOutcome out;
        out.value = acc.value();
        out.abs_err = omitted + 4e-16 * mag;
        out.terms_used = M + orders + extra;
        out.method = Method::series_tail;
        return out;
    }
    throw ConvergenceError("ext_F: asymptotic tail did not reach tolerance");
}

namespace {

// 1/(1 - e^{-t}) - 1/t
double bose_kernel(double t) {
    if (t < 1e-4) return 0.5 + t / 12.0 - t * t * t / 720.0;
    return -1.0 / std::expm1(-t) - 1.0 / t;
}

EvalOutcome split_integral(const Integrand& g, double tol) {
    QuadOptions opt;
    opt.abs_tol = tol * 1e-2;
    opt.rel_tol = std::max(1e-14, tol * 1e-2);
    opt.max_panels = 20000;
    // [0, 1] under t = e^{-v}, then [1, inf)
    auto gl = [&](double v) { double t = std::exp(-v); return g(t) * t; };
    QuadResult lo = integrate_to_inf(gl, 0.0, opt);
    QuadResult hi = integrate_to_inf(g, 1.0, opt);
    EvalOutcome out;
    out.value = lo.value + hi.value;
    out.abs_err = lo.abs_err + hi.abs_err + 1e-15 * std::abs(out.value);
    out.terms_used = lo.panels + hi.panels;
    return out;
}

}  // namespace

EvalOutcome ext_F_via_integral(const HerglotzParams& p, cplx x, double tol) {
    p.validate();
    if (!(x.real() > 0)) throw DomainError("integral representation needs Re x > 0");
    auto g = [&](double t) -> cplx {
        return -bose_kernel(t) * exp_series(p.k, p.N, x * t).value;
    };
    EvalOutcome out = split_integral(g, tol);
    out.method = Method::integral_kernel;
    return out;
}

EvalOutcome ext_F_via_binet(const HerglotzParams& p, cplx x, double tol) {
    p.validate();
    if (!(x.real() > 0)) throw DomainError("Binet-type representation needs Re x > 0");
    auto g = [&](double t) -> cplx {
        return -lambert_kernel(p.k, p.N, t).value * 2.0 * t / (t * t + x * x);
    };
    EvalOutcome out = split_integral(g, tol);
    out.value -= zeta(p.k + p.N) / (2.0 * x);
    out.method = Method::binet_lambert;
    return out;
}

EvalOutcome herglotz_F(cplx x) { return ext_F(1.0, 1.0, x); }

EvalOutcome higher_F_k(int k, cplx x) {
    if (k < 2) throw DomainError("higher Herglotz F_k needs integer k >= 2");
    check_off_cut(x, "F_k");
    EvalOutcome e = ext_F(k, 1.0, x);
    e.value += zeta(k) * std::log(x) - zeta_deriv(k);
    e.abs_err += 1e-16 * std::abs(e.value);
    return e;
}

EvalOutcome psi_pair_sum(double k, double N, cplx z) {
    if (!(k > 1)) throw DomainError("psi pair sum needs k > 1");
    EvalOutcome a = ext_F(k, N, z);
    EvalOutcome b = ext_F(k, N, -z);
    EvalOutcome out;
    out.value = a.value + b.value - 2.0 * N * zeta_deriv(k) + zeta(k) * (std::log(z) + std::log(-z));
    out.abs_err = a.abs_err + b.abs_err + 1e-16 * std::abs(out.value);
    out.terms_used = a.terms_used + b.terms_used;
    return out;
}

double zagier_P(double x, double y) {
    if (!(y > 0) || !(x > y)) throw DomainError("P(x, y) needs x > y > 0");
    double fx = herglotz_F(x).value.real();
    double fy = herglotz_F(y).value.real();
    double li = polylog(2.0, y / x).real();
    double l = std::log(x / y);
    return fx - fy + li - pi * pi / 6.0 + l * (euler_gamma - 0.5 * std::log(x - y) + 0.25 * l);
}

}  // namespace hz
