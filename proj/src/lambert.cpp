#include "hz/lambert.hpp"

#include "hz/special.hpp"

#include <map>
#include <vector>

namespace hz {

EvalOutcome lambert_sum(const LambertSpec& s, double tol) {
    if (!(s.alpha.real() > 0)) throw DomainError("Lambert series diverges for Re(alpha) <= 0");
    if (!(s.a > 0)) throw DomainError("Lambert shift a must be positive");
    if (s.N < 1) throw DomainError("Lambert exponent N must be a positive integer");
    Accumulator<cplx> acc;
    EvalOutcome out;
    out.method = Method::direct_sum;
    double last = 0.0;
    long long n = 1;
    for (; n < 50'000'000; ++n) {
        double dn = static_cast<double>(n);
        cplx y = std::pow(2.0 * dn, s.N) * s.alpha;
        if (s.a * y.real() > 745.0) break;  // underflow; the rest is zero in double
        cplx t = std::pow(dn, s.power) * std::exp(-s.a * y) / (-cexpm1(-y));
        acc.add(t);
        last = std::abs(t);
        if (last <= tol * std::abs(acc.value()) && s.a * y.real() > 40.0) break;
    }
    out.value = acc.value();
    // Geometric-type remainder: ratio of successive terms is below e^{-a Re alpha 2^N}.
    double q = std::exp(-s.a * s.alpha.real() * std::pow(2.0, s.N));
    out.abs_err = last * q / (1.0 - q) + 2e-16 * std::abs(out.value);
    out.terms_used = n;
    return out;
}

namespace {

const std::vector<double>& kernel_zeta_values(double k, double N, int count) {
    thread_local std::map<std::pair<double, double>, std::vector<double>> cache;
    auto& v = cache[{k, N}];
    while (static_cast<int>(v.size()) < count) {
        int j = static_cast<int>(v.size());
        double s = k - j * N;
        double zj = (j == 0) ? -0.5 : ((j % 2 == 0) ? 0.0 : zeta(-static_cast<double>(j)));
        // zeta(-j) zeta(k - jN); NaN marks the coincident index
        v.push_back(zj == 0.0 ? 0.0 : (std::abs(s - 1.0) < 1e-13 ? NAN : zj * zeta(s)));
    }
    return v;
}

EvalOutcome kernel_direct(double k, double N, double t, long long nmax) {
    Accumulator<double> acc;
    double last = 0.0;
    long long n = 1;
    for (; n <= nmax; ++n) {
        double dn = static_cast<double>(n);
        double y = 2.0 * pi * std::pow(dn, N) * t;
        if (y > 745.0) break;
        double term = std::pow(dn, -k) / std::expm1(y);
        acc.add(term);
        last = term;
        if (y > 41.5 && term < 1e-18 * acc.value()) break;
    }
    EvalOutcome out;
    out.value = acc.value();
    out.abs_err = last + 2e-16 * acc.value();
    out.terms_used = n;
    out.method = Method::direct_sum;
    return out;
}

// Mellin residues: zeta(k+N)/b + Gamma(s0)zeta(s0)b^{-s0}/N + sum (-1)^j/j! zeta(-j)zeta(k-jN) b^j.
EvalOutcome kernel_mellin(double k, double N, double t) {
    const double b = 2.0 * pi * t;
    Accumulator<double> acc;
    acc.add(zeta(k + N) / b);
    double jc = (k - 1.0) / N;
    int j0 = -1;
    if (jc > -1e-12 && std::abs(jc - std::round(jc)) < 1e-12) j0 = static_cast<int>(std::round(jc));
    if (j0 < 0) {
        double s0 = (1.0 - k) / N;
        acc.add(std::tgamma(s0) * zeta(s0) * std::pow(b, -s0) / N);
    }
    const int jmax = 4000;
    double lb = std::log(b);
    double prev = INFINITY, err = INFINITY;
    double lfac = 0.0;  // log j!
    int j = 0;
    int last_nonzero = -1;
    for (; j < jmax; ++j) {
        if (j > 0) lfac += std::log(static_cast<double>(j));
        double term;
        if (j == j0) {
            double zj = zeta(-static_cast<double>(j));
            double c = sign_pow(j) * std::exp(j * lb - lfac);
            term = c * (zj * euler_gamma + (zj * digamma(j + 1.0) + zeta_deriv_nonpos(j) - zj * lb) / N);
        } else {
            if (j >= 2 && j % 2 == 0) continue;
            double zz = kernel_zeta_values(k, N, j + 1)[j];
            if (!std::isfinite(zz)) break;
            term = sign_pow(j) * zz * std::exp(j * lb - lfac);
        }
        double at = std::abs(term);
        if (!std::isfinite(at)) break;
        if (at == 0.0) continue;
        last_nonzero = j;
        if (at >= prev && j > std::max(j0, 1)) {
            err = prev;
            break;
        }
        acc.add(term);
        prev = at;
        if (at < 1e-18 * std::abs(acc.value())) {
            err = at;
            break;
        }
    }
    // trivial zeros can end the series (e.g. k = N = 1): a long run of exact zeros
    if (!std::isfinite(err) && last_nonzero >= 0 && j - last_nonzero > 50) err = 0.0;
    EvalOutcome out;
    out.value = acc.value();
    out.abs_err = err + 2e-16 * std::abs(acc.value());
    out.terms_used = j;
    out.method = Method::mellin;
    return out;
}

}  // namespace

EvalOutcome lambert_kernel(double k, double N, double t) {
    if (!(t > 0)) throw DomainError("Lambert kernel needs t > 0");
    if (!(N > 0) || !(k + N > 1)) throw DomainError("Lambert kernel needs N > 0 and k + N > 1");
    double nd = std::pow(41.5 / (2.0 * pi * t), 1.0 / N);
    if (nd <= 3000.0) return kernel_direct(k, N, t, static_cast<long long>(nd) + 2);
    EvalOutcome m = kernel_mellin(k, N, t);
    if (m.abs_err <= 1e-15 * std::abs(m.value)) return m;
    if (nd <= 2e7) return kernel_direct(k, N, t, static_cast<long long>(nd) + 2);
    if (std::isfinite(m.abs_err)) return m;
    throw ConvergenceError("Lambert kernel: no convergent evaluation path");
}

cplx lambert_beta(cplx alpha, int N) {
    if (N < 1) throw DomainError("N must be a positive integer");
    if (!(alpha.real() > 0)) throw DomainError("alpha must have positive real part");
    cplx beta = cpow(std::pow(pi, N + 1) / alpha, 1.0 / N);
    if (!(beta.real() > 0)) throw DomainError("beta must have positive real part");
    return beta;
}

}  // namespace hz
