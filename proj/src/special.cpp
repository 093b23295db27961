#include "hz/special.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <vector>

namespace hz {

namespace mp = boost::multiprecision;

const char* method_name(Method m) {
    switch (m) {
        case Method::series_tail: return "series_tail";
        case Method::integral_kernel: return "integral_kernel";
        case Method::binet_lambert: return "binet_lambert";
        case Method::direct_sum: return "direct_sum";
        case Method::mellin: return "mellin";
        case Method::asymptotic: return "asymptotic";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

// ---------------------------------------------------------------- Bernoulli

namespace {

// B_{2k} from tangent numbers (integer-only recurrence), odd ones are zero past B_1.
std::vector<rational> build_bernoulli() {
    const int kmax = bernoulli_max / 2;
    std::vector<mp::cpp_int> t(kmax + 1);
    t[1] = 1;
    for (int k = 2; k <= kmax; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= kmax; ++k)
        for (int j = k; j <= kmax; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];

    std::vector<rational> b(bernoulli_max + 1, rational(0));
    b[0] = 1;
    b[1] = rational(-1, 2);
    for (int k = 1; k <= kmax; ++k) {
        mp::cpp_int p4 = mp::cpp_int(1) << (2 * k);
        rational v(2 * k * t[k], p4 * (p4 - 1));
        b[2 * k] = (k % 2 == 1) ? v : rational(-v);
    }
    return b;
}

const std::vector<rational>& bernoulli_table() {
    static const std::vector<rational> table = build_bernoulli();
    return table;
}

const std::vector<double>& bernoulli_double_table() {
    static const std::vector<double> table = [] {
        const auto& b = bernoulli_table();
        std::vector<double> d(b.size());
        for (size_t i = 0; i < b.size(); ++i) d[i] = b[i].convert_to<double>();
        return d;
    }();
    return table;
}

}  // namespace

const rational& bernoulli_rational(int n) {
    if (n < 0 || n > bernoulli_max) throw DomainError("bernoulli index out of range");
    return bernoulli_table()[n];
}

double bernoulli_number(int n) {
    if (n < 0) throw DomainError("bernoulli index must be nonnegative");
    if (n > bernoulli_max) {
        if (n % 2 == 1) return 0.0;
        return (n % 4 == 0) ? -INFINITY : INFINITY;
    }
    return bernoulli_double_table()[n];
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r) == r || r > 1e15 ? r : std::round(r);
}

double factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    if (n > 170) return INFINITY;
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double harmonic(int n) {
    double h = 0.0;
    for (int i = n; i >= 1; --i) h += 1.0 / i;
    return h;
}

double bernoulli_poly(int n, double a) {
    if (n < 0) throw DomainError("bernoulli polynomial degree must be nonnegative");
    // Horner in a over binomial-weighted coefficients.
    double r = 0.0;
    for (int j = 0; j <= n; ++j) r = r * a + binomial(n, j) * bernoulli_number(j);
    return r;
}

rational bernoulli_poly_rational(int n, const rational& a) {
    rational r = 0;
    for (int j = 0; j <= n; ++j) {
        mp::cpp_int c = 1;
        for (int i = 1; i <= j; ++i) c = c * (n - j + i) / i;
        r = r * a + rational(c) * bernoulli_rational(j);
    }
    return r;
}

// ---------------------------------------------------------------- digamma

cplx cot_pi(cplx z) {
    if (z.imag() == 0.0) {
        double x = z.real();
        double r = x - std::round(x);
        return {std::cos(pi * r) / std::sin(pi * r), 0.0};
    }
    // cot(pi z) = i(q+1)/(q-1) with |q| < 1
    if (z.imag() > 0) {
        cplx u = 2.0 * pi * cplx(0, 1) * z;
        cplx q = std::exp(u);
        return cplx(0, 1) * (q + 1.0) / cexpm1(u);
    }
    cplx u = -2.0 * pi * cplx(0, 1) * z;
    cplx q = std::exp(u);
    return cplx(0, -1) * (q + 1.0) / cexpm1(u);
}

namespace {

bool near_nonpositive_integer(cplx z) {
    if (z.real() > 0.5) return false;
    double n = std::round(z.real());
    return std::abs(z - cplx(n, 0.0)) <= 1e-15 * std::max(1.0, std::abs(n));
}

// Asymptotic psi(w) - log(w) for |w| >= 10, Re w >= 0.
cplx g_asym(cplx w) {
    cplx w2inv = 1.0 / (w * w);
    cplx p = w2inv;
    Accumulator<cplx> acc;
    acc.add(-0.5 / w);
    for (int m = 1; m <= 16; ++m) {
        cplx t = -bernoulli_number(2 * m) / (2.0 * m) * p;
        acc.add(t);
        if (std::abs(t) < 1e-18 * std::abs(acc.value())) break;
        p *= w2inv;
    }
    return acc.value();
}

cplx digamma_right(cplx z) {
    // Re z >= 0.5: shift to |z| >= 20, then log z - 1/(2z) - sum B_{2n}/(2n z^{2n}), 10 terms.
    cplx shift = 0.0;
    while (std::abs(z) < 20.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    cplx zi2 = 1.0 / (z * z);
    cplx p = zi2;
    cplx s = std::log(z) - 0.5 / z;
    for (int n = 1; n <= 10; ++n) {
        s -= bernoulli_number(2 * n) / (2.0 * n) * p;
        p *= zi2;
    }
    return s - shift;
}

}  // namespace

cplx digamma(cplx z) {
    if (near_nonpositive_integer(z)) throw DomainError("digamma pole at a nonpositive integer");
    if (z.real() < 0.5) return digamma_right(1.0 - z) - pi * cot_pi(z);
    return digamma_right(z);
}

double digamma(double x) { return digamma(cplx(x, 0.0)).real(); }

cplx psi_exp_part(cplx w) {
    if (w.real() > 0.0) return 0.0;
    // q = e^{2 pi i w} in the upper half plane, its mirror below; half weight on the imaginary axis.
    const double h = w.real() == 0.0 ? 0.5 : 1.0;
    if (w.imag() > 0) {
        cplx u = 2.0 * pi * cplx(0, 1) * w;
        return h * 2.0 * pi * cplx(0, 1) * std::exp(u) / (-cexpm1(u));
    }
    cplx u = -2.0 * pi * cplx(0, 1) * w;
    return -h * 2.0 * pi * cplx(0, 1) * std::exp(u) / (-cexpm1(u));
}

cplx psi_minus_log(cplx w) {
    if (w.imag() == 0.0 && w.real() <= 0.0) throw DomainError("psi(w) - log(w) on the branch cut");
    if (std::abs(w) < 10.0) return digamma(w) - std::log(w);
    if (w.real() >= 0.0) return g_asym(w);
    // g(w) = g(-w) - 1/w + 2 pi i q/(1-q)
    return g_asym(-w) - 1.0 / w + psi_exp_part(w);
}

// ---------------------------------------------------------------- zeta

namespace {

// sum_{n >= K} n^{-s} by Euler-Maclaurin with 12 corrections; valid for s != 1, K >~ |s|.
double em_tail_from(double s, double K) {
    double logK = std::log(K);
    double kp = std::exp(-s * logK);  // K^{-s}
    Accumulator<double> acc;
    acc.add(K * kp / (s - 1.0));
    acc.add(0.5 * kp);
    double poch = s;  // (s)(s+1)...(s+2j-2)
    double pw = kp / K;
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= 12; ++j) {
        acc.add(bernoulli_number(2 * j) / fact * poch * pw);
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        pw /= K * K;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return acc.value();
}

double em_tail_deriv_from(double s, double K) {
    double logK = std::log(K);
    double kp = std::exp(-s * logK);
    Accumulator<double> acc;
    double a = K * kp / (s - 1.0);
    acc.add(-logK * a - a / (s - 1.0));
    acc.add(-0.5 * logK * kp);
    double pw = kp / K;
    double fact = 2.0;
    for (int j = 1; j <= 12; ++j) {
        double poch = 1.0, dlog = 0.0;
        for (int i = 0; i <= 2 * j - 2; ++i) {
            poch *= s + i;
            dlog += 1.0 / (s + i);
        }
        double c = bernoulli_number(2 * j) / fact;
        acc.add(c * pw * poch * (dlog - logK));
        pw /= K * K;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return acc.value();
}

double sum_direct(double s, long long from, long long to) {
    // Smallest terms first.
    double r = 0.0;
    for (long long n = to; n >= from; --n) r += std::pow(static_cast<double>(n), -s);
    return r;
}

long long em_start(double s) { return 12 + static_cast<long long>(std::max(0.0, std::abs(s))); }

bool is_integer(double s) { return std::isfinite(s) && s == std::round(s); }

}  // namespace

double zeta_tail(double s, long long m) {
    if (!(s > 1.0)) throw DomainError("zeta tail needs s > 1");
    if (m < 0) m = 0;
    long long K = std::max(m + 1, em_start(s));
    double head = sum_direct(s, m + 1, K - 1);
    return head + em_tail_from(s, static_cast<double>(K));
}

double zeta(double s) {
    if (s == 1.0) throw DomainError("zeta pole at s = 1");
    if (std::isnan(s)) throw DomainError("zeta of NaN");
    if (s == 0.0) return -0.5;
    if (s < 0 && is_integer(s)) {
        int n = static_cast<int>(-s);
        if (n % 2 == 0) return 0.0;
        if (n + 1 > bernoulli_max) return (((n + 1) / 2) % 2 == 0) ? INFINITY : -INFINITY;
        return -bernoulli_number(n + 1) / (n + 1);
    }
    if (s > 40.0) {
        double r = 0.0;
        for (int n = 8; n >= 2; --n) r += std::pow(static_cast<double>(n), -s);
        return 1.0 + r;
    }
    if (s >= 1.0) {
        long long K = std::max<long long>(50, em_start(s));
        return sum_direct(s, 1, K - 1) + em_tail_from(s, static_cast<double>(K));
    }
    if (s > 0.0) {
        // Short head: the head sum and K^{1-s}/(s-1) cancel for s < 1.
        long long K = 20;
        return sum_direct(s, 1, K - 1) + em_tail_from(s, static_cast<double>(K));
    }
    // Functional equation, in log space: 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
    double r = std::fmod(s, 4.0);
    double sn = std::sin(0.5 * pi * r);
    double z1 = zeta(1.0 - s);
    double lg = s * ln2 + (s - 1.0) * std::log(pi) + std::lgamma(1.0 - s) + std::log(z1);
    double mag = std::exp(lg);
    return sn * mag;
}

double zeta_deriv(double s) {
    if (!(s > 1.0)) throw DomainError("zeta derivative needs s > 1");
    if (s > 40.0) {
        double r = 0.0;
        for (int n = 8; n >= 2; --n) r -= std::log(n) * std::pow(static_cast<double>(n), -s);
        return r;
    }
    long long K = std::max<long long>(50, em_start(s));
    double head = 0.0;
    for (long long n = K - 1; n >= 2; --n) head -= std::log(static_cast<double>(n)) * std::pow(static_cast<double>(n), -s);
    return head + em_tail_deriv_from(s, static_cast<double>(K));
}

double zeta_deriv_nonpos(int j) {
    if (j < 0) throw DomainError("zeta_deriv_nonpos needs j >= 0");
    if (j == 0) return -0.5 * log_2pi;
    if (j % 2 == 0) {
        int n = j / 2;
        double lg = std::lgamma(2.0 * n + 1.0) - 2.0 * n * log_2pi;
        return sign_pow(n) * std::exp(lg) * zeta(2.0 * n + 1.0) / 2.0;
    }
    int n = (j + 1) / 2;
    double z = zeta(1.0 - 2 * n);
    return z * (log_2pi - digamma(2.0 * n) - zeta_deriv(2.0 * n) / zeta(2.0 * n));
}

double stieltjes_gamma1() { return stieltjes_gamma1_value; }

double double_zeta(int m, int n) {
    if (m < 2 || n < 1) throw DomainError("double zeta needs m >= 2, n >= 1");
    const int Q = 100;
    Accumulator<double> acc;
    for (int q = Q; q >= 1; --q) acc.add(std::pow(static_cast<double>(q), -n) * zeta_tail(m, q));
    // q > Q: expand zeta_{>q}(m) in powers of 1/q and sum each power as a zeta tail.
    acc.add(zeta_tail(m + n - 1, Q) / (m - 1));
    acc.add(-0.5 * zeta_tail(m + n, Q));
    double poch = m;
    double fact = 2.0;
    for (int j = 1; j <= 10; ++j) {
        acc.add(bernoulli_number(2 * j) / fact * poch * zeta_tail(m + n + 2 * j - 1, Q));
        poch *= (m + 2 * j - 1.0) * (m + 2 * j);
        fact *= (2 * j + 1.0) * (2 * j + 2.0);
    }
    return acc.value();
}

// ---------------------------------------------------------------- polylog

namespace {

double zeta_int_or_real(double s) { return zeta(s); }

// Li_s(e^mu) around mu = 0, |mu| <= ~3.3.
cplx polylog_mu(double s, cplx mu) {
    Accumulator<cplx> acc;
    bool sint = is_integer(s) && s >= 1.0;
    int n = sint ? static_cast<int>(s) : 0;
    if (!sint) {
        acc.add(std::tgamma(1.0 - s) * cpow(-mu, s - 1.0));
    }
    cplx p = 1.0;  // mu^k / k!
    double maxterm = 0.0;
    for (int k = 0; k < 400; ++k) {
        cplx t;
        if (sint && k == n - 1) {
            if (mu == cplx(0.0, 0.0)) {
                t = 0.0;
            } else {
                t = p * (harmonic(n - 1) - std::log(-mu));
            }
        } else {
            t = p * zeta_int_or_real(s - k);
        }
        acc.add(t);
        maxterm = std::max(maxterm, std::abs(t));
        if (k > n + 2 && std::abs(t) < 1e-18 * std::max(1.0, std::abs(acc.value())) && std::abs(p) < 1e-18) break;
        if (k > n + 2 && t != 0.0 && std::abs(t) < 1e-19 * maxterm) break;
        p *= mu / (k + 1.0);
    }
    return acc.value();
}

}  // namespace

cplx polylog(double s, cplx t) {
    double at = std::abs(t);
    if (at == 0.0) return 0.0;
    if (at > 1.0 + 1e-15) throw DomainError("polylog diverges for |t| > 1");
    if (at >= 1.0 - 1e-15) {
        bool ok = s > 1.0 || (t.real() < 0 && std::abs(t + 1.0) < 1e-15 && s > 0.0);
        if (!ok) throw DomainError("polylog diverges on |t| = 1 for this order");
        if (std::abs(t - 1.0) < 1e-15) return zeta(s);
        if (std::abs(t + 1.0) < 1e-15) return s == 1.0 ? -ln2 : (std::exp2(1.0 - s) - 1.0) * zeta(s);
    }
    if (at <= 0.5) {
        Accumulator<cplx> acc;
        cplx p = t;
        for (int n = 1; n < 200; ++n) {
            cplx term = p * std::pow(static_cast<double>(n), -s);
            acc.add(term);
            if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
            p *= t;
        }
        return acc.value();
    }
    return polylog_mu(s, std::log(t));
}

namespace {

// zeta(k - jN) (or the alternating eta variant) cached per (k, N, alt).
const std::vector<double>& mellin_zeta_values(double k, double N, bool alt, int count) {
    thread_local std::map<std::tuple<double, double, bool>, std::vector<double>> cache;
    auto& v = cache[{k, N, alt}];
    while (static_cast<int>(v.size()) < count) {
        int j = static_cast<int>(v.size());
        double s = k - j * N;
        double val;
        if (alt) {
            if (std::abs(s - 1.0) < 1e-13) {
                val = -ln2;
            } else {
                double z = zeta(s);
                val = (std::exp2(1.0 - s) - 1.0) * z;
                if (z == 0.0) val = 0.0;
            }
        } else {
            val = std::abs(s - 1.0) < 1e-13 ? NAN : zeta(s);
        }
        v.push_back(val);
    }
    return v;
}

constexpr double direct_log_cut = 41.5;  // e^{-41.5} ~ 1e-18

EvalOutcome direct_exp_series(double k, double N, cplx a, bool alt, long long nmax) {
    Accumulator<cplx> acc;
    double ra = a.real();
    long long n = 1;
    double last = 0.0;
    for (; n <= nmax; ++n) {
        double dn = static_cast<double>(n);
        double lnN = std::log(dn) * N;
        double nN = std::exp(lnN);
        cplx term = std::exp(-a * nN - k * std::log(dn));
        if (alt && (n % 2 == 1)) term = -term;
        acc.add(term);
        last = std::abs(term);
        if (ra * nN > direct_log_cut && last < 1e-18 * std::max(1e-300, std::abs(acc.value()))) break;
        if (ra * nN > 745.0) break;
    }
    EvalOutcome out;
    out.value = acc.value();
    out.terms_used = n;
    out.method = Method::direct_sum;
    out.abs_err = last + 4e-16 * std::abs(out.value);
    return out;
}

// Mellin expansion around a = 0. Returns abs_err = +inf on failure.
EvalOutcome mellin_exp_series(double k, double N, cplx a, bool alt) {
    EvalOutcome out;
    out.method = Method::mellin;
    Accumulator<cplx> acc;
    double jc = (k - 1.0) / N;
    int j0 = -1;
    if (!alt && jc > -1e-12 && std::abs(jc - std::round(jc)) < 1e-12) j0 = static_cast<int>(std::round(jc));
    double maxterm = 0.0;
    if (!alt && j0 < 0) {
        double s0 = (1.0 - k) / N;
        cplx g = std::tgamma(s0) * cpow(a, -s0) / N;
        acc.add(g);
        maxterm = std::abs(g);
    }
    const bool convergent = N <= 1.0;
    const int jmax = 600;
    const auto& zv = mellin_zeta_values(k, N, alt, jmax);
    cplx p = 1.0;  // (-a)^j / j!
    double prev = INFINITY;
    double err = INFINITY;
    cplx loga = std::log(a);
    int j = 0;
    int last_nonzero = -1;
    for (; j < jmax; ++j) {
        cplx t;
        if (j == j0) {
            t = p * (euler_gamma + (digamma(j + 1.0) - loga) / N);
        } else {
            double z = zv[j];
            if (!std::isfinite(z)) break;
            t = p * z;
        }
        double at = std::abs(t);
        if (!std::isfinite(at)) break;
        if (at == 0.0) {
            p *= -a / (j + 1.0);
            continue;
        }
        last_nonzero = j;
        if (!convergent && at >= prev && j > j0) {
            err = prev;
            break;
        }
        acc.add(t);
        maxterm = std::max(maxterm, at);
        prev = at;
        if (at < 1e-18 * std::max(std::abs(acc.value()), 1e-300) && std::abs(p) < 1e-3) {
            err = at;
            break;
        }
        p *= -a / (j + 1.0);
        if (std::abs(p) == 0.0) {
            err = at;
            break;
        }
    }
    // Trivial zeros of zeta can end the series (integer k, even N): a long run of exact
    // zeros before the scan stops means it terminated.
    if (!std::isfinite(err) && last_nonzero >= 0 && j - last_nonzero > 50) err = 0.0;
    out.value = acc.value();
    out.terms_used = j + 1;
    out.abs_err = err + 2e-16 * maxterm;
    return out;
}

EvalOutcome exp_series_impl(double k, double N, cplx a, bool alt) {
    if (!(N > 0)) throw DomainError("exponent N must be positive");
    if (a.real() < 0) throw DomainError("exp series needs Re a >= 0");
    if (a == cplx(0.0, 0.0)) {
        EvalOutcome out;
        out.method = Method::direct_sum;
        if (alt) {
            if (!(k > 0)) throw DomainError("alternating series diverges at a = 0 for k <= 0");
            out.value = k == 1.0 ? -ln2 : (std::exp2(1.0 - k) - 1.0) * zeta(k);
        } else {
            if (!(k > 1)) throw DomainError("series diverges at a = 0 for k <= 1");
            out.value = zeta(k);
        }
        out.abs_err = 1e-16 * std::abs(out.value);
        return out;
    }
    if (a.real() == 0.0) {
        // Pure phase: only usable when the algebraic decay alone converges fast.
        if (!(k > 1)) throw DomainError("series on the unit circle needs k > 1");
        long long nmax = 2'000'000;
        EvalOutcome out = direct_exp_series(k, N, a, alt, nmax);
        double tail = std::pow(static_cast<double>(nmax), 1.0 - k) / (k - 1.0);
        out.abs_err += tail;
        if (tail > 1e-10) throw ConvergenceError("unit-circle generalized polylog converges too slowly");
        return out;
    }
    double nd = std::pow(direct_log_cut / a.real(), 1.0 / N);
    if (nd <= 400.0) return direct_exp_series(k, N, a, alt, static_cast<long long>(nd) + 2);
    EvalOutcome m = mellin_exp_series(k, N, a, alt);
    if (m.abs_err <= 1e-15 * std::max(std::abs(m.value), 1e-300)) return m;
    if (nd <= 2e7) {
        EvalOutcome d = direct_exp_series(k, N, a, alt, static_cast<long long>(nd) + 2);
        if (d.abs_err <= m.abs_err) return d;
        return m;
    }
    if (std::isfinite(m.abs_err)) return m;
    throw ConvergenceError("exp series: neither direct nor Mellin summation converges");
}

}  // namespace

EvalOutcome exp_series(double k, double N, cplx a) { return exp_series_impl(k, N, a, false); }
EvalOutcome exp_series_alt(double k, double N, cplx a) { return exp_series_impl(k, N, a, true); }

cplx gen_polylog(int N, double s, cplx t) {
    if (N < 1) throw DomainError("generalized polylog needs N >= 1");
    if (N == 1) return polylog(s, t);
    double at = std::abs(t);
    if (at == 0.0) return 0.0;
    if (at > 1.0 + 1e-15) throw DomainError("generalized polylog diverges for |t| > 1");
    if (at >= 1.0 - 1e-15) {
        if (std::abs(t - 1.0) < 1e-15) {
            if (!(s > 1)) throw DomainError("generalized polylog diverges at t = 1");
            return zeta(s);
        }
        if (std::abs(t + 1.0) < 1e-15) {
            if (!(s > 0)) throw DomainError("generalized polylog diverges at t = -1");
            return exp_series_alt(s, N, 0.0).value;
        }
        if (!(s > 1)) throw DomainError("generalized polylog diverges on |t| = 1");
    }
    if (t.real() >= 0) return exp_series(s, N, -std::log(t)).value;
    return exp_series_alt(s, N, -std::log(-t)).value;
}

}  // namespace hz
