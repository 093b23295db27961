// Shared value types, constants and error classes.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace hz {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
// First Stieltjes constant; validated against the limit definition in tests.
inline constexpr double stieltjes_gamma1_value = -0.07281584548367672486058637587490131914;
inline constexpr double ln2 = std::numbers::ln2;
inline constexpr double log_2pi = 1.83787706640934548356065947281123527;

// Bad arguments: pole, branch cut, parity gate, nonconvergent parameter range.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical method ran out of budget before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Method { series_tail, integral_kernel, binet_lambert, direct_sum, mellin, asymptotic, quadrature };

const char* method_name(Method m);

struct EvalOutcome {
    cplx value{};
    double abs_err = 0.0;
    long long terms_used = 0;
    Method method = Method::series_tail;
};

// Neumaier-compensated accumulator.
template <class T>
class Accumulator {
public:
    void add(T v) {
        T t = sum_ + v;
        if constexpr (std::is_same_v<T, double>) {
            c_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
        } else {
            c_ += cplx(comp(sum_.real(), v.real(), t.real()), comp(sum_.imag(), v.imag(), t.imag()));
        }
        sum_ = t;
    }
    T value() const { return sum_ + c_; }

private:
    static double comp(double s, double v, double t) {
        return std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
    }
    T sum_{};
    T c_{};
};

// Principal power z^w = exp(w log z), 0^w = 0 for Re w > 0.
inline cplx cpow(cplx z, cplx w) {
    if (z == cplx(0.0, 0.0)) return w.real() > 0 ? cplx(0.0, 0.0) : cplx(INFINITY, 0.0);
    return std::exp(w * std::log(z));
}

// exp(z) - 1 without cancellation for small |z|.
inline cplx cexpm1(cplx z) {
    double x = z.real(), y = z.imag();
    double em1 = std::expm1(x);
    double s = std::sin(0.5 * y);
    return {em1 * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// e^{i pi r}, exact at integer and half-integer r.
inline cplx expipi(double r) {
    double m = std::fmod(r, 2.0);
    if (m < 0) m += 2.0;
    if (m == 0.0) return {1.0, 0.0};
    if (m == 0.5) return {0.0, 1.0};
    if (m == 1.0) return {-1.0, 0.0};
    if (m == 1.5) return {0.0, -1.0};
    return {std::cos(pi * m), std::sin(pi * m)};
}

inline double sign_pow(long long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace hz
