// Digamma, zeta, Bernoulli numbers and polylogarithms in double precision.
#pragma once

#include "hz/common.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hz {

using rational = boost::multiprecision::cpp_rational;

// Largest index kept in the Bernoulli table.
inline constexpr int bernoulli_max = 400;

const rational& bernoulli_rational(int n);
double bernoulli_number(int n);  // +-inf past the double range
double bernoulli_poly(int n, double a);
rational bernoulli_poly_rational(int n, const rational& a);

double harmonic(int n);
double factorial(int n);
double binomial(int n, int k);

cplx digamma(cplx z);
double digamma(double x);
// psi(w) - log(w), accurate when both terms are large.
cplx psi_minus_log(cplx w);
// Exponentially small part of psi(w) - log(w) left over by its asymptotic series; 0 for Re w > 0.
cplx psi_exp_part(cplx w);
cplx cot_pi(cplx z);

double zeta(double s);
// sum_{n > m} n^{-s}, s > 1.
double zeta_tail(double s, long long m);
double zeta_deriv(double s);
// zeta'(-j) for integer j >= 0.
double zeta_deriv_nonpos(int j);
double stieltjes_gamma1();
double double_zeta(int m, int n);

cplx polylog(double s, cplx t);
cplx gen_polylog(int N, double s, cplx t);

// sum n^{-k} exp(-a n^N), Re a >= 0; the building block of generalized polylogs.
EvalOutcome exp_series(double k, double N, cplx a);
// sum (-1)^n n^{-k} exp(-a n^N).
EvalOutcome exp_series_alt(double k, double N, cplx a);

}  // namespace hz
