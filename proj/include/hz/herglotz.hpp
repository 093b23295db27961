// Herglotz-type functions: F, F_k, the extended F_{k,N}, and Zagier's P(x, y).
#pragma once

#include "hz/common.hpp"

namespace hz {

struct HerglotzParams {
    double k = 1.0;
    double N = 1.0;

    void validate() const;
    bool k_integer() const { return k == std::round(k); }
    bool N_integer() const { return N == std::round(N); }
    bool k_odd() const { return k_integer() && static_cast<long long>(k) % 2 != 0; }
    bool N_odd() const { return N_integer() && static_cast<long long>(N) % 2 != 0; }
};

void check_off_cut(cplx x, const char* what);

// sum (psi(n^N x) - log(n^N x))/n^k; head sum plus asymptotic tail.
EvalOutcome ext_F(const HerglotzParams& p, cplx x, double tol = 1e-16);
inline EvalOutcome ext_F(double k, double N, cplx x, double tol = 1e-16) { return ext_F({k, N}, x, tol); }

// -int_0^inf (1/(1-e^{-t}) - 1/t) NLi_k(e^{-xt}) dt
EvalOutcome ext_F_via_integral(const HerglotzParams& p, cplx x, double tol = 1e-13);
// -int_0^inf L(t) 2t/(t^2+x^2) dt - zeta(k+N)/(2x)
EvalOutcome ext_F_via_binet(const HerglotzParams& p, cplx x, double tol = 1e-13);

EvalOutcome herglotz_F(cplx x);
// sum psi(n x)/n^k
EvalOutcome higher_F_k(int k, cplx x);
// sum n^{-k} (psi(n^N z) + psi(-n^N z)), k > 1
EvalOutcome psi_pair_sum(double k, double N, cplx z);

double zagier_P(double x, double y);

}  // namespace hz
