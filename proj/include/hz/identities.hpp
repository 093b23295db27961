// Residual evaluators for the functional equations, transformations and special values.
#pragma once

#include "hz/common.hpp"
#include "hz/quadrature.hpp"
#include "hz/report.hpp"

#include <vector>

namespace hz {

inline constexpr double default_tolerance = 1e-9;

// Zagier's two functional equations for F.
IdentityReport check_zagier_fe1(cplx x, double tol = default_tolerance);
IdentityReport check_zagier_fe2(cplx x, double tol = default_tolerance);

// Vlasenko-Zagier relations for F_k.
IdentityReport check_vz1(int k, cplx x, double tol = default_tolerance);
IdentityReport check_vz2(int k, cplx x, double tol = default_tolerance);

// x^{(1-k)/N} F_{k,N}(x) against the j-sum of F_{(N+k-1)/N,1/N}; 1 < k <= N.
IdentityReport check_thm21(int k, int N, cplx x, double tol = default_tolerance);
IdentityReport check_thm21_k1(int N, cplx x, double tol = default_tolerance);

// Pair transformation for odd k >= 3, odd N; includes the correction C(k, N, x).
IdentityReport check_thm22(int k, int N, cplx x, double tol = default_tolerance);
// The k = 1 case.
IdentityReport check_thm23(int N, cplx x, double tol = default_tolerance);
// thm21 at +-ix/2pi against thm22 at x, for odd 1 < k <= N.
IdentityReport check_equivalence(int k, int N, cplx x, double tol = default_tolerance);

enum class CBranch { generic, resonant };
CBranch correction_C_branch(int k, int N);
cplx correction_C(int k, int N, cplx x);
cplx correction_B(int k, int N, cplx x);

IdentityReport check_cor24(int m, cplx alpha, double tol = default_tolerance);
IdentityReport check_trans4m1(int m, double tol = default_tolerance);
IdentityReport check_modular(cplx alpha, double tol = default_tolerance);

// int_0^inf t cos t/(t^2 + a^2) dt, by half-period panels and Euler averaging.
EvalOutcome raabe_integral(cplx a);
IdentityReport check_raabe(cplx u, double tol = 1e-7);

IdentityReport check_thm28(int k, int N, double x, double tol = 1e-8, const JkNOptions& opt = {});
IdentityReport check_cor29(int k, double x, double tol = default_tolerance);
IdentityReport check_cor210(int k, double tol = default_tolerance);

IdentityReport check_ramanujan(int m, cplx alpha, double tol = 1e-11);
IdentityReport check_companion(int m, cplx alpha, double tol = 1e-10);
IdentityReport check_thm211(int m, int N, cplx alpha, double tol = 1e-8);
IdentityReport check_thm212(int N, double alpha, double tol = default_tolerance);
IdentityReport check_zetagen_a(double a, int m, int N, double alpha, double tol = 1e-7);

// Special values of F and J against their closed forms.
enum class ClosedForm { F_1, J_1, J_4_sqrt17, J_4_sqrt17_corrected, J_2_5, J_4_sqrt15 };
std::vector<ClosedForm> all_closed_forms();
IdentityReport check_closed_form(ClosedForm c);

}  // namespace hz
