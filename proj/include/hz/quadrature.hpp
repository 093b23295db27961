// Adaptive Gauss-Kronrod integration and the J integrals.
#pragma once

#include "hz/common.hpp"

#include <functional>

namespace hz {

struct QuadResult {
    cplx value{};
    double abs_err = 0.0;
    int panels = 0;
};

using Integrand = std::function<cplx(double)>;

struct QuadOptions {
    double abs_tol = 1e-15;
    double rel_tol = 1e-13;
    int max_panels = 4000;
};

// Global adaptive G7K15 on [a, b].
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt = {});

// [a, inf) by doubling panels until two successive panels are negligible.
QuadResult integrate_to_inf(const Integrand& f, double a, const QuadOptions& opt = {});

enum class EndpointPolicy { none, log_sub_0, cancel_1 };

// Integral over [0, 1]. log_sub_0 uses u = e^{-v}; cancel_1 also swaps in near_one(1 - u)
// for u > 1 - patch_width, where the integrand is a cancelling combination.
QuadResult integrate_01(const Integrand& f, EndpointPolicy policy, const QuadOptions& opt = {},
                        const Integrand& near_one = nullptr, double patch_width = 1e-3);

// J(x) = int_0^1 log(1 + t^x)/(1 + t) dt.
QuadResult J_integral(double x);

struct JkNOptions {
    double patch_width = 1e-3;  // Taylor patch used for 1 - u below this width
    int taylor_order = 6;
};

// Combined kernel 2^{k-1}/(u-1) - 2^N u^{2^N-1}/(u^{2^N}-1) - (2^{k-1}-1)/(u log u).
double jkn_kernel(int k, int N, double u, const JkNOptions& opt = {});
// The kernel times du/dv under u = e^{-v}, as a function of v.
double jkn_kernel_v(int k, int N, double v, const JkNOptions& opt = {});

QuadResult J_kN(int k, int N, double x, const JkNOptions& opt = {});

}  // namespace hz
