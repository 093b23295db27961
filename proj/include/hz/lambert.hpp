// Generalized Lambert series and the Lambert kernel behind the Binet-type integral.
#pragma once

#include "hz/common.hpp"

namespace hz {

struct LambertSpec {
    double power = 0.0;  // p in n^p
    int N = 1;
    cplx alpha = 1.0;
    double a = 1.0;
};

// sum n^p e^{-a (2n)^N alpha} / (1 - e^{-(2n)^N alpha})
EvalOutcome lambert_sum(const LambertSpec& s, double tol = 1e-17);

// sum n^{-k} / (e^{2 pi n^N t} - 1), t > 0
EvalOutcome lambert_kernel(double k, double N, double t);

// beta with alpha beta^N = pi^{N+1}, principal root, Re beta > 0 enforced.
cplx lambert_beta(cplx alpha, int N);

}  // namespace hz
