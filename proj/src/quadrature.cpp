#include "hz/quadrature.hpp"

#include "hz/special.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace hz {

namespace {

// Kronrod abscissae; odd entries (1, 3, 5) are the Gauss nodes.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel g7k15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx k15 = wgk[7] * fc;
    cplx g7 = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = h * xgk[i];
        cplx s = f(c - dx) + f(c + dx);
        k15 += wgk[i] * s;
        if (i % 2 == 1) g7 += wg[i / 2] * s;
    }
    k15 *= h;
    g7 *= h;
    return {a, b, k15, std::abs(k15 - g7)};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opt) {
    QuadResult res;
    if (a == b) return res;
    std::priority_queue<Panel> heap;
    Panel first = g7k15(f, a, b);
    heap.push(first);
    cplx total = first.value;
    double err = first.err;
    int panels = 1;
    while (true) {
        double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (err <= tol) break;
        if (panels >= opt.max_panels) {
            if (err > 100.0 * tol)
                throw ConvergenceError("adaptive quadrature exceeded its panel budget");
            break;
        }
        Panel p = heap.top();
        heap.pop();
        double m = 0.5 * (p.a + p.b);
        if (m <= p.a || m >= p.b) {
            // Cannot split further; keep the estimate as is.
            heap.push(p);
            break;
        }
        Panel l = g7k15(f, p.a, m);
        Panel r = g7k15(f, m, p.b);
        total += l.value + r.value - p.value;
        err += l.err + r.err - p.err;
        heap.push(l);
        heap.push(r);
        ++panels;
    }
    // Re-add from the pieces to shed accumulated update error.
    Accumulator<cplx> acc;
    double e = 0.0;
    while (!heap.empty()) {
        acc.add(heap.top().value);
        e += heap.top().err;
        heap.pop();
    }
    res.value = acc.value();
    res.abs_err = e + 1e-16 * std::abs(res.value);
    res.panels = panels;
    return res;
}

QuadResult integrate_to_inf(const Integrand& f, double a, const QuadOptions& opt) {
    QuadResult res;
    Accumulator<cplx> acc;
    double width = 1.0;
    double lo = a;
    int quiet = 0;
    for (int i = 0; i < 60; ++i) {
        double hi = lo + width;
        QuadOptions o = opt;
        QuadResult p = integrate(f, lo, hi, o);
        acc.add(p.value);
        res.abs_err += p.abs_err;
        res.panels += p.panels;
        double scale = std::max(std::abs(acc.value()), 1e-300);
        if (std::abs(p.value) < 1e-17 * scale || std::abs(p.value) < 1e-300) {
            if (++quiet >= 2) {
                res.value = acc.value();
                return res;
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        width *= 2.0;
    }
    throw ConvergenceError("semi-infinite integral did not decay");
}

QuadResult integrate_01(const Integrand& f, EndpointPolicy policy, const QuadOptions& opt,
                        const Integrand& near_one, double patch_width) {
    switch (policy) {
        case EndpointPolicy::none:
            return integrate(f, 0.0, 1.0, opt);
        case EndpointPolicy::log_sub_0: {
            auto g = [&](double v) { return f(std::exp(-v)) * std::exp(-v); };
            return integrate_to_inf(g, 0.0, opt);
        }
        case EndpointPolicy::cancel_1: {
            if (!near_one) throw DomainError("cancel_1 policy needs a near_one patch");
            auto g = [&](double u) { return (1.0 - u < patch_width) ? near_one(1.0 - u) : f(u); };
            QuadResult r1 = integrate(g, 0.0, 1.0 - patch_width, opt);
            QuadResult r2 = integrate(g, 1.0 - patch_width, 1.0, opt);
            return {r1.value + r2.value, r1.abs_err + r2.abs_err, r1.panels + r2.panels};
        }
    }
    return {};
}

QuadResult J_integral(double x) {
    if (!(x > 0)) throw DomainError("J(x) needs x > 0");
    // t = e^{-v}: integrand log1p(e^{-xv}) e^{-v}/(1 + e^{-v})
    auto g = [x](double v) -> cplx {
        double e = std::exp(-v);
        return std::log1p(std::exp(-x * v)) * e / (1.0 + e);
    };
    return integrate_to_inf(g, 0.0);
}

namespace {

// 1/(e^y - 1)
double bose(double y) { return 1.0 / std::expm1(y); }

}  // namespace

double jkn_kernel_v(int k, int N, double v, const JkNOptions& opt) {
    if (k < 1 || N < 1) throw DomainError("J_kN needs positive integers k, N");
    const double P = std::ldexp(1.0, N);
    const double c1 = std::ldexp(1.0, k - 1);
    if (v < opt.patch_width) {
        // sum_{n>=1} B_n/n! (2^N P^{n-1} - 2^{k-1}) v^{n-1}
        double s = 0.0, vp = 1.0, pp = 1.0, fact = 1.0;
        for (int n = 1; n <= opt.taylor_order; ++n) {
            fact *= n;
            s += bernoulli_number(n) / fact * (P * pp - c1) * vp;
            vp *= v;
            pp *= P;
        }
        return s;
    }
    return -c1 * bose(v) + P * bose(P * v) + (c1 - 1.0) / v;
}

double jkn_kernel(int k, int N, double u, const JkNOptions& opt) {
    if (!(u > 0 && u < 1)) throw DomainError("kernel defined for 0 < u < 1");
    double v = -std::log(u);
    return jkn_kernel_v(k, N, v, opt) / u;
}

QuadResult J_kN(int k, int N, double x, const JkNOptions& opt) {
    if (k < 1 || N < 1) throw DomainError("J_kN needs positive integers k, N");
    if (!(x > 0)) throw DomainError("J_kN needs x > 0");
    // u = e^{-v}; NLi_k(-u^x) = sum (-1)^n n^{-k} e^{-x v n^N}
    auto g = [&](double v) -> cplx {
        double kern = jkn_kernel_v(k, N, v, opt);
        if (kern == 0.0) return 0.0;
        return kern * exp_series_alt(k, N, x * v).value;
    };
    QuadResult r = integrate_to_inf(g, 0.0);
    r.value = r.value.real();
    return r;
}

}  // namespace hz
