#pragma once

// The bi-K-invariant spherical function
//
//     Xi(g) = (1 / vol K) * integral_K delta(g k)^{-1/2} dk
//           = (1 / 2 pi) * integral_0^{2 pi} |g kappa(theta)|^{-1} dtheta,
//
// kappa(theta) = (cos theta, sin theta), together with the seminorm weight
// (1 + log|g|)^p.  Both modular characters give the same Xi.  The integrand
// develops features of width ~ |g|^{-2} near its minima, so the trapezoid
// node count must grow like |g|^2 log(1/eps); the result carries an
// underresolved flag obtained by comparing against the half-density rule.

#include "sl2/group.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

struct XiResult {
    double value = 0.0;
    bool underresolved = false;

    operator double() const { return value; }
};

inline XiResult xi(const GroupElement& g, const QuadratureScheme& scheme,
                   double refine_tol = 1e-9) {
    if (scheme.k_nodes < 4) throw std::invalid_argument("xi: scheme has no K nodes");
    const double a = g.a(), c = g.c(), b = g.b(), d = g.d();
    auto sum_with = [&](int n) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double th = two_pi * i / n;
            const double ct = std::cos(th), st = std::sin(th);
            const double vx = a * ct + b * st;
            const double vy = c * ct + d * st;
            acc += 1.0 / std::sqrt(vx * vx + vy * vy);
        }
        return acc / n;
    };
    const int n = scheme.k_nodes;
    XiResult r;
    r.value = sum_with(n);
    const double coarse = sum_with(n / 2);
    r.underresolved = std::abs(r.value - coarse) > refine_tol * std::max(1.0, std::abs(r.value));
    return r;
}

// K node count that resolves Xi(g) to roughly machine accuracy with the
// uniform trapezoid rule: the integrand is analytic in a strip of width
// ~ |g|^{-2}, so the count grows like |g|^2 and is only practical for
// moderate norms.
inline int xi_nodes_for(const GroupElement& g, double extra = 1.0) {
    const double s = group_norm(g);
    const double n = extra * (64.0 + 40.0 * s * s);
    return static_cast<int>(std::min(n, 4.0e6));
}

// Xi through the same defining K-integral but on a panel rule refined toward
// the two dips of |g kappa(theta)|, which have width ~ |g|^{-2}; accurate at
// any norm with O(log |g|) panels.  Each half-circle is integrated in a local
// angle phi around its dip, so the dip profile sqrt(s^2 sin^2 + s^-2 cos^2)
// is evaluated from sin(phi), cos(phi) of a small argument rather than from a
// cancelling sum of rotated entries.
inline double xi_refined(const GroupElement& g, int nodes_per_panel = 14) {
    const CartanFactors cf = cartan(g);
    const double dip = pi / 2.0 - cf.theta2;  // |g kappa(theta)| minimal here (mod pi)
    const double scale = std::exp(-2.0 * cf.t);
    // local panels on [-pi/2, pi/2] around the dip, geometric toward 0
    std::vector<double> breaks{0.0};
    for (double d = std::max(0.5 * scale, 1e-30); d < pi / 2.0; d *= 2.0) breaks.push_back(d);
    breaks.push_back(pi / 2.0);
    double acc = 0.0;
    const GroupElement gr = g * GroupElement::rotation(dip);
    const double a = gr.a(), b = gr.b(), c = gr.c(), d = gr.d();
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        for (double sign : {-1.0, 1.0}) {
            const Rule1D rule =
                sign > 0.0 ? gauss_legendre(nodes_per_panel, breaks[p], breaks[p + 1])
                           : gauss_legendre(nodes_per_panel, -breaks[p + 1], -breaks[p]);
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const double ct = std::cos(rule.nodes[i]), st = std::sin(rule.nodes[i]);
                const double vx = a * ct + b * st;
                const double vy = c * ct + d * st;
                // both dips (phi and phi + pi) give the same |g kappa|
                acc += 2.0 * rule.weights[i] / std::hypot(vx, vy);
            }
        }
    }
    return acc / two_pi;
}

inline double hc_weight(const GroupElement& g, int p) {
    return std::pow(1.0 + std::log(group_norm(g)), p);
}

}  // namespace sl2
