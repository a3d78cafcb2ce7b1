#pragma once

// Haar integration on G = SL(2,R) and its pieces.
//
// The measure on G is realized in Iwasawa coordinates g = k(theta) a(t) n(x):
//
//     dg = e^{2t} dtheta dt dx
//
// with dtheta Lebesgue on [0, 2*pi) (so vol K = 2*pi), and dt, dx Lebesgue.
// With this normalization the open-cell factorization g = nbar(y) l n(x),
// l = diag(alpha, 1/alpha), satisfies exactly
//
//     integral_G phi = integral_{N-} integral_L integral_{N+}
//                      phi(nbar l n) delta+(l) dy dl dx,
//
// where dl is the multiplicative measure d alpha / |alpha| over both
// components of L.  (At the identity both densities reduce to the same
// wedge of the Lie algebra basis, so the constant is 1; unimodularity and
// this factorization are covered by tests, not assumed.)

#include <functional>

#include "sl2/group.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

using GFunction = std::function<cxd(const GroupElement&)>;

inline double max_abs_node(const Rule1D& r) {
    double m = 0.0;
    for (double x : r.nodes) m = std::max(m, std::abs(x));
    return m;
}

struct IntegrationResult {
    cxd value{0.0, 0.0};
    bool truncation_warning = false;

    operator cxd() const { return value; }
};

// Integral over G in K A N+ coordinates.  The truncation warning fires when
// samples on the boundary of the (t, x) box exceed 1e-10 of the peak sample.
inline IntegrationResult integrate_G(const GFunction& phi, const QuadratureScheme& scheme) {
    scheme.validate();
    const Rule1D rk = scheme.k_rule();
    const Rule1D rt = scheme.t_rule();
    const Rule1D rx = scheme.x_rule();

    cxd acc = 0.0;
    double peak = 0.0, edge = 0.0;
    const double t_edge = 0.97 * max_abs_node(rt);
    const double x_edge = 0.97 * max_abs_node(rx);
    for (std::size_t it = 0; it < rt.size(); ++it) {
        const double t = rt.nodes[it];
        const GroupElement at = GroupElement::diag_exp(t);
        const double jac = std::exp(2.0 * t);
        for (std::size_t ik = 0; ik < rk.size(); ++ik) {
            const GroupElement ka = GroupElement::rotation(rk.nodes[ik]) * at;
            for (std::size_t ix = 0; ix < rx.size(); ++ix) {
                const double x = rx.nodes[ix];
                const cxd v = phi(ka * GroupElement::upper_unipotent(x));
                acc += rk.weights[ik] * rt.weights[it] * rx.weights[ix] * jac * v;
                const double av = std::abs(v);
                if (av > peak) peak = av;
                if ((std::abs(t) > t_edge || std::abs(x) > x_edge) && av > edge) edge = av;
            }
        }
    }
    IntegrationResult res;
    res.value = acc;
    res.truncation_warning = peak > 0.0 && edge > 1e-10 * peak;
    return res;
}

// Integral over G in open-cell coordinates nbar(y) l n(x) with the delta+(l)
// density.  Both sign components of L are included.
inline IntegrationResult integrate_NLN(const GFunction& phi, const QuadratureScheme& scheme) {
    scheme.validate();
    const Rule1D rs = scheme.t_rule();  // log coordinate on L
    const Rule1D ry = scheme.x_rule();
    const Rule1D rx = scheme.x_rule();

    cxd acc = 0.0;
    double peak = 0.0, edge = 0.0;
    const double s_edge = 0.97 * max_abs_node(rs);
    const double yx_edge = 0.97 * max_abs_node(rx);
    for (int sign : {+1, -1}) {
        for (std::size_t is = 0; is < rs.size(); ++is) {
            const double s = rs.nodes[is];
            const GroupElement l = GroupElement::levi(sign, s);
            const double dplus = std::exp(2.0 * s);  // delta+(l) = alpha^2
            for (std::size_t iy = 0; iy < ry.size(); ++iy) {
                const GroupElement nl = GroupElement::lower_unipotent(ry.nodes[iy]) * l;
                for (std::size_t ix = 0; ix < rx.size(); ++ix) {
                    const cxd v = phi(nl * GroupElement::upper_unipotent(rx.nodes[ix]));
                    acc += rs.weights[is] * ry.weights[iy] * rx.weights[ix] * dplus * v;
                    const double av = std::abs(v);
                    if (av > peak) peak = av;
                    if ((std::abs(s) > s_edge || std::abs(ry.nodes[iy]) > yx_edge ||
                         std::abs(rx.nodes[ix]) > yx_edge) &&
                        av > edge)
                        edge = av;
                }
            }
        }
    }
    IntegrationResult res;
    res.value = acc;
    res.truncation_warning = peak > 0.0 && edge > 1e-10 * peak;
    return res;
}

// Integral over K with respect to dtheta (total mass 2*pi).
template <typename F>
auto integrate_K(F&& f, int n_nodes) {
    return periodic_trapezoid(n_nodes).integrate(
        [&](double th) { return f(GroupElement::rotation(th)); });
}

// Integral over G in polar coordinates g = k1 a(tau) k2:
//
//     integral_G f = int_0^{2pi} int_0^inf int_0^{2pi}
//                    f(k1 a(tau) k2) sinh(2 tau) dtheta1 dtau dtheta2,
//
// the same measure as integrate_G (the constant is 1 with the e^{2t} KAN
// density; covered by tests).  Right and left translation by rotations are
// exact shifts of the periodic trapezoid rules in this chart.
struct CartanScheme {
    int k_nodes = 256;        // trapezoid on the left rotation
    int tau_nodes = 97;
    double tau_radius = 3.0;
    int k2_panel_nodes = 12;  // per panel, refined toward the chart shear angles
    double k2_feature_offset = 0.0;  // rotate the shear angles, e.g. for right-translated integrands
};

inline IntegrationResult integrate_G_cartan(const GFunction& phi, const CartanScheme& scheme) {
    const Rule1D rk1 = periodic_trapezoid(scheme.k_nodes);
    const Rule1D rt = gauss_legendre(scheme.tau_nodes, 0.0, scheme.tau_radius);
    cxd acc = 0.0;
    double peak = 0.0, edge = 0.0;
    const double tau_edge = 0.95 * scheme.tau_radius;
    for (std::size_t it = 0; it < rt.size(); ++it) {
        const double tau = rt.nodes[it];
        const GroupElement a = GroupElement::diag_exp(tau);
        const double dens = std::sinh(2.0 * tau);
        // the chart map (theta1, tau, theta2) -> (theta, t, x) shears on the
        // scale e^{-2 tau} around theta2 = +-pi/2; refine there
        const Rule1D rk2 = dip_refined_circle_rule(
            {pi / 2.0 + scheme.k2_feature_offset, 3.0 * pi / 2.0 + scheme.k2_feature_offset},
            0.5 * std::exp(-2.0 * tau), scheme.k2_panel_nodes);
        for (std::size_t i1 = 0; i1 < rk1.size(); ++i1) {
            const GroupElement ka = GroupElement::rotation(rk1.nodes[i1]) * a;
            for (std::size_t i2 = 0; i2 < rk2.size(); ++i2) {
                const cxd v = phi(ka * GroupElement::rotation(rk2.nodes[i2]));
                acc += rt.weights[it] * rk1.weights[i1] * rk2.weights[i2] * dens * v;
                const double av = std::abs(v);
                if (av > peak) peak = av;
                if (tau > tau_edge && av > edge) edge = av;
            }
        }
    }
    IntegrationResult res;
    res.value = acc;
    res.truncation_warning = peak > 0.0 && edge > 1e-10 * peak;
    return res;
}

// Integral over the truncated Cartan domain t in [0, R] of f(a(t)) sinh(2t),
// proportional to the G-integral of a K-bi-invariant function.
template <typename F>
double integrate_cartan_radial(F&& f, double radius, int n_nodes) {
    return gauss_legendre(n_nodes, 0.0, radius).integrate([&](double t) {
        return f(t) * std::sinh(2.0 * t);
    });
}

}  // namespace sl2
