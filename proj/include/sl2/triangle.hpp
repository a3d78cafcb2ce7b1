#pragma once

// Numeric verification of the two triangle identities for the
// opposite-parabolic adjunction.  The reduced closed form of the first
// composite applied to h (x) Ext(f), evaluated at a model point v, is
//
//   A(v) = int_L f(l) delta+(l)^{-1/2} (J+ I+ h)(l11^{-1} v) dl,
//
// which must agree with the direct module action (h . f)(v); the second
// triangle mirrors it on the lower side with the left action.  A coarser
// consistency spot-check evaluates the unreduced intermediate forms:
//
//   first:  T(v)  = int_G int_{N+} f0(gamma n) h1(g gamma^{-1}) dgamma dn,
//           h1 = I+ h, gamma integrated in open-cell coordinates;
//   second: T2(v) = int_{R^2} int_R k(x) (I+ Phi)(nbar(w) ytil xtil) dw dx,
//           Phi the N+-average of f0.
//
// Residuals are reported in sup and L2 form over the sampled points.

#include <random>
#include <string>
#include <vector>

#include "sl2/bernstein.hpp"
#include "sl2/intertwiner.hpp"
#include "sl2/levi_function.hpp"

namespace sl2 {

struct ResidualReport {
    std::string name;
    std::string grid_params;
    double residual_sup = 0.0;
    double residual_l2 = 0.0;
    int samples = 0;
    double tolerance = 0.0;
    bool pass = false;
    double scale = 0.0;  // sup of the reference side, for relative reading
};

struct TriangleSettings {
    FourierSettings fourier{};
    IntertwinerGrid igrid{};
    LineIntegralScheme line{};
    LeviQuadrature levi{};
    int n_samples = 20;
    double r_min = 0.5;
    double r_max = 2.0;
    double tolerance = 1e-2;
    unsigned seed = 42;
    bool spot_check = false;
    int spot_nodes = 14;  // per dimension of the coarse unreduced form
    double spot_tolerance = 5e-2;
};

inline std::vector<Vec2> sample_annulus(int n, double r_min, double r_max, unsigned seed) {
    std::mt19937_64 eng(seed);
    auto unif = [&](double a, double b) {
        return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
    };
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pts.push_back(polar(unif(r_min, r_max), unif(0.0, two_pi)));
    }
    return pts;
}

namespace detail {

// Shared core: on either side the reduced composite and the module action
// have the same model formula; `ji` is J(I h) materialized as a callable and
// `direct` is the module action the composite must reproduce.
template <typename JI>
ResidualReport triangle_residuals(const PlaneFunction& direct, const LeviFunction& f, JI&& ji,
                                  const TriangleSettings& ts, const std::string& name) {
    const Rule1D lr = ts.levi.rule();
    const std::vector<Vec2> pts = sample_annulus(ts.n_samples, ts.r_min, ts.r_max, ts.seed);

    ResidualReport rep;
    rep.name = name;
    rep.samples = ts.n_samples;
    rep.tolerance = ts.tolerance;
    double l2 = 0.0;
    for (const Vec2& v : pts) {
        cxd reduced = 0.0;
        for (int sg : {+1, -1}) {
            for (std::size_t i = 0; i < lr.size(); ++i) {
                const double s = lr.nodes[i];
                const double inv_alpha = sg * std::exp(-s);
                reduced += lr.weights[i] * f(sg, s) * std::exp(-s) * ji(inv_alpha * v);
            }
        }
        const cxd dv = direct(v);
        const double r = std::abs(reduced - dv);
        rep.residual_sup = std::max(rep.residual_sup, r);
        rep.scale = std::max(rep.scale, std::abs(dv));
        l2 += r * r;
    }
    rep.residual_l2 = std::sqrt(l2 / ts.n_samples);
    rep.pass = rep.residual_sup <= ts.tolerance * std::max(rep.scale, 1e-30);
    rep.grid_params = "nu=" + std::to_string(ts.fourier.n_u) +
                      " dmu=" + std::to_string(ts.fourier.mu.dmu) +
                      " jmax=" + std::to_string(ts.fourier.jmax);
    return rep;
}

}  // namespace detail

// First triangle: h on G/N+, f acting on the right.
inline ResidualReport verify_triangle_first(const PlaneFunction& h, const LeviFunction& f,
                                            const TriangleSettings& ts = {}) {
    if (h.side() != Side::upper)
        throw std::invalid_argument("verify_triangle_first: h must be an upper-model function");
    PlaneFunction ih = intertwine_I(Side::upper, h, ts.fourier, ts.igrid);
    auto ji = [&](Vec2 v) { return intertwine_J_numeric(Side::upper, ih, v, ts.line).value; };
    return detail::triangle_residuals(act_L_module(h, f, ts.levi), f, ji, ts, "triangle-first");
}

// Second triangle: k on N-\G (lower model), f acting on the left; in the
// matched models the composite takes the same form with J- I-.
inline ResidualReport verify_triangle_second(const PlaneFunction& k, const LeviFunction& f,
                                             const TriangleSettings& ts = {}) {
    if (k.side() != Side::lower)
        throw std::invalid_argument("verify_triangle_second: k must be a lower-model function");
    PlaneFunction ik = intertwine_I(Side::lower, k, ts.fourier, ts.igrid);
    auto ji = [&](Vec2 v) { return intertwine_J_numeric(Side::lower, ik, v, ts.line).value; };
    return detail::triangle_residuals(act_L_module_left(f, k, ts.levi), f, ji, ts,
                                      "triangle-second");
}

// Coarse evaluation of the unreduced first-triangle form
//
//   T(v) = [int_G u(gamma^{-1})] [int_{N+} v_plus]
//          * sum_sg int dy ds e^{s} vbar(y) f(sg, s)
//            int dx (I+ h)(alpha (c2(g) - x c1(g))),   alpha = sg e^s,
//
// at a model point v; the two bracketed masses are computed numerically
// instead of being assumed equal to one, and the x-integral is the line
// integral that the reduction turns into J+.
inline cxd triangle_first_unreduced(const PlaneFunction& ih_lower, const LeviFunction& f,
                                    const BumpSpec& bumps, Vec2 v, int n_nodes,
                                    const QuadratureScheme& mass_scheme) {
    GFunction u = bernstein_u(bumps);
    const cxd u_mass =
        integrate_NLN([&](const GroupElement& g) { return u(g.inverse()); }, mass_scheme).value;
    const double xr = bumps.v_plus.support_radius();
    const cxd v_mass = gauss_legendre(8 * n_nodes, bumps.v_plus.center - xr,
                                      bumps.v_plus.center + xr)
                           .integrate([&](double x) { return cxd(bumps.v_plus(x), 0.0); });

    const double yr = 6.0 * bumps.v_minus.width;
    const Rule1D ry =
        gauss_legendre(2 * n_nodes, bumps.v_minus.center - yr, bumps.v_minus.center + yr);
    const Rule1D rs = gauss_legendre(4 * n_nodes, -f.s_support(), f.s_support());
    const GroupElement gx = coset_representative(v, Side::upper);
    const Vec2 c1 = gx.col1(), c2 = gx.col2();

    cxd acc = 0.0;
    for (int sg : {+1, -1}) {
        for (std::size_t is = 0; is < rs.size(); ++is) {
            const double s = rs.nodes[is];
            const cxd fval = f(sg, s);
            if (std::abs(fval) < 1e-300) continue;
            const double alpha = sg * std::exp(s);
            for (std::size_t iy = 0; iy < ry.size(); ++iy) {
                // model point of g gamma^{-1} traces the line alpha(c2 - x c1)
                // as x runs over N+; nbar(y) does not move the second column.
                (void)ry.nodes[iy];
                cxd line = 0.0;
                const Rule1D rx = tan_map(24 * n_nodes, 1.0);
                for (std::size_t ix = 0; ix < rx.size(); ++ix) {
                    const double x = rx.nodes[ix];
                    const Vec2 p = alpha * (c2 - x * c1);
                    line += rx.weights[ix] * ih_lower(p);
                }
                acc += rs.weights[is] * ry.weights[iy] * std::exp(s) *
                       bumps.v_minus(ry.nodes[iy]) * fval * line;
            }
        }
    }
    return u_mass * v_mass * acc;
}

}  // namespace sl2
