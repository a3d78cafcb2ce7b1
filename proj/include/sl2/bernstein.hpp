#pragma once

// The unit of the opposite-parabolic adjunction: extension by zero from the
// open cell N- L N+ = {g11 != 0}.
//
// Given f on L and mass-one cutoff bumps vbar on N-, v on N+ and u on G,
//
//   f0(nbar l n) = vbar(nbar) f(l) delta+(l)^{-1/2} v(n),   zero off the cell,
//   k0(g1, g2)   = u(g1) f0(g1 g2),
//
// and the image of f under the unit is the class of k0 after integrating the
// first slot over left N- cosets and the second over right N+ cosets.  The
// canonical G-balanced functional used by the bump-independence tests is
//
//   O(y0, x0) = int_G K(y0 gamma, gamma^{-1} x0) dgamma,
//
// whose exact value collapses (by left invariance and the mass-one bumps) to
// f(l(y0 x0)) delta+(l(y0 x0))^{-1/2}; the tests integrate it numerically
// without using that collapse.

#include <cmath>

#include "sl2/haar.hpp"
#include "sl2/levi_function.hpp"
#include "sl2/pairing.hpp"

namespace sl2 {

struct Bump1D {
    double center = 0.0;
    double width = 0.35;

    double operator()(double x) const {
        const double d = (x - center) / width;
        return std::exp(-0.5 * d * d) / (width * std::sqrt(two_pi));
    }
    double support_radius() const { return std::abs(center) + 9.0 * width; }
};

// Cutoff data for the unit construction; every bump has total integral one
// (the Gaussian normalization is exact, and the u-bump mass over G is fixed
// in closed form through the open-cell integration formula).
struct BumpSpec {
    Bump1D v_minus;  // on N- (coordinate y)
    Bump1D v_plus;   // on N+ (coordinate x)
    // u on G, built in open-cell coordinates on the positive component
    Bump1D u_y;
    Bump1D u_s;
    Bump1D u_x;

    void validate(double y_box, double s_box, double x_box) const {
        if (v_minus.support_radius() > y_box || v_plus.support_radius() > x_box ||
            u_y.support_radius() > y_box || u_s.support_radius() > s_box ||
            u_x.support_radius() > x_box) {
            throw std::invalid_argument("BumpSpec: bump support exceeds the quadrature box");
        }
    }
};

struct OpenCellCoords {
    bool in_cell = false;
    int sign = +1;
    double y = 0.0;  // N- coordinate
    double s = 0.0;  // log |l11|
    double x = 0.0;  // N+ coordinate
};

inline OpenCellCoords open_cell_coords(const GroupElement& g, double tol = 1e-13) {
    OpenCellCoords c;
    const double alpha = g.a();
    if (std::abs(alpha) < tol) return c;
    c.in_cell = true;
    c.sign = alpha >= 0.0 ? +1 : -1;
    c.s = std::log(std::abs(alpha));
    c.x = g.b() / alpha;
    c.y = g.c() / alpha;
    return c;
}

// f0 extended by zero from the open cell.
inline GFunction bernstein_f0(const LeviFunction& f, const BumpSpec& bumps) {
    return [f, bumps](const GroupElement& g) -> cxd {
        const OpenCellCoords c = open_cell_coords(g);
        if (!c.in_cell) return 0.0;
        return bumps.v_minus(c.y) * f(c.sign, c.s) * std::exp(-c.s) * bumps.v_plus(c.x);
    };
}

// u(g): mass-one cutoff on G, supported on the positive open cell.  The
// e^{-2s} factor cancels the open-cell Haar density, so the G-mass is the
// product of the three unit bump masses.
inline GFunction bernstein_u(const BumpSpec& bumps) {
    return [bumps](const GroupElement& g) -> cxd {
        const OpenCellCoords c = open_cell_coords(g);
        if (!c.in_cell || c.sign < 0) return 0.0;
        return bumps.u_y(c.y) * bumps.u_s(c.s) * bumps.u_x(c.x) * std::exp(-2.0 * c.s);
    };
}

// k0(g1, g2) = u(g1) f0(g1 g2).
inline KernelOnGxG bernstein_k0(const LeviFunction& f, const BumpSpec& bumps) {
    GFunction f0 = bernstein_f0(f, bumps);
    GFunction u = bernstein_u(bumps);
    return KernelOnGxG(
        [f0, u](const GroupElement& g1, const GroupElement& g2) -> cxd {
            const cxd uv = u(g1);
            if (uv == cxd(0.0, 0.0)) return 0.0;
            return uv * f0(g1 * g2);
        },
        0);
}

// Coset-integration rules for the unit kernel at the pair (vy, vx): the
// nbar and n integrands are bump translates centered at minus the open-cell
// coordinates of the product of the two representatives.
struct UnitKernelRules {
    Rule1D nbar;
    Rule1D n;

    static UnitKernelRules centered(const BumpSpec& bumps, Vec2 vy, Vec2 vx, int n_nodes) {
        const GroupElement prod = coset_representative(vy, Side::lower) *
                                  coset_representative(vx, Side::upper);
        const OpenCellCoords c = open_cell_coords(prod);
        if (!c.in_cell)
            throw std::invalid_argument("UnitKernelRules: coset pair meets the cell boundary");
        const double wy = bumps.v_minus.support_radius() + bumps.u_y.support_radius() + 1.0;
        const double wx = bumps.v_plus.support_radius() + 1.0;
        UnitKernelRules r;
        r.nbar = gauss_legendre(n_nodes, -c.y - wy, -c.y + wy);
        r.n = gauss_legendre(n_nodes, -c.x - wx, -c.x + wx);
        return r;
    }
};

// The kernel on (N-\G) x (G/N+) representing the unit: both coset
// integrations applied to k0.  Model points: vy for the N-\G slot, vx for
// the G/N+ slot.
inline cxd bernstein_unit_kernel(const LeviFunction& f, const BumpSpec& bumps, Vec2 vy, Vec2 vx,
                                 const Rule1D& nbar_rule, const Rule1D& n_rule) {
    GFunction f0 = bernstein_f0(f, bumps);
    GFunction u = bernstein_u(bumps);
    const GroupElement ytil = coset_representative(vy, Side::lower);
    const GroupElement xtil = coset_representative(vx, Side::upper);
    cxd acc = 0.0;
    for (std::size_t i = 0; i < nbar_rule.size(); ++i) {
        const GroupElement g1 = GroupElement::lower_unipotent(nbar_rule.nodes[i]) * ytil;
        const cxd uv = u(g1);
        if (uv == cxd(0.0, 0.0)) continue;
        cxd inner = 0.0;
        for (std::size_t k = 0; k < n_rule.size(); ++k) {
            inner += n_rule.weights[k] *
                     f0(g1 * xtil * GroupElement::upper_unipotent(n_rule.nodes[k]));
        }
        acc += nbar_rule.weights[i] * uv * inner;
    }
    return acc;
}

// Canonical G-balanced observation of the unit element at a coset pair:
//
//   O(y0, x0) = int_G K(y0 gamma, gamma^{-1} x0) dgamma
//             = int dw [ int_G u(nbar(w) delta) ddelta ]
//                      [ int dx f0(nbar(w) P n(x)) ],   P = ytil xtil,
//
// after the measure-preserving substitution delta = ytil gamma and Fubini;
// the w- and x-rules are centered at minus the open-cell coordinates of P,
// where the translated bumps live, and the delta-integral runs over the
// open-cell box that supports u.
inline cxd bernstein_balanced_functional(const LeviFunction& f, const BumpSpec& bumps, Vec2 vy,
                                         Vec2 vx, int n_nodes) {
    GFunction f0 = bernstein_f0(f, bumps);
    GFunction u = bernstein_u(bumps);
    const GroupElement ytil = coset_representative(vy, Side::lower);
    const GroupElement xtil = coset_representative(vx, Side::upper);
    const GroupElement prod = ytil * xtil;
    const OpenCellCoords cp = open_cell_coords(prod);
    if (!cp.in_cell)
        throw std::invalid_argument(
            "bernstein_balanced_functional: coset pair meets the cell boundary");

    const double wy = bumps.v_minus.support_radius() + bumps.u_y.support_radius() + 0.5;
    const double wx = bumps.v_plus.support_radius() + 0.5;
    const Rule1D rw = gauss_legendre(2 * n_nodes, -cp.y - wy, -cp.y + wy);
    const Rule1D rx = gauss_legendre(2 * n_nodes, -cp.x - wx, -cp.x + wx);
    const double uy = bumps.u_y.support_radius();
    const double us = bumps.u_s.support_radius();
    const Rule1D rds = gauss_legendre(n_nodes, bumps.u_s.center - us, bumps.u_s.center + us);
    const double ux = bumps.u_x.support_radius();
    const Rule1D rdx = gauss_legendre(n_nodes, bumps.u_x.center - ux, bumps.u_x.center + ux);

    cxd acc = 0.0;
    for (std::size_t iw = 0; iw < rw.size(); ++iw) {
        const double w = rw.nodes[iw];
        const GroupElement nw = GroupElement::lower_unipotent(w);
        // A(w) = int_G u(nbar(w) delta) ddelta over the open-cell box; the
        // y-box follows the support of the translated integrand.
        const Rule1D rdy =
            gauss_legendre(n_nodes, bumps.u_y.center - uy - w, bumps.u_y.center + uy - w);
        cxd aw = 0.0;
        for (std::size_t is = 0; is < rds.size(); ++is) {
            const double s = rds.nodes[is];
            const double dens = std::exp(2.0 * s);
            for (std::size_t iy = 0; iy < rdy.size(); ++iy) {
                const GroupElement nl =
                    GroupElement::lower_unipotent(rdy.nodes[iy]) * GroupElement::levi(1, s);
                for (std::size_t ix = 0; ix < rdx.size(); ++ix) {
                    const GroupElement delta = nl * GroupElement::upper_unipotent(rdx.nodes[ix]);
                    aw += rds.weights[is] * rdy.weights[iy] * rdx.weights[ix] * dens *
                          u(nw * delta);
                }
            }
        }
        // B(w) = int dx f0(nbar(w) P n(x))
        const GroupElement nwp = nw * prod;
        cxd bw = 0.0;
        for (std::size_t k = 0; k < rx.size(); ++k) {
            bw += rx.weights[k] * f0(nwp * GroupElement::upper_unipotent(rx.nodes[k]));
        }
        acc += rw.weights[iw] * aw * bw;
    }
    return acc;
}

// Exact collapsed value of the balanced functional, used as the oracle.
inline cxd bernstein_balanced_exact(const LeviFunction& f, Vec2 vy, Vec2 vx) {
    const GroupElement prod = coset_representative(vy, Side::lower) *
                              coset_representative(vx, Side::upper);
    const OpenCellCoords c = open_cell_coords(prod);
    if (!c.in_cell) return 0.0;
    return f(c.sign, c.s) * std::exp(-c.s);
}

}  // namespace sl2
