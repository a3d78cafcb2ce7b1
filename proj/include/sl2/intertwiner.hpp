#pragma once

// Intertwining operators between the opposite-parabolic models.
//
// The standard intertwiner is a line integral in the plane models: at an
// upper-model point v,
//
//   (J+ k)(v) = int_R k(w + s v) ds,   cross(v, w) = +1  (k lower-model),
//
// and at a lower-model point v, (J- h)(v) integrates over w + s v with
// cross(w, v) = +1.  The dual vector w is unique up to sliding along the
// line, which leaves the integral unchanged.  The line's closest approach to
// the origin is |w| = 1/|v| because w is chosen orthogonal to v, so the
// substitution s = sinh(tau)/|v|^2 makes |w + s v| = cosh(tau)/|v| and the
// integrand smooth and exponentially concentrated in tau.
//
// On K-type atoms J acts as multiplication by the Gamma-quotient scalars
// c(side, j, mu) whenever the integral converges (Im mu > 0 for J+, < 0 for
// J-); this is pinned by the calibration tests.  The right inverses are
//
//   I(side) = inverse_fourier(opposite side) . c(side)^{-1} . fourier(side),
//
// and the even-parity normalized involution W acts slice-wise by
//
//   (W H)(mu)_j = w_j(mu) H_j(-mu),
//   w_j(mu) = i^{-j} c+(j, mu) / c+(0, mu)
//           = i^{-j} Gamma((1-i mu)/2)^2
//             / [Gamma((1-i mu+j)/2) Gamma((1-i mu-j)/2)],
//
// which is involutive, unimodular on real mu, G-equivariant (it is the
// 0-type-normalized standard intertwiner composed with the mu-flip and the
// Weyl rotation), and satisfies W(0) = identity.

#include <cmath>

#include "sl2/c_function.hpp"
#include "sl2/fourier.hpp"
#include "sl2/plane_function.hpp"

namespace sl2 {

struct LineIntegralScheme {
    double u_window = 40.0;  // integrate while |log |w + s v|| <= u_window
    int nodes_per_panel = 16;
    double panel_width = 1.0;  // in the sinh-substituted variable

    QuadratureScheme as_quadrature() const { return {}; }
};

struct LineIntegralResult {
    cxd value{0.0, 0.0};
    bool slow_decay = false;

    operator cxd() const { return value; }
};

// Dual vector completing the model point to a determinant-one frame.
inline Vec2 line_dual_vector(Vec2 v, Side out_side) {
    const double n2 = v.x * v.x + v.y * v.y;
    if (n2 <= 0.0) throw std::invalid_argument("line_dual_vector: zero vector");
    if (out_side == Side::upper) return {-v.y / n2, v.x / n2};  // cross(v, w) = 1
    return {v.y / n2, -v.x / n2};                               // cross(w, v) = 1
}

inline LineIntegralResult intertwine_J_numeric(Side out_side, const PlaneFunction& h, Vec2 x,
                                               const LineIntegralScheme& ls = {}) {
    if (h.side() != opposite(out_side))
        throw std::invalid_argument("intertwine_J_numeric: h must live on the opposite side");
    const Vec2 w = line_dual_vector(x, out_side);
    const double vn = x.norm();
    const double d = 1.0 / vn;  // closest approach |w|
    // |w + s v| = d cosh(tau) with s = sinh(tau) / vn^2
    const double tau_max = std::max(2.0, ls.u_window - std::log(d) + 1.0);
    std::vector<double> breaks;
    for (double b = -tau_max; b < tau_max + 0.5 * ls.panel_width; b += ls.panel_width)
        breaks.push_back(std::min(b, tau_max));
    const Rule1D rule = gauss_legendre_panels(ls.nodes_per_panel, breaks);

    cxd acc = 0.0;
    double peak = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double tau = rule.nodes[i];
        const double s = std::sinh(tau) / (vn * vn);
        const double jac = std::cosh(tau) / (vn * vn);
        const cxd val = h(w + s * x) * jac;
        acc += rule.weights[i] * val;
        const double a = std::abs(val);
        if (a > peak) peak = a;
        if (std::abs(tau) > tau_max - 2.0 * ls.panel_width && a > tail) tail = a;
    }
    LineIntegralResult res;
    res.value = acc;
    res.slow_decay = peak > 0.0 && tail > 1e-8 * peak;
    return res;
}

// Right inverse of the standard intertwiner: a lazy plane function plus a
// grid-materialized variant for bulk evaluation.
inline SpectralFunction apply_c_inverse(const SpectralFunction& H, Side side) {
    return H.map_slices([&](double mu, const KSeries& s) {
        KSeries out(s.jmax());
        for (int j = -s.jmax(); j <= s.jmax(); ++j) {
            out[j] = c_function_reciprocal(side, j, mu) * s[j];
        }
        return out;
    });
}

// Multiplication by c with the principal-value convention at the even-j pole:
// the 1/mu part contributes nothing at the symmetric node mu = 0, leaving the
// regular part c_reg(0) = lim_{mu->0} (c(mu) - residue/mu).
inline SpectralFunction apply_c(const SpectralFunction& H, Side side) {
    const int jmax = H.jmax();
    KSeries c_reg0(jmax);
    for (int j = -jmax; j <= jmax; ++j) {
        if (j % 2 == 0) {
            const double eps = 1e-4;
            c_reg0[j] = 0.5 * (c_function(side, j, eps) + c_function(side, j, -eps));
        }
    }
    return H.map_slices([&, c_reg0](double mu, const KSeries& s) {
        KSeries out(s.jmax());
        for (int j = -s.jmax(); j <= s.jmax(); ++j) {
            out[j] = c_function_has_pole(j, mu) ? c_reg0[j] * s[j] : c_function(side, j, mu) * s[j];
        }
        return out;
    });
}

struct IntertwinerGrid {
    double u_min = -24.0;
    double u_max = 24.0;
    int nu = 1921;
};

inline PlaneFunction intertwine_I(Side side, const PlaneFunction& h, const FourierSettings& fs = {},
                                  const IntertwinerGrid& ig = {}) {
    if (h.side() != side) throw std::invalid_argument("intertwine_I: side mismatch");
    SpectralFunction H = fourier_A(h, fs).value;
    SpectralFunction Hc = apply_c_inverse(H, side);
    // reinterpret the slices on the opposite side and invert there
    SpectralFunction flipped(opposite(side), Hc.grid(), Hc.jmax());
    for (std::size_t i = 0; i < Hc.grid().size(); ++i) flipped.slice(i) = Hc.slice(i);
    return inverse_fourier_A_grid(flipped, ig.u_min, ig.u_max, ig.nu);
}

// ---- normalized involution on the even part of the spectral side ----------

inline cxd w_even_scalar(int j, double mu) {
    if (std::abs(j) % 2 != 0) throw std::invalid_argument("w_even_scalar: j must be even");
    const cxd z = cxd(1.0, -mu) / 2.0;
    const cxd i_pow = std::polar(1.0, -0.5 * pi * j);
    return i_pow * gamma_complex(z) * gamma_complex(z) /
           (gamma_complex(z + 0.5 * j) * gamma_complex(z - 0.5 * j));
}

inline cxd w_odd_scalar(int j, double mu) {
    if (std::abs(j) % 2 != 1) throw std::invalid_argument("w_odd_scalar: j must be odd");
    const cxd c = c_function(Side::upper, j, mu);
    return std::conj(c) / std::abs(c);
}

inline SpectralFunction normalized_W(const SpectralFunction& H) {
    if (!is_even_parity(H, 0.0))
        throw std::invalid_argument("normalized_W: input must be even-parity");
    SpectralFunction out(H.side(), H.grid(), H.jmax());
    for (std::size_t i = 0; i < H.grid().size(); ++i) {
        const double mu = H.grid().mu(i);
        const KSeries& src = H.slice(H.grid().flip(i));
        KSeries& dst = out.slice(i);
        for (int j = -H.jmax(); j <= H.jmax(); ++j) {
            if (std::abs(j) % 2 == 0) dst[j] = w_even_scalar(j, mu) * src[j];
        }
    }
    return out;
}

inline SpectralFunction symmetric_part(const SpectralFunction& H) {
    return 0.5 * (H + normalized_W(H));
}

inline SpectralFunction antisymmetric_part(const SpectralFunction& H) {
    return 0.5 * (H - normalized_W(H));
}

inline SpectralFunction operator*(double a, const SpectralFunction& H) {
    return cxd(a, 0.0) * H;
}

}  // namespace sl2
