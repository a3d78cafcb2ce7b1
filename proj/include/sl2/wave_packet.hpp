#pragma once

// Wave packets: spectral integrals
//
//   B(H1, H2)(g) = int sum_j conj(H1_j(mu)) [c+^{-1}(mu) pi_mu(g^{-1}) H2(mu)]_j dmu,
//
// where pi_mu(b) acts on a K-series through homogeneous extension, left
// translation and K-restriction.  The restriction is computed with an
// angle quadrature refined geometrically toward the singular directions of
// the acting matrix, whose feature scale is |b|^{-2}; only the K-types
// |j| <= jmax are projected, which is exact for the pairing against
// band-limited H1.  With the coefficient pairing above, B coincides with the
// plane-model pairing <k*, g^{-1} I+ h>_{L2(R^2)} when H1, H2 are the
// transforms of k*, h.

#include <algorithm>
#include <vector>

#include "sl2/c_function.hpp"
#include "sl2/fourier.hpp"
#include "sl2/intertwiner.hpp"
#include "sl2/xi.hpp"

namespace sl2 {

// Angle rule adapted to the action of b: panels refined toward the four
// critical directions of psi -> |b^{-1} pt(psi)| down to scale ~ |b|^{-2}.
inline Rule1D action_theta_rule(const GroupElement& b, int nodes_per_panel = 12) {
    const CartanFactors cf = cartan(b.inverse());
    // |b^{-1} pt(psi)| = |a pt(psi + theta2)|; critical angles where
    // pt(psi + theta2) hits the coordinate axes.
    const double base = -cf.theta2;
    const double nrm = group_norm(b);
    const double fine = std::max(0.4 / (nrm * nrm), 1e-9);
    std::vector<double> breaks;
    for (int q = 0; q < 4; ++q) {
        const double c = base + q * (pi / 2.0);
        breaks.push_back(c);
        for (double d = fine; d < pi / 4.0; d *= 2.0) {
            breaks.push_back(c - d);
            breaks.push_back(c + d);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> uniq;
    for (double b0 : breaks) {
        if (uniq.empty() || b0 - uniq.back() > 1e-12) uniq.push_back(b0);
    }
    uniq.push_back(uniq.front() + two_pi);  // wrap the circle
    return gauss_legendre_panels(nodes_per_panel, uniq);
}

// pi_mu(b) c: samples of the homogeneous extension at b^{-1} pt(theta),
// projected back onto |j| <= jmax.
class SpectralAction {
  public:
    SpectralAction(const GroupElement& b, Side side, int jmax)
        : side_(side), jmax_(jmax), rule_(action_theta_rule(b)) {
        const GroupElement binv = b.inverse();
        const double off = k_angle_offset(side);
        log_r_.resize(rule_.size());
        angle_.resize(rule_.size());
        for (std::size_t i = 0; i < rule_.size(); ++i) {
            const Vec2 w = binv.apply(polar(1.0, rule_.nodes[i] + off));
            log_r_[i] = std::log(w.norm());
            angle_[i] = w.angle() - off;
        }
    }

    KSeries apply(cxd mu, const KSeries& c) const {
        const double sigma = homogeneity_sign(side_);
        const cxd expo = cxd(-1.0, 0.0) - cxd(0.0, 1.0) * sigma * mu;
        std::vector<cxd> omega(rule_.size());
        for (std::size_t i = 0; i < rule_.size(); ++i) {
            omega[i] = std::exp(expo * log_r_[i]) * c.eval(angle_[i]);
        }
        KSeries out(jmax_);
        for (int j = -jmax_; j <= jmax_; ++j) {
            cxd acc = 0.0;
            for (std::size_t i = 0; i < rule_.size(); ++i) {
                acc += rule_.weights[i] * omega[i] * std::polar(1.0, -j * rule_.nodes[i]);
            }
            out[j] = acc / two_pi;
        }
        return out;
    }

  private:
    Side side_;
    int jmax_;
    Rule1D rule_;
    std::vector<double> log_r_;
    std::vector<double> angle_;
};

// B(H1, H2)(g) with the inverted intertwiner absorbed on the H2 side.
inline cxd wave_packet_B(const SpectralFunction& H1, const SpectralFunction& H2,
                         const GroupElement& g, bool apply_c_inv = true) {
    if (!(H1.grid() == H2.grid()) || H1.jmax() != H2.jmax())
        throw std::invalid_argument("wave_packet_B: mismatched grids");
    const int jmax = H2.jmax();
    const SpectralAction act(g.inverse(), H2.side(), jmax);
    const MuGrid& grid = H2.grid();
    cxd acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double mu = grid.mu(i);
        KSeries slice = act.apply(mu, H2.slice(i));
        if (apply_c_inv) {
            for (int j = -jmax; j <= jmax; ++j) {
                slice[j] *= c_function_reciprocal(Side::upper, j, mu);
            }
        }
        const double w = (i == 0 || i + 1 == grid.size()) ? 0.5 : 1.0;
        acc += w * coefficient_inner(H1.slice(i), slice);
    }
    return acc * grid.dmu;
}

// Numeric vanishing order of a spectral function at mu = 0 (0, 1 or 2),
// from the dyadic scaling of the slice norms nearest the origin.
inline int vanishing_order_at_zero(const SpectralFunction& H, double tol = 1e-8) {
    const MuGrid& g = H.grid();
    const std::size_t z = g.zero_index();
    double scale = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        scale = std::max(scale, std::sqrt(H.slice(i).norm_sq()));
    if (scale <= 0.0) return 2;
    const double at0 = std::sqrt(H.slice(z).norm_sq());
    if (at0 > tol * scale) return 0;
    const double n1 = 0.5 * (std::sqrt(H.slice(z + 1).norm_sq()) +
                             std::sqrt(H.slice(z - 1).norm_sq()));
    const double n2 = 0.5 * (std::sqrt(H.slice(z + 2).norm_sq()) +
                             std::sqrt(H.slice(z - 2).norm_sq()));
    if (n1 <= tol * scale && n2 <= tol * scale) return 2;
    const double order = std::log2(n2 / n1);
    return order >= 1.5 ? 2 : 1;
}

struct WaveConditionReport {
    bool hypothesis_ok = false;
    int order1 = 0;
    int order2 = 0;
    double seminorm = 0.0;          // sup over the t-grid of the weighted ratio
    std::vector<double> t_grid;
    std::vector<double> ratios;     // |B(a_t)| (1+t)^p / Xi(a_t)
    bool bounded = false;           // the tail of the ratio is not growing
};

// Check the vanishing hypothesis for an even-parity wave packet and estimate
// the Harish-Chandra seminorm of g -> B(g) along the Cartan ray.
inline WaveConditionReport hc_wave_condition_check(const SpectralFunction& H1,
                                                   const SpectralFunction& H2, int p,
                                                   double t_max = 8.0, int nt = 17) {
    if (!is_even_parity(H1, 1e-14) || !is_even_parity(H2, 1e-14))
        throw std::invalid_argument("hc_wave_condition_check: inputs must be even-parity");
    WaveConditionReport rep;
    rep.order1 = vanishing_order_at_zero(H1);
    rep.order2 = vanishing_order_at_zero(H2);
    rep.hypothesis_ok =
        (rep.order1 >= 1 && rep.order2 >= 1) || rep.order1 >= 2 || rep.order2 >= 2;
    if (!rep.hypothesis_ok) return rep;

    for (int i = 0; i < nt; ++i) {
        const double t = t_max * i / (nt - 1);
        const GroupElement at = GroupElement::diag_exp(t);
        const double xival = xi_refined(at);
        const double b = std::abs(wave_packet_B(H1, H2, at, false));
        const double ratio = b * std::pow(1.0 + t, p) / xival;
        rep.t_grid.push_back(t);
        rep.ratios.push_back(ratio);
        rep.seminorm = std::max(rep.seminorm, ratio);
    }
    // bounded: the last quarter of the ray does not dominate the rest
    double head = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < rep.ratios.size(); ++i) {
        if (4 * i >= 3 * rep.ratios.size()) {
            tail = std::max(tail, rep.ratios[i]);
        } else {
            head = std::max(head, rep.ratios[i]);
        }
    }
    rep.bounded = tail <= 1.25 * head + 1e-12;
    return rep;
}

}  // namespace sl2
