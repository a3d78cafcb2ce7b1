#pragma once

// The Fourier transform along A realizing HC(G/N) ~ S(a*, S(K)).
//
// For h in the side-sigma plane model (sigma = +1 upper, -1 lower; angular
// offset off = 0 upper, pi/2 lower) the transform and its inverse are
//
//   H_j(mu) = (1/2pi) int_0^{2pi} e^{-i j th} int_R e^u h(e^u, th + off)
//             e^{i sigma mu u} du dth
//   h(r, psi) = (1/2pi) int_R sum_j H_j(mu) e^{i j (psi - off)}
//               r^{-1 - i sigma mu} dmu,
//
// i.e. a 1-d Fourier integral in u = log r at each angle followed by K-type
// analysis.  Each slice H(mu) is the K-restriction of the homogeneous
// extension of degree -1 - i sigma mu, and with this normalization
//
//   |h|^2_{L2(R^2)} = sum_j int |H_j(mu)|^2 dmu   (Plancherel, unitary).
//
// The u-integral uses the uniform trapezoid rule, spectrally accurate here
// because Harish-Chandra class integrands e^u h(e^u, .) decay rapidly in u.

#include <vector>

#include "sl2/c_function.hpp"
#include "sl2/plane_function.hpp"
#include "sl2/spectral_function.hpp"

namespace sl2 {

struct FourierSettings {
    double u_extent = 14.0;
    int n_u = 561;
    MuGrid mu{};  // dmu = 0.05, |mu| <= 20
    int jmax = 16;

    int ntheta() const { return 2 * jmax + 2; }
    double du() const { return 2.0 * u_extent / (n_u - 1); }
};

struct FourierResult {
    SpectralFunction value;
    bool tail_warning = false;

    operator const SpectralFunction&() const { return value; }
};

inline FourierResult fourier_A(const PlaneFunction& h, const FourierSettings& fs = {}) {
    const double sigma = homogeneity_sign(h.side());
    const double off = k_angle_offset(h.side());
    const int nt = fs.ntheta();
    const int nu = fs.n_u;
    const double du = fs.du();

    // radial samples, weighted by the trapezoid rule and the e^u factor
    std::vector<std::vector<cxd>> samp(static_cast<std::size_t>(nt),
                                       std::vector<cxd>(static_cast<std::size_t>(nu)));
    for (int k = 0; k < nt; ++k) {
        const double psi = two_pi * k / nt + off;
        for (int i = 0; i < nu; ++i) {
            const double u = -fs.u_extent + du * i;
            const double w = (i == 0 || i == nu - 1) ? 0.5 : 1.0;
            samp[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                w * du * std::exp(u) * h.value_polar(std::exp(u), psi);
        }
    }

    SpectralFunction out(h.side(), fs.mu, fs.jmax);
    std::vector<cxd> phase(static_cast<std::size_t>(nu));
    std::vector<cxd> theta_values(static_cast<std::size_t>(nt));
    for (std::size_t im = 0; im < fs.mu.size(); ++im) {
        const double mu = fs.mu.mu(im);
        for (int i = 0; i < nu; ++i) {
            const double u = -fs.u_extent + du * i;
            phase[static_cast<std::size_t>(i)] = std::polar(1.0, sigma * mu * u);
        }
        for (int k = 0; k < nt; ++k) {
            cxd acc = 0.0;
            const auto& row = samp[static_cast<std::size_t>(k)];
            for (int i = 0; i < nu; ++i)
                acc += row[static_cast<std::size_t>(i)] * phase[static_cast<std::size_t>(i)];
            theta_values[static_cast<std::size_t>(k)] = acc;
        }
        out.slice(im) = KSeries::analyze(theta_values, fs.jmax);
    }

    FourierResult res;
    res.tail_warning = out.tail_fraction() > 1e-8;
    res.value = std::move(out);
    return res;
}

// The unique homogeneous extension of a K-series at spectral parameter mu:
// value at (r, psi) is r^{-1 - i sigma mu} times the value at (1, psi).
inline PlaneFunction extend_homogeneous(Side side, cxd mu, const KSeries& c) {
    const double off = k_angle_offset(side);
    const cxd expo = cxd(-1.0, 0.0) - cxd(0.0, 1.0) * homogeneity_sign(side) * mu;
    auto coeffs = std::make_shared<KSeries>(c);
    DecayInfo d;
    d.cls = FunctionClass::harish_chandra;
    d.u_support = 60.0;
    return PlaneFunction(
        side,
        [=](Vec2 v) -> cxd {
            const double r = v.norm();
            if (r <= 0.0) return 0.0;
            return std::pow(cxd(r, 0.0), expo) * coeffs->eval(v.angle() - off);
        },
        d, PlaneRepr::atom);
}

// K-restriction in the side-matched angular coordinate; exact on functions
// band-limited to jmax.
inline KSeries restrict_to_K(const PlaneFunction& h, int jmax) {
    const double off = k_angle_offset(h.side());
    const int nt = 2 * jmax + 2;
    std::vector<cxd> samples(static_cast<std::size_t>(nt));
    for (int k = 0; k < nt; ++k) {
        samples[static_cast<std::size_t>(k)] = h(polar(1.0, two_pi * k / nt + off));
    }
    return KSeries::analyze(samples, jmax);
}

// Exact (lazy) inverse transform; O(n_mu * jmax) work per evaluation.
inline PlaneFunction inverse_fourier_A(const SpectralFunction& H, const FourierSettings& fs = {}) {
    const double sigma = homogeneity_sign(H.side());
    const double off = k_angle_offset(H.side());
    auto Hp = std::make_shared<SpectralFunction>(H);
    DecayInfo d;
    d.cls = FunctionClass::harish_chandra;
    d.u_support = fs.u_extent;
    return PlaneFunction(
        H.side(),
        [Hp, sigma, off](Vec2 v) -> cxd {
            const double r = v.norm();
            if (r <= 0.0) return 0.0;
            const double u = std::log(r);
            const double psi = v.angle();
            const MuGrid& g = Hp->grid();
            cxd acc = 0.0;
            for (std::size_t im = 0; im < g.size(); ++im) {
                const double w = (im == 0 || im + 1 == g.size()) ? 0.5 : 1.0;
                const cxd radial = std::polar(1.0, -sigma * g.mu(im) * u);
                acc += w * radial * Hp->slice(im).eval(psi - off);
            }
            return acc * g.dmu / (two_pi * r);
        },
        d, PlaneRepr::composite);
}

// Inverse transform materialized on a log-polar grid: the workhorse form for
// repeated evaluation (line integrals, pairings).
inline PlaneFunction inverse_fourier_A_grid(const SpectralFunction& H, double u_min, double u_max,
                                            int nu) {
    const double sigma = homogeneity_sign(H.side());
    const double off = k_angle_offset(H.side());
    const int jmax = H.jmax();
    const MuGrid& g = H.grid();
    PlaneGrid grid(u_min, u_max, nu, jmax);
    for (int i = 0; i < nu; ++i) {
        const double u = grid.u(i);
        KSeries row(jmax);
        for (std::size_t im = 0; im < g.size(); ++im) {
            const double w = (im == 0 || im + 1 == g.size()) ? 0.5 : 1.0;
            const cxd ph = w * std::polar(1.0, -sigma * g.mu(im) * u);
            const KSeries& s = H.slice(im);
            for (int j = -jmax; j <= jmax; ++j) row[j] += ph * s[j];
        }
        // row holds coefficients against e^{i j (psi - off)}; convert to the
        // plain plane angle used by PlaneGrid.
        const double fac = g.dmu / (two_pi * std::exp(u));
        for (int j = -jmax; j <= jmax; ++j) row[j] *= fac * std::polar(1.0, -j * off);
        grid.row(i) = row;
    }
    return PlaneFunction::from_grid(H.side(), std::move(grid), FunctionClass::harish_chandra);
}

// Export as CSV rows mu,j,re,im.
inline void spectral_to_csv(const SpectralFunction& H, std::ostream& os) {
    os << "mu,j,re,im\n";
    char buf[160];
    for (std::size_t im = 0; im < H.grid().size(); ++im) {
        for (int j = -H.jmax(); j <= H.jmax(); ++j) {
            const cxd v = H.slice(im)[j];
            std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g,%.17g\n", H.grid().mu(im), j, v.real(),
                          v.imag());
            os << buf;
        }
    }
}

}  // namespace sl2
