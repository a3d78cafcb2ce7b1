#pragma once

// Concrete models of the homogeneous-space function spaces on the punctured
// plane.
//
// Model conventions (fixed once, used by every operation):
//   side = upper:  G/N+ <-> R^2 \ {0} through the first column of g; right
//                  multiplication by upper unipotents fixes that column.
//                  N+\G is carried by the same plane through y -> first
//                  column of y^{-1}.
//   side = lower:  G/N- through the second column, N-\G through the second
//                  column of y^{-1}.
// In all four cases the relevant G-action becomes the linear matrix action
// on the plane, the L-actions become signed dilations, and the involution
// h*(x) = conj h(x^{-1}) becomes plain complex conjugation of the model
// function (the coset of x^{-1} has the same model point as x).
//
// The rotation k(theta) has model point at plane angle theta (upper) or
// theta + pi/2 (lower); the lower offset is what makes the numeric
// intertwiner reproduce the Gamma-quotient scalars on K-types.
//
//   Xi_{G/N}(r, theta) = 1/r,   |(r, theta)| = max(r, 1/r)  (either side).
//
// Functions carry a closed-form evaluator or a sampled log-polar grid
// (angular Fourier rows, cubic in u = log r); grids make the module actions
// closed, atoms give analytic oracles.

#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2/group.hpp"
#include "sl2/haar.hpp"
#include "sl2/k_series.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

inline double xi_gmodn(Vec2 v, Side = Side::upper) {
    const double r = v.norm();
    if (r <= 0.0) throw std::invalid_argument("xi_gmodn: the origin is not a model point");
    return 1.0 / r;
}

inline double norm_gmodn(Vec2 v, Side = Side::upper) {
    const double r = v.norm();
    if (r <= 0.0) throw std::invalid_argument("norm_gmodn: the origin is not a model point");
    return std::max(r, 1.0 / r);
}

inline double k_angle_offset(Side side) { return side == Side::upper ? 0.0 : pi / 2.0; }
inline double homogeneity_sign(Side side) { return side == Side::upper ? 1.0 : -1.0; }

// Model point of the rotation k(theta) on the given side.
inline Vec2 k_model_point(double theta, Side side) {
    return polar(1.0, theta + k_angle_offset(side));
}

// A coset representative whose model point is v.
inline GroupElement coset_representative(Vec2 v, Side side) {
    const double n2 = v.x * v.x + v.y * v.y;
    if (n2 <= 0.0) throw std::invalid_argument("coset_representative: zero vector");
    if (side == Side::upper) {
        return GroupElement(v.x, -v.y / n2, v.y, v.x / n2);
    }
    return GroupElement(v.y / n2, v.x, -v.x / n2, v.y);
}

enum class FunctionClass { schwartz, harish_chandra, other };
enum class PlaneRepr { atom, grid, composite };

struct DecayInfo {
    FunctionClass cls = FunctionClass::other;
    int declared_p = 0;          // exponent for the Harish-Chandra bound
    double u_support = 14.0;     // |log r| extent where the function is non-negligible
};

// Sampled log-polar representation: angular Fourier coefficient rows
// c_j(u_i) on a uniform u-grid, trig-exact in theta and Catmull-Rom cubic
// in u.  Values outside the u-range evaluate to zero.
class PlaneGrid {
  public:
    PlaneGrid(double u_min, double u_max, int nu, int jmax)
        : u_min_(u_min), u_max_(u_max), nu_(nu), jmax_(jmax),
          rows_(static_cast<std::size_t>(nu), KSeries(jmax)) {
        if (nu < 4 || !(u_max > u_min)) throw std::invalid_argument("PlaneGrid: bad u range");
    }

    double u_min() const { return u_min_; }
    double u_max() const { return u_max_; }
    int nu() const { return nu_; }
    int jmax() const { return jmax_; }
    int ntheta() const { return 2 * jmax_ + 2; }
    double du() const { return (u_max_ - u_min_) / (nu_ - 1); }
    double u(int i) const { return u_min_ + du() * i; }

    KSeries& row(int i) { return rows_[static_cast<std::size_t>(i)]; }
    const KSeries& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    template <typename F>  // f(u, theta) -> cxd
    static PlaneGrid sample(double u_min, double u_max, int nu, int jmax, F&& f,
                            int ntheta_oversample = 0) {
        PlaneGrid g(u_min, u_max, nu, jmax);
        const int nt = std::max(g.ntheta(), ntheta_oversample);
        std::vector<cxd> samples(static_cast<std::size_t>(nt));
        for (int i = 0; i < nu; ++i) {
            const double u = g.u(i);
            for (int k = 0; k < nt; ++k) samples[static_cast<std::size_t>(k)] = f(u, two_pi * k / nt);
            g.rows_[static_cast<std::size_t>(i)] = KSeries::analyze(samples, jmax);
        }
        return g;
    }

    cxd eval(double u, double theta) const {
        if (u < u_min_ || u > u_max_) return 0.0;
        const double s = (u - u_min_) / du();
        int i1 = static_cast<int>(std::floor(s));
        if (i1 >= nu_ - 1) i1 = nu_ - 2;
        const double f = s - i1;
        const int i0 = std::max(i1 - 1, 0);
        const int i2 = std::min(i1 + 1, nu_ - 1);
        const int i3 = std::min(i1 + 2, nu_ - 1);
        // Catmull-Rom weights
        const double w0 = 0.5 * (-f + 2.0 * f * f - f * f * f);
        const double w1 = 0.5 * (2.0 - 5.0 * f * f + 3.0 * f * f * f);
        const double w2 = 0.5 * (f + 4.0 * f * f - 3.0 * f * f * f);
        const double w3 = 0.5 * (-f * f + f * f * f);
        const cxd ph = std::polar(1.0, theta);
        cxd acc = 0.0;
        cxd p = std::polar(1.0, -jmax_ * theta);
        for (int j = -jmax_; j <= jmax_; ++j) {
            const cxd cj = w0 * rows_[static_cast<std::size_t>(i0)][j] +
                           w1 * rows_[static_cast<std::size_t>(i1)][j] +
                           w2 * rows_[static_cast<std::size_t>(i2)][j] +
                           w3 * rows_[static_cast<std::size_t>(i3)][j];
            acc += cj * p;
            p *= ph;
        }
        return acc;
    }

    // CSV with columns u,theta,re,im at the native nodes.
    void to_csv(std::ostream& os) const {
        os << "u,theta,re,im\n";
        const int nt = ntheta();
        char buf[160];
        for (int i = 0; i < nu_; ++i) {
            for (int k = 0; k < nt; ++k) {
                const double th = two_pi * k / nt;
                const cxd v = rows_[static_cast<std::size_t>(i)].eval(th);
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", u(i), th, v.real(),
                              v.imag());
                os << buf;
            }
        }
    }

    static PlaneGrid from_csv(std::istream& is) {
        std::string line;
        if (!std::getline(is, line)) throw std::runtime_error("PlaneGrid: empty CSV");
        struct Row { double u, th, re, im; };
        std::vector<Row> rows;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            Row r{};
            if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r.u, &r.th, &r.re, &r.im) != 4)
                throw std::runtime_error("PlaneGrid: bad CSV row: " + line);
            rows.push_back(r);
        }
        if (rows.empty()) throw std::runtime_error("PlaneGrid: no data rows");
        // infer grid structure: contiguous theta blocks per u
        std::size_t nt = 1;
        while (nt < rows.size() && rows[nt].u == rows[0].u) ++nt;
        if (nt < 2 || rows.size() % nt != 0)
            throw std::runtime_error("PlaneGrid: CSV rows do not form a grid");
        const int nu = static_cast<int>(rows.size() / nt);
        const int jmax = (static_cast<int>(nt) - 2) / 2;
        PlaneGrid g(rows.front().u, rows.back().u, nu, jmax);
        std::vector<cxd> samples(nt);
        for (int i = 0; i < nu; ++i) {
            for (std::size_t k = 0; k < nt; ++k) {
                const Row& r = rows[static_cast<std::size_t>(i) * nt + k];
                samples[k] = cxd(r.re, r.im);
            }
            g.row(i) = KSeries::analyze(samples, jmax);
        }
        return g;
    }

  private:
    double u_min_, u_max_;
    int nu_;
    int jmax_;
    std::vector<KSeries> rows_;
};

class PlaneFunction {
  public:
    using Evaluator = std::function<cxd(Vec2)>;

    PlaneFunction() = default;
    PlaneFunction(Side side, Evaluator f, DecayInfo decay, PlaneRepr repr = PlaneRepr::composite)
        : side_(side), eval_(std::move(f)), decay_(decay), repr_(repr) {}

    Side side() const { return side_; }
    const DecayInfo& decay() const { return decay_; }
    PlaneRepr repr() const { return repr_; }

    cxd operator()(Vec2 v) const { return eval_(v); }
    cxd value_polar(double r, double theta) const { return eval_(polar(r, theta)); }

    // ---- closed-form atoms -------------------------------------------------

    // Homogeneous K-type atom: value r^{-1 -+ i mu} e^{i j (theta - offset)}
    // normalized so that the restriction to K is the character sigma_j.
    static PlaneFunction homogeneous_atom(Side side, cxd mu, int j) {
        const double off = k_angle_offset(side);
        const cxd expo = cxd(-1.0, 0.0) - cxd(0.0, 1.0) * homogeneity_sign(side) * mu;
        DecayInfo d;
        d.cls = FunctionClass::harish_chandra;
        d.declared_p = 0;
        d.u_support = 60.0;
        return PlaneFunction(
            side,
            [=](Vec2 v) -> cxd {
                const double r = v.norm();
                if (r <= 0.0) return 0.0;
                const double th = v.angle();
                return std::pow(cxd(r, 0.0), expo) * std::polar(1.0, j * (th - off));
            },
            d, PlaneRepr::atom);
    }

    // Gaussian bump in log-polar coordinates with an optional K-phase:
    // exp(-(u-u0)^2 / (2 wu^2)) * exp(kappa (cos(theta-theta0) - 1)) * e^{i j theta}.
    // Vanishes to all orders at the origin and at infinity (Schwartz class).
    static PlaneFunction logpolar_bump(Side side, double u0, double theta0, double wu,
                                       double kappa, int j = 0, cxd amplitude = 1.0) {
        DecayInfo d;
        d.cls = FunctionClass::schwartz;
        d.declared_p = 0;
        d.u_support = std::abs(u0) + 10.0 * wu;
        return PlaneFunction(
            side,
            [=](Vec2 v) -> cxd {
                const double r = v.norm();
                if (r <= 0.0) return 0.0;
                const double u = std::log(r);
                const double th = v.angle();
                const double rad = (u - u0) * (u - u0) / (2.0 * wu * wu);
                const double ang = kappa * (std::cos(th - theta0) - 1.0);
                return amplitude * std::exp(ang - rad) * std::polar(1.0, j * th);
            },
            d, PlaneRepr::atom);
    }

    // Radial Schwartz bump with a fixed K-series angular part.
    static PlaneFunction radial_profile_times_kseries(Side side, double u0, double wu,
                                                      KSeries angular) {
        DecayInfo d;
        d.cls = FunctionClass::schwartz;
        d.declared_p = 0;
        d.u_support = std::abs(u0) + 10.0 * wu;
        auto ang = std::make_shared<KSeries>(std::move(angular));
        return PlaneFunction(
            side,
            [=](Vec2 v) -> cxd {
                const double r = v.norm();
                if (r <= 0.0) return 0.0;
                const double u = std::log(r);
                return std::exp(-(u - u0) * (u - u0) / (2.0 * wu * wu)) * ang->eval(v.angle());
            },
            d, PlaneRepr::atom);
    }

    // Plane Gaussian amplitude * exp(-|v - v0|^2 / (2 w^2)); L2 class.
    static PlaneFunction plane_gaussian(Side side, Vec2 v0, double w, cxd amplitude = 1.0) {
        DecayInfo d;
        d.cls = FunctionClass::other;
        d.declared_p = 0;
        d.u_support = std::log(v0.norm() + 12.0 * w + 1.0) + 2.0;
        return PlaneFunction(
            side,
            [=](Vec2 v) -> cxd {
                const Vec2 dv = v - v0;
                return amplitude * std::exp(-(dv.x * dv.x + dv.y * dv.y) / (2.0 * w * w));
            },
            d, PlaneRepr::atom);
    }

    static PlaneFunction from_grid(Side side, PlaneGrid grid,
                                   FunctionClass cls = FunctionClass::schwartz) {
        auto g = std::make_shared<PlaneGrid>(std::move(grid));
        DecayInfo d;
        d.cls = cls;
        d.declared_p = 0;
        d.u_support = std::max(std::abs(g->u_min()), std::abs(g->u_max()));
        PlaneFunction f(
            side,
            [g](Vec2 v) -> cxd {
                const double r = v.norm();
                if (r <= 0.0) return 0.0;
                return g->eval(std::log(r), v.angle());
            },
            d, PlaneRepr::grid);
        f.grid_ = g;
        return f;
    }

    std::shared_ptr<const PlaneGrid> grid() const { return grid_; }

    // Materialize on a log-polar grid (trig rows, cubic in u).  When the
    // function is not band-limited, pass an oversampled angular node count to
    // keep the retained coefficients alias-free.
    PlaneFunction to_grid(double u_min, double u_max, int nu, int jmax,
                          int ntheta_oversample = 0) const {
        PlaneGrid g = PlaneGrid::sample(
            u_min, u_max, nu, jmax,
            [this](double u, double th) { return value_polar(std::exp(u), th); },
            ntheta_oversample);
        return from_grid(side_, std::move(g), decay_.cls);
    }

  private:
    Side side_ = Side::upper;
    Evaluator eval_ = [](Vec2) { return cxd(0.0, 0.0); };
    DecayInfo decay_;
    PlaneRepr repr_ = PlaneRepr::composite;
    std::shared_ptr<const PlaneGrid> grid_;
};

// ---- group and module actions ---------------------------------------------

// Left translation on G/N models: (g . h)(x) = h(g^-1 x).
inline PlaneFunction act_G_left(const GroupElement& g, const PlaneFunction& h) {
    const GroupElement gi = g.inverse();
    return PlaneFunction(
        h.side(), [gi, h](Vec2 v) { return h(gi.apply(v)); }, h.decay(), PlaneRepr::composite);
}

// Right translation on N\G models: (h . g)(y) = h(y g^-1), which is the
// matrix action of g on the model point.
inline PlaneFunction act_G_right(const GroupElement& g, const PlaneFunction& h) {
    return PlaneFunction(
        h.side(), [g, h](Vec2 v) { return h(g.apply(v)); }, h.decay(), PlaneRepr::composite);
}

// Right L-action on G/N models, shifted by the modular character so that it
// is unitary on L^2(R^2):
//   upper: (h . l)(v) = |l11|^-1 h(l11^-1 v)
//   lower: (h . l)(v) = |l11|    h(l11    v)
inline PlaneFunction act_L_right(const GroupElement& l, const PlaneFunction& h) {
    if (std::abs(l.b()) > 1e-14 || std::abs(l.c()) > 1e-14)
        throw std::invalid_argument("act_L_right: l must be diagonal");
    const double a = l.a();
    const double scale = h.side() == Side::upper ? 1.0 / a : a;
    const double amp = std::abs(scale);
    return PlaneFunction(
        h.side(), [=](Vec2 v) { return amp * h(scale * v); }, h.decay(), PlaneRepr::composite);
}

// Left L-action on N\G models ((l . h)(y) = delta(l)^{1/2} h(l^-1 y)); in the
// model it mirrors act_L_right of the opposite side.
inline PlaneFunction act_L_left_coset(const GroupElement& l, const PlaneFunction& h) {
    if (std::abs(l.b()) > 1e-14 || std::abs(l.c()) > 1e-14)
        throw std::invalid_argument("act_L_left_coset: l must be diagonal");
    const double a = l.a();
    const double scale = h.side() == Side::upper ? a : 1.0 / a;
    const double amp = std::abs(scale);
    return PlaneFunction(
        h.side(), [=](Vec2 v) { return amp * h(scale * v); }, h.decay(), PlaneRepr::composite);
}

// The involution h -> h* between N\G and G/N functions; in the matched plane
// models it is plain complex conjugation (see the header comment).
inline PlaneFunction involution_star(const PlaneFunction& h) {
    return PlaneFunction(
        h.side(), [h](Vec2 v) { return std::conj(h(v)); }, h.decay(), PlaneRepr::composite);
}

// ---- integration over the plane --------------------------------------------

struct PlaneQuadrature {
    int n_u = 220;
    double u_extent = 14.0;
    int n_theta = 128;
    RuleKind u_kind = RuleKind::gauss_legendre;

    Rule1D u_rule() const { return QuadratureScheme::make(u_kind, n_u, -u_extent, u_extent); }
    Rule1D theta_rule() const { return periodic_trapezoid(n_theta); }
};

// integral over R^2 of conj(h1) h2 in log-polar coordinates (dv = e^{2u} du dtheta)
inline cxd l2_inner(const PlaneFunction& h1, const PlaneFunction& h2,
                    const PlaneQuadrature& q = {}) {
    const Rule1D ru = q.u_rule();
    const Rule1D rt = q.theta_rule();
    cxd acc = 0.0;
    for (std::size_t iu = 0; iu < ru.size(); ++iu) {
        const double u = ru.nodes[iu];
        const double r = std::exp(u);
        const double wu = ru.weights[iu] * std::exp(2.0 * u);
        cxd th_acc = 0.0;
        for (std::size_t it = 0; it < rt.size(); ++it) {
            const Vec2 v = polar(r, rt.nodes[it]);
            th_acc += rt.weights[it] * std::conj(h1(v)) * h2(v);
        }
        acc += wu * th_acc;
    }
    return acc;
}

inline double l2_norm(const PlaneFunction& h, const PlaneQuadrature& q = {}) {
    return std::sqrt(std::abs(l2_inner(h, h, q)));
}

// ---- Harish-Chandra seminorm estimate ---------------------------------------

struct SeminormEstimate {
    double value = 0.0;
    bool divergent = false;  // boundary values still growing at the grid edge

    operator double() const { return value; }
};

// sup over the sample grid of |h| (1 + log|x|)^p / Xi_{G/N}(x)
//   = sup |h(r,theta)| r (1 + |log r|)^p,
// flagged divergent when the outer 15% band of the grid dominates the middle.
inline SeminormEstimate hc_seminorm(const PlaneFunction& h, int p, double u_extent = 16.0,
                                    int n_u = 321, int n_theta = 64) {
    if (p < 0) throw std::invalid_argument("hc_seminorm: p must be >= 0");
    SeminormEstimate est;
    double inner_max = 0.0, outer_max = 0.0;
    for (int iu = 0; iu < n_u; ++iu) {
        const double u = -u_extent + 2.0 * u_extent * iu / (n_u - 1);
        const double r = std::exp(u);
        const double w = r * std::pow(1.0 + std::abs(u), p);
        double band = 0.0;
        for (int it = 0; it < n_theta; ++it) {
            const double val = std::abs(h(polar(r, two_pi * it / n_theta)));
            band = std::max(band, val * w);
        }
        est.value = std::max(est.value, band);
        if (std::abs(u) > 0.85 * u_extent) {
            outer_max = std::max(outer_max, band);
        } else if (std::abs(u) > 0.40 * u_extent) {
            inner_max = std::max(inner_max, band);
        }
    }
    est.divergent = outer_max > inner_max * (1.0 + 1e-9) && outer_max > 1e-300;
    return est;
}

}  // namespace sl2
