#pragma once

// Named verification suites behind the `verify` command.  Every check pins
// one identity from the underlying theory, records the measured residual
// against a tolerance (scaled by the configured factor), and is fully
// deterministic under the configured seed.

#include <random>

#include "sl2/bernstein.hpp"
#include "sl2/config.hpp"
#include "sl2/report.hpp"
#include "sl2/triangle.hpp"
#include "sl2/wave_packet.hpp"

namespace sl2 {

class Rng {
  public:
    explicit Rng(unsigned long seed) : eng_(seed) {}

    double uniform(double a, double b) {
        return a + (b - a) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53);
    }

    GroupElement group(double t_max) {
        const double th1 = uniform(0.0, two_pi);
        const double t = uniform(0.0, t_max);
        const double th2 = uniform(0.0, two_pi);
        return GroupElement::rotation(th1) * GroupElement::diag_exp(t) *
               GroupElement::rotation(th2);
    }

    Vec2 annulus(double r_min, double r_max) {
        return polar(uniform(r_min, r_max), uniform(0.0, two_pi));
    }

  private:
    std::mt19937_64 eng_;
};

namespace verify_detail {

inline CheckResult make_check(std::string name, std::string identity, double residual, double tol,
                              int samples, double scale) {
    CheckResult c;
    c.name = std::move(name);
    c.identity = std::move(identity);
    c.residual = residual;
    c.tolerance = tol * scale;
    c.pass = residual <= c.tolerance;
    c.samples = samples;
    return c;
}

struct Sizes {
    int k_nodes;
    int xi_pairs;
    int haar_bumps;
    FourierSettings fourier;
    PlaneQuadrature plane;
    LeviQuadrature levi;
    int triangle_samples;

    static Sizes from_config(const SuiteConfig& cfg) {
        Sizes s;
        const int div = cfg.coarse ? 2 : 1;
        s.k_nodes = std::max(64, cfg.k_nodes / div);
        s.xi_pairs = cfg.coarse ? 5 : 10;
        s.haar_bumps = cfg.coarse ? 2 : 5;
        s.fourier.jmax = std::max(6, cfg.jmax / div);
        s.fourier.mu = MuGrid::with_cutoff(cfg.dmu * div, cfg.mu_max);
        s.fourier.u_extent = cfg.u_extent;
        s.fourier.n_u = std::max(181, cfg.n_u / div);
        s.plane.n_u = cfg.coarse ? 140 : 220;
        s.plane.u_extent = 12.0;
        s.plane.n_theta = cfg.coarse ? 48 : 96;
        s.levi.n_s = cfg.coarse ? 96 : 160;
        s.levi.s_extent = 10.0;
        s.triangle_samples = cfg.coarse ? 8 : 20;
        return s;
    }
};

// Iwasawa-coordinate bump with angular concentration away from the open-cell
// boundary; smooth, rapidly decaying in every coordinate system in play.
inline GFunction kan_bump(double th0, double t0, double x0, double kappa = 55.0,
                          double w = 0.6) {
    return [=](const GroupElement& g) -> cxd {
        const IwasawaFactors f = iwasawa(g, Side::upper);
        const double ang = kappa * (std::cos(f.theta - th0) - 1.0);
        const double q = (f.t - t0) * (f.t - t0) + (f.x - x0) * (f.x - x0);
        return std::exp(ang - q / (w * w));
    };
}

}  // namespace verify_detail

// ---------------------------------------------------------------- group-core

inline SuiteResult verify_group_core(const SuiteConfig& cfg) {
    using verify_detail::make_check;
    const auto sz = verify_detail::Sizes::from_config(cfg);
    const double ts = cfg.tolerance_scale;
    Rng rng(cfg.seed);
    SuiteResult suite;
    suite.suite = "group-core";

    {
        double worst = 0.0, worst_sv = 0.0, canon = 0.0;
        for (int i = 0; i < 50; ++i) {
            const GroupElement g = rng.group(1.5);
            for (Side side : {Side::upper, Side::lower}) {
                const IwasawaFactors f = iwasawa(g, side);
                const GroupElement r = f.k * f.a * f.n;
                worst = std::max({worst, std::abs(r.a() - g.a()), std::abs(r.b() - g.b()),
                                  std::abs(r.c() - g.c()), std::abs(r.d() - g.d())});
            }
            const CartanFactors c = cartan(g);
            const GroupElement r = c.k1 * c.a * c.k2;
            worst = std::max({worst, std::abs(r.a() - g.a()), std::abs(r.b() - g.b()),
                              std::abs(r.c() - g.c()), std::abs(r.d() - g.d())});
            worst_sv = std::max(worst_sv, std::abs(c.a.a() - singular_value_max(g)));
            if (!(c.theta1 >= 0.0 && c.theta1 < pi && c.a.a() >= 1.0)) canon = 1.0;
        }
        suite.checks.push_back(make_check("decomposition-reconstruction",
                                          "k a n = g and k1 a k2 = g on random samples", worst,
                                          1e-10, 50, ts));
        suite.checks.push_back(make_check("cartan-a-is-singular-value",
                                          "a11 of the Cartan factor equals sigma_max(g)", worst_sv,
                                          1e-10, 50, ts));
        suite.checks.push_back(make_check(
            "cartan-canonical-window", "theta1 in [0, pi) and a11 >= 1", canon, 0.5, 50, ts));
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const GroupElement a = GroupElement::diag_exp(rng.uniform(-2.0, 2.0));
            worst = std::max(worst,
                             std::abs(modular_delta(a, Side::upper) * modular_delta(a, Side::lower) -
                                      1.0));
        }
        suite.checks.push_back(make_check(
            "delta-product-on-A", "delta+(a) delta-(a) = 1 for diagonal a", worst, 1e-12, 50, ts));
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const GroupElement g = rng.group(1.2), h = rng.group(1.2);
            worst = std::max(worst, group_norm(g * h) / (group_norm(g) * group_norm(h)) - 1.0);
        }
        suite.checks.push_back(make_check("norm-submultiplicative", "|g h| <= |g| |h|",
                                          std::max(worst, 0.0), 1e-12, 1000, ts));
    }
    {
        double worst = 0.0;
        QuadratureScheme xs;
        for (int i = 0; i < 20; ++i) {
            const GroupElement g = rng.group(1.2);
            xs.k_nodes = xi_nodes_for(g);
            worst = std::max(worst, std::abs(group_norm(g) - group_norm(g.inverse())));
            worst = std::max(worst,
                             std::abs(xi(g, xs).value - xi(g.inverse(), xs).value));
        }
        suite.checks.push_back(make_check("inversion-symmetry", "|g| = |g^-1| and Xi(g) = Xi(g^-1)",
                                          worst, 1e-9, 20, ts));
    }
    {
        QuadratureScheme xs;
        xs.k_nodes = sz.k_nodes;
        suite.checks.push_back(make_check("xi-at-identity", "Xi(e) = 1",
                                          std::abs(xi(GroupElement::identity(), xs).value - 1.0),
                                          1e-12, 1, ts));
    }
    {
        double worst = 0.0;
        QuadratureScheme xs;
        const Rule1D kr = periodic_trapezoid(cfg.coarse ? 512 : 1024);
        for (int i = 0; i < sz.xi_pairs; ++i) {
            const GroupElement g1 = rng.group(1.0), g2 = rng.group(1.0);
            xs.k_nodes = xi_nodes_for(g1 * g2) * 2;
            const double lhs = xi(g1, xs).value * xi(g2, xs).value;
            const double rhs =
                kr.integrate([&](double th) {
                    return xi(g1 * GroupElement::rotation(th) * g2, xs).value;
                }) /
                two_pi;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        suite.checks.push_back(make_check("xi-spherical-identity",
                                          "Xi(g1) Xi(g2) = (1/vol K) int_K Xi(g1 k g2) dk", worst,
                                          1e-6, sz.xi_pairs, ts));
    }
    {
        double worst = 0.0;
        QuadratureScheme xs;
        const Rule1D kr = periodic_trapezoid(cfg.coarse ? 1024 : 4096);
        for (int i = 0; i < sz.xi_pairs; ++i) {
            const GroupElement g = rng.group(1.0);
            const Vec2 x = rng.annulus(0.5, 2.0);
            xs.k_nodes = xi_nodes_for(g);
            const double lhs =
                kr.integrate([&](double th) {
                    return xi_gmodn(g.apply(GroupElement::rotation(th).apply(x)));
                }) /
                two_pi;
            const double rhs = xi(g, xs).value * xi_gmodn(x);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        suite.checks.push_back(make_check("xi-gmodn-spherical-lemma",
                                          "(1/vol K) int_K Xi_{G/N}(g k x) dk = Xi(g) Xi_{G/N}(x)",
                                          worst, 1e-6, sz.xi_pairs, ts));
    }
    {
        double worst_pn = 0.0;
        for (int i = 0; i < 50; ++i) {
            const GroupElement g = rng.group(1.2);
            const Vec2 x = rng.annulus(0.3, 3.0);
            worst_pn = std::max(worst_pn, norm_gmodn(g.apply(x)) /
                                                  (group_norm(g) * norm_gmodn(x)) -
                                              1.0);
        }
        suite.checks.push_back(make_check("gmodn-norm-inequality", "|g x| <= |g| |x| on G/N",
                                          std::max(worst_pn, 0.0), 1e-12, 50, ts));
    }
    {
        // open-cell integration formula and translation invariance
        QuadratureScheme sg;
        sg.k_nodes = cfg.coarse ? 192 : 320;
        sg.t_kind = RuleKind::gauss_legendre;
        sg.t_nodes = cfg.coarse ? 81 : 121;
        sg.t_radius = 4.0;
        sg.x_kind = RuleKind::gauss_legendre;
        sg.x_nodes = cfg.coarse ? 81 : 121;
        sg.x_radius = 5.0;
        QuadratureScheme sn = sg;
        sn.t_nodes = cfg.coarse ? 121 : 201;
        sn.t_radius = 8.0;
        sn.x_kind = RuleKind::tan_map;
        sn.x_nodes = cfg.coarse ? 301 : 501;
        sn.x_radius = 15.0;
        double worst = 0.0;
        for (int i = 0; i < sz.haar_bumps; ++i) {
            const double th0 = rng.uniform(-0.9, 0.9) + (i % 2 ? pi : 0.0);
            const GFunction phi =
                verify_detail::kan_bump(th0, rng.uniform(-0.3, 0.3), rng.uniform(-0.7, 0.7));
            const cxd ig = integrate_G(phi, sg).value;
            const cxd in = integrate_NLN(phi, sn).value;
            worst = std::max(worst, std::abs(ig - in) / std::abs(ig));
        }
        suite.checks.push_back(make_check(
            "haar-open-cell-factorization",
            "int_G phi = int phi(nbar l n) delta+(l) dnbar dl dn", worst, 1e-6, sz.haar_bumps, ts));
        // translation invariance through the Iwasawa split of g0: left
        // directly, the right unipotent-diagonal part in the K A N chart, the
        // right rotation part in the polar chart, plus chart consistency.
        QuadratureScheme st = sg;
        st.t_radius = 3.5;
        st.x_kind = RuleKind::sinh_map;
        st.x_nodes = cfg.coarse ? 201 : 321;
        st.x_radius = 4.0e5;
        const GFunction phi = verify_detail::kan_bump(0.3, 0.1, -0.2, 55.0, 0.4);
        const cxd base = integrate_G(phi, st).value;
        const GroupElement g0 = rng.group(0.4);
        const IwasawaFactors g0f = iwasawa(g0, Side::upper);
        const cxd il =
            integrate_G([&](const GroupElement& g) { return phi(g0 * g); }, st).value;
        const GroupElement u0 = g0f.a * g0f.n;
        const cxd iru = integrate_G([&](const GroupElement& g) { return phi(g * u0); }, st).value;
        CartanScheme csc;
        csc.k_nodes = cfg.coarse ? 192 : 256;
        const cxd kak = integrate_G_cartan(phi, csc).value;
        CartanScheme csr = csc;
        csr.k2_feature_offset = -g0f.theta;
        const cxd irk = integrate_G_cartan(
            [&](const GroupElement& g) { return phi(g * g0f.k); }, csr).value;
        const double worst_tr =
            std::max({std::abs(il - base), std::abs(iru - base), std::abs(kak - base),
                      std::abs(irk - kak)}) /
            std::abs(base);
        suite.checks.push_back(make_check("haar-translation-invariance",
                                          "int phi(g0 g) dg = int phi(g) dg = int phi(g g0) dg "
                                          "through the Iwasawa split of g0",
                                          worst_tr, 1e-6, 4, ts));
    }
    {
        // square-integrability proxy: F(R) = int_0^R Xi(a_t)^2 (1+t)^-4 sinh(2t) dt
        std::vector<double> values;
        for (double radius : {8.0, 16.0, 24.0, 32.0}) {
            values.push_back(integrate_cartan_radial(
                [&](double t) {
                    const double x = xi_refined(GroupElement::diag_exp(t));
                    return x * x * std::pow(1.0 + t, -4);
                },
                radius, cfg.coarse ? 200 : 400));
        }
        bool increasing = true;
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] < values[i - 1]) increasing = false;
        const double inc2 = values[2] - values[1];
        const double inc3 = values[3] - values[2];
        const bool shrinking = inc3 < inc2 && inc2 < values[1] - values[0];
        suite.checks.push_back(make_check(
            "xi-square-integrability-proxy",
            "int Xi^2 (1 + log|g|)^-4 over the Cartan ball is increasing and bounded",
            (increasing && shrinking) ? inc3 / inc2 : 1.0, 0.7, 4, ts));
    }
    return suite;
}

// ---------------------------------------------------------------- frobenius

inline SuiteResult verify_frobenius(const SuiteConfig& cfg) {
    using verify_detail::make_check;
    const auto sz = verify_detail::Sizes::from_config(cfg);
    const double ts = cfg.tolerance_scale;
    Rng rng(cfg.seed + 1);
    SuiteResult suite;
    suite.suite = "frobenius";

    KSeries a1(3);
    a1[0] = 1.0;
    a1[1] = cxd(0.3, 0.2);
    a1[-2] = 0.25;
    KSeries a2(3);
    a2[0] = cxd(0.6, -0.3);
    a2[2] = 0.4;
    const PlaneFunction h1 = PlaneFunction::radial_profile_times_kseries(Side::upper, 0.2, 0.6, a1);
    const PlaneFunction h2 =
        PlaneFunction::radial_profile_times_kseries(Side::upper, -0.1, 0.7, a2);

    {
        const cxd at_e = frobenius_pairing(h1, h1, sz.plane)(+1, 0.0);
        const cxd nsq = l2_inner(h1, h1, sz.plane);
        suite.checks.push_back(make_check("pairing-at-identity",
                                          "<<h, h>>(e) = |h|^2 in L2(G/N)",
                                          std::abs(at_e - nsq) / std::abs(nsq), 1e-10, 1, ts));
    }
    {
        const cxd p12 = l2_inner(h1, h2, sz.plane), p21 = l2_inner(h2, h1, sz.plane);
        suite.checks.push_back(make_check("pairing-hermitian", "<h1, h2> = conj <h2, h1>",
                                          std::abs(p12 - std::conj(p21)), 1e-12, 1, ts));
    }
    {
        double worst = 0.0;
        const double n0 = l2_norm(h1, sz.plane);
        for (double s : {-0.7, 0.4}) {
            for (int sg : {+1, -1}) {
                worst = std::max(worst, std::abs(l2_norm(act_L_right(GroupElement::levi(sg, s), h1),
                                                         sz.plane) -
                                                 n0) /
                                            n0);
            }
        }
        suite.checks.push_back(make_check("l-action-unitary", "|h . l|_{L2} = |h|_{L2}", worst,
                                          1e-8, 4, ts));
    }
    {
        double worst = 0.0;
        const cxd base = l2_inner(h1, h2, sz.plane);
        for (int i = 0; i < 3; ++i) {
            const GroupElement g = rng.group(0.8);
            const cxd moved = l2_inner(act_G_left(g, h1), act_G_left(g, h2), sz.plane);
            worst = std::max(worst, std::abs(moved - base) / std::abs(base));
        }
        suite.checks.push_back(make_check("pairing-g-invariance",
                                          "<g h1, g h2>_{L2} = <h1, h2>_{L2}", worst, 1e-8, 3, ts));
    }
    {
        // bimodule law <<h1 f1, h2 f2>> = f1* conv <<h1,h2>> conv f2
        const LeviFunction f1 = LeviFunction::gaussian(+1, 0.15, 0.4);
        const LeviFunction f2 = LeviFunction::gaussian(-1, -0.2, 0.5);
        LeviQuadrature lq = sz.levi;
        const PlaneFunction h1f1 =
            act_L_module(h1, f1, lq).to_grid(-10.0, 10.0, cfg.coarse ? 241 : 421, 6);
        const PlaneFunction h2f2 =
            act_L_module(h2, f2, lq).to_grid(-10.0, 10.0, cfg.coarse ? 241 : 421, 6);
        const LeviFunction lhs = frobenius_pairing(h1f1, h2f2, sz.plane);
        const LeviFunction inner = frobenius_pairing(h1, h2, sz.plane);
        // sample the s-grid once for the convolutions
        const int ns = cfg.coarse ? 81 : 121;
        const double se = 6.0;
        std::vector<std::vector<cxd>> samples(2, std::vector<cxd>(ns));
        for (int i = 0; i < ns; ++i) {
            const double s = -se + 2.0 * se * i / (ns - 1);
            samples[0][static_cast<std::size_t>(i)] = inner(+1, s);
            samples[1][static_cast<std::size_t>(i)] = inner(-1, s);
        }
        LeviFunction inner_grid(
            [samples, ns, se](int sg, double s) -> cxd {
                if (s < -se || s > se) return 0.0;
                const double p = (s + se) * (ns - 1) / (2.0 * se);
                const int i0 = std::min(static_cast<int>(p), ns - 2);
                const double f = p - i0;
                const auto& row = samples[sg > 0 ? 0 : 1];
                return (1.0 - f) * row[static_cast<std::size_t>(i0)] +
                       f * row[static_cast<std::size_t>(i0 + 1)];
            },
            se);
        const LeviFunction rhs = convolve(convolve(f1.star(), inner_grid, lq), f2, lq);
        double worst = 0.0, scale = 0.0;
        for (double s : {-0.5, 0.0, 0.6}) {
            for (int sg : {+1, -1}) {
                worst = std::max(worst, std::abs(lhs(sg, s) - rhs(sg, s)));
                scale = std::max(scale, std::abs(lhs(sg, s)));
            }
        }
        suite.checks.push_back(make_check("pairing-bimodule-law",
                                          "<<h1 f1, h2 f2>> = f1* conv <<h1, h2>> conv f2",
                                          worst / scale, 1e-3, 6, ts));
    }
    {
        // module invariance <<phi h1, h2>> = <<h1, phi* h2>>
        QuadratureScheme gs;
        gs.k_nodes = cfg.coarse ? 64 : 96;
        gs.t_kind = RuleKind::gauss_legendre;
        gs.t_nodes = cfg.coarse ? 25 : 33;
        gs.t_radius = 2.3;
        gs.x_kind = RuleKind::gauss_legendre;
        gs.x_nodes = cfg.coarse ? 25 : 33;
        gs.x_radius = 2.5;
        const GFunction phi = verify_detail::kan_bump(0.3, 0.0, 0.2, 30.0, 0.35);
        const GFunction phi_star = [phi](const GroupElement& g) {
            return std::conj(phi(g.inverse()));
        };
        // only K-types pairing with the band-limited h survive the inner
        // products, so a small angular truncation is exact here
        const int gnu = cfg.coarse ? 101 : 141;
        const PlaneFunction ph1 =
            act_Sc_G(phi, h1, gs).to_grid(-9.0, 9.0, gnu, 4, 24);
        const PlaneFunction psh2 =
            act_Sc_G(phi_star, h2, gs).to_grid(-9.0, 9.0, gnu, 4, 24);
        double worst = 0.0, scale = 0.0;
        for (double s : {-0.4, 0.3}) {
            const cxd l = frobenius_pairing(ph1, h2, sz.plane)(+1, s);
            const cxd r = frobenius_pairing(h1, psh2, sz.plane)(+1, s);
            worst = std::max(worst, std::abs(l - r));
            scale = std::max(scale, std::abs(l));
        }
        suite.checks.push_back(make_check("pairing-module-invariance",
                                          "<<phi h1, h2>> = <<h1, phi* h2>> for phi on G",
                                          worst / scale, 1e-4, 2, ts));
    }
    {
        // counit against the closed-subset restriction route
        const GFunction F1 = verify_detail::kan_bump(0.2, 0.1, -0.3, 40.0, 0.35);
        const GFunction F2 = verify_detail::kan_bump(-0.4, -0.2, 0.4, 40.0, 0.35);
        // coset projections; the integration window scales with the norm of
        // the representative, so the rule range follows max(|v|, 1/|v|)
        const int pn = cfg.coarse ? 241 : 401;
        auto project_left = [&](const GFunction& F, Vec2 v) {  // int F(n y) dn
            const GroupElement y = coset_representative(v, Side::upper).inverse();
            const double L = 26.0 * std::max(v.norm(), 1.0 / v.norm());
            const Rule1D nr = gauss_legendre(pn, -L, L);
            cxd acc = 0.0;
            for (std::size_t i = 0; i < nr.size(); ++i)
                acc += nr.weights[i] * F(GroupElement::upper_unipotent(nr.nodes[i]) * y);
            return acc;
        };
        auto project_right = [&](const GFunction& F, Vec2 v) {  // int F(x n) dn
            const GroupElement x = coset_representative(v, Side::upper);
            const double L = 26.0 * std::max(v.norm(), 1.0 / v.norm());
            const Rule1D nr = gauss_legendre(pn, -L, L);
            cxd acc = 0.0;
            for (std::size_t i = 0; i < nr.size(); ++i)
                acc += nr.weights[i] * F(x * GroupElement::upper_unipotent(nr.nodes[i]));
            return acc;
        };
        DecayInfo dec;
        dec.cls = FunctionClass::schwartz;
        dec.u_support = 8.0;
        const PlaneFunction k1(Side::upper, [&](Vec2 v) { return project_left(F1, v); }, dec);
        const PlaneFunction k2(Side::upper, [&](Vec2 v) { return project_right(F2, v); }, dec);
        PlaneQuadrature pq;
        pq.n_u = cfg.coarse ? 220 : 320;
        pq.u_extent = 7.0;
        pq.n_theta = cfg.coarse ? 96 : 128;
        const LeviFunction fr = frobenius_counit(k1, k2, pq);
        // direct route: delta+(l)^{1/2} int (F1 * F2)(l n) dn
        QuadratureScheme cs;
        cs.k_nodes = cfg.coarse ? 128 : 192;
        cs.t_kind = RuleKind::gauss_legendre;
        cs.t_nodes = cfg.coarse ? 37 : 49;
        cs.t_radius = 2.3;
        cs.x_kind = RuleKind::gauss_legendre;
        cs.x_nodes = cfg.coarse ? 37 : 49;
        cs.x_radius = 2.6;
        const Rule1D nx = gauss_legendre(cfg.coarse ? 201 : 301, -44.0, 44.0);
        double worst = 0.0, scale = 0.0;
        for (double sv : {-0.3, 0.2}) {
            const GroupElement l = GroupElement::levi(+1, sv);
            cxd direct = 0.0;
            for (std::size_t i = 0; i < nx.size(); ++i) {
                const GroupElement ln = l * GroupElement::upper_unipotent(nx.nodes[i]);
                direct += nx.weights[i] *
                          integrate_G(
                              [&](const GroupElement& gm) {
                                  return F1(gm) * F2(gm.inverse() * ln);
                              },
                              cs)
                              .value;
            }
            direct *= std::exp(sv);  // delta+(l)^{1/2}
            worst = std::max(worst, std::abs(direct - fr(+1, sv)));
            scale = std::max(scale, std::abs(direct));
        }
        suite.checks.push_back(make_check(
            "counit-restriction-agreement",
            "Fr(h1 (x) h2) = delta+^{1/2} int_N (F1 conv F2)(l n) dn on projected data",
            worst / scale, 1e-4, 2, ts));
    }
    {
        // unit kernel: invariances and the reproducing property
        const GFunction f = verify_detail::kan_bump(0.0, 0.0, 0.0, 30.0, 0.35);
        const KernelOnGxG kf =
            frobenius_unit_kernel(f, sinh_map(cfg.coarse ? 361 : 561, 60.0));
        double inv = 0.0;
        for (int i = 0; i < 10; ++i) {
            const GroupElement g1 = rng.group(0.8), g2 = rng.group(0.8);
            const GroupElement n0 = GroupElement::upper_unipotent(rng.uniform(-1.0, 1.0));
            const cxd base = kf(g1, g2);
            inv = std::max(inv, std::abs(kf(g1 * n0, g2) - base));
            inv = std::max(inv, std::abs(kf(g1, g2 * n0) - base));
            const GroupElement l = GroupElement::levi(+1, rng.uniform(-0.5, 0.5));
            inv = std::max(inv,
                           std::abs(kf(g1 * l, g2 * l) * modular_delta(l, Side::upper) - base));
        }
        suite.checks.push_back(make_check("unit-kernel-invariance",
                                          "k_f(g1 n, g2) = k_f(g1, g2 n) = k_f(g1, g2), "
                                          "k_f(g1 l, g2 l) = delta+(l)^{-1} k_f(g1, g2)",
                                          inv, 1e-8, 10, ts));
        const double at_e = std::abs(kf(GroupElement::identity(), GroupElement::identity()));
        suite.checks.push_back(make_check("unit-kernel-positive", "k_f(e, e) > 0 for a bump at e",
                                          at_e > 1e-6 ? 0.0 : 1.0, 0.5, 1, ts));
        // reproducing property: integral k_f(x, y) h(y) dy = (f . h)(x)
        QuadratureScheme gs;
        gs.k_nodes = cfg.coarse ? 96 : 160;
        gs.t_kind = RuleKind::gauss_legendre;
        gs.t_nodes = cfg.coarse ? 33 : 49;
        gs.t_radius = 2.3;
        gs.x_kind = RuleKind::gauss_legendre;
        gs.x_nodes = cfg.coarse ? 33 : 49;
        gs.x_radius = 2.5;
        PlaneQuadrature pq = sz.plane;
        pq.u_extent = 8.0;
        double worst = 0.0, scale = 0.0;
        for (int i = 0; i < (cfg.coarse ? 2 : 3); ++i) {
            const Vec2 x = rng.annulus(0.7, 1.4);
            const cxd via_kernel = unit_kernel_apply(kf, h1, x, pq);
            const cxd direct = act_Sc_G(f, h1, gs)(x);
            worst = std::max(worst, std::abs(via_kernel - direct));
            scale = std::max(scale, std::abs(direct));
        }
        suite.checks.push_back(make_check("unit-reproducing-property",
                                          "int k_f(x, y) h(y) dy = (f . h)(x)", worst / scale,
                                          1e-3, 3, ts));
    }
    return suite;
}

// --------------------------------------------------------------- intertwiner

inline SuiteResult verify_intertwiner(const SuiteConfig& cfg) {
    using verify_detail::make_check;
    const auto sz = verify_detail::Sizes::from_config(cfg);
    const double ts = cfg.tolerance_scale;
    Rng rng(cfg.seed + 2);
    SuiteResult suite;
    suite.suite = "intertwiner";

    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const cxd z(rng.uniform(-8.0, 8.0), rng.uniform(-20.0, 20.0));
            if (is_nonpositive_integer(z, 1e-3) || is_nonpositive_integer(z + 1.0, 1e-3)) continue;
            const cxd lhs = gamma_complex(z + 1.0);
            worst = std::max(worst, std::abs(lhs - z * gamma_complex(z)) / std::abs(lhs));
        }
        suite.checks.push_back(make_check("gamma-functional-equation",
                                          "Gamma(z + 1) = z Gamma(z)", worst, 1e-12, 100, ts));
    }
    {
        double worst = std::abs(gamma_complex(cxd(1.0, 0.0)) - 1.0);
        worst = std::max(worst, std::abs(gamma_complex(cxd(0.5, 0.0)) - std::sqrt(pi)));
        for (double y : {0.5, 1.0, 2.0}) {
            const double lhs = std::norm(gamma_complex(cxd(0.0, y)));
            const double rhs = pi / (y * std::sinh(pi * y));
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        }
        worst = std::max(worst, std::abs(gamma_complex(cxd(0.25, 0.0)) *
                                             gamma_complex(cxd(0.75, 0.0)) -
                                         pi * std::sqrt(2.0)));
        suite.checks.push_back(make_check(
            "gamma-reference-values",
            "Gamma(1), Gamma(1/2), |Gamma(iy)|^2 = pi / (y sinh pi y), reflection", worst, 1e-12,
            6, ts));
    }
    {
        const double v1 = std::abs(c_function(Side::upper, 1, cxd(0.0, 0.0)) - pi);
        double v2 = 0.0;
        for (double mu : {0.01, 0.005}) {
            const cxd q = mu * c_function(Side::upper, 0, cxd(mu, 0.0)) - cxd(0.0, 2.0);
            v2 = std::max(v2, std::abs(q) / (2.0 * mu));  // bound |mu c - 2i| <= 2 mu
        }
        suite.checks.push_back(make_check("c-spot-values",
                                          "c+(1)(0) = pi and mu c+(0)(mu) -> 2i", std::max(v1, v2),
                                          1.0, 3, ts));
    }
    {
        double conj_worst = 0.0, jsym = 0.0, minabs = 1e300;
        for (int j = 0; j <= 8; ++j) {
            for (double mu = -10.0; mu <= 10.0 + 1e-9; mu += 0.25) {
                if (c_function_has_pole(j, mu)) continue;
                const cxd cp = c_function(Side::upper, j, mu);
                const cxd cm = c_function(Side::lower, j, mu);
                conj_worst = std::max(conj_worst, std::abs(std::conj(cm) - cp));
                jsym = std::max(jsym, std::abs(cp - c_function(Side::upper, -j, mu)));
                minabs = std::min(minabs, std::abs(cp));
            }
        }
        suite.checks.push_back(make_check("c-conjugation-symmetry",
                                          "conj c-(j, mu) = c+(j, mu) for real mu", conj_worst,
                                          1e-10, 729, ts));
        suite.checks.push_back(make_check("c-j-symmetry", "c(j, mu) = c(-j, mu)", jsym, 1e-12, 729,
                                          ts));
        suite.checks.push_back(make_check("c-no-real-zeros", "|c(j, mu)| > 0 on the real grid",
                                          minabs > 1e-3 ? 0.0 : 1.0, 0.5, 729, ts));
    }
    {
        double worst = 0.0;
        for (int j : {0, 2, 4}) {
            const cxd res = c_function_residue(Side::upper, j);
            for (double mu : {0.01, -0.01, 0.005}) {
                worst = std::max(worst,
                                 std::abs(mu * c_function(Side::upper, j, mu) - res) / std::abs(mu));
            }
        }
        suite.checks.push_back(make_check("c-pole-structure",
                                          "mu c(even j, mu) extends continuously through mu = 0",
                                          worst, 10.0, 9, ts));
    }
    {
        double worst = 0.0;
        for (const cxd mu : {cxd(1.0, 0.5), cxd(2.0, 0.7), cxd(1.0, 1.0)}) {
            for (int j : {0, 1, 2, 3}) {
                const PlaneFunction atom_lo = PlaneFunction::homogeneous_atom(Side::lower, mu, j);
                const PlaneFunction atom_up = PlaneFunction::homogeneous_atom(Side::upper, mu, j);
                const Vec2 x = rng.annulus(0.6, 1.6);
                const cxd num = intertwine_J_numeric(Side::upper, atom_lo, x).value;
                const cxd expect = c_function(Side::upper, j, mu) * atom_up(x);
                worst = std::max(worst, std::abs(num - expect) / std::abs(expect));
                const cxd mum = std::conj(mu);
                const PlaneFunction am_up = PlaneFunction::homogeneous_atom(Side::upper, mum, j);
                const PlaneFunction am_lo = PlaneFunction::homogeneous_atom(Side::lower, mum, j);
                const Vec2 x2 = rng.annulus(0.6, 1.6);
                const cxd num2 = intertwine_J_numeric(Side::lower, am_up, x2).value;
                const cxd expect2 = c_function(Side::lower, j, mum) * am_lo(x2);
                worst = std::max(worst, std::abs(num2 - expect2) / std::abs(expect2));
            }
        }
        suite.checks.push_back(make_check("j-numeric-matches-c",
                                          "line-integral J on a K-type atom = c(j, mu) times the "
                                          "atom on the other side",
                                          worst, 1e-4, 24, ts));
    }
    {
        // dual-vector independence and rotation equivariance of the line integral
        const PlaneFunction atom = PlaneFunction::homogeneous_atom(Side::lower, cxd(1.0, 0.8), 0);
        const Vec2 x{1.2, -0.4};
        const cxd base = intertwine_J_numeric(Side::upper, atom, x).value;
        // radial input gives radial output
        double worst = 0.0;
        for (double th : {0.7, 2.9}) {
            const Vec2 xr = polar(x.norm(), th);
            worst = std::max(worst,
                             std::abs(intertwine_J_numeric(Side::upper, atom, xr).value - base));
        }
        suite.checks.push_back(make_check("j-rotation-equivariance",
                                          "J maps radial functions to radial functions", worst,
                                          1e-8, 2, ts));
    }
    {
        // J I = id and adjointness on Schwartz bumps
        KSeries a1(3);
        a1[0] = 1.0;
        a1[1] = cxd(0.2, 0.3);
        KSeries a2(3);
        a2[0] = cxd(0.5, 0.1);
        a2[-2] = 0.4;
        const PlaneFunction h =
            PlaneFunction::radial_profile_times_kseries(Side::upper, 0.1, 0.7, a1);
        const PlaneFunction k =
            PlaneFunction::radial_profile_times_kseries(Side::lower, -0.2, 0.6, a2);
        FourierSettings fs = sz.fourier;
        fs.jmax = std::min(fs.jmax, 8);
        const PlaneFunction ih = intertwine_I(Side::upper, h, fs);
        const PlaneFunction ik = intertwine_I(Side::lower, k, fs);
        double num = 0.0, den = 0.0;
        for (const Vec2 v : sample_annulus(cfg.coarse ? 12 : 24, 0.5, 2.0, 11)) {
            const cxd jv = intertwine_J_numeric(Side::upper, ih, v).value;
            num += std::norm(jv - h(v));
            den += std::norm(h(v));
            const cxd jk = intertwine_J_numeric(Side::lower, ik, v).value;
            num += std::norm(jk - k(v));
            den += std::norm(k(v));
        }
        suite.checks.push_back(make_check("ji-round-trip", "J(side) I(side) = identity",
                                          std::sqrt(num / den), 1e-3, 48, ts));
        PlaneQuadrature pq = sz.plane;
        const cxd lhs = l2_inner(k, ih, pq);
        const cxd rhs = l2_inner(ik, h, pq);
        const double nk = l2_norm(k, pq), nh = l2_norm(h, pq);
        suite.checks.push_back(make_check("i-adjointness",
                                          "<k, I+ h>_{L2} = <I- k, h>_{L2}",
                                          std::abs(lhs - rhs) / (nk * nh), 1e-3, 1, ts));
        // paper bound |J+ h|(x) <= C delta+(x)^{-1/2}
        const double semin = hc_seminorm(ih, 2).value;
        double bound_ratio = 0.0;
        for (const Vec2 v : sample_annulus(12, 0.3, 3.0, 13)) {
            const cxd jv = intertwine_J_numeric(Side::upper, ih, v).value;
            bound_ratio = std::max(bound_ratio, std::abs(jv) * v.norm() / (4.0 * semin));
        }
        suite.checks.push_back(make_check("j-growth-bound",
                                          "|J h|(x) <= C(h) delta+(x)^{-1/2}", bound_ratio, 1.0,
                                          12, ts));
    }
    {
        // normalized involution
        MuGrid grid = sz.fourier.mu;
        SpectralFunction H(Side::upper, grid, 6);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mu = grid.mu(i);
            for (int j = -6; j <= 6; j += 2) {
                H.slice(i)[j] = std::exp(-0.2 * (mu - 0.5 * j) * (mu - 0.5 * j)) *
                                cxd(1.0 / (1 + std::abs(j)), 0.2 * j);
            }
        }
        const SpectralFunction WH = normalized_W(H);
        const SpectralFunction WWH = normalized_W(WH);
        double winv = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (int j = -6; j <= 6; ++j)
                winv = std::max(winv, std::abs(WWH.slice(i)[j] - H.slice(i)[j]));
        }
        const double wnorm = std::abs(std::sqrt(WH.norm_sq() / H.norm_sq()) - 1.0);
        double w0dev = 0.0, wid0 = 0.0, wuni = 0.0;
        for (double mu : {-3.0, -0.4, 0.0, 1.1, 7.7}) {
            w0dev = std::max(w0dev, std::abs(w_even_scalar(0, mu) - 1.0));
            for (int j : {2, 4, 6}) {
                wuni = std::max(wuni, std::abs(std::abs(w_even_scalar(j, mu)) - 1.0));
                if (mu == 0.0) wid0 = std::max(wid0, std::abs(w_even_scalar(j, 0.0) - 1.0));
            }
        }
        suite.checks.push_back(make_check("w-involution", "W(W(H)) = H", winv, 1e-12, 1, ts));
        suite.checks.push_back(
            make_check("w-unitary", "|W H| = |H| and |w_j(mu)| = 1",
                       std::max(wnorm, wuni), 1e-12, 1, ts));
        suite.checks.push_back(make_check("w-normalization", "w_0 = 1 and W(0) is the identity",
                                          std::max(w0dev, wid0), 1e-12, 1, ts));
        // symmetric/antisymmetric projectors
        const SpectralFunction S = symmetric_part(H), A = antisymmetric_part(H);
        double proj = 0.0;
        const SpectralFunction S2 = symmetric_part(S), WS = normalized_W(S), WA = normalized_W(A);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (int j = -6; j <= 6; ++j) {
                proj = std::max(proj, std::abs(S.slice(i)[j] + A.slice(i)[j] - H.slice(i)[j]));
                proj = std::max(proj, std::abs(S2.slice(i)[j] - S.slice(i)[j]));
                proj = std::max(proj, std::abs(WS.slice(i)[j] - S.slice(i)[j]));
                proj = std::max(proj, std::abs(WA.slice(i)[j] + A.slice(i)[j]));
            }
        }
        suite.checks.push_back(make_check("w-projectors",
                                          "(H + WH)/2 + (H - WH)/2 = H, idempotent, W-eigenspaces",
                                          proj, 1e-12, 1, ts));
    }
    {
        // 1/c and mu c(even) map Schwartz grids to rapidly decaying grids
        MuGrid grid = sz.fourier.mu;
        SpectralFunction H(Side::upper, grid, 4);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mu = grid.mu(i);
            for (int j = -4; j <= 4; ++j) H.slice(i)[j] = std::exp(-0.5 * mu * mu);
        }
        const SpectralFunction Hc = apply_c_inverse(H, Side::upper);
        const SpectralFunction Hm = apply_c(H, Side::upper).map_slices(
            [](double mu, const KSeries& s) { return cxd(mu, 0.0) * s; });
        const double tails = std::max(Hc.tail_fraction(), Hm.tail_fraction());
        suite.checks.push_back(make_check("c-multiplier-continuity",
                                          "1/c and mu c(even j) preserve rapid decay on the grid",
                                          tails, 1e-8, 2, ts));
        // even-parity reciprocal vanishes at mu = 0
        double z0 = 0.0;
        const std::size_t zi = grid.zero_index();
        for (int j = -4; j <= 4; j += 2) z0 = std::max(z0, std::abs(Hc.slice(zi)[j]));
        suite.checks.push_back(make_check("c-inverse-zero-at-origin",
                                          "even-j component of c^{-1} H vanishes at mu = 0", z0,
                                          1e-14, 1, ts));
        // apply_c then apply_c_inverse = id away from the pole node
        const SpectralFunction round = apply_c_inverse(apply_c(H, Side::upper), Side::upper);
        double rt = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i == zi) continue;
            for (int j = -4; j <= 4; ++j)
                rt = std::max(rt, std::abs(round.slice(i)[j] - H.slice(i)[j]));
        }
        suite.checks.push_back(make_check("c-multiplier-round-trip",
                                          "apply_c then apply_c_inverse = id off the pole node",
                                          rt, 1e-12, 1, ts));
    }
    return suite;
}

// --------------------------------------------------------------- wave-packet

inline SpectralFunction verify_even_data(Side side, const MuGrid& grid, int jmax, Rng& rng,
                                         int vanish_order) {
    SpectralFunction H(side, grid, jmax);
    for (int j = -jmax; j <= jmax; j += 2) {
        const double re = rng.uniform(-1.0, 1.0), im = rng.uniform(-1.0, 1.0);
        const double w = 1.0 + 0.5 * std::abs(rng.uniform(-1.0, 1.0));
        const double m = rng.uniform(-1.5, 1.5);
        const double amp = std::exp(-0.3 * std::abs(j));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mu = grid.mu(i);
            cxd v = amp * cxd(re, im) * std::exp(-(mu - m) * (mu - m) / (2.0 * w * w));
            for (int q = 0; q < vanish_order; ++q) v *= mu;
            H.slice(i)[j] = v;
        }
    }
    return H;
}

inline SuiteResult verify_wave_packet(const SuiteConfig& cfg) {
    using verify_detail::make_check;
    const auto sz = verify_detail::Sizes::from_config(cfg);
    const double ts = cfg.tolerance_scale;
    Rng rng(cfg.seed + 3);
    SuiteResult suite;
    suite.suite = "wave-packet";

    const MuGrid grid = sz.fourier.mu;
    const int jmax = std::min(sz.fourier.jmax, 8);

    {
        // plancherel density facts
        double worst = plancherel_density(Parity::even, 0.0);
        worst = std::max(worst,
                         std::abs(plancherel_density(Parity::odd, 0.0) - 1.0 / (pi * pi)));
        for (double mu : {0.7, 3.3}) {
            for (Parity p : {Parity::even, Parity::odd}) {
                worst = std::max(worst, std::abs(plancherel_density(p, mu) -
                                                 plancherel_density(p, -mu)));
            }
        }
        suite.checks.push_back(make_check(
            "plancherel-density-values",
            "alpha_even(0) = 0, alpha_odd(0) = 1/pi^2, alpha(-mu) = alpha(mu)", worst, 1e-12, 6,
            ts));
    }
    {
        // exact substitution identity at the grid level (odd parity; even with
        // an admissible mu^2 profile)
        SpectralFunction H1(Side::lower, grid, jmax), H2(Side::upper, grid, jmax);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mu = grid.mu(i);
            for (int j = -jmax; j <= jmax; j += 1) {
                if (std::abs(j) % 2 == 1) {
                    H1.slice(i)[j] = std::exp(-0.4 * mu * mu) / (1.0 + j * j);
                    H2.slice(i)[j] = std::exp(-0.3 * (mu - 1.0) * (mu - 1.0)) * cxd(0.3, 0.1 * j);
                }
            }
        }
        const GroupElement g = rng.group(0.8);
        const cxd direct = wave_packet_B(H1, H2, g, false);
        SpectralFunction H2w = H2.map_slices([&](double mu, const KSeries& s) {
            const double a = plancherel_density(Parity::odd, mu);
            return cxd(1.0 / a, 0.0) * s;
        });
        // weight the pairing back by alpha through the mu-grid
        const SpectralAction act(g.inverse(), H2.side(), jmax);
        cxd weighted = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mu = grid.mu(i);
            const double w = (i == 0 || i + 1 == grid.size()) ? 0.5 : 1.0;
            const KSeries slice = act.apply(mu, H2w.slice(i));
            weighted += w * plancherel_density(Parity::odd, mu) *
                        coefficient_inner(H1.slice(i), slice);
        }
        weighted *= grid.dmu;
        suite.checks.push_back(make_check(
            "plancherel-substitution",
            "int <H1, g^{-1} H2> dmu = int <H1, g^{-1} alpha^{-1} H2> alpha dmu",
            std::abs(direct - weighted) / std::abs(direct), 1e-12, 1, ts));
    }
    {
        SpectralFunction H1 = verify_even_data(Side::lower, grid, jmax, rng, 0);
        SpectralFunction H2 = verify_even_data(Side::upper, grid, jmax, rng, 0);
        double worst = 0.0, scale = 0.0;
        for (int i = 0; i < 3; ++i) {
            const GroupElement g = rng.group(1.0);
            const cxd lhs = wave_packet_B(normalized_W(H1), H2, g, false);
            const cxd rhs = wave_packet_B(H1, normalized_W(H2), g, false);
            worst = std::max(worst, std::abs(lhs - rhs));
            scale = std::max(scale, std::abs(lhs));
        }
        suite.checks.push_back(make_check("w-pairing-equivariance",
                                          "int <W H1, g^{-1} H2> dmu = int <H1, g^{-1} W H2> dmu",
                                          worst / scale, 1e-4, 3, ts));
        const SpectralFunction S = symmetric_part(H1);
        const SpectralFunction A = antisymmetric_part(H2);
        double ortho = 0.0;
        for (int i = 0; i < (cfg.coarse ? 3 : 5); ++i) {
            const GroupElement g = rng.group(1.2);
            ortho = std::max(ortho, std::abs(wave_packet_B(S, A, g, false)));
        }
        suite.checks.push_back(make_check("symmetric-antisymmetric-orthogonal",
                                          "the pairing of a symmetric and an antisymmetric "
                                          "function vanishes",
                                          ortho, 1e-6, 5, ts));
    }
    {
        // B at the identity matches the plain spectral integral
        SpectralFunction H1 = verify_even_data(Side::lower, grid, jmax, rng, 0);
        SpectralFunction H2 = verify_even_data(Side::upper, grid, jmax, rng, 0);
        const cxd via_b = wave_packet_B(H1, H2, GroupElement::identity(), true);
        cxd direct = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double w = (i == 0 || i + 1 == grid.size()) ? 0.5 : 1.0;
            KSeries s = H2.slice(i);
            for (int j = -jmax; j <= jmax; ++j)
                s[j] *= c_function_reciprocal(Side::upper, j, grid.mu(i));
            direct += w * coefficient_inner(H1.slice(i), s);
        }
        direct *= grid.dmu;
        suite.checks.push_back(make_check("b-at-identity",
                                          "B(e) = int <H1(mu), c^{-1} H2(mu)> dmu",
                                          std::abs(via_b - direct) / std::abs(direct), 1e-12, 1,
                                          ts));
    }
    {
        // adjoint symmetry: B from I+ equals B from I- on swapped arguments
        KSeries a1(3);
        a1[0] = 1.0;
        a1[2] = cxd(0.3, 0.1);
        KSeries a2(3);
        a2[0] = cxd(0.7, -0.2);
        a2[-2] = 0.3;
        const PlaneFunction h =
            PlaneFunction::radial_profile_times_kseries(Side::upper, 0.15, 0.7, a1);
        const PlaneFunction kst =
            PlaneFunction::radial_profile_times_kseries(Side::lower, -0.1, 0.6, a2);
        FourierSettings fs = sz.fourier;
        fs.jmax = std::min(fs.jmax, 8);
        const PlaneFunction ih = intertwine_I(Side::upper, h, fs);
        const PlaneFunction ikst = intertwine_I(Side::lower, kst, fs);
        PlaneQuadrature pq = sz.plane;
        double worst = 0.0, scale = 0.0;
        for (int i = 0; i < (cfg.coarse ? 2 : 3); ++i) {
            const GroupElement g = rng.group(0.9);
            const cxd b_plus = l2_inner(kst, act_G_left(g.inverse(), ih), pq);
            const cxd b_minus = l2_inner(act_G_left(g, ikst), h, pq);
            worst = std::max(worst, std::abs(b_plus - b_minus));
            scale = std::max(scale, std::abs(b_plus));
        }
        suite.checks.push_back(make_check("b-adjoint-symmetry",
                                          "<k*, g^{-1} I+ h> = <g I- k*, h>", worst / scale, 1e-3,
                                          3, ts));
    }
    {
        // decay along the Cartan ray and the vanishing-order hypothesis
        SpectralFunction E1 = verify_even_data(Side::lower, grid, jmax, rng, 1);
        SpectralFunction E2 = verify_even_data(Side::upper, grid, jmax, rng, 0);
        const WaveConditionReport even_rep = hc_wave_condition_check(E1, E2, 2, 8.0,
                                                                     cfg.coarse ? 9 : 17);
        suite.checks.push_back(make_check("wave-decay-even",
                                          "|B(a_t)| <= C Xi(a_t) (1+t)^{-2} for admissible even "
                                          "data",
                                          even_rep.hypothesis_ok && even_rep.bounded ? 0.0 : 1.0,
                                          0.5, cfg.coarse ? 9 : 17, ts));
        // odd data: any pair is admissible
        SpectralFunction O1(Side::lower, grid, jmax), O2(Side::upper, grid, jmax);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mu = grid.mu(i);
            for (int j = -jmax; j <= jmax; ++j) {
                if (std::abs(j) % 2 == 1) {
                    O1.slice(i)[j] = std::exp(-0.4 * mu * mu) / (1.0 + std::abs(j));
                    O2.slice(i)[j] = std::exp(-0.35 * (mu - 0.5) * (mu - 0.5)) * cxd(0.4, 0.1 * j);
                }
            }
        }
        double head = 0.0, tail = 0.0;
        const int nt = cfg.coarse ? 9 : 17;
        for (int i = 0; i < nt; ++i) {
            const double t = 8.0 * i / (nt - 1);
            const GroupElement at = GroupElement::diag_exp(t);
            const double ratio = std::abs(wave_packet_B(O1, O2, at, true)) *
                                 std::pow(1.0 + t, 2) / xi_refined(at);
            if (4 * i >= 3 * nt) {
                tail = std::max(tail, ratio);
            } else {
                head = std::max(head, ratio);
            }
        }
        suite.checks.push_back(make_check("wave-decay-odd",
                                          "|B(a_t)| <= C Xi(a_t) (1+t)^{-2} for odd data",
                                          tail <= 1.25 * head + 1e-12 ? 0.0 : tail / head, 0.5,
                                          nt, ts));
        // hypothesis branches
        SpectralFunction N1 = verify_even_data(Side::lower, grid, jmax, rng, 0);
        SpectralFunction N2 = verify_even_data(Side::upper, grid, jmax, rng, 0);
        SpectralFunction Q2 = verify_even_data(Side::upper, grid, jmax, rng, 2);
        bool rejected = !hc_wave_condition_check(N1, N2, 2, 4.0, 5).hypothesis_ok;
        bool accepted = hc_wave_condition_check(N1, Q2, 2, 4.0, 5).hypothesis_ok;
        suite.checks.push_back(make_check("wave-hypothesis-branches",
                                          "order-two single vanishing accepted, no vanishing "
                                          "rejected",
                                          rejected && accepted ? 0.0 : 1.0, 0.5, 2, ts));
    }
    return suite;
}

// ------------------------------------------------------------ second-adjoint

inline SuiteResult verify_second_adjoint(const SuiteConfig& cfg) {
    using verify_detail::make_check;
    const auto sz = verify_detail::Sizes::from_config(cfg);
    const double ts = cfg.tolerance_scale;
    Rng rng(cfg.seed + 4);
    SuiteResult suite;
    suite.suite = "second-adjoint";

    TriangleSettings tset;
    tset.fourier = sz.fourier;
    tset.fourier.jmax = std::min(sz.fourier.jmax, 8);
    tset.levi = sz.levi;
    tset.n_samples = sz.triangle_samples;
    tset.seed = static_cast<unsigned>(cfg.seed + 5);
    if (cfg.coarse) {
        tset.igrid.nu = 961;
        tset.line.nodes_per_panel = 12;
    }

    KSeries a1(3);
    a1[0] = 1.0;
    a1[1] = cxd(0.3, 0.2);
    a1[-2] = 0.25;
    const PlaneFunction h = PlaneFunction::radial_profile_times_kseries(Side::upper, 0.15, 0.7, a1);
    KSeries a2(3);
    a2[0] = cxd(0.7, -0.1);
    a2[2] = 0.2;
    a2[-1] = cxd(0.1, 0.4);
    const PlaneFunction k =
        PlaneFunction::radial_profile_times_kseries(Side::lower, -0.2, 0.65, a2);
    const LeviFunction f = LeviFunction::gaussian(+1, 0.1, 0.45);

    {
        ResidualReport rep = verify_triangle_first(h, f, tset);
        suite.checks.push_back(make_check("triangle-first-generic",
                                          "int f(l) delta+^{-1/2} (J+ I+ h)(g l^{-1}) dl = (h.f)(g)",
                                          rep.residual_sup / rep.scale, tset.tolerance,
                                          rep.samples, ts));
        ResidualReport rep2 = verify_triangle_second(k, f, tset);
        suite.checks.push_back(make_check("triangle-second-generic",
                                          "int f(l) delta-^{1/2} (J- I- k)(l^{-1} y) dl = (f.k)(y)",
                                          rep2.residual_sup / rep2.scale, tset.tolerance,
                                          rep2.samples, ts));
    }
    {
        // narrow-f approximate identity: both sides approach h
        const double width = 0.02;
        const LeviFunction fn = LeviFunction::gaussian(+1, 0.0, width);
        LeviQuadrature lq;
        lq.n_s = 64;
        lq.s_extent = 10.0 * width;
        const PlaneFunction hf = act_L_module(h, fn, lq);
        double sup = 0.0, dsup = 0.0;
        for (const Vec2 v : sample_annulus(20, 0.6, 1.8, static_cast<unsigned>(cfg.seed + 6))) {
            sup = std::max(sup, std::abs(hf(v) - h(v)));
            // numeric derivative bound sup_s |d/ds e^{-s} h(e^{-s} v)|
            const double eps = 1e-3;
            const cxd d = (std::exp(-eps) * h(std::exp(-eps) * v) -
                           std::exp(eps) * h(std::exp(eps) * v)) /
                          (2.0 * eps);
            dsup = std::max(dsup, std::abs(d));
        }
        const double bound = 1.5 * width * dsup + 1e-6;
        suite.checks.push_back(make_check("triangle-narrow-approximate-identity",
                                          "a unit-mass narrow f reproduces h up to the bump-width "
                                          "bound",
                                          sup / bound, 1.0, 20, ts));
    }
    {
        // f0 pointwise formula and bump masses
        BumpSpec bumps;
        const GFunction f0 = bernstein_f0(f, bumps);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double y = rng.uniform(-1.0, 1.0), s = rng.uniform(-0.8, 0.8),
                         x = rng.uniform(-1.0, 1.0);
            const GroupElement g = GroupElement::lower_unipotent(y) * GroupElement::levi(1, s) *
                                   GroupElement::upper_unipotent(x);
            const cxd expect = bumps.v_minus(y) * f(+1, s) * std::exp(-s) * bumps.v_plus(x);
            worst = std::max(worst, std::abs(f0(g) - expect));
        }
        worst = std::max(worst, std::abs(f0(GroupElement(0.0, 1.0, -1.0, 0.0))));
        suite.checks.push_back(make_check(
            "unit-f0-product-formula",
            "f0(nbar l n) = vbar(nbar) f(l) delta+(l)^{-1/2} v(n), zero off the cell", worst,
            1e-12, 11, ts));
        const Rule1D br = gauss_legendre(200, -4.0, 4.0);
        double mass_dev = std::abs(br.integrate([&](double x) {
                              return cxd(bumps.v_plus(x), 0.0);
                          }) - 1.0);
        mass_dev = std::max(mass_dev, std::abs(br.integrate([&](double y) {
                                return cxd(bumps.v_minus(y), 0.0);
                            }) - 1.0));
        QuadratureScheme ms;
        ms.t_kind = RuleKind::gauss_legendre;
        ms.t_nodes = 81;
        ms.t_radius = 6.0;
        ms.x_kind = RuleKind::tan_map;
        ms.x_nodes = 161;
        ms.x_radius = 18.0;
        mass_dev = std::max(mass_dev,
                            std::abs(integrate_NLN(bernstein_u(bumps), ms).value - 1.0));
        suite.checks.push_back(make_check("unit-bump-masses",
                                          "the cutoff bumps u, v+, v- all have total integral 1",
                                          mass_dev, 1e-8, 3, ts));
    }
    {
        // bump independence through the balanced functional
        BumpSpec b1;
        BumpSpec b2;
        b2.v_minus = {0.1, 0.25};
        b2.v_plus = {-0.15, 0.3};
        b2.u_y = {0.0, 0.5};
        b2.u_s = {0.1, 0.4};
        b2.u_x = {-0.1, 0.45};
        const int nn = cfg.coarse ? 32 : 44;
        double worst = 0.0, scale = 0.0;
        for (auto [vy, vx] : {std::pair<Vec2, Vec2>{{0.9, 0.3}, {1.1, -0.2}},
                              {{1.3, 0.4}, {0.7, 0.1}}}) {
            const cxd o1 = bernstein_balanced_functional(f, b1, vy, vx, nn);
            const cxd o2 = bernstein_balanced_functional(f, b2, vy, vx, nn);
            const cxd exact = bernstein_balanced_exact(f, vy, vx);
            worst = std::max({worst, std::abs(o1 - o2), std::abs(o1 - exact)});
            scale = std::max(scale, std::abs(exact));
        }
        suite.checks.push_back(make_check("unit-bump-independence",
                                          "the balanced functional of Ext(f) does not depend on "
                                          "the cutoff bumps",
                                          worst / scale, 1e-3, 2, ts));
    }
    {
        // unreduced intermediate form, coarse
        BumpSpec bumps;
        QuadratureScheme ms;
        ms.t_kind = RuleKind::gauss_legendre;
        ms.t_nodes = 98;
        ms.t_radius = 8.0;
        ms.x_kind = RuleKind::tan_map;
        ms.x_nodes = 242;
        ms.x_radius = 18.0;
        const PlaneFunction ih = intertwine_I(Side::upper, h, tset.fourier, tset.igrid);
        const PlaneFunction direct = act_L_module(h, f, sz.levi);
        double worst = 0.0;
        for (const Vec2 v : {Vec2{1.0, 0.2}, Vec2{0.6, -0.8}}) {
            const cxd t1 = triangle_first_unreduced(ih, f, bumps, v, cfg.coarse ? 10 : 12, ms);
            worst = std::max(worst, std::abs(t1 - direct(v)) / std::abs(direct(v)));
        }
        suite.checks.push_back(make_check("triangle-first-unreduced-spot",
                                          "the unreduced composite matches the module action on "
                                          "a coarse grid",
                                          worst, tset.spot_tolerance, 2, ts));
    }
    {
        // support-overflow rejection
        BumpSpec bad;
        bad.v_minus = {0.0, 3.0};
        bool threw = false;
        try {
            bad.validate(4.0, 6.0, 4.0);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        suite.checks.push_back(make_check("unit-support-overflow-error",
                                          "bump supports exceeding the quadrature box are "
                                          "rejected",
                                          threw ? 0.0 : 1.0, 0.5, 1, ts));
    }
    return suite;
}

inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "group-core") return verify_group_core(cfg);
    if (name == "frobenius") return verify_frobenius(cfg);
    if (name == "intertwiner") return verify_intertwiner(cfg);
    if (name == "wave-packet") return verify_wave_packet(cfg);
    if (name == "second-adjoint") return verify_second_adjoint(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<std::string> all_suite_names() {
    return {"group-core", "frobenius", "intertwiner", "wave-packet", "second-adjoint"};
}

}  // namespace sl2
