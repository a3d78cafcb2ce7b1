// Acceptance suite: one line per criterion, pinned tolerances, nonzero exit
// on any failure.  Criteria run on the default grids; runtimes are printed
// for the budgeted items.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sl2/atom_io.hpp"
#include "sl2/bernstein.hpp"
#include "sl2/triangle.hpp"
#include "sl2/verify.hpp"
#include "sl2/wave_packet.hpp"

using namespace sl2;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, double residual, double tolerance,
            double seconds) {
    std::printf("%s  criterion %2d  %-34s  residual=%.3e  tolerance=%.3e  (%.1fs)\n",
                pass ? "PASS" : "FAIL", index, name.c_str(), residual, tolerance, seconds);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

PlaneFunction bump(Side side, int which) {
    KSeries ang(3);
    switch (which) {
        case 0:
            ang[0] = 1.0;
            ang[1] = cxd(0.3, 0.2);
            ang[-2] = 0.25;
            return PlaneFunction::radial_profile_times_kseries(side, 0.15, 0.7, ang);
        case 1:
            ang[0] = cxd(0.7, -0.1);
            ang[2] = 0.2;
            ang[-1] = cxd(0.1, 0.4);
            return PlaneFunction::radial_profile_times_kseries(side, -0.2, 0.65, ang);
        default:
            ang[0] = cxd(0.4, 0.4);
            ang[-3] = 0.3;
            ang[2] = cxd(0.0, 0.2);
            return PlaneFunction::radial_profile_times_kseries(side, 0.05, 0.8, ang);
    }
}

FourierSettings default_fourier() {
    FourierSettings fs;
    fs.jmax = 8;
    fs.mu = MuGrid::with_cutoff(0.05, 20.0);
    return fs;
}

// 1. c-function spot values
void criterion_1() {
    Timer t;
    double worst_ratio = 0.0;
    const double v1 = std::abs(c_function(Side::upper, 1, cxd(0.0, 0.0)) - pi);
    worst_ratio = v1 / 1e-10;
    for (double mu : {0.01, 0.005}) {
        const double dev = std::abs(mu * c_function(Side::upper, 0, cxd(mu, 0.0)) - cxd(0.0, 2.0));
        worst_ratio = std::max(worst_ratio, dev / (2.0 * mu));
    }
    double conj_worst = 0.0;
    for (int j = 0; j <= 8; ++j) {
        for (double mu = -10.0; mu <= 10.0 + 1e-12; mu += 0.125) {
            if (c_function_has_pole(j, mu)) continue;
            conj_worst = std::max(conj_worst, std::abs(std::conj(c_function(Side::lower, j, mu)) -
                                                       c_function(Side::upper, j, mu)));
        }
    }
    worst_ratio = std::max(worst_ratio, conj_worst / 1e-10);
    const double sec = t.elapsed();
    report(1, "c-function spot values", worst_ratio <= 1.0 && sec < 1.0, worst_ratio, 1.0, sec);
}

// 2. numeric J vs analytic c
void criterion_2() {
    Timer t;
    double worst = 0.0;
    for (const cxd mu : {cxd(1.0, 0.5), cxd(2.0, 0.7)}) {
        for (int j : {0, 1, 2, 3}) {
            const PlaneFunction lo = PlaneFunction::homogeneous_atom(Side::lower, mu, j);
            const PlaneFunction up = PlaneFunction::homogeneous_atom(Side::upper, mu, j);
            for (const Vec2 x : {Vec2{1.0, 0.0}, Vec2{0.3, 1.1}, Vec2{-0.8, 0.5}}) {
                const cxd num = intertwine_J_numeric(Side::upper, lo, x).value;
                const cxd expect = c_function(Side::upper, j, mu) * up(x);
                worst = std::max(worst, std::abs(num - expect) / std::abs(expect));
            }
            const cxd mum = std::conj(mu);
            const PlaneFunction up2 = PlaneFunction::homogeneous_atom(Side::upper, mum, j);
            const PlaneFunction lo2 = PlaneFunction::homogeneous_atom(Side::lower, mum, j);
            for (const Vec2 x : {Vec2{1.0, 0.0}, Vec2{0.3, 1.1}}) {
                const cxd num = intertwine_J_numeric(Side::lower, up2, x).value;
                const cxd expect = c_function(Side::lower, j, mum) * lo2(x);
                worst = std::max(worst, std::abs(num - expect) / std::abs(expect));
            }
        }
    }
    const double sec = t.elapsed();
    report(2, "numeric J matches analytic c", worst <= 1e-4 && sec < 10.0, worst, 1e-4, sec);
}

// 3. J I = id round trips
void criterion_3() {
    Timer t;
    const FourierSettings fs = default_fourier();
    double worst = 0.0;
    for (int which = 0; which < 3; ++which) {
        for (Side side : {Side::upper, Side::lower}) {
            const PlaneFunction h = bump(side, which);
            const PlaneFunction ih = intertwine_I(side, h, fs);
            double num = 0.0, den = 0.0;
            for (const Vec2 v : sample_annulus(30, 0.5, 2.0, 97 + which)) {
                num += std::norm(intertwine_J_numeric(side, ih, v).value - h(v));
                den += std::norm(h(v));
            }
            worst = std::max(worst, std::sqrt(num / den));
        }
    }
    const double sec = t.elapsed();
    report(3, "J I round trip, 3 bumps per side", worst <= 1e-3 && sec < 60.0, worst, 1e-3, sec);
}

// 4. adjointness of I+ and I-
void criterion_4() {
    Timer t;
    const FourierSettings fs = default_fourier();
    const PlaneQuadrature pq{240, 12.0, 80, RuleKind::gauss_legendre};
    double worst = 0.0;
    for (int which = 0; which < 3; ++which) {
        const PlaneFunction h = bump(Side::upper, which);
        const PlaneFunction k = bump(Side::lower, (which + 1) % 3);
        const cxd lhs = l2_inner(k, intertwine_I(Side::upper, h, fs), pq);
        const cxd rhs = l2_inner(intertwine_I(Side::lower, k, fs), h, pq);
        worst = std::max(worst, std::abs(lhs - rhs) / (l2_norm(h, pq) * l2_norm(k, pq)));
    }
    report(4, "adjointness of the inverses", worst <= 1e-3, worst, 1e-3, t.elapsed());
}

// 5. Xi identities
void criterion_5() {
    Timer t;
    Rng rng(1001);
    QuadratureScheme xs;
    double worst_sph = 0.0;
    const Rule1D kr = periodic_trapezoid(1024);
    for (int i = 0; i < 10; ++i) {
        const GroupElement g1 = rng.group(1.0), g2 = rng.group(1.0);
        xs.k_nodes = 2 * xi_nodes_for(g1 * g2);
        const double lhs = xi(g1, xs).value * xi(g2, xs).value;
        const double rhs = kr.integrate([&](double th) {
                               return xi(g1 * GroupElement::rotation(th) * g2, xs).value;
                           }) /
                           two_pi;
        worst_sph = std::max(worst_sph, std::abs(lhs - rhs));
    }
    double worst_lemma = 0.0;
    const Rule1D kr2 = periodic_trapezoid(4096);
    for (int i = 0; i < 10; ++i) {
        const GroupElement g = rng.group(1.0);
        const Vec2 x = rng.annulus(0.5, 2.0);
        xs.k_nodes = xi_nodes_for(g);
        const double lhs = kr2.integrate([&](double th) {
                               return xi_gmodn(g.apply(GroupElement::rotation(th).apply(x)));
                           }) /
                           two_pi;
        worst_lemma = std::max(worst_lemma, std::abs(lhs - xi(g, xs).value * xi_gmodn(x)));
    }
    xs.k_nodes = 64;
    const double at_e = std::abs(xi(GroupElement::identity(), xs).value - 1.0);
    const double worst =
        std::max({worst_sph / 1e-6, worst_lemma / 1e-6, at_e / 1e-12});
    report(5, "Xi spherical identities", worst <= 1.0, worst, 1.0, t.elapsed());
}

// 6. open-cell integration formula
void criterion_6() {
    Timer t;
    QuadratureScheme sg;
    sg.k_nodes = 320;
    sg.t_kind = RuleKind::gauss_legendre;
    sg.t_nodes = 121;
    sg.t_radius = 4.0;
    sg.x_kind = RuleKind::gauss_legendre;
    sg.x_nodes = 121;
    sg.x_radius = 5.0;
    QuadratureScheme sn = sg;
    sn.t_nodes = 201;
    sn.t_radius = 8.0;
    sn.x_kind = RuleKind::tan_map;
    sn.x_nodes = 501;
    sn.x_radius = 15.0;
    double worst = 0.0;
    const double centers[5][3] = {{0.0, 0.0, 0.0},
                                  {0.5, 0.25, -0.5},
                                  {pi, -0.3, 0.7},
                                  {-0.7, 0.1, 0.3},
                                  {0.9, -0.2, -0.8}};
    for (const auto& c : centers) {
        const GFunction phi = verify_detail::kan_bump(c[0], c[1], c[2]);
        const cxd ig = integrate_G(phi, sg).value;
        const cxd in = integrate_NLN(phi, sn).value;
        worst = std::max(worst, std::abs(ig - in) / std::abs(ig));
    }
    report(6, "G equals open-cell integration", worst <= 1e-6, worst, 1e-6, t.elapsed());
}

// 7. Frobenius suite residuals
void criterion_7() {
    Timer t;
    SuiteConfig cfg;
    const SuiteResult suite = verify_frobenius(cfg);
    double worst = 0.0;
    bool pass = true;
    for (const CheckResult& c : suite.checks) {
        if (c.name == "pairing-bimodule-law" || c.name == "pairing-module-invariance" ||
            c.name == "counit-restriction-agreement" || c.name == "unit-reproducing-property") {
            worst = std::max(worst, c.residual / 1e-3);
            pass = pass && c.residual <= 1e-3;
        } else {
            pass = pass && c.pass;
        }
    }
    report(7, "Frobenius pairing/counit/unit", pass, worst, 1.0, t.elapsed());
}

// 8. triangle identities
void criterion_8() {
    Timer t;
    TriangleSettings ts;
    ts.fourier = default_fourier();
    ts.n_samples = 20;
    const PlaneFunction h = bump(Side::upper, 0);
    const PlaneFunction k = bump(Side::lower, 1);
    const LeviFunction f = LeviFunction::gaussian(+1, 0.1, 0.45);
    const ResidualReport first = verify_triangle_first(h, f, ts);
    const ResidualReport second = verify_triangle_second(k, f, ts);
    double worst = std::max(first.residual_sup / first.scale, second.residual_sup / second.scale);

    // narrow approximate-identity inputs, bound by the bump width
    const double width = 0.02;
    const LeviFunction fn = LeviFunction::gaussian(+1, 0.0, width);
    LeviQuadrature lq;
    lq.n_s = 64;
    lq.s_extent = 10.0 * width;
    const PlaneFunction hf = act_L_module(h, fn, lq);
    double sup = 0.0, dsup = 0.0;
    for (const Vec2 v : sample_annulus(20, 0.6, 1.8, 55)) {
        sup = std::max(sup, std::abs(hf(v) - h(v)));
        const double eps = 1e-3;
        dsup = std::max(dsup, std::abs(std::exp(-eps) * h(std::exp(-eps) * v) -
                                       std::exp(eps) * h(std::exp(eps) * v)) /
                                  (2.0 * eps));
    }
    const double narrow_ratio = sup / (1.5 * width * dsup + width * width);
    const double sec = t.elapsed();
    const bool pass = worst <= 1e-2 && narrow_ratio <= 1.0 && sec < 600.0;
    report(8, "second-adjoint triangle identities", pass, std::max(worst / 1e-2, narrow_ratio),
           1.0, sec);
}

// 9. wave-packet regularity
void criterion_9() {
    Timer t;
    const MuGrid grid = MuGrid::with_cutoff(0.05, 20.0);
    const int jmax = 8;
    Rng rng(2002);
    const SpectralFunction E1 = verify_even_data(Side::lower, grid, jmax, rng, 0);
    const SpectralFunction E2 = verify_even_data(Side::upper, grid, jmax, rng, 0);
    double ortho = 0.0;
    const SpectralFunction S = symmetric_part(E1);
    const SpectralFunction A = antisymmetric_part(E2);
    for (int i = 0; i < 5; ++i) {
        ortho = std::max(ortho, std::abs(wave_packet_B(S, A, rng.group(1.2), false)));
    }
    // decay for admissible even data (order-one vanishing) and for odd data
    auto ratio_bounded = [&](const SpectralFunction& H1, const SpectralFunction& H2) {
        double head = 0.0, tail = 0.0;
        const int nt = 17;
        for (int i = 0; i < nt; ++i) {
            const double tt = 8.0 * i / (nt - 1);
            const GroupElement at = GroupElement::diag_exp(tt);
            const double r = std::abs(wave_packet_B(H1, H2, at, true)) * std::pow(1.0 + tt, 2) /
                             xi_refined(at);
            if (4 * i >= 3 * nt) {
                tail = std::max(tail, r);
            } else {
                head = std::max(head, r);
            }
        }
        return tail <= 1.25 * head + 1e-12;
    };
    const SpectralFunction V1 = verify_even_data(Side::lower, grid, jmax, rng, 1);
    const bool even_ok = ratio_bounded(V1, E2);
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
    const bool odd_ok = ratio_bounded(O1, O2);
    const bool pass = ortho <= 1e-6 && even_ok && odd_ok;
    report(9, "wave-packet regularity", pass, ortho, 1e-6, t.elapsed());
}

// 10. determinism of the full verification report
void criterion_10() {
    Timer t;
    SuiteConfig cfg;
    cfg.seed = 42;
    cfg.coarse = true;
    auto render = [&]() {
        nlohmann::json suites = nlohmann::json::array();
        bool pass = true;
        for (const std::string& name : all_suite_names()) {
            const SuiteResult r = run_suite(name, cfg);
            pass = pass && r.pass();
            suites.push_back(suite_to_json(r));
        }
        nlohmann::json report{{"config", cfg.to_json()},
                              {"pass", pass},
                              {"seed", cfg.seed},
                              {"suites", suites}};
        return report.dump(2);
    };
    const std::string first = render();
    const std::string second = render();
    const bool pass = first == second && first.find("\"pass\": true") != std::string::npos;
    report(10, "byte-identical verification reports", pass, first == second ? 0.0 : 1.0, 0.5,
           t.elapsed());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
