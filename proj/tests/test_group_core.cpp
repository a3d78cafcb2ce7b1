#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sl2/haar.hpp"
#include "sl2/quadrature.hpp"
#include "sl2/xi.hpp"

using namespace sl2;

namespace {

std::mt19937_64 eng(12345);

double unif(double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}

GroupElement random_g(double t_max = 1.5) {
    return GroupElement::rotation(unif(0, two_pi)) * GroupElement::diag_exp(unif(0, t_max)) *
           GroupElement::rotation(unif(0, two_pi));
}

double entry_dist(const GroupElement& a, const GroupElement& b) {
    return std::max({std::abs(a.a() - b.a()), std::abs(a.b() - b.b()), std::abs(a.c() - b.c()),
                     std::abs(a.d() - b.d())});
}

}  // namespace

TEST_CASE("group element construction") {
    CHECK_THROWS_AS(GroupElement(1.0, 0.0, 0.0, 2.0), std::invalid_argument);
    // near-unit determinants are renormalized
    const double eps = 1e-9;
    GroupElement g(1.0 + eps, 0.0, 0.0, 1.0);
    CHECK(std::abs(g.det() - 1.0) < 1e-14);
    CHECK(entry_dist(GroupElement::rotation(0.3).inverse(), GroupElement::rotation(-0.3)) <
          1e-15);
}

TEST_CASE("iwasawa factorization") {
    SUBCASE("identity") {
        const auto f = iwasawa(GroupElement::identity(), Side::upper);
        CHECK(entry_dist(f.k, GroupElement::identity()) < 1e-14);
        CHECK(entry_dist(f.a, GroupElement::identity()) < 1e-14);
        CHECK(entry_dist(f.n, GroupElement::identity()) < 1e-14);
    }
    SUBCASE("input already in k a n form") {
        const GroupElement g = GroupElement::diag_exp(1.0) * GroupElement::upper_unipotent(2.0);
        const auto f = iwasawa(g, Side::upper);
        CHECK(entry_dist(f.k, GroupElement::identity()) < 1e-12);
        CHECK(f.a.a() == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
        CHECK(f.n.b() == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("lower-side a-part of a(t) n(x)") {
        // the lower factorization of a n has a11 = (e^{-2t} + x^2 e^{2t})^{-1/2}
        for (auto [t, x] : {std::pair<double, double>{0.37, -1.9}, {1.1, 0.4}, {-0.6, 2.3}}) {
            const GroupElement an =
                GroupElement::diag_exp(t) * GroupElement::upper_unipotent(x);
            const auto low = iwasawa(an, Side::lower);
            const double s = std::exp(-2.0 * t) + x * x * std::exp(2.0 * t);
            CHECK(low.a.a() == doctest::Approx(std::pow(s, -0.5)).epsilon(1e-12));
            CHECK(low.a.a() * low.a.a() == doctest::Approx(1.0 / s).epsilon(1e-12));
        }
    }
    SUBCASE("matches the Gram-Schmidt oracle and reconstructs") {
        for (int i = 0; i < 200; ++i) {
            const GroupElement g = random_g();
            const auto f = iwasawa(g, Side::upper);
            const auto o = oracles::gram_schmidt_upper(g);
            CHECK(std::abs(f.a.a() - o.a11) < 1e-10);
            CHECK(std::abs(f.k.a() - o.k_cos) < 1e-10);
            CHECK(std::abs(f.k.c() - o.k_sin) < 1e-10);
            CHECK(std::abs(f.n.b() - o.n12) < 1e-9);
            CHECK(entry_dist(f.k * f.a * f.n, g) < 1e-10);
            const auto fl = iwasawa(g, Side::lower);
            CHECK(entry_dist(fl.k * fl.a * fl.n, g) < 1e-10);
            CHECK(fl.n.b() == 0.0);
        }
    }
}

TEST_CASE("cartan factorization") {
    SUBCASE("identity and diagonal") {
        CHECK(entry_dist(cartan(GroupElement::identity()).a, GroupElement::identity()) < 1e-12);
        const auto f = cartan(GroupElement(2.0, 0.0, 0.0, 0.5));
        CHECK(f.a.a() == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("a-part is the largest singular value; reconstruction; canonical window") {
        for (int i = 0; i < 200; ++i) {
            const GroupElement g = random_g(2.0);
            const auto f = cartan(g);
            CHECK(std::abs(f.a.a() - oracles::sigma_max_eigen(g)) < 1e-10);
            CHECK(entry_dist(f.k1 * f.a * f.k2, g) < 1e-9);
            CHECK(f.theta1 >= 0.0);
            CHECK(f.theta1 < pi);
            CHECK(f.a.a() >= 1.0);
        }
    }
}

TEST_CASE("modular characters") {
    CHECK(modular_delta(GroupElement(3.0, 0.0, 0.0, 1.0 / 3.0), Side::upper) ==
          doctest::Approx(9.0).epsilon(1e-14));
    for (double th : {0.1, 2.2, 4.0}) {
        CHECK(modular_delta(GroupElement::rotation(th), Side::upper) ==
              doctest::Approx(1.0).epsilon(1e-13));
    }
    for (int i = 0; i < 100; ++i) {
        const GroupElement g = random_g();
        const Vec2 c1 = g.col1();
        CHECK(modular_delta(g, Side::upper) ==
              doctest::Approx(c1.x * c1.x + c1.y * c1.y).epsilon(1e-12));
        const GroupElement a = GroupElement::diag_exp(unif(-2, 2));
        CHECK(modular_delta(a, Side::upper) * modular_delta(a, Side::lower) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("group norm") {
    CHECK(group_norm(GroupElement::identity()) == doctest::Approx(1.0));
    CHECK(group_norm(GroupElement(5.0, 0.0, 0.0, 0.2)) == doctest::Approx(5.0).epsilon(1e-13));
    for (int i = 0; i < 1000; ++i) {
        const GroupElement g = random_g(1.2), h = random_g(1.2);
        CHECK(group_norm(g * h) <= group_norm(g) * group_norm(h) * (1.0 + 1e-12));
        CHECK(std::abs(group_norm(g) - group_norm(g.inverse())) < 1e-11);
    }
}

TEST_CASE("xi function") {
    QuadratureScheme s;
    SUBCASE("value at the identity") {
        s.k_nodes = 64;
        CHECK(std::abs(xi(GroupElement::identity(), s).value - 1.0) < 1e-14);
    }
    SUBCASE("K-bi-invariance") {
        const GroupElement g = random_g(1.5);
        s.k_nodes = xi_nodes_for(g);
        const double base = xi(g, s).value;
        for (int i = 0; i < 5; ++i) {
            const GroupElement k1 = GroupElement::rotation(unif(0, two_pi));
            const GroupElement k2 = GroupElement::rotation(unif(0, two_pi));
            CHECK(std::abs(xi(k1 * g * k2, s).value - base) < 1e-9);
        }
    }
    SUBCASE("diagonal values against the adaptive oracle") {
        // frozen reference values computed with the AGM oracle
        const struct {
            double t, value;
        } ref[] = {{0.5, 0.940862159249350},
                   {1.0, 0.795651695605975},
                   {2.0, 0.464099294049606},
                   {4.0, 0.109445113545548}};
        for (const auto& r : ref) {
            s.k_nodes = xi_nodes_for(GroupElement::diag_exp(r.t));
            const double val = xi(GroupElement::diag_exp(r.t), s).value;
            CHECK(std::abs(val - r.value) < 1e-8);
            CHECK(std::abs(oracles::xi_diagonal_agm(r.t) - r.value) < 1e-12);
            // independent adaptive quadrature of the defining integral
            const double t = r.t;
            const double adaptive =
                oracles::adaptive_quadrature(
                    [t](double th) {
                        const double c = std::cos(th), sn = std::sin(th);
                        return 1.0 /
                               std::sqrt(std::exp(2 * t) * c * c + std::exp(-2 * t) * sn * sn);
                    },
                    0.0, two_pi, 1e-13) /
                two_pi;
            CHECK(std::abs(val - adaptive) < 1e-8);
        }
    }
    SUBCASE("underresolved flag fires on a coarse scheme") {
        s.k_nodes = 64;
        const XiResult r = xi(GroupElement::diag_exp(4.0), s);
        CHECK(r.underresolved);
        s.k_nodes = xi_nodes_for(GroupElement::diag_exp(4.0));
        CHECK_FALSE(xi(GroupElement::diag_exp(4.0), s).underresolved);
    }
    SUBCASE("spherical identity") {
        const GroupElement g1 = random_g(1.0), g2 = random_g(1.0);
        QuadratureScheme xs;
        xs.k_nodes = 2 * xi_nodes_for(g1 * g2);
        const double lhs = xi(g1, xs).value * xi(g2, xs).value;
        const double rhs = periodic_trapezoid(1024).integrate([&](double th) {
                               return xi(g1 * GroupElement::rotation(th) * g2, xs).value;
                           }) /
                           two_pi;
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("haar integration") {
    auto kan_bump = [](double th0, double t0, double x0) {
        return GFunction([=](const GroupElement& g) -> cxd {
            const auto f = iwasawa(g, Side::upper);
            return std::exp(55.0 * (std::cos(f.theta - th0) - 1.0) -
                            ((f.t - t0) * (f.t - t0) + (f.x - x0) * (f.x - x0)) / 0.16);
        });
    };
    QuadratureScheme sg;
    sg.k_nodes = 320;
    sg.t_kind = RuleKind::gauss_legendre;
    sg.t_nodes = 121;
    sg.t_radius = 3.5;
    sg.x_kind = RuleKind::sinh_map;
    sg.x_nodes = 321;
    sg.x_radius = 4.0e5;

    SUBCASE("zero integrand") {
        CHECK(std::abs(integrate_G([](const GroupElement&) { return cxd(0.0, 0.0); }, sg).value) ==
              0.0);
        CHECK(std::abs(integrate_NLN([](const GroupElement&) { return cxd(0.0, 0.0); }, sg).value) ==
              0.0);
    }
    SUBCASE("translation invariance") {
        // left translation directly; right translation through the Iwasawa
        // split g0 = u0 k0: upper-triangular right factors are exact shifts
        // of the K A N chart, rotations are exact shifts of the polar chart,
        // and the two charts agree on the base integral.
        const GFunction phi = kan_bump(0.3, 0.1, -0.2);
        const cxd base = integrate_G(phi, sg).value;
        const GroupElement g0 = GroupElement::rotation(0.4) * GroupElement::diag_exp(0.3) *
                                GroupElement::upper_unipotent(0.2);
        const cxd left = integrate_G([&](const GroupElement& g) { return phi(g0 * g); }, sg).value;
        CHECK(std::abs(left - base) / std::abs(base) < 1e-6);
        const GroupElement u0 = GroupElement::diag_exp(0.3) * GroupElement::upper_unipotent(0.2);
        const cxd right_u =
            integrate_G([&](const GroupElement& g) { return phi(g * u0); }, sg).value;
        CHECK(std::abs(right_u - base) / std::abs(base) < 1e-6);
        CartanScheme cs;
        const cxd kak = integrate_G_cartan(phi, cs).value;
        CHECK(std::abs(kak - base) / std::abs(base) < 1e-6);
        CartanScheme cs_rot = cs;
        cs_rot.k2_feature_offset = -0.4;
        const cxd right_k = integrate_G_cartan(
            [&](const GroupElement& g) { return phi(g * GroupElement::rotation(0.4)); },
            cs_rot).value;
        CHECK(std::abs(right_k - kak) / std::abs(base) < 1e-6);
    }
    SUBCASE("open-cell factorization formula") {
        QuadratureScheme sn = sg;
        sn.t_nodes = 201;
        sn.t_radius = 8.0;
        sn.x_kind = RuleKind::tan_map;
        sn.x_nodes = 501;
        sn.x_radius = 15.0;
        for (auto [th0, t0, x0] : {std::tuple<double, double, double>{0.0, 0.0, 0.0},
                                   {0.5, 0.25, -0.5},
                                   {pi, -0.3, 0.7}}) {
            const GFunction phi = kan_bump(th0, t0, x0);
            const cxd ig = integrate_G(phi, sg).value;
            const cxd in = integrate_NLN(phi, sn).value;
            CHECK(std::abs(ig - in) / std::abs(ig) < 1e-6);
        }
    }
    SUBCASE("functions supported off the open cell contribute nothing to the difference") {
        // supported where |g11| < delta, a measure-zero set in the limit
        const GFunction edge = [](const GroupElement& g) -> cxd {
            const double a = g.a();
            return std::abs(a) < 1e-4 ? 1.0 : 0.0;
        };
        QuadratureScheme sn = sg;
        sn.x_kind = RuleKind::tan_map;
        CHECK(std::abs(integrate_NLN(edge, sn).value) < 1e-6);
    }
    SUBCASE("truncation warning") {
        QuadratureScheme tight = sg;
        tight.t_radius = 0.5;
        tight.x_radius = 0.5;
        tight.t_nodes = 33;
        tight.x_nodes = 33;
        const GFunction wide = [](const GroupElement& g) -> cxd {
            return std::exp(-0.1 * g.frobenius_sq());
        };
        CHECK(integrate_G(wide, tight).truncation_warning);
        CHECK_FALSE(integrate_G(kan_bump(0.0, 0.0, 0.0), sg).truncation_warning);
    }
}

TEST_CASE("square integrability proxy") {
    std::vector<double> values;
    for (double radius : {8.0, 16.0, 24.0, 32.0}) {
        values.push_back(integrate_cartan_radial(
            [&](double t) {
                const double x = xi_refined(GroupElement::diag_exp(t));
                return x * x * std::pow(1.0 + t, -4);
            },
            radius, 400));
    }
    // increasing, with shrinking increments: the truncated integrals approach
    // a finite limit
    for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] >= values[i - 1]);
    const double inc1 = values[1] - values[0];
    const double inc2 = values[2] - values[1];
    const double inc3 = values[3] - values[2];
    CHECK(inc2 < inc1);
    CHECK(inc3 < inc2);
    CHECK(inc3 / inc2 < 0.7);
}

TEST_CASE("quadrature scheme validation") {
    QuadratureScheme s;
    s.t_radius = -1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    // positive weights on every rule
    for (const Rule1D& r : {gauss_legendre(32, -2.0, 3.0), tanh_sinh(65, -1.0, 1.0),
                            periodic_trapezoid(16), tan_map(45, 2.0)}) {
        for (double w : r.weights) CHECK(w > 0.0);
    }
    // spot value: integral of cos over a period vanishes, of cos^2 is pi
    const Rule1D r = periodic_trapezoid(64);
    CHECK(std::abs(r.integrate([](double th) { return std::cos(th); })) < 1e-14);
    CHECK(r.integrate([](double th) { return std::cos(th) * std::cos(th); }) ==
          doctest::Approx(pi).epsilon(1e-13));
}
