#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sl2/intertwiner.hpp"

using namespace sl2;

namespace {
std::mt19937_64 eng(31415);
double unif(double a, double b) {
    return a + (b - a) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
}
Vec2 rand_pt(double r0, double r1) {
    return polar(unif(r0, r1), unif(0.0, two_pi));
}
}  // namespace

TEST_CASE("complex gamma") {
    SUBCASE("classical values") {
        CHECK(std::abs(gamma_complex(1.0) - 1.0) < 1e-14);
        CHECK(std::abs(gamma_complex(0.5) - std::sqrt(pi)) < 1e-14);
        CHECK(std::abs(gamma_complex(5.0) - 24.0) < 1e-12);
    }
    SUBCASE("functional equation across the strip") {
        double worst = 0.0;
        for (int i = 0; i < 400; ++i) {
            const cxd z(unif(-10.0, 10.0), unif(-30.0, 30.0));
            if (is_nonpositive_integer(z, 1e-3) || is_nonpositive_integer(z + 1.0, 1e-3)) continue;
            const cxd lhs = gamma_complex(z + 1.0);
            worst = std::max(worst, std::abs(lhs - z * gamma_complex(z)) / std::abs(lhs));
        }
        CHECK(worst < 1e-12);
    }
    SUBCASE("modulus identity on the imaginary axis") {
        for (double y : {0.5, 1.0, 2.0}) {
            const double lhs = std::norm(gamma_complex(cxd(0.0, y)));
            const double rhs = pi / (y * std::sinh(pi * y));
            CHECK(std::abs(lhs - rhs) / rhs < 1e-13);
        }
    }
    SUBCASE("poles are rejected") {
        CHECK_THROWS_AS(gamma_complex(0.0), std::domain_error);
        CHECK_THROWS_AS(gamma_complex(-3.0), std::domain_error);
    }
}

TEST_CASE("c-function values") {
    SUBCASE("c+(1)(0) = pi") {
        CHECK(std::abs(c_function(Side::upper, 1, cxd(0.0, 0.0)) - pi) < 1e-12);
    }
    SUBCASE("pole structure at mu = 0") {
        for (double mu : {0.01, 0.005}) {
            const cxd v = mu * c_function(Side::upper, 0, cxd(mu, 0.0));
            CHECK(std::abs(v - cxd(0.0, 2.0)) <= 2.0 * mu);
        }
        CHECK_THROWS_AS(c_function(Side::upper, 0, cxd(0.0, 0.0)), CPole);
        CHECK(std::abs(c_function_residue(Side::upper, 0) - cxd(0.0, 2.0)) < 1e-14);
    }
    SUBCASE("conjugation symmetry at a spot and on a grid") {
        CHECK(std::abs(std::conj(c_function(Side::lower, 3, cxd(1.7, 0.0))) -
                       c_function(Side::upper, 3, cxd(1.7, 0.0))) < 1e-13);
        double worst = 0.0;
        for (int j = 0; j <= 8; ++j) {
            for (double mu = -10.0; mu <= 10.0 + 1e-9; mu += 0.25) {
                if (c_function_has_pole(j, mu)) continue;
                worst = std::max(worst, std::abs(std::conj(c_function(Side::lower, j, mu)) -
                                                 c_function(Side::upper, j, mu)));
            }
        }
        CHECK(worst < 1e-10);
    }
    SUBCASE("agreement with the unreduced Gamma quotient") {
        double worst = 0.0;
        for (int j = 0; j <= 8; ++j) {
            for (double mu = 0.25; mu <= 10.0; mu += 0.25) {
                const cxd a = c_function(Side::upper, j, mu);
                worst = std::max(worst, std::abs(a - oracles::c_raw(Side::upper, j, mu)) /
                                            std::abs(a));
            }
        }
        CHECK(worst < 1e-12);
    }
    SUBCASE("symmetric in j, no real zeros") {
        for (int j : {1, 2, 5, 8}) {
            for (double mu : {0.3, 2.0, 7.7}) {
                CHECK(std::abs(c_function(Side::upper, j, mu) -
                               c_function(Side::upper, -j, mu)) < 1e-13);
                CHECK(std::abs(c_function(Side::upper, j, mu)) > 1e-3);
            }
        }
    }
    SUBCASE("table construction and pole flags") {
        const CFunctionTable t =
            CFunctionTable::build(Side::upper, 4, MuGrid::with_cutoff(0.5, 2.0));
        CHECK(t.is_pole(0, t.grid.zero_index()));
        CHECK(t.is_pole(2, t.grid.zero_index()));
        CHECK_FALSE(t.is_pole(1, t.grid.zero_index()));
        CHECK_FALSE(t.is_pole(0, 0));
        CHECK(std::abs(t.at(1, t.grid.zero_index()) - pi) < 1e-12);
    }
}

TEST_CASE("plancherel density") {
    CHECK(plancherel_density(Parity::even, 0.0) == 0.0);
    CHECK(std::abs(plancherel_density(Parity::odd, 0.0) - 1.0 / (pi * pi)) < 1e-13);
    for (double mu : {0.4, 1.3, 6.0}) {
        // closed forms through the Gamma modulus identities
        CHECK(std::abs(plancherel_density(Parity::even, mu) -
                       mu * std::tanh(pi * mu / 2.0) / (2.0 * pi)) < 1e-12);
        CHECK(std::abs(plancherel_density(Parity::odd, mu) -
                       mu / (2.0 * pi * std::tanh(pi * mu / 2.0))) < 1e-12);
        for (Parity p : {Parity::even, Parity::odd}) {
            CHECK(plancherel_density(p, mu) == plancherel_density(p, -mu));
        }
    }
}

TEST_CASE("numeric intertwining integral") {
    SUBCASE("matches multiplication by c on K-type atoms") {
        for (const cxd mu : {cxd(1.0, 0.5), cxd(2.0, 0.7), cxd(1.0, 1.0)}) {
            for (int j : {0, 1, 2, 3}) {
                const PlaneFunction lo = PlaneFunction::homogeneous_atom(Side::lower, mu, j);
                const PlaneFunction up = PlaneFunction::homogeneous_atom(Side::upper, mu, j);
                for (int i = 0; i < 3; ++i) {
                    const Vec2 x = rand_pt(0.5, 2.0);
                    const cxd num = intertwine_J_numeric(Side::upper, lo, x).value;
                    const cxd expect = c_function(Side::upper, j, mu) * up(x);
                    CHECK(std::abs(num - expect) / std::abs(expect) < 1e-4);
                }
                const cxd mum = std::conj(mu);
                const PlaneFunction up2 = PlaneFunction::homogeneous_atom(Side::upper, mum, j);
                const PlaneFunction lo2 = PlaneFunction::homogeneous_atom(Side::lower, mum, j);
                const Vec2 x = rand_pt(0.5, 2.0);
                const cxd num = intertwine_J_numeric(Side::lower, up2, x).value;
                const cxd expect = c_function(Side::lower, j, mum) * lo2(x);
                CHECK(std::abs(num - expect) / std::abs(expect) < 1e-4);
            }
        }
    }
    SUBCASE("upper-side calibration atom") {
        // the (j = 0, mu = 1 + i) atom pins the orientation of the dual vector
        const cxd mu(1.0, 1.0);
        const PlaneFunction lo = PlaneFunction::homogeneous_atom(Side::lower, mu, 0);
        const cxd num = intertwine_J_numeric(Side::upper, lo, {1.0, 0.0}).value;
        CHECK(std::abs(num - c_function(Side::upper, 0, mu)) /
                  std::abs(c_function(Side::upper, 0, mu)) <
              1e-6);
    }
    SUBCASE("adaptive line-integral oracle agrees") {
        const cxd mu(1.0, 0.8);
        const PlaneFunction lo = PlaneFunction::homogeneous_atom(Side::lower, mu, 2);
        const Vec2 x{1.3, -0.4};
        const cxd fast = intertwine_J_numeric(Side::upper, lo, x).value;
        // oracle: adaptive Simpson on the sinh-substituted parametrization
        const Vec2 w = line_dual_vector(x, Side::upper);
        const double vn = x.norm();
        auto integrand_re = [&](double tau) {
            const double s = std::sinh(tau) / (vn * vn);
            return (lo(w + s * x) * std::cosh(tau) / (vn * vn)).real();
        };
        auto integrand_im = [&](double tau) {
            const double s = std::sinh(tau) / (vn * vn);
            return (lo(w + s * x) * std::cosh(tau) / (vn * vn)).imag();
        };
        const cxd slow(oracles::adaptive_quadrature(integrand_re, -42.0, 42.0, 1e-11),
                       oracles::adaptive_quadrature(integrand_im, -42.0, 42.0, 1e-11));
        CHECK(std::abs(fast - slow) < 1e-8 * std::abs(slow) + 1e-12);
    }
    SUBCASE("radial functions map to radial functions") {
        const PlaneFunction lo = PlaneFunction::homogeneous_atom(Side::lower, cxd(1.0, 0.8), 0);
        const double r = 1.4;
        const cxd base = intertwine_J_numeric(Side::upper, lo, polar(r, 0.0)).value;
        for (double th : {0.9, 2.5, 5.0}) {
            CHECK(std::abs(intertwine_J_numeric(Side::upper, lo, polar(r, th)).value - base) <
                  1e-10 * std::abs(base));
        }
    }
    SUBCASE("slow-decay flag") {
        // an atom at real mu decays like |s|^{-1} along the line: flagged
        const PlaneFunction marginal =
            PlaneFunction::homogeneous_atom(Side::lower, cxd(1.0, 0.0), 0);
        CHECK(intertwine_J_numeric(Side::upper, marginal, {1.0, 0.0}).slow_decay);
        const PlaneFunction good = PlaneFunction::homogeneous_atom(Side::lower, cxd(1.0, 1.0), 0);
        CHECK_FALSE(intertwine_J_numeric(Side::upper, good, {1.0, 0.0}).slow_decay);
    }
    SUBCASE("rejects same-side input") {
        const PlaneFunction up = PlaneFunction::homogeneous_atom(Side::upper, cxd(1.0, 1.0), 0);
        CHECK_THROWS_AS(intertwine_J_numeric(Side::upper, up, {1.0, 0.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("spectral multipliers") {
    const MuGrid grid = MuGrid::with_cutoff(0.05, 20.0);
    SpectralFunction H(Side::upper, grid, 4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double mu = grid.mu(i);
        for (int j = -4; j <= 4; ++j) H.slice(i)[j] = std::exp(-0.4 * mu * mu) * cxd(1.0, 0.1 * j);
    }
    SUBCASE("pointwise division oracle") {
        const SpectralFunction Hc = apply_c_inverse(H, Side::upper);
        for (std::size_t i : {std::size_t(100), grid.zero_index() + 17}) {
            const double mu = grid.mu(i);
            for (int j = -4; j <= 4; ++j) {
                const cxd expect = H.slice(i)[j] / oracles::c_raw(Side::upper, j, mu);
                CHECK(std::abs(Hc.slice(i)[j] - expect) < 1e-12);
            }
        }
    }
    SUBCASE("even components vanish at mu = 0") {
        const SpectralFunction Hc = apply_c_inverse(H, Side::upper);
        for (int j : {-4, -2, 0, 2, 4}) CHECK(std::abs(Hc.slice(grid.zero_index())[j]) == 0.0);
        for (int j : {-3, -1, 1, 3}) CHECK(std::abs(Hc.slice(grid.zero_index())[j]) > 0.0);
    }
    SUBCASE("multiplier round trip off the pole node") {
        const SpectralFunction round = apply_c_inverse(apply_c(H, Side::upper), Side::upper);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i == grid.zero_index()) continue;
            for (int j = -4; j <= 4; ++j)
                worst = std::max(worst, std::abs(round.slice(i)[j] - H.slice(i)[j]));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("inverse intertwiner") {
    FourierSettings fs;
    fs.jmax = 8;
    fs.mu = MuGrid::with_cutoff(0.05, 20.0);
    KSeries a1(3);
    a1[0] = 1.0;
    a1[1] = cxd(0.2, 0.3);
    a1[-2] = 0.4;
    const PlaneFunction h = PlaneFunction::radial_profile_times_kseries(Side::upper, 0.1, 0.7, a1);
    SUBCASE("zero maps to zero") {
        const PlaneFunction z(Side::upper, [](Vec2) { return cxd(0.0, 0.0); }, {});
        const PlaneFunction iz = intertwine_I(Side::upper, z, fs);
        CHECK(std::abs(iz({1.0, 0.3})) < 1e-14);
    }
    SUBCASE("J I = id on Schwartz bumps, both sides") {
        KSeries a2(3);
        a2[0] = cxd(0.5, 0.1);
        a2[-2] = 0.4;
        const PlaneFunction k =
            PlaneFunction::radial_profile_times_kseries(Side::lower, -0.2, 0.6, a2);
        const PlaneFunction ih = intertwine_I(Side::upper, h, fs);
        const PlaneFunction ik = intertwine_I(Side::lower, k, fs);
        CHECK(ih.side() == Side::lower);
        CHECK(ik.side() == Side::upper);
        double num = 0.0, den = 0.0, num2 = 0.0, den2 = 0.0;
        for (int i = 0; i < 30; ++i) {
            const Vec2 v = rand_pt(0.5, 2.0);
            num += std::norm(intertwine_J_numeric(Side::upper, ih, v).value - h(v));
            den += std::norm(h(v));
            num2 += std::norm(intertwine_J_numeric(Side::lower, ik, v).value - k(v));
            den2 += std::norm(k(v));
        }
        CHECK(std::sqrt(num / den) < 1e-3);
        CHECK(std::sqrt(num2 / den2) < 1e-3);
    }
    SUBCASE("adjointness") {
        KSeries a2(3);
        a2[0] = cxd(0.7, -0.2);
        a2[2] = 0.3;
        const PlaneFunction k =
            PlaneFunction::radial_profile_times_kseries(Side::lower, -0.15, 0.65, a2);
        const PlaneQuadrature pq{240, 12.0, 80, RuleKind::gauss_legendre};
        const cxd lhs = l2_inner(k, intertwine_I(Side::upper, h, fs), pq);
        const cxd rhs = l2_inner(intertwine_I(Side::lower, k, fs), h, pq);
        CHECK(std::abs(lhs - rhs) <= 1e-3 * l2_norm(k, pq) * l2_norm(h, pq));
    }
    SUBCASE("growth bound of J along rays") {
        const PlaneFunction ih = intertwine_I(Side::upper, h, fs);
        const double c_h = 4.0 * hc_seminorm(ih, 2).value;
        for (int i = 0; i < 12; ++i) {
            const Vec2 v = rand_pt(0.3, 3.0);
            const cxd jv = intertwine_J_numeric(Side::upper, ih, v).value;
            // |J h|(x) <= C delta+(x)^{-1/2} = C / r
            CHECK(std::abs(jv) * v.norm() <= c_h);
        }
    }
}

TEST_CASE("normalized involution") {
    const MuGrid grid = MuGrid::with_cutoff(0.05, 20.0);
    SpectralFunction H(Side::upper, grid, 6);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double mu = grid.mu(i);
        for (int j = -6; j <= 6; j += 2) {
            H.slice(i)[j] =
                std::exp(-0.3 * (mu - 0.4 * j) * (mu - 0.4 * j)) * cxd(1.0 / (1 + j * j), 0.1 * j);
        }
    }
    SUBCASE("involution, unitarity, normalization") {
        const SpectralFunction WH = normalized_W(H);
        const SpectralFunction WWH = normalized_W(WH);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (int j = -6; j <= 6; ++j)
                worst = std::max(worst, std::abs(WWH.slice(i)[j] - H.slice(i)[j]));
        }
        CHECK(worst < 1e-12);
        CHECK(std::abs(WH.norm_sq() - H.norm_sq()) / H.norm_sq() < 1e-13);
        for (double mu : {-2.0, 0.0, 0.7, 11.0}) {
            CHECK(std::abs(w_even_scalar(0, mu) - 1.0) < 1e-14);
            for (int j : {2, 4, 6}) {
                CHECK(std::abs(std::abs(w_even_scalar(j, mu)) - 1.0) < 1e-13);
            }
        }
        // W(0) is the identity
        for (int j : {2, 4, 6}) CHECK(std::abs(w_even_scalar(j, 0.0) - 1.0) < 1e-13);
        // explicit rational value at |j| = 2
        for (double mu : {0.3, 1.9}) {
            const cxd expect = cxd(1.0, mu) / cxd(1.0, -mu);
            CHECK(std::abs(w_even_scalar(2, mu) - expect) < 1e-13);
        }
    }
    SUBCASE("projectors") {
        const SpectralFunction S = symmetric_part(H), A = antisymmetric_part(H);
        const SpectralFunction WS = normalized_W(S), WA = normalized_W(A);
        const SpectralFunction S2 = symmetric_part(S);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); i += 7) {
            for (int j = -6; j <= 6; ++j) {
                worst = std::max({worst, std::abs(S.slice(i)[j] + A.slice(i)[j] - H.slice(i)[j]),
                                  std::abs(WS.slice(i)[j] - S.slice(i)[j]),
                                  std::abs(WA.slice(i)[j] + A.slice(i)[j]),
                                  std::abs(S2.slice(i)[j] - S.slice(i)[j])});
            }
        }
        CHECK(worst < 1e-12);
        // W-fixed input has no antisymmetric part
        const SpectralFunction AS = antisymmetric_part(S);
        CHECK(AS.norm_sq() < 1e-24);
    }
    SUBCASE("odd-parity scalar family is a smooth phase equal to one at zero") {
        CHECK(std::abs(w_odd_scalar(1, 0.0) - 1.0) < 1e-13);
        for (double mu : {0.4, 3.0}) {
            for (int j : {1, 3, 5}) {
                CHECK(std::abs(std::abs(w_odd_scalar(j, mu)) - 1.0) < 1e-13);
            }
        }
    }
    SUBCASE("rejects odd-parity input") {
        SpectralFunction O(Side::upper, grid, 3);
        for (std::size_t i = 0; i < grid.size(); ++i) O.slice(i)[1] = 1.0;
        CHECK_THROWS_AS(normalized_W(O), std::invalid_argument);
    }
}
