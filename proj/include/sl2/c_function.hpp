#pragma once

// The scalars by which the intertwining integrals act on K-isotypic
// components of the principal series:
//
//   c(+-, j, mu) = sqrt(pi) Gamma(-+ i mu / 2) Gamma((1 -+ i mu)/2)
//                  / [ Gamma((1 -+ i mu + j)/2) Gamma((1 -+ i mu - j)/2) ],
//
// symmetric under j -> -j.  Writing zeta = -+ i mu / 2 and reducing the
// Gamma quotients with the functional equation gives pole-free forms on the
// real axis:
//
//   even j = 2m:  sqrt(pi) (Gamma(zeta) / Gamma(zeta + 1/2))
//                 * prod_{i=1..m} (zeta + 1/2 - i) / (zeta - 1/2 + i)
//   odd  j = 2m+1: sqrt(pi) (Gamma(zeta + 1/2) / Gamma(zeta + 1))
//                 * prod_{i=1..m} (zeta - i) / (zeta + i)
//
// so the only singularity on the real mu-line is the simple pole of Gamma(zeta)
// at mu = 0 for even j, where mu * c(mu) -> 2i * prod (1/2 - i)/(i - 1/2)...
// evaluated by residue().  The reciprocal 1/c extends by 0 through that point.
// For real mu:  conj(c(-,j,mu)) = c(+,j,mu), and |c| has no real zeros.

#include <complex>
#include <vector>

#include "sl2/gamma.hpp"
#include "sl2/spectral_function.hpp"

namespace sl2 {

struct CPole : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool c_function_has_pole(int j, cxd mu, double tol = 1e-14) {
    return j % 2 == 0 && std::abs(mu) < tol;
}

inline cxd c_function(Side side, int j, cxd mu) {
    const cxd i_unit(0.0, 1.0);
    const cxd zeta = (side == Side::upper ? -1.0 : 1.0) * i_unit * mu / 2.0;
    const int aj = std::abs(j);
    const double sqrt_pi = std::sqrt(pi);
    if (aj % 2 == 0) {
        if (c_function_has_pole(j, mu)) throw CPole("c_function: pole at mu = 0 for even j");
        const int m = aj / 2;
        cxd ratio = sqrt_pi * gamma_complex(zeta) / gamma_complex(zeta + 0.5);
        for (int i = 1; i <= m; ++i) {
            ratio *= (zeta + 0.5 - static_cast<double>(i)) / (zeta - 0.5 + static_cast<double>(i));
        }
        return ratio;
    }
    const int m = (aj - 1) / 2;
    cxd ratio = sqrt_pi * gamma_complex(zeta + 0.5) / gamma_complex(zeta + 1.0);
    for (int i = 1; i <= m; ++i) {
        ratio *= (zeta - static_cast<double>(i)) / (zeta + static_cast<double>(i));
    }
    return ratio;
}

// lim_{mu->0} mu * c(side, even j, mu).
inline cxd c_function_residue(Side side, int j) {
    if (std::abs(j) % 2 != 0) return 0.0;
    const int m = std::abs(j) / 2;
    // mu Gamma(zeta) -> -+ 2 i Gamma(1) at zeta -> 0, and Gamma(1/2) cancels sqrt(pi).
    cxd res = side == Side::upper ? cxd(0.0, 2.0) : cxd(0.0, -2.0);
    for (int i = 1; i <= m; ++i) {
        res *= (0.5 - static_cast<double>(i)) / (-0.5 + static_cast<double>(i));
    }
    return res;
}

// 1/c with the value 0 assigned at the even-j pole.
inline cxd c_function_reciprocal(Side side, int j, double mu) {
    if (c_function_has_pole(j, mu)) return 0.0;
    return 1.0 / c_function(side, j, cxd(mu, 0.0));
}

// Tabulated c-values on a mu-grid with pole annotations; exportable as CSV.
struct CFunctionTable {
    Side side = Side::upper;
    int jmax = 8;
    MuGrid grid;
    // values[j + jmax][mu index]; pole entries hold mu * c residue-free limit 0x0
    std::vector<std::vector<cxd>> values;
    std::vector<std::vector<bool>> pole;

    static CFunctionTable build(Side side, int jmax, const MuGrid& grid) {
        CFunctionTable t;
        t.side = side;
        t.jmax = jmax;
        t.grid = grid;
        t.values.assign(2 * jmax + 1, std::vector<cxd>(grid.size()));
        t.pole.assign(2 * jmax + 1, std::vector<bool>(grid.size(), false));
        for (int j = -jmax; j <= jmax; ++j) {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double mu = grid.mu(i);
                if (c_function_has_pole(j, mu)) {
                    t.pole[j + jmax][i] = true;
                    t.values[j + jmax][i] = 0.0;  // placeholder at the pole
                } else {
                    t.values[j + jmax][i] = c_function(side, j, mu);
                }
            }
        }
        return t;
    }

    cxd at(int j, std::size_t i) const { return values[j + jmax][i]; }
    bool is_pole(int j, std::size_t i) const { return pole[j + jmax][i]; }
};

// Plancherel density alpha(mu) = kappa / |c^{(j0)}(mu)|^2 with j0 = 0 (even)
// or 1 (odd) and kappa = 1.  The even density vanishes at mu = 0 (the
// c-function pole); the odd one is positive there.
enum class Parity { even, odd };

inline double plancherel_density(Parity parity, double mu) {
    const int j0 = parity == Parity::even ? 0 : 1;
    if (c_function_has_pole(j0, mu)) return 0.0;
    const cxd c = c_function(Side::upper, j0, mu);
    return 1.0 / std::norm(c);
}

}  // namespace sl2
