#pragma once

// Functions on the spectral side: a uniform mu-grid, symmetric about 0, with
// one K-series per node.  This is the discretization of the Schwartz space
// S(a*, S(K)); the spectral parameter is identified with a real number by
// evaluation on diag(1, -1).

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sl2/k_series.hpp"

namespace sl2 {

struct MuGrid {
    double dmu = 0.05;
    int half = 400;  // nodes at i*dmu for i in [-half, half]

    static MuGrid with_cutoff(double dmu, double mu_max) {
        MuGrid g;
        g.dmu = dmu;
        g.half = static_cast<int>(std::round(mu_max / dmu));
        if (g.half < 1) throw std::invalid_argument("MuGrid: empty grid");
        return g;
    }

    std::size_t size() const { return static_cast<std::size_t>(2 * half + 1); }
    double mu(std::size_t i) const { return dmu * (static_cast<int>(i) - half); }
    double mu_max() const { return dmu * half; }
    std::size_t flip(std::size_t i) const { return size() - 1 - i; }  // mu -> -mu
    std::size_t zero_index() const { return static_cast<std::size_t>(half); }

    bool operator==(const MuGrid& o) const { return dmu == o.dmu && half == o.half; }
};

class SpectralFunction {
  public:
    SpectralFunction() = default;
    SpectralFunction(Side side, const MuGrid& grid, int jmax)
        : side_(side), grid_(grid), slices_(grid.size(), KSeries(jmax)) {}

    Side side() const { return side_; }
    const MuGrid& grid() const { return grid_; }
    int jmax() const { return slices_.empty() ? 0 : slices_[0].jmax(); }

    KSeries& slice(std::size_t i) { return slices_[i]; }
    const KSeries& slice(std::size_t i) const { return slices_[i]; }

    // trapezoid-rule L2 norm squared: sum_j integral |c_j(mu)|^2 dmu
    double norm_sq() const {
        double acc = 0.0;
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            const double w = (i == 0 || i + 1 == grid_.size()) ? 0.5 : 1.0;
            acc += w * slices_[i].norm_sq();
        }
        return acc * grid_.dmu;
    }

    SpectralFunction map_slices(const std::function<KSeries(double, const KSeries&)>& f) const {
        SpectralFunction out(side_, grid_, jmax());
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            out.slices_[i] = f(grid_.mu(i), slices_[i]);
        }
        return out;
    }

    // Largest coefficient magnitude on the boundary of the (j, mu) box,
    // relative to the overall maximum; used for grid-resolution warnings.
    double tail_fraction() const {
        double peak = 0.0, tail = 0.0;
        const int J = jmax();
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            const bool mu_edge = (i == 0 || i + 1 == grid_.size());
            for (int j = -J; j <= J; ++j) {
                const double a = std::abs(slices_[i][j]);
                if (a > peak) peak = a;
                if ((mu_edge || std::abs(j) == J) && a > tail) tail = a;
            }
        }
        return peak > 0.0 ? tail / peak : 0.0;
    }

    friend SpectralFunction operator+(const SpectralFunction& a, const SpectralFunction& b) {
        SpectralFunction s = a;
        for (std::size_t i = 0; i < s.grid_.size(); ++i) s.slices_[i] = s.slices_[i] + b.slices_[i];
        return s;
    }
    friend SpectralFunction operator-(const SpectralFunction& a, const SpectralFunction& b) {
        SpectralFunction s = a;
        for (std::size_t i = 0; i < s.grid_.size(); ++i) s.slices_[i] = s.slices_[i] - b.slices_[i];
        return s;
    }
    friend SpectralFunction operator*(cxd z, const SpectralFunction& a) {
        SpectralFunction s = a;
        for (std::size_t i = 0; i < s.grid_.size(); ++i) s.slices_[i] = z * s.slices_[i];
        return s;
    }

  private:
    Side side_ = Side::upper;
    MuGrid grid_;
    std::vector<KSeries> slices_;
};

// Split into even- and odd-K-type parts; the two reconstruct the input
// exactly and have disjoint coefficient support.
inline std::pair<SpectralFunction, SpectralFunction> parity_split(const SpectralFunction& h) {
    SpectralFunction even(h.side(), h.grid(), h.jmax());
    SpectralFunction odd(h.side(), h.grid(), h.jmax());
    for (std::size_t i = 0; i < h.grid().size(); ++i) {
        even.slice(i) = h.slice(i).parity_part(true);
        odd.slice(i) = h.slice(i).parity_part(false);
    }
    return {even, odd};
}

inline bool is_even_parity(const SpectralFunction& h, double tol = 0.0) {
    for (std::size_t i = 0; i < h.grid().size(); ++i) {
        if (!h.slice(i).pure_parity(true, tol)) return false;
    }
    return true;
}

}  // namespace sl2
