#pragma once

// One-dimensional quadrature rules used by every integral in the library:
// Gauss-Legendre (compact smooth factors), tanh-sinh (noncompact coordinates
// after truncation, endpoint singularities), and the periodic trapezoid rule
// on the rotation group, which is spectrally accurate for smooth periodic
// integrands.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "sl2/group.hpp"

namespace sl2 {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <typename F>
    auto integrate(F&& f) const {
        using R = decltype(f(0.0));
        R acc{};
        for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

namespace detail {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1], by Newton
// iteration on P_n starting from the Chebyshev estimate.
inline const Rule1D& gauss_legendre_unit(int n) {
    static std::map<int, Rule1D> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = -x;
        r.weights[i] = w;
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

}  // namespace detail

inline Rule1D gauss_legendre(int n, double a, double b) {
    const Rule1D& u = detail::gauss_legendre_unit(n);
    Rule1D r;
    r.nodes.resize(u.size());
    r.weights.resize(u.size());
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < u.size(); ++i) {
        r.nodes[i] = mid + half * u.nodes[i];
        r.weights[i] = half * u.weights[i];
    }
    return r;
}

// Composite Gauss-Legendre over explicitly supplied panel boundaries.
inline Rule1D gauss_legendre_panels(int n_per_panel, const std::vector<double>& breaks) {
    Rule1D r;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        Rule1D panel = gauss_legendre(n_per_panel, breaks[p], breaks[p + 1]);
        r.nodes.insert(r.nodes.end(), panel.nodes.begin(), panel.nodes.end());
        r.weights.insert(r.weights.end(), panel.weights.begin(), panel.weights.end());
    }
    return r;
}

// Tanh-sinh rule with n points mapped onto (a, b).  Double-exponential node
// clustering at the endpoints; robust for integrable endpoint singularities
// and for truncated rapidly decaying integrands.
inline Rule1D tanh_sinh(int n, double a, double b) {
    if (n < 3) throw std::invalid_argument("tanh_sinh: need n >= 3");
    Rule1D r;
    r.nodes.reserve(n);
    r.weights.reserve(n);
    const int half = n / 2;
    const double tmax = std::asinh(std::atanh(1.0 - 1e-14) * 2.0 / pi);
    const double h = tmax / half;
    const double mid = 0.5 * (a + b), scale = 0.5 * (b - a);
    for (int k = -half; k <= half; ++k) {
        const double t = k * h;
        const double s = pi / 2.0 * std::sinh(t);
        const double x = std::tanh(s);
        const double c = std::cosh(s);
        const double w = h * pi / 2.0 * std::cosh(t) / (c * c);
        if (w < 1e-300) continue;
        r.nodes.push_back(mid + scale * x);
        r.weights.push_back(scale * w);
    }
    return r;
}

// Panel rule on one period of the circle with geometric refinement toward a
// set of feature angles, down to the given scale.  Used for integrands with
// isolated near-singular dips whose width shrinks with a parameter.
inline Rule1D dip_refined_circle_rule(const std::vector<double>& features, double fine_scale,
                                      int nodes_per_panel = 12) {
    std::vector<double> breaks;
    for (double c : features) {
        breaks.push_back(c);
        for (double d = std::max(fine_scale, 1e-10); d < pi / 2.0; d *= 2.0) {
            breaks.push_back(c - d);
            breaks.push_back(c + d);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> uniq;
    for (double b : breaks) {
        if (uniq.empty() || b - uniq.back() > 1e-13) uniq.push_back(b);
    }
    uniq.push_back(uniq.front() + two_pi);
    Rule1D r;
    for (std::size_t p = 0; p + 1 < uniq.size(); ++p) {
        const Rule1D panel = gauss_legendre(nodes_per_panel, uniq[p], uniq[p + 1]);
        r.nodes.insert(r.nodes.end(), panel.nodes.begin(), panel.nodes.end());
        r.weights.insert(r.weights.end(), panel.weights.begin(), panel.weights.end());
    }
    return r;
}

// Uniform trapezoid rule on [0, 2*pi) for periodic integrands.
inline Rule1D periodic_trapezoid(int n) {
    if (n < 1) throw std::invalid_argument("periodic_trapezoid: need n >= 1");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.assign(n, two_pi / n);
    for (int i = 0; i < n; ++i) r.nodes[i] = two_pi * i / n;
    return r;
}

// Gauss-Legendre in psi mapped through x = scale * tan(psi); integrates over
// the whole line with node density ~ scale near the origin and algebraic
// spreading into the tails.
inline Rule1D tan_map(int n, double scale) {
    Rule1D psi = detail::gauss_legendre_unit(n);
    Rule1D r;
    r.nodes.resize(psi.size());
    r.weights.resize(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double p = psi.nodes[i] * pi / 2.0;
        const double c = std::cos(p);
        r.nodes[i] = scale * std::tan(p);
        r.weights[i] = psi.weights[i] * (pi / 2.0) * scale / (c * c);
    }
    return r;
}

// Gauss-Legendre in u mapped through x = sinh(u); node density is uniform in
// log |x| for large |x|, the right behavior for integrands with structure on
// a logarithmic scale in the unipotent coordinate.
inline Rule1D sinh_map(int n, double range) {
    const double umax = std::asinh(range);
    Rule1D u = gauss_legendre(n, -umax, umax);
    Rule1D r;
    r.nodes.resize(u.size());
    r.weights.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        r.nodes[i] = std::sinh(u.nodes[i]);
        r.weights[i] = u.weights[i] * std::cosh(u.nodes[i]);
    }
    return r;
}

enum class RuleKind { gauss_legendre, tanh_sinh, tan_map, sinh_map };

// Node counts and truncation radii for the three Iwasawa coordinates.
// Defaults: 64-node Gauss-Legendre on compact factors, tanh-sinh with
// truncation radius 12 on the noncompact ones.  The K rule is the periodic
// trapezoid, whose node count should grow with the norm of the arguments
// (underresolution is reported by the operations that can detect it).
struct QuadratureScheme {
    int k_nodes = 256;

    RuleKind t_kind = RuleKind::tanh_sinh;
    int t_nodes = 129;
    double t_radius = 12.0;

    RuleKind x_kind = RuleKind::tanh_sinh;
    int x_nodes = 129;
    double x_radius = 12.0;

    void validate() const {
        if (k_nodes < 4 || t_nodes < 4 || x_nodes < 4)
            throw std::invalid_argument("QuadratureScheme: node counts must be >= 4");
        if (!(t_radius > 0.0) || !(x_radius > 0.0))
            throw std::invalid_argument("QuadratureScheme: truncation radii must be positive");
    }

    Rule1D k_rule() const { return periodic_trapezoid(k_nodes); }
    Rule1D t_rule() const { return make(t_kind, t_nodes, -t_radius, t_radius); }
    Rule1D x_rule() const { return make(x_kind, x_nodes, -x_radius, x_radius); }
    Rule1D t_rule(double radius) const { return make(t_kind, t_nodes, -radius, radius); }
    Rule1D x_rule(double radius) const { return make(x_kind, x_nodes, -radius, radius); }

    static Rule1D make(RuleKind kind, int n, double a, double b) {
        switch (kind) {
            case RuleKind::gauss_legendre: return gauss_legendre(n, a, b);
            case RuleKind::tan_map: return tan_map(n, 0.5 * (b - a) / 6.0);
            case RuleKind::sinh_map: return sinh_map(n, 0.5 * (b - a));
            default: return tanh_sinh(n, a, b);
        }
    }

    QuadratureScheme refined(double factor = 2.0) const {
        QuadratureScheme s = *this;
        s.k_nodes = static_cast<int>(s.k_nodes * factor);
        s.t_nodes = static_cast<int>(s.t_nodes * factor) | 1;
        s.x_nodes = static_cast<int>(s.x_nodes * factor) | 1;
        return s;
    }

    QuadratureScheme coarsened() const {
        QuadratureScheme s = *this;
        s.k_nodes = std::max(32, s.k_nodes / 2);
        s.t_nodes = std::max(33, s.t_nodes / 2) | 1;
        s.x_nodes = std::max(33, s.x_nodes / 2) | 1;
        return s;
    }
};

}  // namespace sl2
