#pragma once

// Functions on the Levi subgroup L = {diag(alpha, 1/alpha)} ~ {+-1} x R,
// kept in the coordinates (sign, s = log|alpha|).  Convolution and the
// involution f*(l) = conj f(l^-1) act componentwise over the sign group and
// by the usual line convolution in s.  The paper-facing module actions of
// S(L) on the plane models are act_L_module / act_L_module_left below.

#include <array>
#include <functional>
#include <memory>

#include "sl2/plane_function.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

struct LeviQuadrature {
    int n_s = 160;
    double s_extent = 10.0;
    RuleKind kind = RuleKind::gauss_legendre;

    Rule1D rule() const { return QuadratureScheme::make(kind, n_s, -s_extent, s_extent); }
};

class LeviFunction {
  public:
    using Evaluator = std::function<cxd(int, double)>;  // (sign = +-1, s)

    LeviFunction() = default;
    LeviFunction(Evaluator f, double s_support, int smoothness = -1)
        : eval_(std::move(f)), s_support_(s_support), smoothness_(smoothness) {}

    cxd operator()(int sign, double s) const { return eval_(sign, s); }
    cxd operator()(const GroupElement& l) const {
        const double a = l.a();
        return eval_(a >= 0.0 ? +1 : -1, std::log(std::abs(a)));
    }

    double s_support() const { return s_support_; }
    int smoothness() const { return smoothness_; }

    static LeviFunction zero() {
        return LeviFunction([](int, double) { return cxd(0.0, 0.0); }, 0.0);
    }

    // Gaussian bump of the given mass on one sign component.
    static LeviFunction gaussian(int sign, double s0, double w, cxd mass = 1.0) {
        const cxd amp = mass / (w * std::sqrt(two_pi));
        return LeviFunction(
            [=](int sg, double s) -> cxd {
                if (sg != sign) return 0.0;
                const double d = (s - s0) / w;
                return amp * std::exp(-0.5 * d * d);
            },
            std::abs(s0) + 10.0 * w);
    }

    cxd integral(const LeviQuadrature& q = {}) const {
        const Rule1D r = q.rule();
        cxd acc = 0.0;
        for (int sg : {+1, -1}) acc += r.integrate([&](double s) { return eval_(sg, s); });
        return acc;
    }

    // f*(l) = conj f(l^-1); (sign, s) -> (sign, -s).
    LeviFunction star() const {
        auto e = eval_;
        return LeviFunction([e](int sg, double s) { return std::conj(e(sg, -s)); }, s_support_,
                            smoothness_);
    }

    friend LeviFunction operator-(const LeviFunction& a, const LeviFunction& b) {
        auto ea = a.eval_, eb = b.eval_;
        return LeviFunction([ea, eb](int sg, double s) { return ea(sg, s) - eb(sg, s); },
                            std::max(a.s_support_, b.s_support_));
    }

    // Convolution over the group {+-1} x R.
    friend LeviFunction convolve(const LeviFunction& f1, const LeviFunction& f2,
                                 const LeviQuadrature& q) {
        auto e1 = f1.eval_, e2 = f2.eval_;
        const Rule1D r = q.rule();
        auto rule = std::make_shared<Rule1D>(r);
        return LeviFunction(
            [e1, e2, rule](int sg, double s) -> cxd {
                cxd acc = 0.0;
                for (int m : {+1, -1}) {
                    const int other = sg * m;  // m * other = sg in the sign group
                    for (std::size_t i = 0; i < rule->size(); ++i) {
                        const double t = rule->nodes[i];
                        acc += rule->weights[i] * e1(m, t) * e2(other, s - t);
                    }
                }
                return acc;
            },
            f1.s_support_ + f2.s_support_);
    }

    double sup_abs(const LeviQuadrature& q = {}) const {
        const Rule1D r = q.rule();
        double m = 0.0;
        for (int sg : {+1, -1})
            for (double s : r.nodes) m = std::max(m, std::abs(eval_(sg, s)));
        return m;
    }

  private:
    Evaluator eval_ = [](int, double) { return cxd(0.0, 0.0); };
    double s_support_ = 0.0;
    int smoothness_ = -1;
};

// Right module action of S(L) on a G/N-model function:
//   (h . f)(x) = integral_L f(l) (h . l)(x) dl,
// which for the upper model is integral f(sign, s) e^{-s} h(sign e^{-s} v).
inline PlaneFunction act_L_module(const PlaneFunction& h, const LeviFunction& f,
                                  const LeviQuadrature& q = {}) {
    auto rule = std::make_shared<Rule1D>(q.rule());
    const bool upper = h.side() == Side::upper;
    DecayInfo d = h.decay();
    d.u_support += f.s_support();
    return PlaneFunction(
        h.side(),
        [rule, h, f, upper](Vec2 v) -> cxd {
            cxd acc = 0.0;
            for (int sg : {+1, -1}) {
                for (std::size_t i = 0; i < rule->size(); ++i) {
                    const double s = rule->nodes[i];
                    const double a = sg * std::exp(s);  // l11
                    const double scale = upper ? 1.0 / a : a;
                    const cxd hv = h(scale * v);
                    acc += rule->weights[i] * f(sg, s) * std::abs(scale) * hv;
                }
            }
            return acc;
        },
        d, PlaneRepr::composite);
}

// Left module action of S(L) on an N\G-model function:
//   (f . k)(y) = integral_L f(l) (l . k)(y) dl.
inline PlaneFunction act_L_module_left(const LeviFunction& f, const PlaneFunction& k,
                                       const LeviQuadrature& q = {}) {
    auto rule = std::make_shared<Rule1D>(q.rule());
    const bool upper = k.side() == Side::upper;
    DecayInfo d = k.decay();
    d.u_support += f.s_support();
    return PlaneFunction(
        k.side(),
        [rule, k, f, upper](Vec2 v) -> cxd {
            cxd acc = 0.0;
            for (int sg : {+1, -1}) {
                for (std::size_t i = 0; i < rule->size(); ++i) {
                    const double s = rule->nodes[i];
                    const double a = sg * std::exp(s);  // l11
                    const double scale = upper ? a : 1.0 / a;
                    acc += rule->weights[i] * f(sg, s) * std::abs(scale) * k(scale * v);
                }
            }
            return acc;
        },
        d, PlaneRepr::composite);
}

// Action of a function on G on a G/N-model function:
//   (phi h)(x) = integral_G phi(g) h(g^-1 x) dg.
inline PlaneFunction act_Sc_G(const GFunction& phi, const PlaneFunction& h,
                              const QuadratureScheme& scheme) {
    DecayInfo d = h.decay();
    d.cls = FunctionClass::other;
    return PlaneFunction(
        h.side(),
        [phi, h, scheme](Vec2 v) -> cxd {
            return integrate_G([&](const GroupElement& g) { return phi(g) * h(g.inverse().apply(v)); },
                               scheme)
                .value;
        },
        d, PlaneRepr::composite);
}

// Right action of a function on G on an N\G-model function:
//   (h phi)(y) = integral_G phi(g) h(y g^-1) dg = integral phi(g) h(g v) dg.
inline PlaneFunction act_Sc_G_right(const PlaneFunction& h, const GFunction& phi,
                                    const QuadratureScheme& scheme) {
    DecayInfo d = h.decay();
    d.cls = FunctionClass::other;
    return PlaneFunction(
        h.side(),
        [phi, h, scheme](Vec2 v) -> cxd {
            return integrate_G([&](const GroupElement& g) { return phi(g) * h(g.apply(v)); }, scheme)
                .value;
        },
        d, PlaneRepr::composite);
}

}  // namespace sl2
