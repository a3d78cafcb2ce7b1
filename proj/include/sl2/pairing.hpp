#pragma once

// The Frobenius pairing, counit and unit for the same-parabolic adjunction.
//
//   <<h1, h2>>(l) = <h1, h2 . l^{-1}>_{L2(G/N)}        (an S(L) function)
//   Fr(h1 (x) h2) = <<h1*, h2>>                        (counit; h1 on N\G)
//   k_f(g1, g2)   = int_N f(g1 n g2^{-1}) dn           (unit kernel)
//
// In the matched plane models the involution * is complex conjugation, and
// the composite of the unit with the counit acts on h in G/N as the integral
// operator with kernel k_f(x, y) over Lebesgue measure of the plane model,
//
//   (f . h)(x) = int_{R^2} k_f(rep x, rep y) h(y) dy,
//
// which the reproducing tests compare against the direct module action.

#include <functional>

#include "sl2/levi_function.hpp"
#include "sl2/plane_function.hpp"

namespace sl2 {

inline LeviFunction frobenius_pairing(const PlaneFunction& h1, const PlaneFunction& h2,
                                      const PlaneQuadrature& q = {}) {
    if (h1.side() != h2.side())
        throw std::invalid_argument("frobenius_pairing: both arguments must share a side");
    const double supp = h1.decay().u_support + h2.decay().u_support;
    return LeviFunction(
        [h1, h2, q](int sign, double s) -> cxd {
            const GroupElement linv = GroupElement::levi(sign, -s);
            return l2_inner(h1, act_L_right(linv, h2), q);
        },
        supp);
}

inline LeviFunction frobenius_counit(const PlaneFunction& h1_coset, const PlaneFunction& h2,
                                     const PlaneQuadrature& q = {}) {
    return frobenius_pairing(involution_star(h1_coset), h2, q);
}

// Two-variable kernel on G x G with declared invariances, checkable on
// random samples.
class KernelOnGxG {
  public:
    using Evaluator = std::function<cxd(const GroupElement&, const GroupElement&)>;

    enum Invariance {
        right_n_plus_slot1 = 1 << 0,   // k(g1 n, g2) = k(g1, g2)
        right_n_plus_slot2 = 1 << 1,   // k(g1, g2 n) = k(g1, g2)
        left_n_minus_slot1 = 1 << 2,   // k(nbar g1, g2) = k(g1, g2)
        diagonal_l_delta = 1 << 3,     // k(g1 l, g2 l) = delta+(l)^{-1} k(g1, g2)
    };

    KernelOnGxG() = default;
    KernelOnGxG(Evaluator e, unsigned tags) : eval_(std::move(e)), tags_(tags) {}

    cxd operator()(const GroupElement& g1, const GroupElement& g2) const { return eval_(g1, g2); }
    unsigned tags() const { return tags_; }

  private:
    Evaluator eval_ = [](const GroupElement&, const GroupElement&) { return cxd(0.0, 0.0); };
    unsigned tags_ = 0;
};

// Unit kernel k_f(g1, g2) = int_{N+} f(g1 n g2^{-1}) dn.  As a kernel on
// (G/N) x (N\G) the second coset variable enters through g2 = y^{-1}.
inline KernelOnGxG frobenius_unit_kernel(const GFunction& f, const Rule1D& n_rule) {
    auto rule = std::make_shared<Rule1D>(n_rule);
    return KernelOnGxG(
        [f, rule](const GroupElement& g1, const GroupElement& g2) -> cxd {
            const GroupElement g2i = g2.inverse();
            cxd acc = 0.0;
            for (std::size_t i = 0; i < rule->size(); ++i) {
                acc += rule->weights[i] *
                       f(g1 * GroupElement::upper_unipotent(rule->nodes[i]) * g2i);
            }
            return acc;
        },
        KernelOnGxG::right_n_plus_slot1 | KernelOnGxG::right_n_plus_slot2 |
            KernelOnGxG::diagonal_l_delta);
}

// (f . h)(x) through the unit kernel: integral over the plane model of
// k_f(rep x, rep y) h(y) dy.
inline cxd unit_kernel_apply(const KernelOnGxG& kf, const PlaneFunction& h, Vec2 x,
                             const PlaneQuadrature& q = {}) {
    const GroupElement gx = coset_representative(x, h.side());
    const Rule1D ru = q.u_rule();
    const Rule1D rt = q.theta_rule();
    cxd acc = 0.0;
    for (std::size_t iu = 0; iu < ru.size(); ++iu) {
        const double r = std::exp(ru.nodes[iu]);
        const double wu = ru.weights[iu] * r * r;
        for (std::size_t it = 0; it < rt.size(); ++it) {
            const Vec2 y = polar(r, rt.nodes[it]);
            const cxd hv = h(y);
            if (hv == cxd(0.0, 0.0)) continue;
            acc += wu * rt.weights[it] * kf(gx, coset_representative(y, h.side())) * hv;
        }
    }
    return acc;
}

}  // namespace sl2
