#pragma once

// Structure theory of SL(2,R): group elements, Iwasawa and Cartan
// factorizations, modular characters and the norm.
//
// Conventions used throughout the library:
//   K      = SO(2), rotations k(theta) = [[cos,-sin],[sin,cos]]
//   A      = positive diagonal a(t) = diag(e^t, e^-t)
//   L      = all diagonal matrices diag(alpha, 1/alpha), alpha != 0
//   N+     = upper unipotent [[1,x],[0,1]],  N- = lower unipotent [[1,0],[y,1]]
//   delta+ (diag(alpha,1/alpha)) = alpha^2,  delta- = alpha^-2; both extend to
//   G through the Iwasawa decomposition of the matching side, which makes
//   delta+(g) = |first column of g|^2 and delta-(g) = |second column of g|^2.
//   The norm |g| is the largest singular value (>= 1 when det g = 1).

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace sl2 {

using cxd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }
    double angle() const { return std::atan2(y, x); }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline Vec2 polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

enum class Side { upper, lower };

inline Side opposite(Side s) { return s == Side::upper ? Side::lower : Side::upper; }
inline const char* side_name(Side s) { return s == Side::upper ? "upper" : "lower"; }

// Unimodular 2x2 real matrix.  Construction renormalizes the determinant when
// |det - 1| < 1e-8 and rejects the input otherwise.
class GroupElement {
  public:
    GroupElement() : e_{1.0, 0.0, 0.0, 1.0} {}

    GroupElement(double a, double b, double c, double d) : e_{a, b, c, d} {
        const double det = a * d - b * c;
        if (!(std::abs(det - 1.0) < det_accept_tol)) {
            throw std::invalid_argument("GroupElement: determinant " + std::to_string(det) +
                                        " is not 1");
        }
        if (std::abs(det - 1.0) > det_exact_tol) {
            const double s = 1.0 / std::sqrt(det);
            for (double& v : e_) v *= s;
        }
    }

    static constexpr double det_exact_tol = 1e-12;
    static constexpr double det_accept_tol = 1e-8;

    static GroupElement rotation(double theta) {
        const double c = std::cos(theta), s = std::sin(theta);
        return GroupElement(unchecked{}, c, -s, s, c);
    }
    // a(t) = diag(e^t, e^-t)
    static GroupElement diag_exp(double t) {
        return GroupElement(unchecked{}, std::exp(t), 0.0, 0.0, std::exp(-t));
    }
    // Levi element diag(alpha, 1/alpha) with alpha = sign * e^s, sign = +-1.
    static GroupElement levi(int sign, double s) {
        const double a = (sign < 0 ? -1.0 : 1.0) * std::exp(s);
        return GroupElement(unchecked{}, a, 0.0, 0.0, 1.0 / a);
    }
    static GroupElement upper_unipotent(double x) {
        return GroupElement(unchecked{}, 1.0, x, 0.0, 1.0);
    }
    static GroupElement lower_unipotent(double y) {
        return GroupElement(unchecked{}, 1.0, 0.0, y, 1.0);
    }
    static GroupElement identity() { return GroupElement(); }

    double a() const { return e_[0]; }
    double b() const { return e_[1]; }
    double c() const { return e_[2]; }
    double d() const { return e_[3]; }
    double entry(int i, int j) const { return e_[2 * i + j]; }

    Vec2 col1() const { return {e_[0], e_[2]}; }
    Vec2 col2() const { return {e_[1], e_[3]}; }

    double det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    GroupElement inverse() const { return GroupElement(unchecked{}, e_[3], -e_[1], -e_[2], e_[0]); }
    GroupElement transpose() const { return GroupElement(unchecked{}, e_[0], e_[2], e_[1], e_[3]); }

    Vec2 apply(Vec2 v) const { return {e_[0] * v.x + e_[1] * v.y, e_[2] * v.x + e_[3] * v.y}; }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        return GroupElement(unchecked{}, g.e_[0] * h.e_[0] + g.e_[1] * h.e_[2],
                            g.e_[0] * h.e_[1] + g.e_[1] * h.e_[3],
                            g.e_[2] * h.e_[0] + g.e_[3] * h.e_[2],
                            g.e_[2] * h.e_[1] + g.e_[3] * h.e_[3]);
    }

    double frobenius_sq() const {
        return e_[0] * e_[0] + e_[1] * e_[1] + e_[2] * e_[2] + e_[3] * e_[3];
    }

  private:
    struct unchecked {};
    GroupElement(unchecked, double a, double b, double c, double d) : e_{a, b, c, d} {}
    std::array<double, 4> e_;
};

struct IwasawaFactors {
    GroupElement k;  // rotation
    GroupElement a;  // diag(e^t, e^-t)
    GroupElement n;  // unipotent of the declared side
    Side side = Side::upper;
    double theta = 0.0;  // angle of k
    double t = 0.0;      // log of a_11
    double x = 0.0;      // off-diagonal entry of n
};

// g = k a n with n upper (side=upper) or lower (side=lower) unipotent.
// Gram-Schmidt on the columns: for the upper side a_11 = |first column|.
inline IwasawaFactors iwasawa(const GroupElement& g, Side side) {
    IwasawaFactors f;
    f.side = side;
    if (side == Side::upper) {
        const Vec2 c1 = g.col1();
        const double r = c1.norm();
        f.theta = std::atan2(c1.y, c1.x);
        f.t = std::log(r);
        f.k = GroupElement::rotation(f.theta);
        f.a = GroupElement::diag_exp(f.t);
        // n = a^-1 k^-1 g is unit upper triangular; read off its (1,2) entry.
        const GroupElement n = f.a.inverse() * (f.k.inverse() * g);
        f.x = n.b();
        f.n = GroupElement::upper_unipotent(f.x);
    } else {
        const Vec2 c2 = g.col2();
        const double r = c2.norm();
        // k sends e2 to c2/|c2|, so its angle is angle(c2) - pi/2.
        f.theta = std::atan2(c2.y, c2.x) - pi / 2.0;
        f.t = -std::log(r);  // a_22 = |c2| = e^-t
        f.k = GroupElement::rotation(f.theta);
        f.a = GroupElement::diag_exp(f.t);
        const GroupElement n = f.a.inverse() * (f.k.inverse() * g);
        f.x = n.c();
        f.n = GroupElement::lower_unipotent(f.x);
    }
    return f;
}

struct CartanFactors {
    GroupElement k1;
    GroupElement a;  // diag(sigma, 1/sigma), sigma >= 1
    GroupElement k2;
    double theta1 = 0.0;  // in [0, pi)
    double t = 0.0;       // log sigma >= 0
    double theta2 = 0.0;
};

// Largest singular value of g, computed from trace(g^T g) and det = 1.
inline double singular_value_max(const GroupElement& g) {
    const double tr = g.frobenius_sq();
    // sigma^2 + sigma^-2 = tr, so sigma^2 = (tr + sqrt(tr^2 - 4)) / 2.
    const double disc = std::max(tr * tr - 4.0, 0.0);
    return std::sqrt((tr + std::sqrt(disc)) / 2.0);
}

// g = k1 a k2 with a_11 >= 1 and the angle of k1 canonicalized to [0, pi).
inline CartanFactors cartan(const GroupElement& g) {
    CartanFactors f;
    const double sigma = singular_value_max(g);
    f.t = std::log(sigma);
    f.a = GroupElement::diag_exp(f.t);
    if (sigma - 1.0 < 1e-9) {
        // g is (numerically) a rotation: a = I, put everything in k2.
        f.k1 = GroupElement::identity();
        f.k2 = GroupElement::rotation(std::atan2(g.c(), g.a()));
        f.theta1 = 0.0;
        f.theta2 = std::atan2(g.c(), g.a());
        return f;
    }
    // Eigenvector of g^T g for the eigenvalue sigma^2 gives the first row of k2.
    const double p = g.a() * g.a() + g.c() * g.c();
    const double q = g.a() * g.b() + g.c() * g.d();
    const double r = g.b() * g.b() + g.d() * g.d();
    const double lam = sigma * sigma;
    // (p - lam) v1 + q v2 = 0
    double v1, v2;
    if (std::abs(q) > 1e-300) {
        v1 = q;
        v2 = lam - p;
    } else {
        v1 = p >= r ? 1.0 : 0.0;
        v2 = p >= r ? 0.0 : 1.0;
    }
    const double vn = std::hypot(v1, v2);
    v1 /= vn;
    v2 /= vn;
    // k2^-1 has first column (v1, v2): k2 = rotation with cos = v1, sin = -v2.
    double theta2 = std::atan2(-v2, v1);
    GroupElement k2 = GroupElement::rotation(theta2);
    GroupElement k1 = g * k2.inverse() * f.a.inverse();
    double theta1 = std::atan2(k1.c(), k1.a());
    if (theta1 < 0.0) theta1 += two_pi;
    if (theta1 >= pi) {  // replace (k1, k2) by (-k1, -k2)
        theta1 -= pi;
        theta2 += pi;
        k1 = GroupElement::rotation(theta1);
        k2 = GroupElement::rotation(theta2);
    }
    f.k1 = k1;
    f.k2 = k2;
    f.theta1 = theta1;
    f.theta2 = theta2;
    return f;
}

// delta extended to G through the Iwasawa decomposition of the matching side.
// delta+(g) = |g e1|^2 and delta-(g) = |g e2|^2.
inline double modular_delta(const GroupElement& g, Side side) {
    if (side == Side::upper) {
        const Vec2 c = g.col1();
        return c.x * c.x + c.y * c.y;
    }
    const Vec2 c = g.col2();
    return c.x * c.x + c.y * c.y;
}

// K-bi-invariant norm |k1 a k2| = max(a_11, a_11^-1) = largest singular value.
inline double group_norm(const GroupElement& g) { return singular_value_max(g); }

}  // namespace sl2
