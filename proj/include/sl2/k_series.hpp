#pragma once

// Finite Fourier series on the rotation group K: coefficient vectors c_j for
// |j| <= jmax against the characters sigma_j(k(u)) = e^{i j u}.  The even and
// odd principal series correspond to the even- and odd-j supported parts.

#include <complex>
#include <stdexcept>
#include <vector>

#include "sl2/group.hpp"

namespace sl2 {

class KSeries {
  public:
    KSeries() : jmax_(0), c_(1, cxd(0.0, 0.0)) {}
    explicit KSeries(int jmax) : jmax_(jmax), c_(2 * jmax + 1, cxd(0.0, 0.0)) {
        if (jmax < 0) throw std::invalid_argument("KSeries: jmax must be >= 0");
    }

    int jmax() const { return jmax_; }
    std::size_t size() const { return c_.size(); }

    cxd& operator[](int j) { return c_[static_cast<std::size_t>(j + jmax_)]; }
    cxd operator[](int j) const { return c_[static_cast<std::size_t>(j + jmax_)]; }

    cxd eval(double theta) const {
        cxd acc = 0.0;
        for (int j = -jmax_; j <= jmax_; ++j) {
            acc += (*this)[j] * std::polar(1.0, j * theta);
        }
        return acc;
    }

    // Coefficients from samples at n >= 2*jmax+1 equispaced angles.
    static KSeries analyze(const std::vector<cxd>& samples, int jmax) {
        const int n = static_cast<int>(samples.size());
        if (n < 2 * jmax + 1)
            throw std::invalid_argument("KSeries::analyze: not enough samples");
        KSeries s(jmax);
        for (int j = -jmax; j <= jmax; ++j) {
            cxd acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += samples[static_cast<std::size_t>(i)] * std::polar(1.0, -j * (two_pi * i / n));
            }
            s[j] = acc / static_cast<double>(n);
        }
        return s;
    }

    KSeries parity_part(bool even) const {
        KSeries s(jmax_);
        for (int j = -jmax_; j <= jmax_; ++j) {
            if ((std::abs(j) % 2 == 0) == even) s[j] = (*this)[j];
        }
        return s;
    }

    bool pure_parity(bool even, double tol = 0.0) const {
        for (int j = -jmax_; j <= jmax_; ++j) {
            if ((std::abs(j) % 2 == 0) != even && std::abs((*this)[j]) > tol) return false;
        }
        return true;
    }

    // l2 norm squared of the coefficient vector
    double norm_sq() const {
        double acc = 0.0;
        for (const cxd& v : c_) acc += std::norm(v);
        return acc;
    }

    friend KSeries operator+(const KSeries& a, const KSeries& b) {
        KSeries s(a.jmax_);
        for (int j = -a.jmax_; j <= a.jmax_; ++j) s[j] = a[j] + b[j];
        return s;
    }
    friend KSeries operator-(const KSeries& a, const KSeries& b) {
        KSeries s(a.jmax_);
        for (int j = -a.jmax_; j <= a.jmax_; ++j) s[j] = a[j] - b[j];
        return s;
    }
    friend KSeries operator*(cxd z, const KSeries& a) {
        KSeries s(a.jmax_);
        for (int j = -a.jmax_; j <= a.jmax_; ++j) s[j] = z * a[j];
        return s;
    }

    // conjugate-linear in the first slot; sum_j conj(a_j) b_j
    friend cxd coefficient_inner(const KSeries& a, const KSeries& b) {
        cxd acc = 0.0;
        for (int j = -a.jmax_; j <= a.jmax_; ++j) acc += std::conj(a[j]) * b[j];
        return acc;
    }

  private:
    int jmax_;
    std::vector<cxd> c_;
};

}  // namespace sl2
