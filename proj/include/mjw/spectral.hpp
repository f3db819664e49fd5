#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "mjw/errors.hpp"

namespace mjw {

using cplx = std::complex<double>;

struct ChebSeries {
    std::vector<double> coeffs;  // a_0..a_m, a_0 not halved
    double tail_bound = 0.0;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Degree-m interpolant at Chebyshev-Lobatto points cos(j pi / m).
template <class F>
ChebSeries cheb_transform(F&& f, int m) {
    if (m < 1) throw error(errc::parameter, "cheb_transform: degree must be >= 1");
    std::vector<double> fx(m + 1);
    for (int j = 0; j <= m; ++j) {
        const double x = std::cos(std::numbers::pi * j / m);
        fx[j] = f(x);
        if (!std::isfinite(fx[j]))
            throw error(errc::invalid_function,
                        "cheb_transform: non-finite sample at x=" + std::to_string(x));
    }
    ChebSeries s;
    s.coeffs.assign(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= m; ++j) {
            const double wj = (j == 0 || j == m) ? 0.5 : 1.0;
            // cos(pi j k / m) with the index reduced to keep the argument small
            const long jk = static_cast<long>(j) * k % (2L * m);
            acc += wj * fx[j] * std::cos(std::numbers::pi * static_cast<double>(jk) / m);
        }
        const double scale = (k == 0 || k == m) ? 1.0 / m : 2.0 / m;
        s.coeffs[k] = scale * acc;
    }
    const int tail = std::max(2, m / 4);
    double mx = 0.0;
    for (int k = std::max(0, m + 1 - tail); k <= m; ++k) mx = std::max(mx, std::abs(s.coeffs[k]));
    s.tail_bound = 2.0 * mx;
    return s;
}

inline void require_unit_interval(double x, const char* who) {
    if (!(std::abs(x) <= 1.0))
        throw error(errc::domain, std::string(who) + ": |x| > 1");
}

// Clenshaw for sum a_k T_k(x); templated so the same recurrence serves complex z.
template <class T>
T clenshaw_sum(std::span<const double> a, T x) {
    T b1{0}, b2{0};
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
        T b0 = a[k] + T(2) * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    if (a.empty()) return T{0};
    return a[0] + x * b1 - b2;
}

inline double clenshaw_eval(const ChebSeries& s, double x) {
    require_unit_interval(x, "clenshaw_eval");
    return clenshaw_sum<double>(s.coeffs, x);
}

inline double chebU_eval(int k, double x) {
    require_unit_interval(x, "chebU_eval");
    if (k < 0) throw error(errc::parameter, "chebU_eval: k < 0");
    double u0 = 1.0, u1 = 2.0 * x;
    if (k == 0) return u0;
    for (int j = 1; j < k; ++j) {
        const double u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

// sum_{k>=1} a_k U_{k-1}(x), Clenshaw in the U basis.
template <class T>
T chebU_shifted_sum(std::span<const double> a, T x) {
    T b1{0}, b2{0};
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
        T b0 = a[k] + T(2) * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return b1;
}

// (z^2-1)^{1/2} with the branch ~ z at infinity.
inline cplx sqrt_z2m1(cplx z) { return std::sqrt(z - 1.0) * std::sqrt(z + 1.0); }

struct EllipseContour {
    double rho = 1.3;
    int nodes = 128;

    void check() const {
        if (!(rho > 1.0) || !std::isfinite(rho))
            throw error(errc::contour, "EllipseContour: rho must be > 1");
        if (nodes < 16 || nodes % 2 != 0)
            throw error(errc::contour, "EllipseContour: nodes must be even and >= 16");
    }
    cplx point(double theta) const {
        const cplx u = std::polar(rho, theta);
        return 0.5 * (u + 1.0 / u);
    }
    cplx tangent(double theta) const {
        const cplx u = std::polar(rho, theta);
        return cplx(0, 0.5) * (u - 1.0 / u);
    }
    double semi_minor() const { return 0.5 * (rho - 1.0 / rho); }
    double semi_major() const { return 0.5 * (rho + 1.0 / rho); }
};

// Trapezoid sums for (1/2 pi i) \oint F; also reports sum |F zeta'| / N, the rounding scale.
struct ContourSum {
    cplx value;
    double magnitude;
};

template <class F>
ContourSum contour_sum(F&& f, const EllipseContour& c) {
    c.check();
    cplx acc{0};
    double mag = 0.0;
    for (int j = 0; j < c.nodes; ++j) {
        const double th = 2.0 * std::numbers::pi * j / c.nodes;
        const cplx term = cplx(f(c.point(th))) * c.tangent(th);
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
            throw error(errc::contour, "contour_integral: non-finite integrand");
        acc += term;
        mag += std::abs(term);
    }
    return {acc / cplx(0, c.nodes), mag / c.nodes};
}

template <class F>
cplx contour_integral(F&& f, const EllipseContour& c) {
    return contour_sum(std::forward<F>(f), c).value;
}

}  // namespace mjw
