#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "mjw/errors.hpp"

namespace mjw {

struct BesselOrder {
    double alpha;
    bool is_half_integer;
    bool is_integer;

    static BesselOrder of(double alpha) {
        if (!(alpha > -1.0) || !std::isfinite(alpha))
            throw error(errc::unsupported_order, "Bessel order must be > -1");
        const bool integer = std::abs(alpha - std::round(alpha)) < 1e-14;
        const bool half = std::abs(alpha - 0.5 - std::round(alpha - 0.5)) < 1e-14;
        return {alpha, half, integer};
    }
};

namespace detail {

inline constexpr double bessel_crossover = 12.0;

inline bool is_negative_integer(double nu) { return nu < 0 && nu == std::round(nu); }

// Ascending series for J_nu, any real nu that is not a negative integer.
inline double j_series(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0 ? 0.0 : INFINITY);
    using ld = long double;
    const ld hx = static_cast<ld>(x) / 2;
    ld term = std::pow(hx, static_cast<ld>(nu)) / std::tgamma(static_cast<ld>(nu) + 1);
    ld sum = term;
    const ld q = -hx * hx;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<ld>(k) * (k + static_cast<ld>(nu)));
        sum += term;
        if (std::abs(term) < 1e-21L * std::abs(sum) && k > hx) break;
    }
    return static_cast<double>(sum);
}

// Hankel large-argument expansion; returns (J_nu, Y_nu).
inline std::pair<double, double> jy_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double P = 1.0, Q = 0.0, t = 1.0, last = INFINITY;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        t *= (mu - odd * odd) / (8.0 * k * x);
        if (std::abs(t) > last && k > nu) break;  // past optimal truncation
        last = std::abs(t);
        // k mod 4: 1 -> +Q, 2 -> -P, 3 -> -Q, 0 -> +P
        switch (k % 4) {
            case 0: P += t; break;
            case 1: Q += t; break;
            case 2: P -= t; break;
            case 3: Q -= t; break;
        }
        if (std::abs(t) < 1e-17) break;
    }
    const double chi = x - (nu / 2.0 + 0.25) * std::numbers::pi;
    const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
    const double c = std::cos(chi), s = std::sin(chi);
    return {amp * (P * c - Q * s), amp * (P * s + Q * c)};
}

inline double j_any(double nu, double x) {
    if (is_negative_integer(nu)) {
        const int m = static_cast<int>(-nu);
        return (m % 2 ? -1.0 : 1.0) * j_any(-nu, x);
    }
    return x <= bessel_crossover ? j_series(nu, x) : jy_asymptotic(nu, x).first;
}

inline double y_any(double nu, double x) {
    if (x > bessel_crossover) return jy_asymptotic(nu, x).second;
    const double s = std::sin(nu * std::numbers::pi);
    if (std::abs(s) < 1e-12)
        throw error(errc::unsupported_order, "Bessel Y: integer order not provided");
    return (j_series(nu, x) * std::cos(nu * std::numbers::pi) - j_series(-nu, x)) / s;
}

inline double i_series(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0 ? 0.0 : INFINITY);
    using ld = long double;
    const ld hx = static_cast<ld>(x) / 2;
    ld term = std::pow(hx, static_cast<ld>(nu)) / std::tgamma(static_cast<ld>(nu) + 1);
    ld sum = term;
    const ld q = hx * hx;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<ld>(k) * (k + static_cast<ld>(nu)));
        sum += term;
        if (std::abs(term) < 1e-21L * std::abs(sum) && k > hx) break;
    }
    return static_cast<double>(sum);
}

// int_0^inf exp(-x (cosh t - 1)) cosh(nu t) cosh(t)^p dt, p in {0, 1}; trapezoid rule.
inline double k_integral(double nu, double x, int p) {
    constexpr double h = 1.0 / 16.0;
    double sum = 0.5;  // t = 0 term, halved
    for (int j = 1; j < 20000; ++j) {
        const double t = j * h;
        const double ch = std::cosh(t);
        const double term = std::exp(-x * (ch - 1.0)) * std::cosh(nu * t) * (p ? ch : 1.0);
        sum += term;
        if (term < 1e-19 * sum) break;
    }
    return h * sum;
}

inline void require_x(double x, const char* who) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw error(errc::domain, std::string(who) + ": x must be >= 0");
}

}  // namespace detail

inline double bessel_j(double alpha, double x) {
    BesselOrder::of(alpha);
    detail::require_x(x, "bessel_j");
    if (x == 0.0 && alpha < 0.0) throw error(errc::domain, "bessel_j: x = 0 needs alpha >= 0");
    return detail::j_any(alpha, x);
}

inline double bessel_j_prime(double alpha, double x) {
    BesselOrder::of(alpha);
    detail::require_x(x, "bessel_j_prime");
    if (x == 0.0) {
        if (alpha == 0.0 || alpha > 1.0) return 0.0;
        if (alpha == 1.0) return 0.5;
        throw error(errc::domain, "bessel_j_prime: x = 0 needs alpha = 0 or alpha >= 1");
    }
    return alpha / x * detail::j_any(alpha, x) - detail::j_any(alpha + 1.0, x);
}

inline double bessel_y(double alpha, double x) {
    BesselOrder::of(alpha);
    if (!(x > 0.0)) throw error(errc::domain, "bessel_y: x must be > 0");
    return detail::y_any(alpha, x);
}

inline double bessel_y_prime(double alpha, double x) {
    BesselOrder::of(alpha);
    if (!(x > 0.0)) throw error(errc::domain, "bessel_y_prime: x must be > 0");
    return alpha / x * detail::y_any(alpha, x) - detail::y_any(alpha + 1.0, x);
}

inline std::complex<double> hankel_h1(double alpha, double x) { return {bessel_j(alpha, x), bessel_y(alpha, x)}; }
inline std::complex<double> hankel_h2(double alpha, double x) { return {bessel_j(alpha, x), -bessel_y(alpha, x)}; }
inline std::complex<double> hankel_h1_prime(double alpha, double x) {
    return {bessel_j_prime(alpha, x), bessel_y_prime(alpha, x)};
}
inline std::complex<double> hankel_h2_prime(double alpha, double x) {
    return {bessel_j_prime(alpha, x), -bessel_y_prime(alpha, x)};
}

inline double bessel_i(double alpha, double x) {
    BesselOrder::of(alpha);
    detail::require_x(x, "bessel_i");
    if (x == 0.0 && alpha < 0.0) throw error(errc::domain, "bessel_i: x = 0 needs alpha >= 0");
    return detail::i_series(alpha, x);
}

inline double bessel_i_prime(double alpha, double x) {
    BesselOrder::of(alpha);
    if (!(x > 0.0)) throw error(errc::domain, "bessel_i_prime: x must be > 0");
    return detail::i_series(alpha + 1.0, x) + alpha / x * detail::i_series(alpha, x);
}

inline double bessel_k(double alpha, double x) {
    if (BesselOrder::of(alpha).is_integer)
        throw error(errc::unsupported_order, "bessel_k: integer order not provided");
    if (!(x > 0.0)) throw error(errc::domain, "bessel_k: x must be > 0");
    return std::exp(-x) * detail::k_integral(alpha, x, 0);
}

inline double bessel_k_prime(double alpha, double x) {
    if (BesselOrder::of(alpha).is_integer)
        throw error(errc::unsupported_order, "bessel_k_prime: integer order not provided");
    if (!(x > 0.0)) throw error(errc::domain, "bessel_k_prime: x must be > 0");
    return -std::exp(-x) * detail::k_integral(alpha, x, 1);
}

inline double bessel_zero(double alpha, int k) {
    BesselOrder::of(alpha);
    if (k < 1) throw error(errc::indexing, "bessel_zero: k must be >= 1");
    const double mu = 4.0 * alpha * alpha;
    const double b = (k + alpha / 2.0 - 0.25) * std::numbers::pi;
    const double e = 8.0 * b;
    double x = b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
    if (!(x > 0.0)) x = 0.5 * b;
    for (int it = 0; it < 60; ++it) {
        const double dx = detail::j_any(alpha, x) /
                          (alpha / x * detail::j_any(alpha, x) - detail::j_any(alpha + 1.0, x));
        x -= dx;
        if (!(x > 0.0)) break;
        if (std::abs(dx) < 1e-13 * x) {
            const double j = detail::j_any(alpha, x);
            return x - j / (alpha / x * j - detail::j_any(alpha + 1.0, x));
        }
    }
    throw error(errc::numerical, "bessel_zero: Newton did not converge");
}

}  // namespace mjw
