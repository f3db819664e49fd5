#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "mjw/errors.hpp"
#include "mjw/spectral.hpp"
#include "mjw/weight.hpp"

namespace mjw {

enum class Side { upper, lower };

inline double side_sign(Side s) { return s == Side::upper ? 1.0 : -1.0; }

inline bool on_interval(cplx z) { return z.imag() == 0.0 && std::abs(z.real()) <= 1.0; }

inline cplx phi(cplx z) {
    if (on_interval(z)) throw error(errc::branch, "phi: z on [-1,1]; use phi_boundary");
    return z + sqrt_z2m1(z);
}

inline cplx phi_tilde(cplx z) { return -phi(z); }

inline cplx phi_boundary(double x, Side side) {
    if (!(x > -1.0 && x < 1.0)) throw error(errc::domain, "phi_boundary: x outside (-1,1)");
    return {x, side_sign(side) * std::sqrt(1.0 - x * x)};
}

// a(z) = ((z-1)/(z+1))^{1/4}, principal fourth roots.
inline cplx a_fn(cplx z) { return std::pow(z - 1.0, 0.25) / std::pow(z + 1.0, 0.25); }

struct GF {
    cplx g;
    cplx f;
};

inline cplx f_eval(cplx z) {
    if (z.imag() == 0.0) {
        const double x = z.real();
        if (x <= -1.0) throw error(errc::branch, "f: z on (-inf,-1]");
        if (x == 1.0) return 0.0;
        if (x < 1.0) {
            const double t = std::acos(x);
            return -t * t / 4.0;
        }
    }
    const cplx g = std::log(phi(z));
    return g * g / 4.0;
}

inline GF g_f_eval(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 1.0) throw error(errc::branch, "g: z on (-inf,1]");
    const cplx g = std::log(phi(z));
    return {g, g * g / 4.0};
}

inline cplx f_tilde_eval(cplx z) { return f_eval(-z); }

inline GF g_f_tilde_eval(cplx z) {
    if (z.imag() == 0.0 && z.real() >= -1.0) throw error(errc::branch, "g~: z on [-1,inf)");
    const cplx g = std::log(phi_tilde(z));
    return {g, g * g / 4.0};
}

struct SzegoOptions {
    int logh_degree = 64;
    int cd_order = 32;
    EllipseContour contour{};
};

struct CDCoefficients {
    std::vector<double> c;
    std::vector<double> d;
};

namespace detail {

inline cplx ipow(cplx z, int k) {
    cplx r{1.0};
    for (; k > 0; k >>= 1, z *= z)
        if (k & 1) r *= z;
    return r;
}

// One coefficient; node count doubles until successive values agree to the rounding floor.
template <class F>
double refined_coefficient(F&& integrand, EllipseContour c) {
    ContourSum prev = contour_sum(integrand, c);
    for (;;) {
        if (c.nodes >= (1 << 16)) return prev.value.real();
        c.nodes *= 2;
        ContourSum next = contour_sum(integrand, c);
        const double floor = 64.0 * 2.220446049250313e-16 * std::max(next.magnitude, 1e-300);
        if (std::abs(next.value - prev.value) <= std::max(floor, 1e-15)) return next.value.real();
        prev = next;
    }
}

}  // namespace detail

inline CDCoefficients cd_coefficients(const Weight& w, int m, EllipseContour contour) {
    contour.check();
    if (m < 0) throw error(errc::parameter, "cd_coefficients: m must be >= 0");
    if (contour.rho > 1.0 + w.margin() + 1e-12)
        throw error(errc::contour, "cd_coefficients: contour leaves the analyticity region");
    CDCoefficients out;
    out.c.resize(m + 1);
    out.d.resize(m + 1);
    for (int n = 0; n <= m; ++n) {
        out.c[n] = detail::refined_coefficient(
            [&](cplx z) { return w.log_h(z) / (sqrt_z2m1(z) * detail::ipow(z - 1.0, n + 1)); }, contour);
        out.d[n] = detail::refined_coefficient(
            [&](cplx z) { return w.log_h(z) / (sqrt_z2m1(z) * detail::ipow(z + 1.0, n + 1)); }, contour);
    }
    return out;
}

class SzegoData {
public:
    SzegoData(Weight w, const SzegoOptions& opt = {})
        : weight_(std::move(w)), logh_(logh_series(weight_, opt.logh_degree)) {
        const double a0 = logh_.series.coeffs[0];
        D_inf_ = std::pow(2.0, -(alpha() + beta()) / 2.0) * std::exp(a0 / 2.0);
        cd_ = cd_coefficients(weight_, opt.cd_order, opt.contour);
    }

    const Weight& weight() const { return weight_; }
    const LogHSeries& logh() const { return logh_; }
    double alpha() const { return weight_.alpha(); }
    double beta() const { return weight_.beta(); }
    double D_inf() const { return D_inf_; }
    const std::vector<double>& c() const { return cd_.c; }
    const std::vector<double>& d() const { return cd_.d; }

private:
    Weight weight_;
    LogHSeries logh_;
    double D_inf_ = 1.0;
    CDCoefficients cd_;
};

inline double szego_D_inf(const SzegoData& s) { return s.D_inf(); }

inline cplx szego_D(const SzegoData& s, cplx z) {
    const cplx p = phi(z);
    const auto& a = s.logh().series.coeffs;
    // sum_{k>=1} a_k phi^{-k} by Horner in 1/phi
    const cplx u = 1.0 / p;
    cplx acc{0.0};
    for (std::size_t k = a.size(); k-- > 1;) acc = (acc + a[k]) * u;
    const cplx logD = 0.5 * s.alpha() * std::log(z - 1.0) + 0.5 * s.beta() * std::log(z + 1.0) -
                      0.5 * (s.alpha() + s.beta()) * std::log(p) + 0.5 * a[0] + 0.5 * acc;
    return std::exp(logD);
}

inline constexpr double boundary_eps = 1e-8;

// D_+ / D_- from offsets i*eps and i*eps/2 with one Richardson step.
inline cplx szego_D_boundary(const SzegoData& s, double x, Side side) {
    if (!(x > -1.0 && x < 1.0)) throw error(errc::domain, "szego_D_boundary: x outside (-1,1)");
    const double sg = side_sign(side);
    const cplx d1 = szego_D(s, cplx(x, sg * boundary_eps));
    const cplx d2 = szego_D(s, cplx(x, sg * boundary_eps / 2.0));
    return 2.0 * d2 - d1;
}

inline double psi_phase(const SzegoData& s, double x) {
    if (!(x > -1.0 && x < 1.0)) throw error(errc::domain, "psi_phase: x outside (-1,1)");
    const double th = std::acos(x);
    const double pv = chebU_shifted_sum<double>(s.logh().series.coeffs, x);
    return 0.5 * (s.alpha() * (th - std::numbers::pi) + s.beta() * th) +
           0.5 * std::sqrt(1.0 - x * x) * pv;
}

inline std::pair<double, double> zeta_12(const SzegoData& s, double x) {
    const double ps = psi_phase(s, x);
    const double th = std::acos(x);
    const double base = ps + s.alpha() * std::numbers::pi / 2.0;
    return {base + th / 2.0, base - th / 2.0};
}

inline cplx W_eval(const Weight& w, cplx z) {
    if (z.imag() == 0.0 && z.real() <= 1.0) throw error(errc::branch, "W: z on (-inf,1]");
    return std::pow(z - 1.0, w.alpha() / 2.0) * std::pow(z + 1.0, w.beta() / 2.0) * std::sqrt(w.h(z));
}

inline cplx W_tilde_eval(const Weight& w, cplx z) {
    if (z.imag() == 0.0 && z.real() >= -1.0) throw error(errc::branch, "W~: z on [-1,inf)");
    return std::pow(1.0 - z, w.alpha() / 2.0) * std::pow(-1.0 - z, w.beta() / 2.0) * std::sqrt(w.h(z));
}

// Boundary values of W on (-1,1) via signed-zero imaginary parts.
inline cplx W_boundary(const Weight& w, double x, Side side) {
    if (!(x > -1.0 && x < 1.0)) throw error(errc::domain, "W_boundary: x outside (-1,1)");
    const double im = side == Side::upper ? 0.0 : -0.0;
    const cplx z(x, im);
    return std::pow(z - 1.0, w.alpha() / 2.0) * std::pow(z + 1.0, w.beta() / 2.0) * std::sqrt(w.h(x));
}

inline cplx WD_expansion_check(const SzegoData& s, cplx z) {
    if (!(std::abs(z - 1.0) < s.weight().margin()))
        throw error(errc::truncation, "WD_expansion_check: |z-1| >= margin");
    const auto& c = s.c();
    cplx sum{0.0};
    for (std::size_t n = c.size(); n-- > 0;) sum = sum * (z - 1.0) + c[n];
    return std::pow(phi(z), s.alpha() + s.beta()) * std::exp(sqrt_z2m1(z) * sum);
}

inline cplx WD_tilde_expansion_check(const SzegoData& s, cplx z) {
    if (!(std::abs(z + 1.0) < s.weight().margin()))
        throw error(errc::truncation, "WD_tilde_expansion_check: |z+1| >= margin");
    const auto& d = s.d();
    cplx sum{0.0};
    for (std::size_t n = d.size(); n-- > 0;) sum = sum * (z + 1.0) + d[n];
    return std::pow(phi_tilde(z), s.alpha() + s.beta()) * std::exp(sqrt_z2m1(z) * sum);
}

}  // namespace mjw
