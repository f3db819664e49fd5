#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "mjw/errors.hpp"
#include "mjw/spectral.hpp"

namespace mjw {

enum class HKind { constant, exp_poly, positive_poly };

inline const char* to_string(HKind k) {
    switch (k) {
        case HKind::constant: return "constant";
        case HKind::exp_poly: return "exp_poly";
        case HKind::positive_poly: return "positive_poly";
    }
    return "?";
}

// Raw weight description. Polynomial coefficients are monomial, ascending powers.
struct WeightSpec {
    double alpha = 0.0;
    double beta = 0.0;
    HKind h_kind = HKind::constant;
    std::vector<double> h_coeffs{1.0};
    double margin = 0.5;
};

struct LogHSeries {
    ChebSeries series;
};

namespace detail {

template <class T>
T horner(const std::vector<double>& c, T x) {
    T acc{0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Chebyshev coefficients of a monomial-basis polynomial, by Horner in the T basis.
inline std::vector<double> monomial_to_cheb(const std::vector<double>& c) {
    std::vector<double> s{c.back()};
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        std::vector<double> t(s.size() + 1, 0.0);
        // x T_0 = T_1, x T_j = (T_{j+1} + T_{j-1}) / 2
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j == 0) {
                t[1] += s[0];
            } else {
                t[j + 1] += 0.5 * s[j];
                t[j - 1] += 0.5 * s[j];
            }
        }
        t[0] += c[k];
        s = std::move(t);
    }
    return s;
}

}  // namespace detail

// A WeightSpec that passed validate(); the only way to obtain one.
class Weight {
public:
    const WeightSpec& spec() const { return spec_; }
    double alpha() const { return spec_.alpha; }
    double beta() const { return spec_.beta; }
    double margin() const { return spec_.margin; }

    template <class T>
    T h(T z) const {
        switch (spec_.h_kind) {
            case HKind::constant: return T(spec_.h_coeffs[0]);
            case HKind::exp_poly: return std::exp(detail::horner(spec_.h_coeffs, z));
            case HKind::positive_poly: return detail::horner(spec_.h_coeffs, z);
        }
        return T(0);
    }

    // Single-valued log h on U: exact for exp_poly, principal log otherwise (Re h > 0 there).
    template <class T>
    T log_h(T z) const {
        switch (spec_.h_kind) {
            case HKind::constant: return T(std::log(spec_.h_coeffs[0]));
            case HKind::exp_poly: return detail::horner(spec_.h_coeffs, z);
            case HKind::positive_poly: return std::log(detail::horner(spec_.h_coeffs, z));
        }
        return T(0);
    }

    // Ellipse used for certification; it lies inside U.
    EllipseContour validation_ellipse() const { return {1.0 + spec_.margin, 2048}; }

private:
    explicit Weight(WeightSpec s) : spec_(std::move(s)) {}
    friend Weight validate(WeightSpec spec);
    WeightSpec spec_;
};

inline Weight validate(WeightSpec spec) {
    if (!std::isfinite(spec.alpha) || !(spec.alpha > -1.0))
        throw error(errc::parameter, "weight: alpha must be > -1");
    if (!std::isfinite(spec.beta) || !(spec.beta > -1.0))
        throw error(errc::parameter, "weight: beta must be > -1");
    if (!(spec.margin > 0.0 && spec.margin < 1.0))
        throw error(errc::parameter, "weight: margin must lie in (0,1)");
    if (spec.h_coeffs.empty())
        throw error(errc::parameter, "weight: h coefficients must be nonempty");
    for (double c : spec.h_coeffs)
        if (!std::isfinite(c)) throw error(errc::parameter, "weight: non-finite h coefficient");
    if (spec.h_kind == HKind::constant && spec.h_coeffs.size() != 1)
        throw error(errc::parameter, "weight: constant h takes exactly one coefficient");
    while (spec.h_coeffs.size() > 1 && spec.h_coeffs.back() == 0.0) spec.h_coeffs.pop_back();

    Weight w(std::move(spec));
    constexpr int samples = 2048;
    for (int j = 0; j < samples; ++j) {
        const double x = -1.0 + 2.0 * j / (samples - 1);
        const double hx = w.h(x);
        if (!(hx > 0.0) || !std::isfinite(hx))
            throw error(errc::analyticity, "weight: h not strictly positive on [-1,1]");
    }
    // Re h is harmonic, so its minimum over the closed ellipse sits on the boundary.
    const EllipseContour e = w.validation_ellipse();
    for (int j = 0; j < e.nodes; ++j) {
        const cplx hz = w.h(e.point(2.0 * std::numbers::pi * j / e.nodes));
        if (!(hz.real() > 0.0) || !std::isfinite(hz.imag()))
            throw error(errc::analyticity, "weight: Re h <= 0 on the validation ellipse");
    }
    return w;
}

inline double weight_eval(const Weight& w, double x) {
    if (!(x > -1.0 && x < 1.0)) throw error(errc::domain, "weight_eval: x outside (-1,1)");
    return std::pow(1.0 - x, w.alpha()) * std::pow(1.0 + x, w.beta()) * w.h(x);
}

inline bool on_real_rays(cplx z) { return z.imag() == 0.0 && std::abs(z.real()) >= 1.0; }

inline cplx weight_continuation(const Weight& w, cplx z) {
    if (on_real_rays(z)) throw error(errc::branch, "weight_continuation: z on a cut");
    return std::pow(1.0 - z, w.alpha()) * std::pow(1.0 + z, w.beta()) * w.h(z);
}

inline LogHSeries logh_series(const Weight& w, int m = 64) {
    const auto& s = w.spec();
    switch (s.h_kind) {
        case HKind::constant: return {ChebSeries{{std::log(s.h_coeffs[0])}, 0.0}};
        case HKind::exp_poly: return {ChebSeries{detail::monomial_to_cheb(s.h_coeffs), 0.0}};
        case HKind::positive_poly:
            return {cheb_transform([&](double x) { return w.log_h(x); }, m)};
    }
    return {};
}

}  // namespace mjw
