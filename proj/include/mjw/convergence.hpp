#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "mjw/asymptotics.hpp"
#include "mjw/bessel.hpp"
#include "mjw/errors.hpp"
#include "mjw/ortho_oracle.hpp"
#include "mjw/szego.hpp"

namespace mjw {

struct ConvergenceReport {
    std::string quantity;
    std::vector<int> n;
    std::vector<double> error;
    double fitted_slope = 0.0;
    double target_slope = 0.0;
    double constant_estimate = 0.0;
    bool pass = false;
};

// Errors at or below this are treated as exact; the slope fit is then uninformative.
inline constexpr double exact_floor = 1e-10;

// Least-squares slope of log(err) against log(n).
inline double fit_loglog_slope(std::span<const int> n, std::span<const double> err) {
    if (n.size() != err.size() || n.size() < 2)
        throw error(errc::parameter, "fit_loglog_slope: need >= 2 matching points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double x = std::log(static_cast<double>(n[i]));
        const double y = std::log(std::max(err[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

inline void require_increasing(std::span<const int> ns) {
    if (ns.size() < 2) throw error(errc::parameter, "n-list needs at least two entries");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1) throw error(errc::parameter, "n-list entries must be >= 1");
        if (i > 0 && ns[i] <= ns[i - 1]) throw error(errc::parameter, "n-list must be strictly increasing");
    }
}

namespace detail {

inline ConvergenceReport finish(std::string q, std::vector<int> n, std::vector<double> err,
                                double target, double constant, bool extra_ok = true) {
    ConvergenceReport r{std::move(q), std::move(n), std::move(err), 0.0, target, constant, false};
    r.fitted_slope = fit_loglog_slope(r.n, r.error);
    const double mx = *std::max_element(r.error.begin(), r.error.end());
    r.pass = extra_ok && (r.fitted_slope <= target || mx <= exact_floor);
    return r;
}

inline double scaled_gamma(const SzegoData& s, const RecurrenceTable& t, int n) {
    return std::exp(t.log_gamma(n) + 0.5 * std::log(std::numbers::pi) + std::log(s.D_inf()) -
                    n * std::numbers::ln2);
}

// 2^n pi_n(x) for real x.
inline double scaled_monic(const RecurrenceTable& t, int n, double x) {
    const MonicValue v = eval_monic(t, n, x);
    return v.phase.real() * std::exp(v.log_abs + n * std::numbers::ln2);
}

}  // namespace detail

inline ConvergenceReport outer_study(const SzegoData& s, const RecurrenceTable& t, cplx z, int order,
                                     std::span<const int> ns) {
    require_increasing(ns);
    std::vector<double> err;
    for (int n : ns) {
        const MonicValue o = eval_monic(t, n, z);
        const MonicValue p = outer_prediction(s, z, n, order);
        err.push_back(std::abs(std::exp(p.log_abs - o.log_abs) * p.phase / o.phase - 1.0));
    }
    static constexpr double targets[] = {-0.9, -1.9, -2.8};
    const double c = err.back() * std::pow(double(ns.back()), order + 1);
    return detail::finish("outer", {ns.begin(), ns.end()}, std::move(err), targets[order], c);
}

inline ConvergenceReport gamma_study(const SzegoData& s, const RecurrenceTable& t, std::span<const int> ns,
                                     double tol = 5e-3) {
    require_increasing(ns);
    const double G1 = asym_coeffs(s).Gamma1;
    std::vector<double> err;
    double est = 0.0;
    for (int n : ns) {
        est = n * (detail::scaled_gamma(s, t, n) - 1.0);
        err.push_back(std::abs(est - G1));
    }
    return detail::finish("gamma", {ns.begin(), ns.end()}, std::move(err), -0.8, est, std::abs(est - G1) <= tol);
}

inline ConvergenceReport an_study(const SzegoData& s, const RecurrenceTable& t, std::span<const int> ns,
                                  double tol = 5e-3) {
    require_increasing(ns);
    const double A2 = asym_coeffs(s).A2;
    std::vector<double> err;
    double est = 0.0;
    for (int n : ns) {
        est = double(n) * n * (t.a(n) - 0.5);
        err.push_back(std::abs(est - A2));
    }
    return detail::finish("an", {ns.begin(), ns.end()}, std::move(err), -0.8, est, std::abs(est - A2) <= tol);
}

inline ConvergenceReport bn_study(const SzegoData& s, const RecurrenceTable& t, std::span<const int> ns,
                                  double tol = 5e-3) {
    require_increasing(ns);
    const double B2 = asym_coeffs(s).B2;
    std::vector<double> err;
    double est = 0.0;
    for (int n : ns) {
        est = double(n) * n * t.b(n);
        err.push_back(std::abs(est - B2));
    }
    return detail::finish("bn", {ns.begin(), ns.end()}, std::move(err), -0.8, est, std::abs(est - B2) <= tol);
}

// log D_n minus the explicit part; its limit is log C, which has no closed form.
inline double hankel_residual(const SzegoData& s, const RecurrenceTable& t, int n) {
    return hankel_log_det(t, n) - hankel_asymptotic(asym_coeffs(s), n).log_prediction;
}

inline ConvergenceReport hankel_study(const SzegoData& s, const RecurrenceTable& t, std::span<const int> ns) {
    require_increasing(ns);
    if (ns.front() < 2) throw error(errc::parameter, "hankel_study: n must be >= 2");
    std::vector<double> err;
    for (int n : ns) err.push_back(std::abs(hankel_residual(s, t, n) - hankel_residual(s, t, n - 1)));
    return detail::finish("hankel", {ns.begin(), ns.end()}, std::move(err), -0.8,
                          hankel_residual(s, t, ns.back()));
}

inline ConvergenceReport bulk_study(const SzegoData& s, const RecurrenceTable& t, std::span<const int> ns,
                                    std::span<const double> xs) {
    require_increasing(ns);
    std::vector<double> err;
    for (int n : ns) {
        double mx = 0.0;
        for (double x : xs) {
            const double pred = bulk_prediction(s, x, n) * std::ldexp(1.0, n);
            const double env = std::numbers::sqrt2 * s.D_inf() /
                               (std::sqrt(weight_eval(s.weight(), x)) * std::pow(1.0 - x * x, 0.25));
            mx = std::max(mx, std::abs(pred - detail::scaled_monic(t, n, x)) / env);
        }
        err.push_back(mx);
    }
    const double c = err.back() * ns.back();
    return detail::finish("bulk", {ns.begin(), ns.end()}, std::move(err), -0.8, c);
}

// Edge points x = cos(u/n) for u in us, so the Bessel argument n*arccos(x) = u is fixed.
inline ConvergenceReport edge_study(const SzegoData& s, const RecurrenceTable& t, std::span<const int> ns,
                                    std::span<const double> us) {
    require_increasing(ns);
    std::vector<double> err;
    for (int n : ns) {
        double mx = 0.0;
        for (double u : us) {
            const double x = std::cos(u / n);
            const double pred = edge_prediction(s, x, n) * std::ldexp(1.0, n);
            const double env = std::sqrt(std::numbers::pi) * s.D_inf() / std::sqrt(weight_eval(s.weight(), x)) *
                               std::sqrt(u) / std::pow(1.0 - x * x, 0.25) *
                               (std::abs(bessel_j(s.alpha(), u)) + std::abs(bessel_j_prime(s.alpha(), u)));
            mx = std::max(mx, std::abs(pred - detail::scaled_monic(t, n, x)) / env);
        }
        err.push_back(mx);
    }
    const double c = err.back() * ns.back();
    return detail::finish("edge", {ns.begin(), ns.end()}, std::move(err), -0.8, c);
}

inline ConvergenceReport zero_convergence_check(const RecurrenceTable& t, double alpha, std::span<const int> ns,
                                                int k, double rel_tol = 0.02) {
    require_increasing(ns);
    const double j = bessel_zero(alpha, k);
    const double target = j * j / 2.0;
    std::vector<double> err;
    double est = 0.0;
    for (int n : ns) {
        largest_zero_prediction(alpha, n, k);  // validates k against n
        const auto z = polynomial_zeros(t, n);
        est = double(n) * n * (1.0 - z[k - 1]);
        err.push_back(std::abs(est - target));
    }
    return detail::finish("zeros", {ns.begin(), ns.end()}, std::move(err), -0.8, est,
                          std::abs(est - target) <= rel_tol * target);
}

}  // namespace mjw
