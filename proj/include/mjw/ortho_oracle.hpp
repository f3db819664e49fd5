#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "mjw/errors.hpp"
#include "mjw/spectral.hpp"
#include "mjw/weight.hpp"

namespace mjw {

struct TridiagEigen {
    std::vector<double> values;
    std::vector<double> first;  // first component of each normalized eigenvector
};

// Implicit QL with Wilkinson-type shifts; only the first row of the eigenvector matrix is tracked.
inline TridiagEigen tridiag_eigen(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    e.resize(n, 0.0);
    if (n > 0) e[n - 1] = 0.0;
    std::vector<double> z(n, 0.0);
    if (n > 0) z[0] = 1.0;
    const long max_iter = 50L * std::max(n, 1);
    long iter = 0;
    constexpr double eps = 2.220446049250313e-16;
    for (int l = 0; l < n; ++l) {
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > max_iter)
                throw error(errc::numerical, "tridiag_eigen: no convergence");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            int i = m - 1;
            bool deflated = false;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    return {std::move(d), std::move(z)};
}

struct QuadratureRule {
    std::vector<double> nodes;    // increasing
    std::vector<double> weights;
    int exactness = 0;
};

inline double jacobi_log_mu0(double alpha, double beta) {
    return (alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
           std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0);
}

// Monic Jacobi recurrence: b_n and a_n^2.
inline double jacobi_b(int n, double al, double be) {
    if (n == 0) return (be - al) / (al + be + 2.0);
    const double s = 2.0 * n + al + be;
    return (be * be - al * al) / (s * (s + 2.0));
}

inline double jacobi_a2(int n, double al, double be) {
    if (n == 1)
        return 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + al + be) * (2.0 + al + be) * (3.0 + al + be));
    const double s = 2.0 * n + al + be;
    return 4.0 * n * (n + al) * (n + be) * (n + al + be) / (s * s * (s + 1.0) * (s - 1.0));
}

inline QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw error(errc::parameter, "gauss_jacobi: n must be >= 1");
    if (!(alpha > -1.0 && beta > -1.0))
        throw error(errc::parameter, "gauss_jacobi: alpha, beta must be > -1");
    std::vector<double> d(n), e(n, 0.0);
    for (int k = 0; k < n; ++k) d[k] = jacobi_b(k, alpha, beta);
    for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(jacobi_a2(k, alpha, beta));
    auto eig = tridiag_eigen(std::move(d), std::move(e));
    const double mu0 = std::exp(jacobi_log_mu0(alpha, beta));
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return eig.values[i] < eig.values[j]; });
    QuadratureRule q;
    q.exactness = 2 * n - 1;
    for (int i : idx) {
        q.nodes.push_back(eig.values[i]);
        q.weights.push_back(mu0 * eig.first[i] * eig.first[i]);
    }
    return q;
}

class RecurrenceTable {
public:
    RecurrenceTable(std::vector<double> a, std::vector<double> b, double log_mu0)
        : a_(std::move(a)), b_(std::move(b)), log_mu0_(log_mu0) {
        log_gamma_.resize(a_.size());
        log_gamma_[0] = -0.5 * log_mu0_;
        for (std::size_t n = 1; n < a_.size(); ++n) log_gamma_[n] = log_gamma_[n - 1] - std::log(a_[n]);
    }

    int N() const { return static_cast<int>(b_.size()); }
    double a(int n) const { return a_.at(check(n, 1, N())); }
    double b(int n) const { return b_.at(check(n, 0, N() - 1)); }
    double log_gamma(int n) const { return log_gamma_.at(check(n, 0, N())); }
    double log_mu0() const { return log_mu0_; }

private:
    static std::size_t check(int n, int lo, int hi) {
        if (n < lo || n > hi)
            throw error(errc::indexing, "RecurrenceTable: index " + std::to_string(n) + " out of range");
        return static_cast<std::size_t>(n);
    }
    std::vector<double> a_;  // a_[0] unused
    std::vector<double> b_;
    std::vector<double> log_gamma_;
    double log_mu0_;
};

inline RecurrenceTable stieltjes_recurrence(const Weight& w, int N) {
    if (N < 1) throw error(errc::parameter, "stieltjes_recurrence: N must be >= 1");
    const auto q = gauss_jacobi(2 * N + 32, w.alpha(), w.beta());
    const std::size_t nq = q.nodes.size();
    std::vector<double> W(nq);
    for (std::size_t i = 0; i < nq; ++i) W[i] = q.weights[i] * w.h(q.nodes[i]);
    const double mu0 = std::accumulate(W.begin(), W.end(), 0.0);

    std::vector<double> a(N + 1, 0.0), b(N, 0.0);
    std::vector<double> prev(nq, 0.0), cur(nq, 1.0 / std::sqrt(mu0)), next(nq);
    for (int n = 0; n < N; ++n) {
        double bn = 0.0;
        for (std::size_t i = 0; i < nq; ++i) bn += W[i] * q.nodes[i] * cur[i] * cur[i];
        b[n] = bn;
        double norm2 = 0.0;
        for (std::size_t i = 0; i < nq; ++i) {
            next[i] = (q.nodes[i] - bn) * cur[i] - a[n] * prev[i];
            norm2 += W[i] * next[i] * next[i];
        }
        if (!(norm2 > 0.0) || !std::isfinite(norm2))
            throw precision_exhausted(n, "stieltjes_recurrence: norm lost positivity at degree " +
                                             std::to_string(n + 1));
        a[n + 1] = std::sqrt(norm2);
        for (std::size_t i = 0; i < nq; ++i) next[i] /= a[n + 1];
        std::swap(prev, cur);
        std::swap(cur, next);
    }
    return RecurrenceTable(std::move(a), std::move(b), std::log(mu0));
}

// pi_n = phase * exp(log_abs).
struct MonicValue {
    double log_abs = 0.0;
    cplx phase{1.0, 0.0};

    cplx value() const {
        if (log_abs > std::log(1e300)) throw error(errc::numerical, "MonicValue: |pi_n| >= 1e300");
        return phase * std::exp(log_abs);
    }
    double real_value() const { return value().real(); }
};

inline MonicValue eval_monic(const RecurrenceTable& t, int n, cplx z) {
    if (n < 0 || n > t.N()) throw error(errc::indexing, "eval_monic: n out of range");
    cplx p0{0.0}, p1{1.0};
    double scale = 0.0;
    for (int k = 0; k < n; ++k) {
        const double ak2 = k == 0 ? 0.0 : t.a(k) * t.a(k);
        const cplx p2 = (z - t.b(k)) * p1 - ak2 * p0;
        p0 = p1;
        p1 = p2;
        const double m = std::max(std::abs(p1), std::abs(p0));
        if (m > 1e100 || (m < 1e-100 && m > 0.0)) {
            p0 /= m;
            p1 /= m;
            scale += std::log(m);
        }
    }
    const double mag = std::abs(p1);
    if (mag == 0.0) return {-INFINITY, cplx(1.0, 0.0)};
    return {scale + std::log(mag), p1 / mag};
}

inline MonicValue eval_monic(const RecurrenceTable& t, int n, double x) {
    MonicValue v = eval_monic(t, n, cplx(x, 0.0));
    v.phase = cplx(v.phase.real() < 0 ? -1.0 : 1.0, 0.0);
    return v;
}

inline double hankel_log_det(const RecurrenceTable& t, int n) {
    if (n < 0 || n > t.N() - 1) throw error(errc::indexing, "hankel_log_det: n out of range");
    double s = t.log_mu0();
    for (int j = 1; j <= n; ++j) s -= 2.0 * t.log_gamma(j);
    return s;
}

inline std::vector<double> polynomial_zeros(const RecurrenceTable& t, int n) {
    if (n < 1 || n > t.N()) throw error(errc::indexing, "polynomial_zeros: n out of range");
    std::vector<double> d(n), e(n, 0.0);
    for (int k = 0; k < n; ++k) d[k] = t.b(k);
    for (int k = 1; k < n; ++k) e[k - 1] = t.a(k);
    auto z = tridiag_eigen(std::move(d), std::move(e)).values;
    std::sort(z.begin(), z.end(), std::greater<>());
    return z;
}

}  // namespace mjw
