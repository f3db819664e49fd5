#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"

using namespace mjw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

static double beta_moment(int k, double a, double b) {
    // int x^k (1-x)^a (1+x)^b dx via (k+a+b+2) m_{k+1} = k m_{k-1} + (b-a) m_k
    double prev = 0.0;
    double m = std::exp((a + b + 1) * std::numbers::ln2 + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
    for (int j = 0; j < k; ++j) {
        const double next = (j * prev + (b - a) * m) / (j + a + b + 2);
        prev = m;
        m = next;
    }
    return m;
}

TEST_CASE("tridiag_eigen diagonalizes a small matrix") {
    const auto r = tridiag_eigen({2.0, 2.0, 2.0}, {1.0, 1.0});
    std::vector<double> ev = r.values;
    std::sort(ev.begin(), ev.end());
    CHECK_THAT(ev[0], WithinAbs(2 - std::sqrt(2.0), 1e-14));
    CHECK_THAT(ev[1], WithinAbs(2.0, 1e-14));
    CHECK_THAT(ev[2], WithinAbs(2 + std::sqrt(2.0), 1e-14));
}

TEST_CASE("gauss_jacobi examples") {
    const auto g1 = gauss_jacobi(1, 0, 0);
    CHECK_THAT(g1.nodes[0], WithinAbs(0.0, 1e-15));
    CHECK_THAT(g1.weights[0], WithinAbs(2.0, 1e-14));
    auto g2 = gauss_jacobi(2, 0, 0);
    std::vector<double> xs = g2.nodes;
    std::sort(xs.begin(), xs.end());
    CHECK_THAT(xs[0], WithinAbs(-1 / std::sqrt(3.0), 1e-14));
    CHECK_THAT(xs[1], WithinAbs(1 / std::sqrt(3.0), 1e-14));
    CHECK_THAT(g2.weights[0], WithinAbs(1.0, 1e-14));
    CHECK_THAT(g2.weights[1], WithinAbs(1.0, 1e-14));
}

TEST_CASE("gauss_jacobi degree exactness against Beta moments") {
    for (auto [a, b] : {std::pair{0.3, -0.4}, {0.0, 0.0}, {-0.5, -0.5}, {2.0, 0.7}}) {
        for (int n : {1, 5, 12}) {
            const auto g = gauss_jacobi(n, a, b);
            for (int k = 0; k <= 2 * n - 1; ++k) {
                double q = 0.0;
                for (int i = 0; i < n; ++i) q += g.weights[i] * std::pow(g.nodes[i], k);
                const double ref = beta_moment(k, a, b);
                CHECK(std::abs(q - ref) <= 1e-12 * std::max(1.0, std::abs(beta_moment(0, a, b))));
            }
        }
    }
}

TEST_CASE("stieltjes_recurrence: classical recurrences") {
    const auto leg = stieltjes_recurrence(test::legendre(), 40);
    const auto che = stieltjes_recurrence(test::chebyshev(), 40);
    const auto jac = stieltjes_recurrence(test::jacobi(1, 0), 40);
    for (int n = 1; n <= 40; ++n) {
        CHECK_THAT(leg.a(n), WithinAbs(n / std::sqrt(4.0 * n * n - 1), 1e-12));
        CHECK_THAT(che.a(n), WithinAbs(n == 1 ? 1 / std::sqrt(2.0) : 0.5, 1e-12));
    }
    for (int n = 0; n < 40; ++n) {
        CHECK_THAT(leg.b(n), WithinAbs(0.0, 1e-12));
        CHECK_THAT(che.b(n), WithinAbs(0.0, 1e-12));
        CHECK_THAT(jac.b(n), WithinAbs(-1.0 / ((2 * n + 1) * (2 * n + 3)), 1e-11));
    }
}

TEST_CASE("RecurrenceTable invariants") {
    const auto sym = test::exp_weight(0.4, 0.4, {0.0, 0.0, 0.6});
    for (const auto& w : {test::test_weight(), test::test_weight2(), sym}) {
        const auto t = stieltjes_recurrence(w, 40);
        for (int n = 1; n <= 40; ++n) {
            CHECK(t.a(n) > 0.0);
            CHECK_THAT(t.log_gamma(n), WithinAbs(t.log_gamma(n - 1) - std::log(t.a(n)), 1e-12));
        }
        CHECK(std::abs(t.a(40) - 0.5) < 0.01);
        CHECK(std::abs(t.b(39)) < 0.01);
        CHECK_THROWS_AS(t.a(0), error);
        CHECK_THROWS_AS(t.a(41), error);
        CHECK_THROWS_AS(t.b(40), error);
    }
    const auto ts = stieltjes_recurrence(sym, 40);
    for (int n = 0; n < 40; ++n) CHECK(std::abs(ts.b(n)) < 1e-10);
}

TEST_CASE("orthonormality under an independent quadrature") {
    const auto w = test::test_weight();
    const auto t = stieltjes_recurrence(w, 20);
    const auto g = gauss_jacobi(80, 0.3, -0.4);
    std::vector<std::vector<double>> p(21, std::vector<double>(g.nodes.size()));
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (int n = 0; n <= 20; ++n)
            p[n][i] = eval_monic(t, n, g.nodes[i]).real_value() * std::exp(t.log_gamma(n));
    for (int n = 0; n <= 20; ++n)
        for (int m = 0; m <= n; ++m) {
            double acc = 0.0;
            for (std::size_t i = 0; i < g.nodes.size(); ++i) acc += g.weights[i] * w.h(g.nodes[i]) * p[n][i] * p[m][i];
            CHECK_THAT(acc, WithinAbs(n == m ? 1.0 : 0.0, 1e-10));
        }
}

TEST_CASE("eval_monic examples") {
    const auto leg = stieltjes_recurrence(test::legendre(), 20);
    const auto che = stieltjes_recurrence(test::chebyshev(), 20);
    CHECK(eval_monic(leg, 0, 0.3).real_value() == 1.0);
    CHECK_THAT(eval_monic(che, 10, std::cos(0.4)).real_value(), WithinAbs(std::ldexp(std::cos(4.0), -9), 1e-12));
    CHECK_THAT(eval_monic(leg, 2, 0.5).real_value(), WithinAbs(-1.0 / 12.0, 1e-15));
    const cplx z(1.5, 0.5);
    const cplx v = eval_monic(leg, 2, z).value();
    CHECK(std::abs(v - (z * z - 1.0 / 3.0)) < 1e-14);
}

TEST_CASE("eval_monic stays finite in log space at high degree") {
    const auto t = stieltjes_recurrence(test::legendre(), 200);
    const auto v = eval_monic(t, 200, cplx(50.0, 20.0));
    CHECK(std::isfinite(v.log_abs));
    CHECK(v.log_abs > 700.0);
    CHECK_THROWS_AS(v.value(), error);
}

TEST_CASE("hankel_log_det examples") {
    const auto leg = stieltjes_recurrence(test::legendre(), 30);
    CHECK_THAT(hankel_log_det(leg, 0), WithinAbs(std::log(2.0), 1e-14));
    CHECK_THAT(hankel_log_det(leg, 1), WithinAbs(std::log(4.0 / 3.0), 1e-14));
    const auto t = stieltjes_recurrence(test::test_weight(), 30);
    for (int n = 1; n < 30; ++n)
        CHECK_THAT(hankel_log_det(t, n) - hankel_log_det(t, n - 1), WithinAbs(-2 * t.log_gamma(n), 1e-11));
}

TEST_CASE("polynomial_zeros examples") {
    const auto leg = stieltjes_recurrence(test::legendre(), 20);
    const auto z2 = polynomial_zeros(leg, 2);
    CHECK_THAT(z2[0], WithinAbs(1 / std::sqrt(3.0), 1e-14));
    CHECK_THAT(z2[1], WithinAbs(-1 / std::sqrt(3.0), 1e-14));
    const auto che = stieltjes_recurrence(test::chebyshev(), 20);
    const auto z8 = polynomial_zeros(che, 8);
    for (int k = 1; k <= 8; ++k) CHECK_THAT(z8[k - 1], WithinAbs(std::cos((2 * k - 1) * std::numbers::pi / 16), 1e-14));
    const auto z15 = polynomial_zeros(leg, 15);
    for (int k = 0; k < 15; ++k) CHECK_THAT(z15[k], WithinAbs(-z15[14 - k], 1e-12));
}

TEST_CASE("zeros lie inside (-1,1) and interlace") {
    const auto t = stieltjes_recurrence(test::test_weight(), 30);
    for (int n = 2; n <= 30; ++n) {
        const auto hi = polynomial_zeros(t, n);
        const auto lo = polynomial_zeros(t, n - 1);
        CHECK(hi.front() < 1.0);
        CHECK(hi.back() > -1.0);
        for (int k = 0; k < n - 1; ++k) {
            CHECK(hi[k] > lo[k]);
            CHECK(lo[k] > hi[k + 1]);
        }
    }
}
