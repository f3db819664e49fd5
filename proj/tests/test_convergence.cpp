#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"

using namespace mjw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("fit_loglog_slope recovers exact power laws") {
    const std::vector<int> n{4, 8, 16, 32};
    std::vector<double> e;
    for (int k : n) e.push_back(3.0 * std::pow(k, -1.5));
    CHECK_THAT(fit_loglog_slope(n, e), WithinAbs(-1.5, 1e-12));
    CHECK_THROWS_AS(fit_loglog_slope(std::vector<int>{4}, std::vector<double>{1.0}), error);
    CHECK_THROWS_AS(require_increasing(std::vector<int>{4, 4}), error);
    CHECK_THROWS_AS(require_increasing(std::vector<int>{0, 4}), error);
}

TEST_CASE("outer rate fits for two nonsymmetric weights at two points") {
    std::vector<int> ns;
    for (int n = 8; n <= 96; n += 8) ns.push_back(n);
    for (const auto& w : {test::test_weight(), test::test_weight2()}) {
        const SzegoData s(w);
        const auto t = stieltjes_recurrence(w, 96);
        for (cplx z : {cplx(1.5, 0.5), cplx(-1.3, -0.8)}) {
            CHECK(outer_study(s, t, z, 0, ns).fitted_slope <= -0.9);
            CHECK(outer_study(s, t, z, 1, ns).fitted_slope <= -1.9);
            CHECK(outer_study(s, t, z, 2, ns).fitted_slope <= -2.8);
        }
    }
}

TEST_CASE("gamma, a_n and b_n studies") {
    std::vector<int> ns;
    for (int n = 8; n <= 96; n += 8) ns.push_back(n);
    const SzegoData s(test::test_weight2());
    const auto t = stieltjes_recurrence(s.weight(), 97);
    const auto g = gamma_study(s, t, ns);
    CHECK(g.pass);
    CHECK_THAT(g.constant_estimate, WithinAbs(asym_coeffs(s).Gamma1, 5e-3));
    CHECK(an_study(s, t, ns).pass);
    CHECK(bn_study(s, t, ns).pass);
    const SzegoData leg(test::legendre());
    const auto tl = stieltjes_recurrence(leg.weight(), 97);
    const auto b = bn_study(leg, tl, ns);
    CHECK(b.pass);  // exact zero within the floor
}

TEST_CASE("hankel study on a weighted Jacobi weight") {
    std::vector<int> ns;
    for (int n = 10; n <= 100; n += 10) ns.push_back(n);
    const SzegoData s(test::test_weight());
    const auto t = stieltjes_recurrence(s.weight(), 101);
    const auto r = hankel_study(s, t, ns);
    CHECK(r.pass);
    CHECK(std::isfinite(r.constant_estimate));
}

TEST_CASE("bulk and edge studies") {
    const SzegoData s(test::test_weight());
    const auto t = stieltjes_recurrence(s.weight(), 101);
    std::vector<double> xs, us;
    for (int i = 0; i <= 60; ++i) xs.push_back(-0.6 + 0.02 * i);
    for (int i = 0; i <= 22; ++i) us.push_back(0.5 + 0.25 * i);
    CHECK(bulk_study(s, t, std::vector<int>{10, 20, 40, 60, 80}, xs).pass);
    CHECK(edge_study(s, t, std::vector<int>{20, 40, 60, 80, 100}, us).pass);
}

TEST_CASE("zero convergence") {
    const auto t = stieltjes_recurrence(test::legendre(), 100);
    const auto r = zero_convergence_check(t, 0.0, std::vector<int>{20, 40, 60, 80, 100}, 1);
    CHECK(r.pass);
    CHECK_THAT(r.constant_estimate, WithinRel(std::pow(bessel_zero(0.0, 1), 2) / 2, 0.02));
    const auto r2 = zero_convergence_check(t, 0.0, std::vector<int>{40, 60, 80, 100}, 3);
    CHECK(r2.pass);
    CHECK_THROWS_AS(zero_convergence_check(t, 0.0, std::vector<int>{8, 16}, 3), error);
}
