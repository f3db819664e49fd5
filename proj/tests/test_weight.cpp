#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"

using namespace mjw;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

static errc kind_of(const WeightSpec& s) {
    try {
        validate(s);
    } catch (const error& e) {
        return e.kind();
    }
    FAIL("validate accepted an invalid spec");
    return errc::numerical;
}

TEST_CASE("validate accepts Legendre and rejects bad specs") {
    CHECK_NOTHROW(validate({0, 0, HKind::constant, {1.0}}));
    CHECK(kind_of({-1.5, 0, HKind::constant, {1.0}}) == errc::parameter);
    CHECK(kind_of({0, -1.0, HKind::constant, {1.0}}) == errc::parameter);
    CHECK(kind_of({0, 0, HKind::positive_poly, {0.0, 1.0}}) == errc::analyticity);
    CHECK(kind_of({0, 0, HKind::constant, {-2.0}}) == errc::analyticity);
    CHECK(kind_of({0, 0, HKind::constant, {1.0, 2.0}}) == errc::parameter);
    CHECK(kind_of({0, 0, HKind::exp_poly, {}}) == errc::parameter);
    CHECK(kind_of({0, 0, HKind::exp_poly, {0.0, NAN}}) == errc::parameter);
    CHECK(kind_of({0, 0, HKind::constant, {1.0}, 1.5}) == errc::parameter);
}

TEST_CASE("validate enforces Re h > 0 on the validation ellipse") {
    // 1 + x^2/4 > 0 on [-1,1] but vanishes at x = 2i, inside the rho = 3 ellipse (semi-minor 4/3).
    CHECK_NOTHROW(validate({0, 0, HKind::positive_poly, {1.0, 0.0, 0.25}, 0.5}));
    // 1 + 4x^2 vanishes at x = i/2
    CHECK(kind_of({0, 0, HKind::positive_poly, {1.0, 0.0, 4.0}, 0.9}) == errc::analyticity);
    // exp(8 x^2) rotates to negative real part on the ellipse
    CHECK(kind_of({0, 0, HKind::exp_poly, {0.0, 0.0, 8.0}, 0.5}) == errc::analyticity);
}

TEST_CASE("weight_eval examples") {
    CHECK(weight_eval(test::legendre(), 0.7) == 1.0);
    CHECK_THAT(weight_eval(test::chebyshev(), 0.0), WithinAbs(1.0, 1e-15));
    CHECK_THAT(weight_eval(test::jacobi(1, 2), 0.5), WithinAbs(1.125, 1e-15));
    CHECK_THROWS_AS(weight_eval(test::legendre(), 1.0), error);
}

TEST_CASE("weight_continuation examples") {
    CHECK(std::abs(weight_continuation(test::legendre(), {0, 1}) - 1.0) < 1e-15);
    CHECK(std::abs(weight_continuation(test::jacobi(1, 0), {0.5, 0.0}) - 0.5) < 1e-15);
    const auto w = test::exp_weight(0, 0, {0.0, 0.5});
    CHECK(std::abs(weight_continuation(w, {0, 1}) - std::exp(cplx(0, 0.5))) < 1e-15);
    CHECK_THROWS_AS(weight_continuation(w, {1.5, 0.0}), error);
}

TEST_CASE("weight_continuation agrees with weight_eval on (-1,1)") {
    for (const auto& w : {test::test_weight(), test::test_weight2(), test::jacobi(0.7, -0.2)})
        for (double x : test::random_points(100, -0.999, 0.999))
            CHECK_THAT(weight_continuation(w, {x, 0.0}).real(), WithinRel(weight_eval(w, x), 1e-13));
}

TEST_CASE("logh_series examples") {
    for (double a : logh_series(test::legendre()).series.coeffs) CHECK(a == 0.0);
    const auto e = logh_series(test::exp_weight(0, 0, {0.0, 0.5})).series.coeffs;
    CHECK_THAT(e[1], WithinAbs(0.5, 1e-15));
    for (std::size_t k = 0; k < e.size(); ++k)
        if (k != 1) CHECK(e[k] == 0.0);
    const auto q = logh_series(test::exp_weight(0, 0, {0.0, 0.0, 1.0})).series.coeffs;
    CHECK_THAT(q[0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(q[2], WithinAbs(0.5, 1e-15));
}

TEST_CASE("exp(clenshaw(log h)) reproduces h") {
    const auto p = validate({0.2, 0.1, HKind::positive_poly, {2.0, 0.5, 0.3}});
    for (const auto& w : {p, test::test_weight2()}) {
        const auto s = logh_series(w).series;
        for (double x : test::random_points(60, -1, 1))
            CHECK_THAT(std::exp(clenshaw_eval(s, x)), WithinRel(w.h(x), 1e-12));
    }
}

TEST_CASE("Szego condition integral is finite") {
    for (const auto& w : {test::legendre(), test::chebyshev(), test::test_weight(), test::jacobi(5.0, -0.9)}) {
        const int n = 400;
        double acc = 0.0;
        for (int k = 1; k <= n; ++k) acc += std::log(weight_eval(w, std::cos((2 * k - 1) * std::numbers::pi / (2 * n))));
        CHECK(std::isfinite(acc * std::numbers::pi / n));
    }
}
