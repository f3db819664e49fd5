#include <catch_amalgamated.hpp>

#include <cmath>

#include "fixtures.hpp"

using namespace mjw;
using Catch::Matchers::WithinAbs;

TEST_CASE("cheb_transform reproduces low-degree polynomials") {
    const auto one = cheb_transform([](double) { return 1.0; }, 8);
    const auto lin = cheb_transform([](double x) { return x; }, 8);
    const auto sq = cheb_transform([](double x) { return x * x; }, 8);
    for (int k = 0; k <= 8; ++k) {
        CHECK_THAT(one.coeffs[k], WithinAbs(k == 0 ? 1.0 : 0.0, 1e-14));
        CHECK_THAT(lin.coeffs[k], WithinAbs(k == 1 ? 1.0 : 0.0, 1e-14));
        CHECK_THAT(sq.coeffs[k], WithinAbs(k == 0 || k == 2 ? 0.5 : 0.0, 1e-14));
    }
    CHECK(sq.tail_bound >= 0.0);
}

TEST_CASE("cheb_transform rejects bad input") {
    CHECK_THROWS_AS(cheb_transform([](double) { return 1.0; }, 0), error);
    try {
        cheb_transform([](double x) { return std::log(x); }, 8);
        FAIL("expected invalid_function");
    } catch (const error& e) {
        CHECK(e.kind() == errc::invalid_function);
    }
}

TEST_CASE("clenshaw_eval examples") {
    CHECK_THAT(clenshaw_eval({{0, 0, 0, 1}, 0}, 0.5), WithinAbs(-1.0, 1e-15));
    for (double x : {-1.0, -0.3, 0.0, 0.8, 1.0}) CHECK(clenshaw_eval({{1.0}, 0}, x) == 1.0);
    CHECK_THAT(clenshaw_eval({{0.5, 0, 0.5}, 0}, 0.3), WithinAbs(0.09, 1e-15));
    CHECK_THROWS_AS(clenshaw_eval({{1.0}, 0}, 1.5), error);
}

TEST_CASE("chebU_eval examples and trigonometric identity") {
    CHECK(chebU_eval(0, 0.4) == 1.0);
    CHECK_THAT(chebU_eval(1, 0.5), WithinAbs(1.0, 1e-15));
    CHECK_THAT(chebU_eval(2, 0.0), WithinAbs(-1.0, 1e-15));
    for (double x : test::random_points(20, -0.99, 0.99)) {
        const double t = std::acos(x);
        for (int k = 0; k < 12; ++k)
            CHECK_THAT(chebU_eval(k, x), WithinAbs(std::sin((k + 1) * t) / std::sin(t), 1e-11));
    }
}

TEST_CASE("chebU_shifted_sum matches term-by-term evaluation") {
    const std::vector<double> a{0.7, 0.3, -0.2, 0.05, 0.01};
    for (double x : {-0.6, 0.1, 0.9}) {
        double direct = 0.0;
        for (std::size_t k = 1; k < a.size(); ++k) direct += a[k] * chebU_eval(int(k) - 1, x);
        CHECK_THAT(chebU_shifted_sum<double>(a, x), WithinAbs(direct, 1e-14));
    }
}

TEST_CASE("cheb round trip within tail bound at random points") {
    auto f = [](double x) { return std::exp(std::sin(2 * x)) / (2.0 + x); };
    const auto s = cheb_transform(f, 48);
    for (double x : test::random_points(100, -1, 1))
        CHECK(std::abs(clenshaw_eval(s, x) - f(x)) <= s.tail_bound + 1e-13);
}

TEST_CASE("contour_integral residue examples") {
    CHECK(std::abs(contour_integral([](cplx z) { return 1.0 / (z - 2.0); }, {1.2, 128})) < 1e-10);
    CHECK(std::abs(contour_integral([](cplx z) { return 1.0 / (z - 0.3); }, {1.2, 128}) - 1.0) < 1e-10);
    const auto F = [](cplx z) { return 0.5 * z / (sqrt_z2m1(z) * (z - 1.0)); };
    CHECK(std::abs(contour_integral(F, {1.3, 128}) - 0.5) < 1e-9);
}

TEST_CASE("contour_integral is rho invariant and converges under node doubling") {
    const auto F = [](cplx z) { return std::exp(0.4 * z) / (sqrt_z2m1(z) * (z + 1.0) * (z + 1.0)); };
    const cplx a = contour_integral(F, {1.2, 256});
    const cplx b = contour_integral(F, {1.45, 256});
    CHECK(std::abs(a - b) < 1e-9);
    CHECK(std::abs(contour_integral(F, {1.3, 512}) - contour_integral(F, {1.3, 256})) < 1e-11);
}

TEST_CASE("contour validation") {
    CHECK_THROWS_AS(contour_integral([](cplx) { return cplx(1); }, {1.0, 128}), error);
    CHECK_THROWS_AS(contour_integral([](cplx) { return cplx(1); }, {1.3, 15}), error);
    CHECK_THROWS_AS(contour_integral([](cplx) { return cplx(NAN); }, {1.3, 32}), error);
}

TEST_CASE("sqrt_z2m1 behaves like z at infinity and is odd") {
    const cplx z(3e5, -2e5);
    CHECK(std::abs(sqrt_z2m1(z) / z - 1.0) < 1e-10);
    for (cplx w : {cplx(0.3, 0.7), cplx(-2, 0.1), cplx(1.5, -0.2)})
        CHECK(std::abs(sqrt_z2m1(-w) + sqrt_z2m1(w)) < 1e-14);
}
