#pragma once

#include <random>
#include <vector>

#include "mjw/mjw.hpp"

namespace mjw::test {

inline Weight jacobi(double a, double b) { return validate({a, b, HKind::constant, {1.0}}); }
inline Weight legendre() { return jacobi(0.0, 0.0); }
inline Weight chebyshev() { return jacobi(-0.5, -0.5); }
inline Weight exp_weight(double a, double b, std::vector<double> poly) {
    return validate({a, b, HKind::exp_poly, std::move(poly)});
}
// (0.3, -0.4, exp(0.5x)): the standard nonsymmetric test weight.
inline Weight test_weight() { return exp_weight(0.3, -0.4, {0.0, 0.5}); }
inline Weight test_weight2() { return exp_weight(0.2, 0.6, {0.1, 0.3, -0.2}); }

inline std::vector<double> random_points(int n, double lo, double hi, unsigned seed = 12345) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> xs(n);
    for (auto& x : xs) x = u(rng);
    return xs;
}

inline std::vector<cplx> pi1_grid() {
    std::vector<cplx> g;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) g.emplace_back(1.2 + 0.45 * i, 0.2 + 0.2 * j);
    return g;
}

}  // namespace mjw::test
