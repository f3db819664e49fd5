#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "mjw/bessel.hpp"
#include "mjw/errors.hpp"
#include "mjw/ortho_oracle.hpp"
#include "mjw/szego.hpp"

namespace mjw {

using Mat2 = Eigen::Matrix2cd;

struct AsymCoeffs {
    double alpha = 0, beta = 0, c0 = 0, d0 = 0, D_inf = 1;
    double Gamma1 = 0, Gamma2 = 0;
    double A2 = 0, A3 = 0, A4 = 0;
    double B2 = 0, B3 = 0, B4 = 0;
    double hankel_exponent = 0;
};

// The closed forms below were matched against the oracle with d_0 entering as -d_0,
// where d_0 is the contour integral as defined (and as used by the W~/D expansion).
inline double closed_form_d0(double d0) { return -d0; }

inline AsymCoeffs asym_coeffs(double al, double be, double c0, double d0_def, double D_inf) {
    AsymCoeffs k{al, be, c0, d0_def, D_inf};
    const double d0 = closed_form_d0(d0_def);
    const double ea = 4 * al * al - 1, eb = 4 * be * be - 1;
    const double s = al + be;
    k.Gamma1 = -ea / 16 - eb / 16;
    k.Gamma2 = ea * (s + c0) / 32 + eb * (s + d0) / 32 +
               (2 * al * al + 2 * be * be + 7) * (ea / 256 + eb / 256);
    k.A2 = -ea / 32 - eb / 32;
    k.A3 = ea * (s + c0) / 32 + eb * (s + d0) / 32;
    k.A4 = -(3 * al * al + 3 * be * be + 6 * al * be + 1) * (ea / 128 + eb / 128) - ea * eb / 256 -
           ea / 128 * 3 * c0 * (2 * s + c0) - eb / 128 * 3 * d0 * (2 * s + d0);
    const double db = be * be - al * al;
    k.B2 = db / 4;
    k.B3 = -db / 4 * (1 + s) + c0 * ea / 16 - d0 * eb / 16;
    k.B4 = -ea / 64 * 3 * c0 * (2 * s + 2 + c0) + eb / 64 * 3 * d0 * (2 * s + 2 + d0) +
           db / 16 * (6 * s + 3 * al * al + 3 * be * be + 6 * al * be + 4);
    k.hankel_exponent = ea / 8 + eb / 8;
    return k;
}

inline AsymCoeffs asym_coeffs(const SzegoData& s) {
    return asym_coeffs(s.alpha(), s.beta(), s.c().at(0), s.d().at(0), s.D_inf());
}

// ---- Theorem-level closed forms -------------------------------------------------

struct ExpansionTerms {
    cplx leading;
    cplx t1;
    cplx t2;
};

namespace detail {

inline cplx Pi1_closed(const AsymCoeffs& k, cplx p) {
    const double ea = 4 * k.alpha * k.alpha - 1, eb = 4 * k.beta * k.beta - 1;
    return -ea / (8.0 * (p - 1.0)) + eb / (8.0 * (p + 1.0));
}

inline cplx Pi2_closed(const AsymCoeffs& k, cplx p, cplx z) {
    const double al = k.alpha, be = k.beta;
    const double ea = 4 * al * al - 1, eb = 4 * be * be - 1, s = al + be;
    return ea * (s + k.c0) / (16.0 * (p - 1.0)) - eb * (s + closed_form_d0(k.d0)) / (16.0 * (p + 1.0)) -
           ea * eb / (128.0 * (z * z - 1.0)) +
           (2 * al * al + 2 * be * be - 5) / 64 *
               (ea / ((p - 1.0) * (p - 1.0)) + eb / ((p + 1.0) * (p + 1.0)));
}

inline cplx P1_closed(const AsymCoeffs& k, cplx p) {
    const double ea = 4 * k.alpha * k.alpha - 1, eb = 4 * k.beta * k.beta - 1;
    return -ea / 16 * (p + 1.0) / (p - 1.0) - eb / 16 * (p - 1.0) / (p + 1.0);
}

inline cplx P2_closed(const AsymCoeffs& k, cplx p) {
    const double al = k.alpha, be = k.beta;
    const double ea = 4 * al * al - 1, eb = 4 * be * be - 1, s = al + be;
    return ea * (s + k.c0) / 32 * (p + 1.0) / (p - 1.0) + eb * (s + closed_form_d0(k.d0)) / 32 * (p - 1.0) / (p + 1.0) +
           ea * ea / (128.0 * (p - 1.0)) - eb * eb / (128.0 * (p + 1.0)) -
           ea * eb / 64 * (p * p + 1.0) / ((p * p - 1.0) * (p * p - 1.0)) +
           (2 * al * al + 2 * be * be - 5) *
               (ea / (64.0 * (p - 1.0) * (p - 1.0)) + eb / (64.0 * (p + 1.0) * (p + 1.0))) +
           (2 * al * al + 2 * be * be + 7) * (ea / 256 + eb / 256);
}

// (a + 1/a)/2 = phi^{1/2} / (sqrt2 (z^2-1)^{1/4}) without choosing separate branches.
inline cplx half_a_sum(cplx z) {
    const cplx a = a_fn(z);
    return 0.5 * (a + 1.0 / a);
}

}  // namespace detail

inline ExpansionTerms pi_expansion_terms(const SzegoData& s, cplx z) {
    const AsymCoeffs k = asym_coeffs(s);
    const cplx p = phi(z);
    return {s.D_inf() / szego_D(s, z) * detail::half_a_sum(z), detail::Pi1_closed(k, p),
            detail::Pi2_closed(k, p, z)};
}

inline ExpansionTerms p_expansion_terms(const SzegoData& s, cplx z) {
    const AsymCoeffs k = asym_coeffs(s);
    const cplx p = phi(z);
    return {detail::half_a_sum(z) / (std::sqrt(std::numbers::pi) * szego_D(s, z)),
            detail::P1_closed(k, p), detail::P2_closed(k, p)};
}

struct GammaExpansion {
    double limit;
    double Gamma1;
    double Gamma2;
};

inline GammaExpansion gamma_expansion(const AsymCoeffs& k) {
    return {1.0 / (std::sqrt(std::numbers::pi) * k.D_inf), k.Gamma1, k.Gamma2};
}

struct RecurrenceExpansion {
    double A2, A3, A4, B2, B3, B4;
};

inline RecurrenceExpansion recurrence_expansion(const AsymCoeffs& k) {
    return {k.A2, k.A3, k.A4, k.B2, k.B3, k.B4};
}

struct HankelPrediction {
    double log_prediction;  // up to the unknown additive constant log C
    double exponent;
};

inline HankelPrediction hankel_asymptotic(const AsymCoeffs& k, int n) {
    if (n < 1) throw error(errc::parameter, "hankel_asymptotic: n must be >= 1");
    const double nn = n;
    return {nn * nn * std::log(0.5) +
                nn * std::log(std::numbers::pi * k.D_inf * k.D_inf / 2.0) +
                k.hankel_exponent * std::log(nn),
            k.hankel_exponent};
}

// Predicted pi_n(z) in log-scaled form.
inline MonicValue outer_prediction(const SzegoData& s, cplx z, int n, int order) {
    if (order < 0 || order > 2) throw error(errc::parameter, "outer_prediction: order must be 0, 1 or 2");
    if (n < 1) throw error(errc::parameter, "outer_prediction: n must be >= 1");
    const auto t = pi_expansion_terms(s, z);
    cplx corr = 1.0;
    if (order >= 1) corr += t.t1 / double(n);
    if (order >= 2) corr += t.t2 / (double(n) * n);
    const cplx logv = -double(n) * std::log(2.0) + double(n) * std::log(phi(z)) + std::log(t.leading * corr);
    return {logv.real(), std::polar(1.0, logv.imag())};
}

inline constexpr double default_edge_delta = 0.1;

// Leading cosine formula, valid for any x in (-1,1); no window check.
inline double bulk_formula(const SzegoData& s, double x, int n) {
    if (!(x > -1.0 && x < 1.0)) throw error(errc::domain, "bulk_formula: x outside (-1,1)");
    const double th = std::acos(x);
    const double w = weight_eval(s.weight(), x);
    const double amp = std::numbers::sqrt2 * s.D_inf() /
                       (std::ldexp(1.0, n) * std::sqrt(w) * std::pow(1.0 - x * x, 0.25));
    return amp * std::cos((n + 0.5) * th + psi_phase(s, x) - std::numbers::pi / 4.0);
}

inline double bulk_prediction(const SzegoData& s, double x, int n, double delta = default_edge_delta) {
    if (!(std::abs(x) < 1.0 - delta))
        throw error(errc::domain, "bulk_prediction: |x| >= 1 - delta; use edge_prediction");
    return bulk_formula(s, x, n);
}

// Leading Bessel formula near +1; no window check.
inline double edge_formula(const SzegoData& s, double x, int n) {
    if (!(x > -1.0 && x < 1.0)) throw error(errc::domain, "edge_formula: x outside (-1,1)");
    const double th = std::acos(x);
    const double w = weight_eval(s.weight(), x);
    const double t = n * th;
    const double z1 = zeta_12(s, x).first;
    const double amp = std::sqrt(std::numbers::pi) * s.D_inf() / (std::ldexp(1.0, n) * std::sqrt(w)) *
                       std::sqrt(t) / std::pow(1.0 - x * x, 0.25);
    return amp * (std::cos(z1) * bessel_j(s.alpha(), t) + std::sin(z1) * bessel_j_prime(s.alpha(), t));
}

inline double edge_prediction(const SzegoData& s, double x, int n, double delta = default_edge_delta) {
    if (!(x > 1.0 - delta && x < 1.0))
        throw error(errc::domain, "edge_prediction: x outside the edge window");
    return edge_formula(s, x, n);
}

inline double largest_zero_prediction(double alpha, int n, int k) {
    if (k < 1 || k > 5 || n < 4 * k)
        throw error(errc::indexing, "largest_zero_prediction: need 1 <= k <= 5 and n >= 4k");
    const double j = bessel_zero(alpha, k);
    return 1.0 - j * j / (2.0 * n * n);
}

// ---- R-matrix constants ---------------------------------------------------------

struct RConstants {
    Mat2 A1, B1, A2m, B2m;
};

namespace detail {

inline Mat2 conj_D(Mat2 m, double D) {
    m(0, 1) *= D * D;
    m(1, 0) /= D * D;
    return m;
}

inline Mat2 mat(cplx a, cplx b, cplx c, cplx d) {
    Mat2 m;
    m << a, b, c, d;
    return m;
}

struct Template2 {
    double A, B, C, D;
};

inline Template2 template2(double al, double be, double c0) {
    const double t = 8 * al + 8 * be + 8 * c0;
    return {t - 4 * be * be + 1, -t + 4 * al * al + 4 * be * be - 10, -t - 4 * al * al - 4 * be * be + 10,
            -t - 4 * be * be + 1};
}

}  // namespace detail

inline RConstants r_constants(double al, double be, double c0, double d0_def, double D_inf) {
    const double d0 = closed_form_d0(d0_def);
    using detail::conj_D;
    using detail::mat;
    const cplx i(0, 1);
    const double ea = 4 * al * al - 1, eb = 4 * be * be - 1;
    RConstants r;
    r.A1 = conj_D(ea / 16 * mat(-1, i, i, 1), D_inf);
    r.B1 = conj_D(eb / 16 * mat(1, i, i, -1), D_inf);
    const auto ta = detail::template2(al, be, c0);
    r.A2m = conj_D(ea / 256 * mat(ta.A, i * ta.B, i * ta.C, ta.D), D_inf);
    const auto tb = detail::template2(be, al, d0);
    r.B2m = conj_D(eb / 256 * mat(-tb.A, i * tb.B, i * tb.C, -tb.D), D_inf);
    return r;
}

inline RConstants r_constants(const SzegoData& s) {
    return r_constants(s.alpha(), s.beta(), s.c().at(0), s.d().at(0), s.D_inf());
}

inline Mat2 r1_eval(const RConstants& r, cplx z) { return r.A1 / (z - 1.0) + r.B1 / (z + 1.0); }

// Pi_1 from R_1 through the (1,1) entry of Y.
inline cplx pi1_via_r1(const RConstants& r, double D_inf, cplx z) {
    const Mat2 R = r1_eval(r, z);
    const cplx a = a_fn(z);
    return R(0, 0) + cplx(0, 1) / (D_inf * D_inf) * ((a - 1.0 / a) / (a + 1.0 / a)) * R(0, 1);
}

// Constants recovered from the residues; each should match the closed form.
struct RExtraction {
    double Gamma1, Gamma2, A2, B2, B3, E1;
};

inline RExtraction r_extraction(const RConstants& r, double D_inf) {
    const double D2 = D_inf * D_inf;
    const Mat2 S1 = r.A1 + r.B1, S2 = r.A2m + r.B2m;
    const cplx i(0, 1);
    RExtraction e{};
    e.Gamma1 = (i * D2 * S1(1, 0)).real();
    const cplx X1 = 2.0 * i * D2 * S1(1, 0), X2 = 2.0 * i * D2 * S2(1, 0);
    e.Gamma2 = ((X2 - X1) / 2.0 - X1 * X1 / 8.0).real();
    e.B2 = S1(0, 0).real();
    e.B3 = (-S1(0, 0) + 2.0 * S2(0, 0)).real();
    const cplx s21_1 = D2 * S1(1, 0), s12_1 = S1(0, 1) / D2;
    const cplx s21_2 = D2 * S2(1, 0), s12_2 = S2(0, 1) / D2;
    e.E1 = ((s12_1 - s21_1) / (2.0 * i)).real();
    e.A2 = ((s12_2 - s21_2) / (2.0 * i) + s21_1 * s12_1).real();
    return e;
}

struct Pi1Gamma1Consistency {
    double max_pi1_deviation;
    double gamma1_deviation;
};

inline Pi1Gamma1Consistency pi1_gamma1_consistency(const SzegoData& s, const std::vector<cplx>& grid) {
    const RConstants r = r_constants(s);
    const AsymCoeffs k = asym_coeffs(s);
    double mx = 0.0;
    for (cplx z : grid) {
        const cplx closed = pi_expansion_terms(s, z).t1;
        mx = std::max(mx, std::abs(closed - pi1_via_r1(r, s.D_inf(), z)));
    }
    const cplx g1 = cplx(0, 1) * s.D_inf() * s.D_inf() * (r.A1(1, 0) + r.B1(1, 0));
    return {mx, std::abs(g1 - k.Gamma1)};
}

// ---- Bessel parametrix ----------------------------------------------------------

inline Mat2 psi_parametrix(double alpha, double zeta, Side side = Side::upper) {
    const BesselOrder o = BesselOrder::of(alpha);
    if (o.is_integer || !(alpha < 1.0))
        throw error(errc::unsupported_order, "psi_parametrix: alpha must be non-integer in (-1,1)");
    if (zeta == 0.0 || !std::isfinite(zeta)) throw error(errc::domain, "psi_parametrix: zeta must be nonzero");
    const double pi = std::numbers::pi;
    const cplx i(0, 1);
    const double s = std::sqrt(std::abs(zeta));
    const double x = 2.0 * s;
    if (zeta > 0.0) {
        return detail::mat(bessel_i(alpha, x), i / pi * bessel_k(alpha, x),
                           2.0 * pi * i * s * bessel_i_prime(alpha, x), -2.0 * s * bessel_k_prime(alpha, x));
    }
    const cplx h1 = hankel_h1(alpha, x), h2 = hankel_h2(alpha, x);
    const cplx h1p = hankel_h1_prime(alpha, x), h2p = hankel_h2_prime(alpha, x);
    const cplx e = std::polar(1.0, alpha * pi / 2.0);
    if (side == Side::upper) {
        const cplx rz = i * s;
        Mat2 m = detail::mat(0.5 * h1, 0.5 * h2, pi * rz * h1p, pi * rz * h2p);
        return m * detail::mat(e, 0, 0, 1.0 / e);
    }
    const cplx rz = -i * s;
    Mat2 m = detail::mat(0.5 * h2, -0.5 * h1, -pi * rz * h2p, pi * rz * h1p);
    return m * detail::mat(1.0 / e, 0, 0, e);
}

// Psi(zeta) e^{-2 zeta^{1/2} sigma3}, zeta > 0.
inline Mat2 psi_normalized(double alpha, double zeta) {
    if (!(zeta > 0.0)) throw error(errc::domain, "psi_normalized: zeta must be > 0");
    const double e = std::exp(2.0 * std::sqrt(zeta));
    return psi_parametrix(alpha, zeta) * detail::mat(1.0 / e, 0, 0, e);
}

// Leading large-zeta model; with_correction adds the first 1/zeta^{1/2} term.
inline Mat2 psi_large_zeta_model(double alpha, double zeta, bool with_correction = false) {
    const double pi = std::numbers::pi;
    const cplx i(0, 1);
    const double rz = std::sqrt(zeta);
    const double q = std::pow(2.0 * pi * rz, -0.5);
    Mat2 lead = detail::mat(q, 0, 0, 1.0 / q) * detail::mat(1, i, i, 1) / std::numbers::sqrt2;
    if (!with_correction) return lead;
    const double m = alpha * alpha + 0.25;
    const Mat2 corr = detail::mat(-m, -i / 2.0, -i / 2.0, m) / (4.0 * rz);
    return lead * (Mat2::Identity() + corr);
}

// ---- Delta_1 near z = 1 ---------------------------------------------------------

inline Mat2 n_matrix(const SzegoData& s, cplx z) {
    const cplx a = a_fn(z);
    const cplx p = 0.5 * (a + 1.0 / a), q = (a - 1.0 / a) / cplx(0, 2);
    const double Di = s.D_inf();
    const cplx Dz = szego_D(s, z);
    return detail::mat(Di, 0, 0, 1.0 / Di) * detail::mat(p, q, -q, p) * detail::mat(1.0 / Dz, 0, 0, Dz);
}

inline Mat2 delta1_eval(const SzegoData& s, cplx z) {
    if (z.imag() == 0.0 && z.real() <= 1.0) throw error(errc::branch, "delta1_eval: z on (-inf,1]");
    const double al = s.alpha();
    const cplx i(0, 1);
    const Mat2 N = n_matrix(s, z);
    const Mat2 Ninv = detail::mat(N(1, 1), -N(0, 1), -N(1, 0), N(0, 0));
    const cplx W = W_eval(s.weight(), z);
    const Mat2 Ws = detail::mat(W, 0, 0, 1.0 / W), Wsi = detail::mat(1.0 / W, 0, 0, W);
    const Mat2 M = detail::mat(-(al * al + 0.25), -i / 2.0, -i / 2.0, al * al + 0.25);
    const cplx g = std::log(phi(z));
    return (N * Ws * M * Wsi * Ninv) / (2.0 * g);
}

// (1/2 pi i) \oint_{|s-1|=radius} Delta_1 ds, nodes offset by half a step off the real axis.
inline Mat2 delta1_residue(const SzegoData& s, double radius = 0.25, int nodes = 256) {
    if (!(radius > 0.02 && radius < s.weight().margin()))
        throw error(errc::domain, "delta1_residue: radius must lie in (0.02, margin)");
    Mat2 acc = Mat2::Zero();
    for (int j = 0; j < nodes; ++j) {
        const double th = 2.0 * std::numbers::pi * (j + 0.5) / nodes;
        const cplx u = std::polar(radius, th);
        acc += delta1_eval(s, 1.0 + u) * u;  // ds = i u dtheta
    }
    return acc / double(nodes);
}

inline double delta1_residue_check(const SzegoData& s) {
    const Mat2 diff = delta1_residue(s) - r_constants(s).A1;
    return diff.cwiseAbs().maxCoeff();
}

}  // namespace mjw
