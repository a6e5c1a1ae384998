#pragma once

#include <cstdint>

#include "isospec/curvature.hpp"

namespace isospec {

/// Default absolute tolerance on delta_ric_norm_sq for the one-form verdict.
inline constexpr double kDefaultVerdictTol = 1e-9;

/// Volume of the round unit n-sphere: 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_volume(int n);

/// First sphere moment: integral over S^{m-1} of <A v, v> dv = tr(A) vol(S^{m-1}) / m.
double moment1(const Mat& a);

/// Second sphere moment: integral of <A v, v>^2 dv
/// = (tr(A)^2 + ||A||^2 + <A, A^T>) vol(S^{m-1}) / (m (m+2)).
double moment2(const Mat& a);

/// Closed-form integral of scal^2 over the product manifold.
double c_s_exact(const SkewPencil& j, const BaseGroupData& base);

/// Pointwise squared norm of the Ricci tensor of the product manifold at base
/// point v, assembled from the Ricci block formulas in the standard basis.
double ric_c_norm_sq_pointwise(const SkewPencil& j, const BaseGroupData& base, const Vec& v);

struct QuadratureResult {
    double value = 0.0;
    double std_error = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

/// Monte-Carlo integral of ||Ric||^2 over the product manifold using the
/// counter-based sphere sampler; deterministic for a fixed seed.
QuadratureResult c_ric_quadrature(const SkewPencil& j, const BaseGroupData& base,
                                  long samples, std::uint64_t seed);

enum class OneFormVerdict {
    NotOneFormIsospectral, ///< heat coefficients of the one-form spectrum differ
    Undetermined           ///< equal Ricci norms; no conclusion either way
};

const char* to_string(OneFormVerdict v);

/// Differences of the curvature integrals across an isospectral pair, from the
/// closed forms; absolute values are never computed.
struct HeatComparison {
    int m = 0;
    double delta_ric_norm_sq = 0.0;
    double delta_c_s = 0.0;
    double delta_c_ric = 0.0;
    double delta_c_r = 0.0;
    double delta_a2_1_combination = 0.0; ///< delta_c_s + 10 * delta_c_ric
    double distinguisher_factor = 0.0;   ///< (10 m^2 - 20 m - 78) / (m (m+2))
    OneFormVerdict verdict = OneFormVerdict::Undetermined;
};

/// Throws PreconditionError when the pair is not isospectral at iso_tol.
HeatComparison heat_comparison(const SkewPencil& j, const SkewPencil& j2,
                               const BaseGroupData& base,
                               double verdict_tol = kDefaultVerdictTol,
                               double iso_tol = kDefaultIsoTol);

struct A2Coefficients {
    double a2_0 = 0.0;
    double a2_1 = 0.0;
};

/// Heat-trace coefficients from the three curvature integrals:
///   a2_0 = (5 c_s - 2 c_ric + 2 c_r) / 360
///   a2_1 = ((5 d - 60) c_s - (2 d - 180) c_ric + (2 d - 30) c_r) / 360, d = dim_m.
A2Coefficients a2_coefficients(double c_s, double c_ric, double c_r, int dim_m);

} // namespace isospec
