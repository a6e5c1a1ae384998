#pragma once

#include <string>
#include <vector>

#include "isospec/invariants.hpp"
#include "isospec/skew.hpp"

namespace isospec {

/// Gap used to cluster nearby Ricci eigenvalues before set comparison.
inline constexpr double kEigenClusterGap = 1e-8;

/// Curvature summary of the compact Lie group factor S of the product
/// manifold: everything the closed formulas need to know about (S, k).
struct BaseGroupData {
    int dim_s = 0;             ///< dimension of S
    double scal_s = 0.0;       ///< constant scalar curvature of S
    double vol_s = 0.0;        ///< Riemannian volume of S, > 0
    Mat ric_h;                 ///< Ricci form of S on the torus directions, r x r symmetric
    double ric_s_norm_sq = 0.0; ///< pointwise ||Ric^S||^2, constant by homogeneity

    void validate() const; ///< throws DomainError on violated invariants
};

/// Ricci endomorphism of the nilpotent group restricted to R^m:
/// (1/2) sum_i j_i^2. Symmetric negative semi-definite.
Mat ric_v(const SkewPencil& j);

/// Ricci form on the center: entry (i, k) = -(1/4) tr(j_i j_k).
/// Symmetric positive semi-definite.
Mat ric_z(const SkewPencil& j);

/// Scalar curvature of the nilpotent group: (1/4) sum_i tr(j_i^2) <= 0.
double scal_g(const SkewPencil& j);

/// Scalar curvature of the product manifold at base point v on the unit
/// sphere: scal_g + scal_s + (m-1)(m-2) - v^T ric_v v.
double scal_c(const SkewPencil& j, const BaseGroupData& base, const Vec& v);

struct CriticalValue {
    double value = 0.0;
    int multiplicity = 0;
};

struct CurvatureReport {
    double scal_g = 0.0;
    Mat ric_v;
    Mat ric_z;
    std::vector<double> ric_v_eigs;             ///< ascending
    std::vector<CriticalValue> critical_values; ///< distinct, ascending
    double ric_v_norm_sq = 0.0;
};

CurvatureReport curvature_report(const SkewPencil& j, const BaseGroupData& base);

enum class NonisometryVerdict {
    DistinctCriticalValues,           ///< eigenvalue sets of ric_v differ
    DistinctEigenvalueMultiplicities, ///< same sets, different multiplicities
    Inconclusive                      ///< ric_v endomorphisms similar; no claim of isometry
};

const char* to_string(NonisometryVerdict v);

/// Compare two clustered eigenvalue lists. Exposed for direct testing of the
/// classification logic.
NonisometryVerdict classify_spectra(const std::vector<double>& eigs_a,
                                    const std::vector<double>& eigs_b,
                                    double tol, double cluster_gap = kEigenClusterGap);

/// Sufficient nonisometry test for an isospectral pair; throws
/// PreconditionError when the pair is not isospectral at iso_tol.
NonisometryVerdict nonisometry_verdict(const SkewPencil& j, const SkewPencil& j2,
                                       double tol, double iso_tol = kDefaultIsoTol);

/// Integral of the scalar curvature over the whole product manifold:
/// vol_s * vol(S^{m-1}) * (scal_g + scal_s + (m-1)(m-2) - tr(ric_v)/m).
double total_scal_integral(const SkewPencil& j, const BaseGroupData& base);

} // namespace isospec
