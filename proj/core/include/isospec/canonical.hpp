#pragma once

#include <vector>

#include "isospec/skew.hpp"

namespace isospec {

/// Block-diagonal normal form of a skew matrix under orthogonal similarity:
/// 2x2 rotation blocks [[0, -mu],[mu, 0]] sorted by mu descending, followed by
/// a zero block. basis is the orthogonal matrix P with P^T A P in that form.
struct SkewCanonicalForm {
    Mat basis;
    std::vector<double> block_spectrum; ///< one mu >= 0 per rotation block, descending
    int zero_dim = 0;
    bool near_degenerate = false; ///< some distinct blocks closer than the cluster gap

    Mat canonical_matrix() const;
};

SkewCanonicalForm skew_canonical_form(const SkewMatrix& a);

struct ConjugatorResult {
    Mat q;                        ///< orthogonal, q * a * q^T ~ b
    double residual = 0.0;        ///< ||Q A Q^T - B||_F achieved
    bool near_degenerate = false; ///< either input had a tight eigenvalue cluster
};

/// Orthogonal Q with ||Q A Q^T - B||_F <= tol, found by composing the two
/// canonicalizing transforms. Throws NoConjugatorError when the eigenvalue
/// multisets of A and B disagree beyond tol.
ConjugatorResult find_conjugator(const SkewMatrix& a, const SkewMatrix& b, double tol);

} // namespace isospec
