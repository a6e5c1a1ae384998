#pragma once

#include <optional>
#include <vector>

#include "isospec/skew.hpp"

namespace isospec {

inline constexpr double kDefaultIsoTol = 1e-8;

struct InvariantEntry {
    int a = 0;
    int b = 0;
    double value = 0.0;
};

/// Fingerprint of a two-component pencil: the symmetrized word traces p_{a,b}
/// for every key with a + b even and 2 <= a + b <= m, sorted by (a+b, a).
struct InvariantTable {
    int m = 0;
    std::vector<InvariantEntry> entries;

    const InvariantEntry* find(int a, int b) const;
};

/// Sum over all length-(a+b) words with a letters j_1 and b letters j_2 of the
/// trace of the corresponding product. Equals the coefficient of s^a u^b in
/// tr((s j_1 + u j_2)^{a+b}).
double p_ab(const SkewPencil& j, int a, int b);

/// Table of all p_{a,b} with a+b even, 2 <= a+b <= m.
InvariantTable invariant_table(const SkewPencil& j);

struct IsospectralReport {
    bool isospectral = false;
    double max_deviation = 0.0; ///< worst |p - p'| / (1 + max(|p|, |p'|))
    int worst_a = 0;
    int worst_b = 0;
};

/// Two pencils generate identical eigenvalue data along every linear
/// combination iff all p_{a,b} agree; tested entrywise at tol * (1 + |entry|).
IsospectralReport is_isospectral(const SkewPencil& j, const SkewPencil& j2,
                                 double tol = kDefaultIsoTol);

/// q(j) = tr(j_1^2 j_2^2), the quartic that separates deformation families.
double q_poly(const SkewPencil& j);

/// Derivative of q along the deformation field Y(j) = (j_1^3 j_2 - j_2 j_1^3, 0):
/// tr(j_1^3 j_2 j_1 j_2^2 - j_1 j_2 j_1^3 j_2^2).
double dq_along_y(const SkewPencil& j);

/// Directional derivative of p_{a,b} at j in direction eps, via the reduced
/// two-sum formula (a+b) * (sum over words with eps_1 in front + sum with eps_2).
double dp_ab_directional(const SkewPencil& j, const SkewPencil& eps, int a, int b);

/// The multiset {mu_k >= 0} such that the eigenvalues of A are +-i mu_k plus
/// zeros; floor(m/2) values, sorted descending. Brute-force spectral oracle.
std::vector<double> eigen_multiset(const SkewMatrix& a);

} // namespace isospec
