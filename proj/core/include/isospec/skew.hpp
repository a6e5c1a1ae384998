#pragma once

#include <vector>

#include "isospec/errors.hpp"
#include "isospec/linalg.hpp"

namespace isospec {

/// Asymmetry tolerated on construction before a matrix is rejected as not skew.
inline constexpr double kSkewTol = 1e-12;

/// Real antisymmetric m x m matrix. Entries are projected to exact
/// antisymmetry on construction; inputs violating A = -A^T beyond
/// kSkewTol * (1 + max|entry|) are rejected.
class SkewMatrix {
public:
    explicit SkewMatrix(const Mat& entries);

    static SkewMatrix zero(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Mat& entries() const { return entries_; }
    double operator()(int i, int k) const { return entries_(i, k); }
    double norm() const { return entries_.norm(); }

    SkewMatrix& operator+=(const SkewMatrix& other);
    SkewMatrix& operator-=(const SkewMatrix& other);
    SkewMatrix& operator*=(double scalar);

    friend SkewMatrix operator+(SkewMatrix lhs, const SkewMatrix& rhs) { return lhs += rhs; }
    friend SkewMatrix operator-(SkewMatrix lhs, const SkewMatrix& rhs) { return lhs -= rhs; }
    friend SkewMatrix operator*(double scalar, SkewMatrix rhs) { return rhs *= scalar; }
    friend SkewMatrix operator*(SkewMatrix lhs, double scalar) { return lhs *= scalar; }

private:
    struct Unchecked {};
    SkewMatrix(const Mat& entries, Unchecked) : entries_(entries) {}

    Mat entries_;
};

/// Tuple (j_1, ..., j_r) of skew matrices sharing one dimension m; evaluating
/// it on a weight vector yields the corresponding linear combination, so the
/// tuple generates the whole linear family of skew matrices it spans.
class SkewPencil {
public:
    explicit SkewPencil(std::vector<SkewMatrix> components);
    SkewPencil(SkewMatrix j1, SkewMatrix j2);

    int dim() const { return components_.front().dim(); }
    int size() const { return static_cast<int>(components_.size()); }
    const SkewMatrix& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
    const std::vector<SkewMatrix>& components() const { return components_; }

private:
    std::vector<SkewMatrix> components_;
};

/// Monic characteristic polynomial lambda^m + c_{m-1} lambda^{m-1} + ... + c_0.
/// coeffs[k] = c_k, coeffs[degree] = 1.
struct CharPoly {
    int degree = 0;
    std::vector<double> coeffs;

    double eval(double lambda) const;
};

enum class CharPolyMethod {
    FaddeevLeVerrier, ///< trace recurrence, no eigensolver involved
    Eigenvalues       ///< cross-check path: expand from the computed spectrum
};

/// Linear combination sum_i weights[i] * j_i of the pencil components.
SkewMatrix pencil_eval(const SkewPencil& j, const Vec& weights);

/// Trace of the ordered product word[0] * word[1] * ... * word[k-1].
double trace_word(const std::vector<SkewMatrix>& word);

/// Characteristic polynomial of a skew matrix. Coefficients at odd gap
/// (m - k odd) are snapped to exact zero when below 1e-10 * (1 + ||A||^{m-k}).
CharPoly char_poly(const SkewMatrix& a, CharPolyMethod method = CharPolyMethod::FaddeevLeVerrier);

/// The r-vector with component i equal to <j_i x, y>; this is the Lie bracket
/// [x, y] of the two-step nilpotent algebra attached to the pencil, expressed
/// in the standard basis of the center.
Vec bracket(const SkewPencil& j, const Vec& x, const Vec& y);

} // namespace isospec
