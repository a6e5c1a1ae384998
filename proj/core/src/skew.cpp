#include "isospec/skew.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <string>

namespace isospec {

SkewMatrix::SkewMatrix(const Mat& entries) {
    if (entries.rows() != entries.cols()) {
        throw DimensionError("skew matrix must be square, got " + std::to_string(entries.rows()) +
                             "x" + std::to_string(entries.cols()));
    }
    const int m = static_cast<int>(entries.rows());
    if (m < 1 || m > kMaxDim) {
        throw DimensionError("dimension " + std::to_string(m) + " outside supported range [1, " +
                             std::to_string(kMaxDim) + "]");
    }
    const double scale = 1.0 + entries.cwiseAbs().maxCoeff();
    const double asym = (entries + entries.transpose()).cwiseAbs().maxCoeff();
    if (asym > kSkewTol * scale) {
        throw DomainError("matrix is not antisymmetric: max |A + A^T| = " + std::to_string(asym));
    }
    entries_ = 0.5 * (entries - entries.transpose());
}

SkewMatrix SkewMatrix::zero(int dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw DimensionError("dimension " + std::to_string(dim) + " outside supported range");
    }
    return SkewMatrix(Mat::Zero(dim, dim), Unchecked{});
}

SkewMatrix& SkewMatrix::operator+=(const SkewMatrix& other) {
    if (other.dim() != dim()) {
        throw DimensionError("skew matrix dimensions differ");
    }
    entries_ += other.entries_;
    return *this;
}

SkewMatrix& SkewMatrix::operator-=(const SkewMatrix& other) {
    if (other.dim() != dim()) {
        throw DimensionError("skew matrix dimensions differ");
    }
    entries_ -= other.entries_;
    return *this;
}

SkewMatrix& SkewMatrix::operator*=(double scalar) {
    entries_ *= scalar;
    return *this;
}

SkewPencil::SkewPencil(std::vector<SkewMatrix> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw DimensionError("pencil needs at least one component");
    }
    const int m = components_.front().dim();
    for (const auto& c : components_) {
        if (c.dim() != m) {
            throw DimensionError("pencil components must share one dimension");
        }
    }
}

SkewPencil::SkewPencil(SkewMatrix j1, SkewMatrix j2)
    : SkewPencil(std::vector<SkewMatrix>{std::move(j1), std::move(j2)}) {}

double CharPoly::eval(double lambda) const {
    double acc = 0.0;
    for (int k = degree; k >= 0; --k) {
        acc = acc * lambda + coeffs[static_cast<std::size_t>(k)];
    }
    return acc;
}

SkewMatrix pencil_eval(const SkewPencil& j, const Vec& weights) {
    if (weights.size() != j.size()) {
        throw DimensionError("weight vector length " + std::to_string(weights.size()) +
                             " does not match pencil size " + std::to_string(j.size()));
    }
    Mat acc = Mat::Zero(j.dim(), j.dim());
    for (int i = 0; i < j.size(); ++i) {
        acc += weights[i] * j[i].entries();
    }
    return SkewMatrix(acc);
}

double trace_word(const std::vector<SkewMatrix>& word) {
    if (word.empty()) {
        throw DimensionError("trace of an empty word is undefined");
    }
    const int m = word.front().dim();
    for (const auto& w : word) {
        if (w.dim() != m) {
            throw DimensionError("word factors must share one dimension");
        }
    }
    if (word.size() == 1) {
        return word.front().entries().trace();
    }
    Mat prod = word[0].entries();
    for (std::size_t i = 1; i + 1 < word.size(); ++i) {
        prod = prod * word[i].entries();
    }
    // tr(P * B) without forming the last product
    return (prod.transpose().cwiseProduct(word.back().entries())).sum();
}

namespace {

CharPoly char_poly_from_eigenvalues(const Mat& a) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
    const auto roots = solver.eigenvalues();
    const int m = static_cast<int>(a.rows());
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(m) + 1, 0.0);
    coeffs[0] = 1.0; // leading coefficient first while convolving
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k >= 1; --k) {
            coeffs[static_cast<std::size_t>(k)] =
                coeffs[static_cast<std::size_t>(k)] - roots[i] * coeffs[static_cast<std::size_t>(k - 1)];
        }
    }
    CharPoly p;
    p.degree = m;
    p.coeffs.assign(static_cast<std::size_t>(m) + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        p.coeffs[static_cast<std::size_t>(m - k)] = coeffs[static_cast<std::size_t>(k)].real();
    }
    return p;
}

void snap_odd_gap_coefficients(CharPoly& p, double a_norm) {
    for (int k = 0; k < p.degree; ++k) {
        if ((p.degree - k) % 2 == 1) {
            const double scale = 1.0 + std::pow(a_norm, p.degree - k);
            if (std::abs(p.coeffs[static_cast<std::size_t>(k)]) <= 1e-10 * scale) {
                p.coeffs[static_cast<std::size_t>(k)] = 0.0;
            }
        }
    }
}

} // namespace

CharPoly char_poly(const SkewMatrix& a, CharPolyMethod method) {
    const Mat& entries = a.entries();
    const int m = a.dim();
    CharPoly p;
    if (method == CharPolyMethod::Eigenvalues) {
        p = char_poly_from_eigenvalues(entries);
    } else {
        // Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{m-k+1} I), c_{m-k} = -tr(M_k) / k.
        p.degree = m;
        p.coeffs.assign(static_cast<std::size_t>(m) + 1, 0.0);
        p.coeffs[static_cast<std::size_t>(m)] = 1.0;
        Mat mk = Mat::Zero(m, m);
        for (int k = 1; k <= m; ++k) {
            Mat shifted = mk;
            shifted.diagonal().array() += p.coeffs[static_cast<std::size_t>(m - k + 1)];
            mk = entries * shifted;
            p.coeffs[static_cast<std::size_t>(m - k)] = -mk.trace() / static_cast<double>(k);
        }
    }
    snap_odd_gap_coefficients(p, a.norm());
    return p;
}

Vec bracket(const SkewPencil& j, const Vec& x, const Vec& y) {
    if (x.size() != j.dim() || y.size() != j.dim()) {
        throw DimensionError("bracket arguments must be vectors of length m");
    }
    Vec out(j.size());
    for (int i = 0; i < j.size(); ++i) {
        out[i] = (j[i].entries() * x).dot(y);
    }
    return out;
}

} // namespace isospec
