#include "isospec/canonical.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace isospec {

namespace {

constexpr double kNearDegenerateGap = 1e-6;

struct RotationBlock {
    double mu = 0.0;
    Vec u;
    Vec w; // A u = mu w, A w = -mu u
};

// Flip the sign of both basis vectors so the first significant component of u
// is positive; keeps the block form and makes the output reproducible.
void normalize_sign(Vec& u, Vec& w) {
    for (int i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) > 1e-9) {
            if (u[i] < 0.0) {
                u = -u;
                w = -w;
            }
            return;
        }
    }
}

void normalize_sign(Vec& u) {
    for (int i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) > 1e-9) {
            if (u[i] < 0.0) {
                u = -u;
            }
            return;
        }
    }
}

bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

// Remove the components of v along the already accepted columns.
void project_out(Vec& v, const std::vector<Vec>& accepted) {
    for (const Vec& c : accepted) {
        v -= c.dot(v) * c;
    }
}

} // namespace

Mat SkewCanonicalForm::canonical_matrix() const {
    const int m = 2 * static_cast<int>(block_spectrum.size()) + zero_dim;
    Mat k = Mat::Zero(m, m);
    for (std::size_t i = 0; i < block_spectrum.size(); ++i) {
        const int off = 2 * static_cast<int>(i);
        k(off, off + 1) = -block_spectrum[i];
        k(off + 1, off) = block_spectrum[i];
    }
    return k;
}

SkewCanonicalForm skew_canonical_form(const SkewMatrix& a) {
    const int m = a.dim();
    const Mat& entries = a.entries();

    // -A^2 = A^T A is symmetric PSD; each rotation block of speed mu shows up
    // as a two-dimensional eigenspace with eigenvalue mu^2.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries.transpose() * entries);
    const Vec evals = solver.eigenvalues();
    const Eigen::MatrixXd evecs = solver.eigenvectors();

    const double zero_tol = 1e-12 * (1.0 + a.norm());

    std::vector<RotationBlock> blocks;
    std::vector<Vec> kernel;
    std::vector<Vec> accepted;

    // Greedy pairing, largest eigenvalue first: each fresh eigenvector u is
    // paired with A u / ||A u||; its partner gets skipped automatically when
    // its turn comes because it already lies in the accepted span.
    for (int idx = m - 1; idx >= 0; --idx) {
        Vec v = evecs.col(idx);
        project_out(v, accepted);
        const double rem = v.norm();
        if (rem < 0.5) {
            continue;
        }
        Vec u = v / rem;
        Vec au = entries * u;
        const double mu = au.norm();
        if (mu <= zero_tol) {
            normalize_sign(u);
            kernel.push_back(u);
            accepted.push_back(u);
            continue;
        }
        Vec w = au / mu;
        project_out(w, accepted);
        w -= u.dot(w) * u;
        w.normalize();
        normalize_sign(u, w);
        accepted.push_back(u);
        accepted.push_back(w);
        blocks.push_back(RotationBlock{mu, std::move(u), std::move(w)});
    }

    std::stable_sort(blocks.begin(), blocks.end(), [](const RotationBlock& x, const RotationBlock& y) {
        if (x.mu != y.mu) {
            return x.mu > y.mu;
        }
        return lex_less(x.u, y.u);
    });

    SkewCanonicalForm form;
    form.basis = Mat::Zero(m, m);
    int col = 0;
    for (auto& blk : blocks) {
        form.basis.col(col++) = blk.u;
        form.basis.col(col++) = blk.w;
        form.block_spectrum.push_back(blk.mu);
    }
    for (const Vec& k : kernel) {
        form.basis.col(col++) = k;
    }
    form.zero_dim = static_cast<int>(kernel.size());

    const double spectrum_scale = 1.0 + (form.block_spectrum.empty() ? 0.0 : form.block_spectrum.front());
    for (std::size_t i = 0; i + 1 < form.block_spectrum.size(); ++i) {
        const double gap = form.block_spectrum[i] - form.block_spectrum[i + 1];
        if (gap <= kNearDegenerateGap * spectrum_scale) {
            form.near_degenerate = true;
        }
    }
    if (!form.block_spectrum.empty() && form.zero_dim > 0 &&
        form.block_spectrum.back() <= kNearDegenerateGap * spectrum_scale) {
        form.near_degenerate = true;
    }
    return form;
}

ConjugatorResult find_conjugator(const SkewMatrix& a, const SkewMatrix& b, double tol) {
    if (a.dim() != b.dim()) {
        throw DimensionError("conjugator requires matrices of equal dimension");
    }
    const int m = a.dim();

    const SkewCanonicalForm form_a = skew_canonical_form(a);
    const SkewCanonicalForm form_b = skew_canonical_form(b);

    // Pad both rotation-speed lists with zeros to floor(m/2) entries so
    // borderline zero blocks line up position by position.
    const std::size_t half = static_cast<std::size_t>(m / 2);
    std::vector<double> mu_a = form_a.block_spectrum;
    std::vector<double> mu_b = form_b.block_spectrum;
    mu_a.resize(half, 0.0);
    mu_b.resize(half, 0.0);
    double mu_scale = 1.0;
    for (std::size_t i = 0; i < half; ++i) {
        mu_scale = std::max(mu_scale, 1.0 + std::max(mu_a[i], mu_b[i]));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        worst = std::max(worst, std::abs(mu_a[i] - mu_b[i]));
    }
    if (worst > tol * mu_scale) {
        throw NoConjugatorError("eigenvalue multisets differ: worst rotation-speed gap " +
                                std::to_string(worst));
    }

    ConjugatorResult result;
    result.q = form_b.basis * form_a.basis.transpose();
    result.residual = (result.q * a.entries() * result.q.transpose() - b.entries()).norm();
    result.near_degenerate = form_a.near_degenerate || form_b.near_degenerate;
    if (result.residual > tol) {
        throw NoConjugatorError("conjugation residual " + std::to_string(result.residual) +
                                " exceeds tolerance");
    }
    return result;
}

} // namespace isospec
