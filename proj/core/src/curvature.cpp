#include "isospec/curvature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "isospec/heat.hpp"

namespace isospec {

void BaseGroupData::validate() const {
    if (vol_s <= 0.0) {
        throw DomainError("base group volume must be positive");
    }
    if (ric_h.rows() != ric_h.cols()) {
        throw DomainError("ric_h must be square");
    }
    if (dim_s < static_cast<int>(ric_h.rows())) {
        throw DomainError("base group dimension smaller than its torus rank");
    }
    if (ric_h.size() > 0 && (ric_h - ric_h.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw DomainError("ric_h must be symmetric");
    }
    if (ric_s_norm_sq < 0.0) {
        throw DomainError("ric_s_norm_sq must be nonnegative");
    }
}

Mat ric_v(const SkewPencil& j) {
    Mat acc = Mat::Zero(j.dim(), j.dim());
    for (int i = 0; i < j.size(); ++i) {
        acc += j[i].entries() * j[i].entries();
    }
    return 0.5 * acc;
}

Mat ric_z(const SkewPencil& j) {
    const int r = j.size();
    Mat out(r, r);
    for (int i = 0; i < r; ++i) {
        for (int k = i; k < r; ++k) {
            const double v = -0.25 * (j[i].entries().transpose().cwiseProduct(j[k].entries())).sum();
            out(i, k) = v;
            out(k, i) = v;
        }
    }
    return out;
}

double scal_g(const SkewPencil& j) {
    double acc = 0.0;
    for (int i = 0; i < j.size(); ++i) {
        acc += (j[i].entries() * j[i].entries()).trace();
    }
    return 0.25 * acc;
}

namespace {

void require_unit(const Vec& v) {
    if (std::abs(v.norm() - 1.0) > 1e-10) {
        throw DomainError("direction vector must be unit length, got norm " + std::to_string(v.norm()));
    }
}

std::vector<CriticalValue> cluster(const std::vector<double>& sorted_vals, double gap) {
    std::vector<CriticalValue> out;
    for (double v : sorted_vals) {
        if (!out.empty() && std::abs(v - out.back().value) <= gap) {
            // running mean keeps the cluster representative centered
            out.back().value += (v - out.back().value) / (out.back().multiplicity + 1);
            out.back().multiplicity += 1;
        } else {
            out.push_back({v, 1});
        }
    }
    return out;
}

} // namespace

double scal_c(const SkewPencil& j, const BaseGroupData& base, const Vec& v) {
    if (v.size() != j.dim()) {
        throw DimensionError("direction vector has wrong length");
    }
    require_unit(v);
    const int m = j.dim();
    const double ric_vv = v.dot(ric_v(j) * v);
    return scal_g(j) + base.scal_s + static_cast<double>((m - 1) * (m - 2)) - ric_vv;
}

CurvatureReport curvature_report(const SkewPencil& j, const BaseGroupData& base) {
    base.validate();
    const int m = j.dim();

    CurvatureReport report;
    report.scal_g = scal_g(j);
    report.ric_v = ric_v(j);
    report.ric_z = ric_z(j);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(report.ric_v);
    const Vec eigs = solver.eigenvalues(); // ascending
    report.ric_v_eigs.assign(eigs.data(), eigs.data() + eigs.size());
    report.ric_v_norm_sq = eigs.squaredNorm();

    const double offset = report.scal_g + base.scal_s + static_cast<double>((m - 1) * (m - 2));
    std::vector<double> crit;
    crit.reserve(report.ric_v_eigs.size());
    for (double lambda : report.ric_v_eigs) {
        crit.push_back(offset - lambda);
    }
    std::sort(crit.begin(), crit.end());
    report.critical_values = cluster(crit, kEigenClusterGap);
    return report;
}

const char* to_string(NonisometryVerdict v) {
    switch (v) {
    case NonisometryVerdict::DistinctCriticalValues:
        return "DistinctCriticalValues";
    case NonisometryVerdict::DistinctEigenvalueMultiplicities:
        return "DistinctEigenvalueMultiplicities";
    case NonisometryVerdict::Inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

NonisometryVerdict classify_spectra(const std::vector<double>& eigs_a,
                                    const std::vector<double>& eigs_b,
                                    double tol, double cluster_gap) {
    std::vector<double> sa = eigs_a;
    std::vector<double> sb = eigs_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const std::vector<CriticalValue> ca = cluster(sa, cluster_gap);
    const std::vector<CriticalValue> cb = cluster(sb, cluster_gap);

    // Match distinct values across the two clustered lists within tol.
    bool sets_equal = ca.size() == cb.size();
    bool multiplicities_equal = sets_equal;
    if (sets_equal) {
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (std::abs(ca[i].value - cb[i].value) > tol) {
                sets_equal = false;
                break;
            }
            if (ca[i].multiplicity != cb[i].multiplicity) {
                multiplicities_equal = false;
            }
        }
    }
    if (!sets_equal) {
        return NonisometryVerdict::DistinctCriticalValues;
    }
    if (!multiplicities_equal) {
        return NonisometryVerdict::DistinctEigenvalueMultiplicities;
    }
    return NonisometryVerdict::Inconclusive;
}

NonisometryVerdict nonisometry_verdict(const SkewPencil& j, const SkewPencil& j2,
                                       double tol, double iso_tol) {
    const IsospectralReport iso = is_isospectral(j, j2, iso_tol);
    if (!iso.isospectral) {
        throw PreconditionError("nonisometry test requires an isospectral pair; worst invariant deviation " +
                                std::to_string(iso.max_deviation));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sa(ric_v(j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sb(ric_v(j2));
    const Vec ea = sa.eigenvalues();
    const Vec eb = sb.eigenvalues();
    return classify_spectra(std::vector<double>(ea.data(), ea.data() + ea.size()),
                            std::vector<double>(eb.data(), eb.data() + eb.size()), tol);
}

double total_scal_integral(const SkewPencil& j, const BaseGroupData& base) {
    base.validate();
    const int m = j.dim();
    const double mean_scal = scal_g(j) + base.scal_s + static_cast<double>((m - 1) * (m - 2)) -
                             ric_v(j).trace() / static_cast<double>(m);
    return base.vol_s * sphere_volume(m - 1) * mean_scal;
}

} // namespace isospec
