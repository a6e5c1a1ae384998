#include "isospec/catalog.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace isospec::catalog {

namespace {

constexpr double kRadicandSlack = 1e-12;

Mat ex25_a_matrix(double a1, double a2) {
    Mat a = Mat::Zero(5, 5);
    a(0, 1) = -a1;
    a(1, 0) = a1;
    a(2, 3) = -a2;
    a(3, 2) = a2;
    return a;
}

Mat ex25_b_matrix(double b12, double b13, double b23) {
    Mat b = Mat::Zero(5, 5);
    b(0, 2) = b12;
    b(2, 0) = -b12;
    b(0, 4) = b13;
    b(4, 0) = -b13;
    b(2, 4) = b23;
    b(4, 2) = -b23;
    return b;
}

double checked_sqrt(double radicand, const char* label) {
    if (radicand < -kRadicandSlack) {
        throw DomainError(std::string(label) + " radicand is negative: " + std::to_string(radicand));
    }
    return std::sqrt(std::max(0.0, radicand));
}

} // namespace

void Ex25Params::validate() const {
    if (!(0.0 < a1 && a1 < a2)) {
        throw DomainError("rotation speeds must satisfy 0 < a1 < a2");
    }
    if (b12 < 0.0 || b13 < 0.0 || b23 < 0.0) {
        throw DomainError("couplings b12, b13, b23 must be nonnegative");
    }
}

bool Ex25Params::nondegenerate() const {
    return b23 > 0.0 || (b12 > 0.0 && b13 > 0.0);
}

Ex25Family make_ex25(const Ex25Params& params, double t) {
    params.validate();
    const double a1_sq = params.a1 * params.a1;
    const double a2_sq = params.a2 * params.a2;
    const double t_min =
        std::max(-params.b12 * params.b12 / (a2_sq - a1_sq), -params.b13 * params.b13 / a1_sq);
    const double t_max = params.b23 * params.b23 / a2_sq;
    if (t < t_min - kRadicandSlack || t > t_max + kRadicandSlack) {
        throw DomainError("deformation parameter t = " + std::to_string(t) + " outside interval [" +
                          std::to_string(t_min) + ", " + std::to_string(t_max) + "]");
    }

    const double b12_t = checked_sqrt(params.b12 * params.b12 + t * (a2_sq - a1_sq), "b12(t)");
    const double b13_t = checked_sqrt(params.b13 * params.b13 + t * a1_sq, "b13(t)");
    const double b23_t = checked_sqrt(params.b23 * params.b23 - t * a2_sq, "b23(t)");

    const Mat a = ex25_a_matrix(params.a1, params.a2);
    return Ex25Family{
        SkewPencil(SkewMatrix(a), SkewMatrix(ex25_b_matrix(params.b12, params.b13, params.b23))),
        SkewPencil(SkewMatrix(a), SkewMatrix(ex25_b_matrix(b12_t, b13_t, b23_t))),
        t_min,
        t_max,
    };
}

DetLinearity ex25_det_check(const Ex25Params& params, const std::vector<double>& t_samples) {
    if (t_samples.size() < 3) {
        throw DomainError("linearity check needs at least 3 samples");
    }
    std::vector<double> dets;
    dets.reserve(t_samples.size());
    for (double t : t_samples) {
        const Ex25Family fam = make_ex25(params, t);
        const Mat& a = fam.j_t[0].entries();
        const Mat& b = fam.j_t[1].entries();
        dets.push_back(Eigen::MatrixXd(a * a + b * b).determinant());
    }

    // ordinary least squares for d(t) = intercept + slope * t
    const double n = static_cast<double>(t_samples.size());
    double st = 0.0, sd = 0.0, stt = 0.0, std_ = 0.0;
    for (std::size_t i = 0; i < t_samples.size(); ++i) {
        st += t_samples[i];
        sd += dets[i];
        stt += t_samples[i] * t_samples[i];
        std_ += t_samples[i] * dets[i];
    }
    const double denom = n * stt - st * st;
    if (std::abs(denom) < 1e-14) {
        throw DomainError("t samples are degenerate; cannot fit a line");
    }
    const double slope = (n * std_ - st * sd) / denom;
    const double intercept = (sd - slope * st) / n;

    double max_residual = 0.0;
    for (std::size_t i = 0; i < t_samples.size(); ++i) {
        max_residual = std::max(max_residual, std::abs(dets[i] - (intercept + slope * t_samples[i])));
    }
    return DetLinearity{slope, max_residual};
}

double ex43_t_min() { return 0.5 * (1.0 - std::sqrt(5.0)); }
double ex43_t_max() { return 0.5 * (3.0 - std::sqrt(5.0)); }

SkewPencil make_ex43(double t) {
    const double denom = 1.0 - 2.0 * t;
    if (denom <= 0.0) {
        throw DomainError("ex4.3 requires 1 - 2t > 0, got t = " + std::to_string(t));
    }
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double t4 = t2 * t2;
    const double phi = checked_sqrt((t4 - 3.0 * t2 + 1.0) / denom, "phi(t)");
    const double psi = checked_sqrt((-t4 + 4.0 * t3 - 3.0 * t2 - 2.0 * t + 1.0) / denom, "psi(t)");

    Mat j1 = Mat::Zero(5, 5);
    j1(0, 2) = -t;
    j1(2, 0) = t;
    j1(1, 3) = t - 1.0;
    j1(3, 1) = 1.0 - t;
    j1(2, 4) = -phi;
    j1(4, 2) = phi;
    j1(3, 4) = -psi;
    j1(4, 3) = psi;

    Mat j2 = Mat::Zero(5, 5);
    j2(0, 1) = 1.0;
    j2(1, 0) = -1.0;
    j2(2, 3) = 1.0;
    j2(3, 2) = -1.0;

    return SkewPencil(SkewMatrix(j1), SkewMatrix(j2));
}

SkewPencil make_lemma42() {
    Mat j1 = Mat::Zero(5, 5);
    j1(0, 3) = 1.0;
    j1(1, 3) = 1.0;
    j1(1, 4) = 1.0;
    j1(3, 0) = -1.0;
    j1(3, 1) = -1.0;
    j1(4, 1) = -1.0;

    Mat j2 = Mat::Zero(5, 5);
    j2(0, 1) = 1.0;
    j2(1, 0) = -1.0;
    j2(2, 3) = 1.0;
    j2(3, 2) = -1.0;

    return SkewPencil(SkewMatrix(j1), SkewMatrix(j2));
}

BaseGroupData base_preset(const std::string& name) {
    if (name == "su2xsu2-unit") {
        // Product of two unit round 3-spheres: each factor has Ric = 2 g,
        // scal = 6, vol = 2 pi^2.
        BaseGroupData base;
        base.dim_s = 6;
        base.scal_s = 12.0;
        const double pi_sq = std::numbers::pi * std::numbers::pi;
        base.vol_s = 4.0 * pi_sq * pi_sq;
        base.ric_h = 2.0 * Mat::Identity(2, 2);
        base.ric_s_norm_sq = 24.0;
        base.validate();
        return base;
    }
    throw DomainError("unknown base preset '" + name + "'");
}

} // namespace isospec::catalog
