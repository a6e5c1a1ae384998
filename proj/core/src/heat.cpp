#include "isospec/heat.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "isospec/rng.hpp"

namespace isospec {

double sphere_volume(int n) {
    if (n < 0) {
        throw DomainError("sphere dimension must be nonnegative");
    }
    const double half = 0.5 * static_cast<double>(n + 1);
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double moment1(const Mat& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("moment1 requires a square matrix");
    }
    const int m = static_cast<int>(a.rows());
    return a.trace() * sphere_volume(m - 1) / static_cast<double>(m);
}

double moment2(const Mat& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("moment2 requires a square matrix");
    }
    const int m = static_cast<int>(a.rows());
    const double tr = a.trace();
    const double frob_sq = a.squaredNorm();
    const double pairing = (a * a).trace(); // <A, A^T> in the Frobenius pairing
    return (tr * tr + frob_sq + pairing) * sphere_volume(m - 1) /
           static_cast<double>(m * (m + 2));
}

double c_s_exact(const SkewPencil& j, const BaseGroupData& base) {
    base.validate();
    const int m = j.dim();
    const Mat r = ric_v(j);
    const double phi = scal_g(j) + base.scal_s + static_cast<double>((m - 1) * (m - 2));
    return base.vol_s * (moment2(r) - 2.0 * phi * moment1(r) + phi * phi * sphere_volume(m - 1));
}

double ric_c_norm_sq_pointwise(const SkewPencil& j, const BaseGroupData& base, const Vec& v) {
    if (v.size() != j.dim()) {
        throw DimensionError("direction vector has wrong length");
    }
    if (std::abs(v.norm() - 1.0) > 1e-10) {
        throw DomainError("direction vector must be unit length");
    }
    const int m = j.dim();
    const int r = j.size();
    const double c = static_cast<double>(m - 2);

    const Mat ric = ric_v(j);
    const Mat ricz = ric_z(j);

    // u_i = j_i v carries all the bracket pairings: <[x_a, v], [x_b, v]> =
    // sum_i u_i[a] u_i[b] and <j_i x_a, v> = -u_i[a].
    std::vector<Vec> u(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        u[static_cast<std::size_t>(i)] = j[i].entries() * v;
    }

    Mat block_vv = ric;
    for (int i = 0; i < r; ++i) {
        block_vv += 0.5 * u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)].transpose();
    }
    block_vv.diagonal().array() += c;
    double total = block_vv.squaredNorm();

    const Vec rv = ric * v + c * v;
    total -= 2.0 * rv.squaredNorm();

    total += std::pow(v.dot(ric * v) + c, 2);

    for (int i = 0; i < r; ++i) {
        total += 0.5 * c * c * u[static_cast<std::size_t>(i)].squaredNorm();
    }

    Mat center_block(r, r);
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < r; ++k) {
            center_block(i, k) =
                ricz(i, k) - 0.5 * u[static_cast<std::size_t>(i)].dot(u[static_cast<std::size_t>(k)]);
        }
    }
    total += center_block.squaredNorm();

    if (base.ric_h.rows() == r) {
        total += 2.0 * center_block.cwiseProduct(base.ric_h).sum();
    } else if (base.ric_h.size() > 0) {
        throw DimensionError("ric_h rank does not match the pencil");
    }

    total += base.ric_s_norm_sq;
    return total;
}

QuadratureResult c_ric_quadrature(const SkewPencil& j, const BaseGroupData& base,
                                  long samples, std::uint64_t seed) {
    base.validate();
    if (samples < 10000) {
        throw DomainError("quadrature needs at least 10^4 samples, got " + std::to_string(samples));
    }
    const int m = j.dim();

    // Fixed block structure keeps the accumulation order independent of any
    // parallel execution, so results are bit-reproducible per (seed, samples).
    constexpr long kBlock = 4096;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (long start = 0; start < samples; start += kBlock) {
        const long end = std::min(samples, start + kBlock);
        double block_sum = 0.0;
        double block_sum_sq = 0.0;
        for (long i = start; i < end; ++i) {
            const Vec v = rng::unit_sphere_vector(seed, static_cast<std::uint64_t>(i), m);
            const double f = ric_c_norm_sq_pointwise(j, base, v);
            block_sum += f;
            block_sum_sq += f * f;
        }
        sum += block_sum;
        sum_sq += block_sum_sq;
    }

    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);
    const double scale = base.vol_s * sphere_volume(m - 1);

    QuadratureResult result;
    result.value = scale * mean;
    result.std_error = scale * std::sqrt(var / n);
    result.samples = samples;
    result.seed = seed;
    return result;
}

const char* to_string(OneFormVerdict v) {
    switch (v) {
    case OneFormVerdict::NotOneFormIsospectral:
        return "NotOneFormIsospectral";
    case OneFormVerdict::Undetermined:
        return "Undetermined";
    }
    return "Undetermined";
}

HeatComparison heat_comparison(const SkewPencil& j, const SkewPencil& j2,
                               const BaseGroupData& base, double verdict_tol, double iso_tol) {
    base.validate();
    const IsospectralReport iso = is_isospectral(j, j2, iso_tol);
    if (!iso.isospectral) {
        throw PreconditionError("heat comparison requires an isospectral pair; worst invariant deviation " +
                                std::to_string(iso.max_deviation));
    }
    const int m = j.dim();
    const double md = static_cast<double>(m);
    const double vol_product = base.vol_s * sphere_volume(m - 1);

    HeatComparison cmp;
    cmp.m = m;
    cmp.delta_ric_norm_sq = ric_v(j).squaredNorm() - ric_v(j2).squaredNorm();
    cmp.delta_c_s = vol_product * 2.0 / (md * (md + 2.0)) * cmp.delta_ric_norm_sq;
    cmp.delta_c_ric = vol_product * (md - 4.0) / md * cmp.delta_ric_norm_sq;
    // Equality of the degree-0 heat coefficients across the pair ties the
    // curvature-tensor integral to the other two.
    cmp.delta_c_r = -2.5 * cmp.delta_c_s + cmp.delta_c_ric;
    cmp.delta_a2_1_combination = cmp.delta_c_s + 10.0 * cmp.delta_c_ric;
    cmp.distinguisher_factor = (10.0 * md * md - 20.0 * md - 78.0) / (md * (md + 2.0));
    cmp.verdict = std::abs(cmp.delta_ric_norm_sq) > verdict_tol ? OneFormVerdict::NotOneFormIsospectral
                                                                : OneFormVerdict::Undetermined;
    return cmp;
}

A2Coefficients a2_coefficients(double c_s, double c_ric, double c_r, int dim_m) {
    if (dim_m < 1) {
        throw DomainError("manifold dimension must be positive");
    }
    const double d = static_cast<double>(dim_m);
    A2Coefficients out;
    out.a2_0 = (5.0 * c_s - 2.0 * c_ric + 2.0 * c_r) / 360.0;
    out.a2_1 = ((5.0 * d - 60.0) * c_s - (2.0 * d - 180.0) * c_ric + (2.0 * d - 30.0) * c_r) / 360.0;
    return out;
}

} // namespace isospec
