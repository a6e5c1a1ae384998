#include "isospec/flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "isospec/curvature.hpp"

namespace isospec {

SkewPencil y_field(const SkewPencil& j) {
    if (j.size() != 2) {
        throw UnsupportedRankError("deformation field is defined for pencils with two components");
    }
    const Mat& a = j[0].entries();
    const Mat& b = j[1].entries();
    const Mat a3 = a * a * a;
    return SkewPencil(SkewMatrix(a3 * b - b * a3), SkewMatrix::zero(j.dim()));
}

const FlowSample& FlowTrajectory::initial() const { return states.front(); }
const FlowSample& FlowTrajectory::final_state() const { return states.back(); }

namespace {

Mat y_component(const Mat& a, const Mat& b) {
    const Mat a3 = a * a * a;
    return a3 * b - b * a3;
}

} // namespace

FlowTrajectory integrate_flow(const SkewPencil& j0, double t_end, double dt, double drift_bound) {
    if (j0.size() != 2) {
        throw UnsupportedRankError("flow integration is defined for pencils with two components");
    }
    if (!(dt > 0.0)) {
        throw DomainError("step size must be positive");
    }
    if (!(drift_bound > 0.0)) {
        throw DomainError("drift bound must be positive");
    }

    FlowTrajectory traj;
    traj.reference = invariant_table(j0);
    traj.step_size = dt;
    traj.drift_bound = drift_bound;

    const Mat b = j0[1].entries(); // second component is constant along the flow
    const SkewMatrix b_skew = j0[1];
    const double direction = t_end < 0.0 ? -1.0 : 1.0;
    const double span = std::abs(t_end);

    auto record = [&](double t, Mat a_entries) {
        SkewPencil state(SkewMatrix(std::move(a_entries)), b_skew);
        const InvariantTable table = invariant_table(state);
        std::vector<double> drift(table.entries.size());
        double max_drift = 0.0;
        for (std::size_t i = 0; i < table.entries.size(); ++i) {
            drift[i] = std::abs(table.entries[i].value - traj.reference.entries[i].value);
            max_drift = std::max(max_drift, drift[i]);
        }
        traj.max_drift = std::max(traj.max_drift, max_drift);
        if (max_drift > drift_bound) {
            traj.degraded = true;
        }
        const double q = q_poly(state);
        const double rn = ric_v(state).squaredNorm();
        traj.states.push_back(FlowSample{t, std::move(state), q, rn, std::move(drift), max_drift});
    };

    Mat a = j0[0].entries();
    record(0.0, a);

    double t = 0.0;
    double remaining = span;
    while (remaining > 1e-12 * std::max(1.0, span)) {
        const double h_mag = std::min(dt, remaining);
        const double h = direction * h_mag;

        const Mat k1 = y_component(a, b);
        const Mat k2 = y_component(a + 0.5 * h * k1, b);
        const Mat k3 = y_component(a + 0.5 * h * k2, b);
        const Mat k4 = y_component(a + h * k3, b);
        Mat next = a + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!next.allFinite()) {
            throw DivergenceError("flow integration diverged at t = " + std::to_string(t), t,
                                  traj.states.back().j);
        }

        const Mat projected = 0.5 * (next - next.transpose());
        const double correction = (next - projected).norm();
        const double state_norm = projected.norm();
        if (state_norm > 0.0) {
            traj.max_projection_correction =
                std::max(traj.max_projection_correction, correction / state_norm);
        }
        a = projected;
        t += h;
        remaining -= h_mag;
        record(t, a);
    }

    if (direction < 0.0) {
        std::reverse(traj.states.begin(), traj.states.end());
    }
    return traj;
}

bool genericity_check(const SkewPencil& j, double tol) {
    if (j.size() != 2) {
        throw UnsupportedRankError("genericity test is defined for pencils with two components");
    }
    const double n1 = j[0].norm();
    const double n2 = j[1].norm();
    const double scale = n1 * n1 * n1 * n1 * n2 * n2 * n2;
    return std::abs(dq_along_y(j)) > tol * (1.0 + scale);
}

} // namespace isospec
