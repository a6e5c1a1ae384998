#pragma once

#include <vector>

#include "isospec/invariants.hpp"
#include "isospec/skew.hpp"

namespace isospec {

inline constexpr double kDefaultGenericityTol = 1e-10;

/// Deformation field Y(j) = (j_1^3 j_2 - j_2 j_1^3, 0). Its flow preserves
/// every p_{a,b} while moving q, so flow lines are isospectral families.
SkewPencil y_field(const SkewPencil& j);

/// Integration blew up (NaN/overflow); carries the last finite state.
struct DivergenceError : Error {
    DivergenceError(std::string message, double t, SkewPencil state)
        : Error(std::move(message)), last_t(t), last_state(std::move(state)) {}
    double last_t;
    SkewPencil last_state;
};

struct FlowSample {
    double t = 0.0;
    SkewPencil j;
    double q = 0.0;
    double ric_norm_sq = 0.0;
    std::vector<double> drift; ///< |p_ab(j(t)) - p_ab(j(0))|, aligned with reference.entries
    double max_drift = 0.0;
};

enum class FlowMethod { RK4 };

struct FlowTrajectory {
    std::vector<FlowSample> states; ///< strictly increasing in t
    InvariantTable reference;       ///< invariants of the initial state
    double step_size = 0.0;
    FlowMethod method = FlowMethod::RK4;
    double drift_bound = 0.0;
    bool degraded = false; ///< some drift exceeded drift_bound
    double max_drift = 0.0;
    double max_projection_correction = 0.0; ///< worst per-step skew re-projection, relative

    const FlowSample& initial() const;
    const FlowSample& final_state() const;
};

/// Fixed-step classical RK4 for j' = Y(j) from t = 0 to t_end (either sign).
/// After each step the moving component is re-projected to exact skewness;
/// drift of every invariant is recorded against the initial table.
FlowTrajectory integrate_flow(const SkewPencil& j0, double t_end, double dt,
                              double drift_bound);

/// True iff |dq_along_y(j)| > tol * (1 + ||j_1||^4 ||j_2||^3); membership in
/// the open set where the flow provably changes the Ricci spectrum.
bool genericity_check(const SkewPencil& j, double tol = kDefaultGenericityTol);

} // namespace isospec
