#pragma once

#include <string>
#include <vector>

#include "isospec/curvature.hpp"
#include "isospec/skew.hpp"

namespace isospec::catalog {

/// Parameters of the "ex2.5" two-block family: rotation speeds 0 < a1 < a2
/// and nonnegative couplings b12, b13, b23.
struct Ex25Params {
    double a1 = 1.0;
    double a2 = 2.0;
    double b12 = 1.0;
    double b13 = 1.0;
    double b23 = 1.0;

    void validate() const; ///< throws DomainError on violated invariants
    /// The deformation interval has nonzero length iff b23 > 0 or both b12, b13 > 0.
    bool nondegenerate() const;
};

struct Ex25Family {
    SkewPencil j_ref; ///< pencil at t = 0
    SkewPencil j_t;   ///< deformed pencil
    double t_min = 0.0;
    double t_max = 0.0;
};

/// The "ex2.5" deformation: component b(t) has entries
/// b12(t) = sqrt(b12^2 + t (a2^2 - a1^2)), b13(t) = sqrt(b13^2 + t a1^2),
/// b23(t) = sqrt(b23^2 - t a2^2), defined for t in
/// [max{-b12^2/(a2^2-a1^2), -b13^2/a1^2}, b23^2/a2^2].
Ex25Family make_ex25(const Ex25Params& params, double t);

struct DetLinearity {
    double slope = 0.0;
    double max_residual = 0.0; ///< worst departure from the linear fit
};

/// Least-squares linear fit of t -> det(a^2 + b(t)^2); the map is exactly
/// linear with slope a1^4 a2^4 (a1^2 - a2^2).
DetLinearity ex25_det_check(const Ex25Params& params, const std::vector<double>& t_samples);

/// Parameter interval of the "ex4.3" family: [(1 - sqrt 5)/2, (3 - sqrt 5)/2].
double ex43_t_min();
double ex43_t_max();

/// The "ex4.3" family on R^5: explicit pair with constant characteristic
/// polynomial but Ricci norm t^2 - t + 13/2. Throws DomainError outside the
/// parameter interval, naming the radicand that fails.
SkewPencil make_ex43(double t);

/// The "lemma4.2" pair: the integer 5x5 pencil with dq along Y equal to 2.
SkewPencil make_lemma42();

/// Named curvature presets for the compact factor. Known: "su2xsu2-unit",
/// the product of two unit round 3-spheres.
BaseGroupData base_preset(const std::string& name);

} // namespace isospec::catalog
