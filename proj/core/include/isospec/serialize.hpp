#pragma once

#include <optional>
#include <string>

#include "isospec/curvature.hpp"
#include "isospec/heat.hpp"
#include "isospec/skew.hpp"

namespace isospec {

// JSON wire formats. A pencil is {"m": int, "r": int, "components":
// [[row-major m*m reals], ...]}; skewness is validated on load.

std::string to_json(const SkewPencil& j);
SkewPencil pencil_from_json(const std::string& text);
SkewPencil pencil_from_json_file(const std::string& path);

/// {"m": int, "entries": [{"a","b","value"}, ...]} with keys sorted by (a+b, a).
std::string to_json(const InvariantTable& table);

/// Eigenvalues and critical values as sorted arrays plus multiplicities.
std::string to_json(const CurvatureReport& report);

/// Includes the seed and sample count of the quadrature when one was used.
std::string to_json(const HeatComparison& cmp,
                    const std::optional<QuadratureResult>& quadrature = std::nullopt);

} // namespace isospec
