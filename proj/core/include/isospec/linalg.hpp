#pragma once

#include <Eigen/Dense>

namespace isospec {

// Dense row-major storage throughout; the supported envelope is m <= 64.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;

inline constexpr int kMaxDim = 64;

} // namespace isospec
