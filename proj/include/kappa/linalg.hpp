#pragma once

#include <Eigen/Dense>

namespace kappa {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Default tolerances used across the library. Structural checks are pure
// linear algebra at dims <= 8; anything routed through a matrix inverse or
// a truncated series gets the looser bound; finite differences looser still.
inline constexpr double kTolStructural = 1e-10;
inline constexpr double kTolNumeric = 1e-9;
inline constexpr double kTolFiniteDiff = 1e-6;
// Subgroup membership (|g*s -+ s|, orthogonality of constructed elements).
inline constexpr double kTolMembership = 1e-8;
// Sparse containers drop coefficients below this after every operation.
inline constexpr double kCoeffPrune = 1e-14;

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace kappa
