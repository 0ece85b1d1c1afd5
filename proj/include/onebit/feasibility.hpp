#pragma once

#include <Eigen/Dense>
#include <optional>

namespace onebit {

// Decides whether {u : C*u >= b, lo <= u_j <= hi} is nonempty via a phase-one
// simplex (Bland's rule) and returns a feasible point when it is.
std::optional<Eigen::VectorXd> linear_feasibility(const Eigen::MatrixXd& C,
                                                  const Eigen::VectorXd& b,
                                                  double lo, double hi);

}  // namespace onebit
