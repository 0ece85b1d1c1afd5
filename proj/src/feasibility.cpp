#include "onebit/feasibility.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace onebit {

// Phase-one simplex on:  C u >= b, lo <= u <= hi.
// Shift v = u - lo, fold the upper bounds in as extra rows, convert every row
// to an equality with a slack, flip rows to a nonnegative right-hand side, and
// minimize the sum of artificial variables with Bland's rule.
std::optional<Eigen::VectorXd> linear_feasibility(const Eigen::MatrixXd& C,
                                                  const Eigen::VectorXd& b,
                                                  double lo, double hi) {
  if (hi < lo) return std::nullopt;
  const int s = static_cast<int>(C.cols());
  const int mc = static_cast<int>(C.rows());
  const int rows = mc + s;

  // D v >= d with v in [0, hi-lo]
  Eigen::MatrixXd d_mat(rows, s);
  Eigen::VectorXd d_vec(rows);
  d_mat.topRows(mc) = C;
  d_vec.head(mc) = b - C * Eigen::VectorXd::Constant(s, lo);
  d_mat.bottomRows(s) = -Eigen::MatrixXd::Identity(s, s);
  d_vec.tail(s) = Eigen::VectorXd::Constant(s, -(hi - lo));

  // columns: v (s) | slack (rows) | artificial (rows) | rhs
  const int cols = s + rows + rows;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(rows + 1, cols + 1);
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    double flip = d_vec(r) < 0 ? -1.0 : 1.0;
    for (int j = 0; j < s; ++j) t(r, j) = flip * d_mat(r, j);
    t(r, s + r) = -flip;          // surplus for "D v - w = d"
    t(r, s + rows + r) = 1.0;     // artificial
    t(r, cols) = flip * d_vec(r);
    basis[r] = s + rows + r;
  }
  // objective: minimize sum of artificials; reduced costs from the basis
  for (int j = 0; j <= cols; ++j) {
    double acc = 0;
    for (int r = 0; r < rows; ++r) acc += t(r, j);
    t(rows, j) = -acc;
  }
  for (int r = 0; r < rows; ++r) t(rows, s + rows + r) = 0.0;

  constexpr double kPivotTol = 1e-11;
  constexpr double kFeasTol = 1e-9;
  const int max_iter = 200 * (rows + cols);
  for (int iter = 0; iter < max_iter; ++iter) {
    // Bland: smallest improving column
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (t(rows, j) < -kPivotTol) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = 0;
    for (int r = 0; r < rows; ++r) {
      if (t(r, enter) <= kPivotTol) continue;
      const double ratio = t(r, cols) / t(r, enter);
      if (leave < 0 || ratio < best - kPivotTol ||
          (std::abs(ratio - best) <= kPivotTol && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return std::nullopt;  // unbounded phase-one: cannot happen
    const double pivot = t(leave, enter);
    t.row(leave) /= pivot;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double f = t(r, enter);
      if (f != 0.0) t.row(r) -= f * t.row(leave);
    }
    basis[leave] = enter;
  }

  const double objective = -t(rows, cols);
  if (objective > kFeasTol) return std::nullopt;

  Eigen::VectorXd v = Eigen::VectorXd::Zero(s);
  for (int r = 0; r < rows; ++r)
    if (basis[r] < s) v(basis[r]) = t(r, cols);
  Eigen::VectorXd u = v.array() + lo;
  for (int j = 0; j < s; ++j) u(j) = std::min(std::max(u(j), lo), hi);
  return u;
}

}  // namespace onebit
