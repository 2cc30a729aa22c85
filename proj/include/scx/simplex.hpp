#pragma once

#include <Eigen/Dense>
#include <vector>

namespace scx::lp {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
};

/// Dense two-phase simplex for small problems:
///   maximize c.x  subject to  A x <= b,  x free.
/// Free variables are split internally into positive parts. Intended for
/// feasibility searches over a handful of variables; not a scalable solver.
Solution maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                  const Eigen::VectorXd& c, double eps = 1e-9);

}  // namespace scx::lp
