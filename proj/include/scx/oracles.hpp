#pragma once

#include "scx/linear.hpp"
#include "scx/response.hpp"
#include "scx/types.hpp"

namespace scx {

struct OracleResult {
  double best_value = 0.0;
  std::vector<int> witness_subset;          // for subset/target enumeration
  std::optional<LinearClassifier> witness_classifier;
  std::vector<std::optional<Vec>> witness_targets;  // per-agent designation
  long enumerated = 0;
};

/// Exhaustive 2^|P| scan: maximum weighted true-positive mass subject to
/// false-positive mass <= fp_budget (0 for the exact zero-FP optimum, k for
/// count-weighted budgets on unit-weight instances). Hard-capped.
OracleResult oracle_subsets(const DiscreteInstance& inst, double fp_budget,
                            int max_p = 20,
                            const Tolerances& tol = default_tol());

/// Grid reference for the 2D linear-classifier objective: sweeps directions
/// in [0°, 90°] and intercepts over the agent range, plus the closed-form
/// candidate set (ground truth, shifted classifier, per-agent cost-slope
/// lines). Returns max tp - fp.
OracleResult oracle_linear_grid(const LinearInstance& inst,
                                double angle_step_deg = 1.0,
                                double intercept_step = 0.05,
                                const Tolerances& tol = default_tol());

/// Brute-force reference for 2D target designation: per agent, skip or one
/// of `grid_per_agent` evenly spaced pushes of its boundary projection up the
/// gaming dimension; evaluates every combination and returns the best
/// true-positive count among zero-false-positive ones. Hard-capped.
OracleResult oracle_targets_2d(const LinearInstance& inst,
                               int grid_per_agent = 8, int max_agents = 5,
                               const Tolerances& tol = default_tol());

}  // namespace scx
