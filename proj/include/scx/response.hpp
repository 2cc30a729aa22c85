#pragma once

#include "scx/types.hpp"

namespace scx {

/// Movement price from x to y: increases are paid per the cost vector,
/// decreases are free.
double cost(const Vec& x, const Vec& y, const Vec& c);

/// Position that counts for true qualification after a move: the perceived
/// value in improvement dimensions, the initial value elsewhere.
Vec true_position(const Vec& x_init, const Vec& x_perc,
                  const std::vector<int>& improvement_dims);

/// Color of the action "move from x_init to target p": Blue if the agent
/// ends up truly qualified, Red otherwise.
EdgeColor target_color(const Vec& x_init, const Vec& p,
                       const LinearInstance& inst,
                       const Tolerances& tol = default_tol());

/// The single dimension a utility-maximizing agent moves along under a
/// linear classifier: argmax_j a[j]/c[j], ties broken in favor of
/// improvement dimensions and then by lower index.
int movement_dimension(const LinearClassifier& f, const Vec& c,
                       const std::vector<int>& improvement_dims,
                       const Tolerances& tol = default_tol());

/// Cheapest response of a discrete agent into the selected criteria
/// (selected[k] true iff criterion k is offered). Equal costs within
/// tol.tie resolve by `policy`.
Outcome best_response_targets(const AgentNode& agent,
                              const std::vector<char>& selected,
                              TiePolicy policy,
                              const Tolerances& tol = default_tol());

/// Same, with the selection given as criterion indices.
Outcome best_response_targets(const DiscreteInstance& inst, int agent_index,
                              const std::vector<int>& selected,
                              const Tolerances& tol = default_tol());

/// Cheapest affordable move of a linear agent onto one of `points`
/// (subset of the instance's strategy space, budget 1).
Outcome best_response_points(const LinearInstance& inst, const Vec& x_init,
                             const std::vector<Vec>& points, TiePolicy policy,
                             const Tolerances& tol = default_tol());

/// Response to a linear classifier g: stay if already positive, otherwise
/// move to the boundary along the movement dimension when the budget
/// allows (cost exactly 1 still moves), else stay negative.
Outcome best_response_linear(const LinearInstance& inst, const Vec& x_init,
                             const LinearClassifier& g,
                             const Tolerances& tol = default_tol());

/// Turns a linear instance with target points into the bipartite form: one
/// edge per affordable (agent, target) pair, colored by target_color.
DiscreteInstance compile_linear_to_discrete(
    const LinearInstance& inst, TiePolicy policy = TiePolicy::Optimistic,
    const Tolerances& tol = default_tol());

/// Exact evaluation of a criteria subset: every agent best-responds, Blue
/// takers accumulate into tp, Red takers into fp.
EvalReport evaluate_criteria(const DiscreteInstance& inst,
                             const std::vector<int>& selected,
                             const Tolerances& tol = default_tol());

}  // namespace scx
