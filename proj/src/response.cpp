#include "scx/response.hpp"

#include <cmath>
#include <stdexcept>

namespace scx {

double cost(const Vec& x, const Vec& y, const Vec& c) {
  if (x.size() != y.size() || x.size() != c.size()) {
    throw std::invalid_argument("cost: dimension mismatch");
  }
  return (c.array() * (y - x).array().max(0.0)).sum();
}

Vec true_position(const Vec& x_init, const Vec& x_perc,
                  const std::vector<int>& improvement_dims) {
  if (x_init.size() != x_perc.size()) {
    throw std::invalid_argument("true_position: dimension mismatch");
  }
  Vec out = x_init;
  for (int j : improvement_dims) out[j] = x_perc[j];
  return out;
}

EdgeColor target_color(const Vec& x_init, const Vec& p,
                       const LinearInstance& inst, const Tolerances& tol) {
  const Vec xt = true_position(x_init, p, inst.improvement_dims);
  const bool qualified =
      inst.ground_truth.a.dot(xt) >= inst.ground_truth.b - tol.boundary;
  return qualified ? EdgeColor::Blue : EdgeColor::Red;
}

int movement_dimension(const LinearClassifier& f, const Vec& c,
                       const std::vector<int>& improvement_dims,
                       const Tolerances& tol) {
  if (f.a.size() != c.size()) {
    throw std::invalid_argument("movement_dimension: dimension mismatch");
  }
  const Eigen::ArrayXd ratio = f.a.array() / c.array();
  const double best = ratio.maxCoeff();
  auto improves = [&](int j) {
    return std::binary_search(improvement_dims.begin(), improvement_dims.end(),
                              j);
  };
  int pick = -1;
  for (int j = 0; j < ratio.size(); ++j) {
    if (ratio[j] < best - tol.tie) continue;
    if (pick == -1) {
      pick = j;
    } else if (improves(j) && !improves(pick)) {
      pick = j;  // ties favor improvement dimensions, then lower index
    }
  }
  return pick;
}

namespace {

// Scan for the preferred edge among the selected criteria. Near-equal costs
// (within tol.tie) resolve by the policy, so the result does not depend on
// the edge list's stored order.
const Edge* preferred_edge(const AgentNode& agent,
                           const std::vector<char>& selected, TiePolicy policy,
                           const Tolerances& tol) {
  const Edge* best = nullptr;
  for (const auto& edge : agent.edges) {
    if (!selected[edge.criterion]) continue;
    if (best == nullptr || edge.cost < best->cost - tol.tie) {
      best = &edge;
    } else if (edge.cost <= best->cost + tol.tie &&
               tie_prefers(edge, *best, policy)) {
      best = &edge;
    }
  }
  return best;
}

}  // namespace

Outcome best_response_targets(const AgentNode& agent,
                              const std::vector<char>& selected,
                              TiePolicy policy, const Tolerances& tol) {
  Outcome out;
  const Edge* e = preferred_edge(agent, selected, policy, tol);
  if (e == nullptr) return out;  // unclassified
  out.chosen = e->criterion;
  out.cost_paid = e->cost;
  out.classified = true;
  out.color = e->color;
  out.qualified_after = e->color == EdgeColor::Blue;
  return out;
}

Outcome best_response_targets(const DiscreteInstance& inst, int agent_index,
                              const std::vector<int>& selected,
                              const Tolerances& tol) {
  std::vector<char> mask(inst.criteria.size(), 0);
  for (int k : selected) {
    if (k < 0 || k >= static_cast<int>(inst.criteria.size())) {
      throw std::invalid_argument("best_response_targets: index out of range");
    }
    mask[k] = 1;
  }
  return best_response_targets(inst.agents.at(agent_index), mask,
                               inst.tie_policy, tol);
}

Outcome best_response_points(const LinearInstance& inst, const Vec& x_init,
                             const std::vector<Vec>& points, TiePolicy policy,
                             const Tolerances& tol) {
  Outcome out;
  int pick = -1;
  double pick_cost = 0.0;
  EdgeColor pick_color = EdgeColor::Blue;
  for (int k = 0; k < static_cast<int>(points.size()); ++k) {
    const double c = cost(x_init, points[k], inst.cost);
    if (c > 1.0 + tol.afford) continue;
    const EdgeColor color = target_color(x_init, points[k], inst, tol);
    const Edge candidate{k, c, color};
    const Edge incumbent{pick, pick_cost, pick_color};
    if (pick == -1 || c < pick_cost - tol.tie ||
        (c <= pick_cost + tol.tie && tie_prefers(candidate, incumbent, policy))) {
      pick = k;
      pick_cost = c;
      pick_color = color;
    }
  }
  if (pick == -1) return out;
  out.chosen = pick;
  out.cost_paid = pick_cost;
  out.classified = true;
  out.color = pick_color;
  out.qualified_after = pick_color == EdgeColor::Blue;
  return out;
}

Outcome best_response_linear(const LinearInstance& inst, const Vec& x_init,
                             const LinearClassifier& g, const Tolerances& tol) {
  if (g.a.size() != inst.dims || x_init.size() != inst.dims) {
    throw std::invalid_argument("best_response_linear: dimension mismatch");
  }
  Outcome out;
  const auto qualified = [&](const Vec& x_true) {
    return inst.ground_truth.a.dot(x_true) >= inst.ground_truth.b - tol.boundary;
  };
  const double score = g.a.dot(x_init);
  if (score >= g.b - tol.boundary) {
    out.classified = true;  // already positive, no move
    out.qualified_after = qualified(x_init);
  } else {
    const int j = movement_dimension(g, inst.cost, inst.improvement_dims, tol);
    const double aj = g.a[j];
    if (aj > 0.0) {
      const double delta = (g.b - score) / aj;
      const double move_cost = inst.cost[j] * delta;
      if (move_cost <= 1.0 + tol.afford) {
        Vec x_perc = x_init;
        x_perc[j] += delta;  // exactly onto the boundary (utility 0 accepted)
        out.classified = true;
        out.cost_paid = move_cost;
        out.qualified_after =
            qualified(true_position(x_init, x_perc, inst.improvement_dims));
      }
    }
    if (!out.classified) {
      out.qualified_after = qualified(x_init);
    }
  }
  if (out.classified) {
    out.color = out.qualified_after ? EdgeColor::Blue : EdgeColor::Red;
  }
  return out;
}

DiscreteInstance compile_linear_to_discrete(const LinearInstance& inst,
                                            TiePolicy policy,
                                            const Tolerances& tol) {
  if (!inst.targets) {
    throw std::invalid_argument(
        "compile_linear_to_discrete: instance has no targets");
  }
  DiscreteInstance out;
  out.tie_policy = policy;
  const auto& targets = *inst.targets;
  out.criteria.reserve(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    out.criteria.push_back("t" + std::to_string(k));
  }
  out.agents.reserve(inst.agents.size());
  for (const auto& agent : inst.agents) {
    AgentNode node;
    node.id = agent.id;
    node.weight = agent.weight;
    for (int k = 0; k < static_cast<int>(targets.size()); ++k) {
      const double c = cost(agent.x, targets[k], inst.cost);
      if (c > 1.0 + tol.afford) continue;
      node.edges.push_back({k, c, target_color(agent.x, targets[k], inst, tol)});
    }
    out.agents.push_back(std::move(node));
  }
  sort_edges(out, tol);
  return out;
}

EvalReport evaluate_criteria(const DiscreteInstance& inst,
                             const std::vector<int>& selected,
                             const Tolerances& tol) {
  std::vector<char> mask(inst.criteria.size(), 0);
  for (int k : selected) {
    if (k < 0 || k >= static_cast<int>(inst.criteria.size())) {
      throw std::invalid_argument("evaluate_criteria: index out of range");
    }
    mask[k] = 1;
  }
  EvalReport report;
  for (const auto& agent : inst.agents) {
    const Outcome o = best_response_targets(agent, mask, inst.tie_policy, tol);
    if (!o.classified) continue;
    if (*o.color == EdgeColor::Blue) {
      report.tp_mass += agent.weight;
      report.tp_count += 1;
    } else {
      report.fp_mass += agent.weight;
      report.fp_count += 1;
    }
  }
  return report;
}

}  // namespace scx
