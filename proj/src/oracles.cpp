#include "scx/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scx {

OracleResult oracle_subsets(const DiscreteInstance& inst, double fp_budget,
                            int max_p, const Tolerances& tol) {
  const int m = static_cast<int>(inst.criteria.size());
  if (m > max_p) {
    throw std::invalid_argument(
        "oracle_subsets: |P| = " + std::to_string(m) +
        " exceeds the enumeration cap of " + std::to_string(max_p));
  }
  OracleResult result;
  result.best_value = -1.0;
  std::vector<int> selected;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    selected.clear();
    for (int k = 0; k < m; ++k) {
      if (mask & (std::uint64_t{1} << k)) selected.push_back(k);
    }
    const EvalReport rep = evaluate_criteria(inst, selected, tol);
    ++result.enumerated;
    if (rep.fp_mass > fp_budget + 1e-9) continue;
    if (rep.tp_mass > result.best_value) {
      result.best_value = rep.tp_mass;
      result.witness_subset = selected;
    }
  }
  return result;
}

OracleResult oracle_linear_grid(const LinearInstance& inst,
                                double angle_step_deg, double intercept_step,
                                const Tolerances& tol) {
  if (inst.dims != 2) {
    throw std::invalid_argument("oracle_linear_grid: expects a 2D instance");
  }
  if (angle_step_deg <= 0.0 || intercept_step <= 0.0) {
    throw std::invalid_argument("oracle_linear_grid: steps must be positive");
  }
  std::vector<LinearClassifier> candidates;
  candidates.push_back(inst.ground_truth);
  candidates.push_back(shifted_classifier(inst, tol));
  for (const auto& agent : inst.agents) {
    candidates.push_back({inst.cost, inst.cost.dot(agent.x) + 1.0});
  }
  for (double deg = 0.0; deg <= 90.0 + 1e-12; deg += angle_step_deg) {
    const double rad = deg * std::numbers::pi / 180.0;
    Vec a(2);
    a << std::cos(rad), std::sin(rad);
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& agent : inst.agents) {
      const double s = a.dot(agent.x);
      lo = first ? s : std::min(lo, s);
      hi = first ? s : std::max(hi, s);
      first = false;
    }
    const double max_shift =
        std::max(a[0] / inst.cost[0], a[1] / inst.cost[1]);
    lo -= max_shift + intercept_step;
    hi += max_shift + intercept_step;
    for (double b = lo; b <= hi; b += intercept_step) {
      candidates.push_back({a, b});
    }
  }

  OracleResult result;
  bool have = false;
  for (const auto& g : candidates) {
    const EvalReport rep = count_tp_fp(inst, g, tol);
    const int obj = rep.tp_count - rep.fp_count;
    ++result.enumerated;
    if (!have || obj > result.best_value) {
      result.best_value = obj;
      result.witness_classifier = g;
      have = true;
    }
  }
  return result;
}

OracleResult oracle_targets_2d(const LinearInstance& inst, int grid_per_agent,
                               int max_agents, const Tolerances& tol) {
  if (inst.dims != 2) {
    throw std::invalid_argument("oracle_targets_2d: expects a 2D instance");
  }
  if (inst.improvement_dims != std::vector<int>{0}) {
    throw std::invalid_argument(
        "oracle_targets_2d: expects improvement dimension 0");
  }
  const int n = static_cast<int>(inst.agents.size());
  if (n > max_agents) {
    throw std::invalid_argument(
        "oracle_targets_2d: n = " + std::to_string(n) +
        " exceeds the enumeration cap of " + std::to_string(max_agents));
  }
  if (grid_per_agent < 1 || grid_per_agent > 8) {
    throw std::invalid_argument(
        "oracle_targets_2d: grid_per_agent must be in [1, 8]");
  }
  const auto& truth = inst.ground_truth;
  if (truth.a[0] <= 0.0) {
    throw std::invalid_argument(
        "oracle_targets_2d: ground truth must weight dimension 0");
  }

  // Candidate designations per agent: none, or its boundary projection
  // pushed up the gaming dimension by an even grid over the budget.
  std::vector<std::vector<std::optional<Vec>>> menu(n);
  for (int i = 0; i < n; ++i) {
    menu[i].push_back(std::nullopt);
    const Vec& x = inst.agents[i].x;
    Vec base(2);
    base << (truth.b - truth.a[1] * x[1]) / truth.a[0], x[1];
    const double gap_cost = cost(x, base, inst.cost);
    if (gap_cost > 1.0 + tol.afford) continue;
    const double budget = (1.0 - gap_cost) / inst.cost[1];  // room along dim 1
    for (int k = 0; k < grid_per_agent; ++k) {
      const double t =
          grid_per_agent == 1
              ? 0.0
              : budget * static_cast<double>(k) / (grid_per_agent - 1);
      Vec p = base;
      p[1] += t;
      menu[i].push_back(p);
    }
  }

  OracleResult result;
  result.best_value = 0.0;
  result.witness_targets.assign(n, std::nullopt);
  std::vector<std::size_t> pick(n, 0);
  std::vector<Vec> points;
  for (;;) {
    points.clear();
    for (int i = 0; i < n; ++i) {
      if (menu[i][pick[i]]) points.push_back(*menu[i][pick[i]]);
    }
    ++result.enumerated;
    int tp = 0, fp = 0;
    for (const auto& agent : inst.agents) {
      const Outcome o = best_response_points(inst, agent.x, points,
                                             TiePolicy::Optimistic, tol);
      if (!o.classified) continue;
      (*o.color == EdgeColor::Blue ? tp : fp) += 1;
    }
    if (fp == 0 && tp > result.best_value) {
      result.best_value = tp;
      for (int i = 0; i < n; ++i) result.witness_targets[i] = menu[i][pick[i]];
    }
    // odometer over the per-agent menus
    int i = 0;
    while (i < n && ++pick[i] == menu[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return result;
}

}  // namespace scx
