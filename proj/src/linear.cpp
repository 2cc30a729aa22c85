#include "scx/linear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scx/simplex.hpp"

namespace scx {

ProjectionPoints projection_points(const LinearInstance& inst, const Vec& x,
                                   int j, const LinearClassifier& f) {
  if (j < 0 || j >= inst.dims) {
    throw std::invalid_argument("projection_points: dimension out of range");
  }
  const auto& truth = inst.ground_truth;
  if (truth.a[j] == 0.0) {
    throw std::invalid_argument(
        "projection_points: ground truth is parallel to the dimension");
  }
  ProjectionPoints out{x, x, x};
  out.x_truth[j] = (truth.b - truth.a.dot(x) + truth.a[j] * x[j]) / truth.a[j];
  if (f.a[j] != 0.0) {
    out.x_f[j] = (f.b - f.a.dot(x) + f.a[j] * x[j]) / f.a[j];
  } else {
    out.x_f[j] = std::numeric_limits<double>::quiet_NaN();
  }
  out.x_max[j] = x[j] + 1.0 / inst.cost[j];
  return out;
}

std::vector<int> improvement_margin(const LinearInstance& inst,
                                    const Tolerances& tol) {
  const auto& truth = inst.ground_truth;
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(inst.agents.size()); ++i) {
    const Vec& x = inst.agents[i].x;
    const double score = truth.a.dot(x);
    if (score >= truth.b - tol.boundary) continue;  // already qualified
    for (int j : inst.improvement_dims) {
      if (truth.a[j] <= 0.0) continue;
      const double move = inst.cost[j] * (truth.b - score) / truth.a[j];
      if (move <= 1.0 + tol.afford) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

LinearClassifier shifted_classifier(const LinearInstance& inst,
                                    const Tolerances& tol) {
  const int j = movement_dimension(inst.ground_truth, inst.cost,
                                   inst.improvement_dims, tol);
  return {inst.ground_truth.a,
          inst.ground_truth.b + inst.ground_truth.a[j] / inst.cost[j]};
}

ThreeSets canonical_three_sets(const LinearInstance& inst,
                               const Tolerances& tol) {
  const auto margin = improvement_margin(inst, tol);
  std::vector<char> in_margin(inst.agents.size(), 0);
  for (int i : margin) in_margin[i] = 1;
  ThreeSets out;
  const auto& truth = inst.ground_truth;
  for (int i = 0; i < static_cast<int>(inst.agents.size()); ++i) {
    if (truth.a.dot(inst.agents[i].x) >= truth.b - tol.boundary) {
      out.must_accept.push_back(i);
    } else if (in_margin[i]) {
      out.must_improve.push_back(i);
    } else {
      out.must_reject.push_back(i);
    }
  }
  return out;
}

namespace {

// Dimensions that beat j when the bang-per-buck ratios tie: improvement
// dimensions first, then lower index.
std::vector<int> tie_winners_over(const LinearInstance& inst, int j) {
  std::vector<int> out;
  const bool j_improves = inst.is_improvement(j);
  for (int k = 0; k < inst.dims; ++k) {
    if (k == j) continue;
    const bool k_improves = inst.is_improvement(k);
    if ((k_improves && !j_improves) || (k_improves == j_improves && k < j)) {
      out.push_back(k);
    }
  }
  return out;
}

struct DimJProgram {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  int j = 0;
};

// Variables are (a_k for k != j, b, t) with the normalization a_j = 1; t is
// a dominance slack on the ratio constraints, maximized to keep the solved
// point away from movement-dimension ties where the geometry allows it.
DimJProgram build_dimj_program(const LinearInstance& inst,
                               const ThreeSets& three, int j,
                               const std::vector<int>& strict_dims,
                               const Tolerances& tol) {
  const int d = inst.dims;
  const int vars = d + 1;  // d-1 weights, intercept, slack
  const int b_var = d - 1;
  const int t_var = d;
  std::vector<int> var_of_dim(d, -1);
  {
    int v = 0;
    for (int k = 0; k < d; ++k) {
      if (k != j) var_of_dim[k] = v++;
    }
  }

  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  auto add_row = [&](const Eigen::VectorXd& row, double value) {
    rows.push_back(row);
    rhs.push_back(value);
  };

  // Ratio dominance: a_k * c_j + t <= c_k.
  for (int k = 0; k < d; ++k) {
    if (k == j) continue;
    Eigen::VectorXd row = Eigen::VectorXd::Zero(vars);
    row[var_of_dim[k]] = inst.cost[j];
    row[t_var] = 1.0;
    add_row(row, inst.cost[k]);
  }
  for (int k : strict_dims) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(vars);
    row[var_of_dim[k]] = inst.cost[j];
    add_row(row, inst.cost[k] - tol.lp_strict);
  }
  {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(vars);
    row[t_var] = 1.0;
    add_row(row, 1.0);  // cap the slack
    row[t_var] = -1.0;
    add_row(row, 0.0);  // t >= 0
  }

  const double shift = 1.0 / inst.cost[j];
  auto off_dim_terms = [&](const Vec& x, Eigen::VectorXd& row, double sign) {
    for (int k = 0; k < d; ++k) {
      if (k != j) row[var_of_dim[k]] = sign * x[k];
    }
  };

  for (int i : three.must_accept) {
    // b - sum_k a_k x[k] <= x[j] + 1/c_j
    const Vec& x = inst.agents[i].x;
    Eigen::VectorXd row = Eigen::VectorXd::Zero(vars);
    off_dim_terms(x, row, -1.0);
    row[b_var] = 1.0;
    add_row(row, x[j] + shift);
  }
  for (int i : three.must_reject) {
    // sum_k a_k x[k] - b <= -(x[j] + 1/c_j) - strict margin
    const Vec& x = inst.agents[i].x;
    Eigen::VectorXd row = Eigen::VectorXd::Zero(vars);
    off_dim_terms(x, row, 1.0);
    row[b_var] = -1.0;
    add_row(row, -(x[j] + shift) - tol.lp_strict);
  }
  for (int i : three.must_improve) {
    const Vec& x = inst.agents[i].x;
    const ProjectionPoints pp =
        projection_points(inst, x, j, LinearClassifier{inst.ground_truth});
    // Crossing point at or beyond the ground truth: sum a_k x[k] - b <= -x_truth[j]
    Eigen::VectorXd row = Eigen::VectorXd::Zero(vars);
    off_dim_terms(x, row, 1.0);
    row[b_var] = -1.0;
    add_row(row, -pp.x_truth[j]);
    // ... and within budget: b - sum a_k x[k] <= x_max[j]
    Eigen::VectorXd row2 = Eigen::VectorXd::Zero(vars);
    off_dim_terms(x, row2, -1.0);
    row2[b_var] = 1.0;
    add_row(row2, pp.x_max[j]);
  }

  DimJProgram prog;
  prog.j = j;
  prog.A.resize(static_cast<int>(rows.size()), vars);
  prog.b.resize(static_cast<int>(rows.size()));
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    prog.A.row(r) = rows[r];
    prog.b[r] = rhs[r];
  }
  prog.c = Eigen::VectorXd::Zero(vars);
  prog.c[t_var] = 1.0;
  return prog;
}

std::optional<LinearClassifier> solve_dimj_program(const LinearInstance& inst,
                                                   const ThreeSets& three,
                                                   int j,
                                                   const std::vector<int>& strict,
                                                   const Tolerances& tol) {
  const DimJProgram prog = build_dimj_program(inst, three, j, strict, tol);
  const lp::Solution sol = lp::maximize(prog.A, prog.b, prog.c);
  if (sol.status != lp::SolveStatus::Optimal) return std::nullopt;
  LinearClassifier f;
  f.a = Vec::Zero(inst.dims);
  f.a[j] = 1.0;
  int v = 0;
  for (int k = 0; k < inst.dims; ++k) {
    if (k != j) f.a[k] = sol.x[v++];
  }
  f.b = sol.x[inst.dims - 1];
  return f;
}

bool simulate_three_sets(const LinearInstance& inst, const ThreeSets& three,
                         const LinearClassifier& f, const Tolerances& tol) {
  for (int i : three.must_accept) {
    if (!best_response_linear(inst, inst.agents[i].x, f, tol).classified) {
      return false;
    }
  }
  for (int i : three.must_reject) {
    if (best_response_linear(inst, inst.agents[i].x, f, tol).classified) {
      return false;
    }
  }
  for (int i : three.must_improve) {
    const Outcome o = best_response_linear(inst, inst.agents[i].x, f, tol);
    if (!o.classified || !o.qualified_after) return false;
  }
  return true;
}

}  // namespace

LpResult find_dimj_classifier(const LinearInstance& inst,
                              const ThreeSets& three, int j,
                              const Tolerances& tol) {
  if (j < 0 || j >= inst.dims) {
    throw std::invalid_argument("find_dimj_classifier: dimension out of range");
  }
  LpResult result;
  result.dimension = j;
  if (!three.must_improve.empty()) {
    // Improvement requires crossing the ground truth along j.
    if (!inst.is_improvement(j) || inst.ground_truth.a[j] <= 0.0) {
      return result;
    }
  }

  auto candidate = solve_dimj_program(inst, three, j, {}, tol);
  if (!candidate) return result;

  if (movement_dimension(*candidate, inst.cost, inst.improvement_dims, tol) !=
      j) {
    // The non-strict ratio constraints allowed a tie that resolves against
    // j; re-solve with strict dominance over every dimension that would win.
    candidate =
        solve_dimj_program(inst, three, j, tie_winners_over(inst, j), tol);
    if (!candidate) return result;
    if (movement_dimension(*candidate, inst.cost, inst.improvement_dims,
                           tol) != j) {
      result.status = LpStatus::VerificationFailed;
      return result;
    }
  }

  if (!simulate_three_sets(inst, three, *candidate, tol)) {
    result.status = LpStatus::VerificationFailed;
    return result;
  }
  result.status = LpStatus::Feasible;
  result.classifier = *candidate;
  return result;
}

LpResult find_linear_classifier(const LinearInstance& inst,
                                const ThreeSets& three, const Tolerances& tol) {
  std::vector<int> dims_to_try;
  if (!three.must_improve.empty()) {
    dims_to_try = inst.improvement_dims;
  } else {
    for (int j = 0; j < inst.dims; ++j) dims_to_try.push_back(j);
  }
  bool verification_failed = false;
  for (int j : dims_to_try) {
    const LpResult r = find_dimj_classifier(inst, three, j, tol);
    if (r.status == LpStatus::Feasible) return r;
    if (r.status == LpStatus::VerificationFailed) verification_failed = true;
  }
  LpResult out;
  out.status = verification_failed ? LpStatus::VerificationFailed
                                   : LpStatus::Infeasible;
  return out;
}

namespace {

// Geometric cross-check of the simulated counts, valid on 2D instances with
// improvement dimension 0, a gaming-encouraging ground truth and an
// improvement-encouraging g: classified agents strictly below the g/truth
// intersection that are initially unqualified are the false positives.
void region_cross_check(const LinearInstance& inst, const LinearClassifier& g,
                        const std::vector<Outcome>& outcomes,
                        const Tolerances& tol) {
  if (inst.dims != 2) return;
  if (inst.improvement_dims != std::vector<int>{0}) return;
  if (movement_dimension(g, inst.cost, inst.improvement_dims, tol) != 0) return;
  if (movement_dimension(inst.ground_truth, inst.cost, inst.improvement_dims,
                         tol) != 1) {
    return;
  }
  const auto& truth = inst.ground_truth;
  const double det = g.a[0] * truth.a[1] - g.a[1] * truth.a[0];
  if (std::abs(det) <= tol.tie) return;  // parallel: simulation only
  const double z1 = (g.a[0] * truth.b - truth.a[0] * g.b) / det;

  const double band = 100.0 * std::max(tol.boundary, tol.tie);
  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    if (!outcomes[i].classified) continue;
    const Vec& x = inst.agents[i].x;
    const double truth_margin = truth.a.dot(x) - truth.b;
    if (std::abs(x[1] - z1) <= band || std::abs(truth_margin) <= band) {
      continue;  // too close to a region boundary to compare robustly
    }
    const bool predicted_fp = x[1] < z1 && truth_margin < 0.0;
    const bool simulated_fp = *outcomes[i].color == EdgeColor::Red;
    if (predicted_fp != simulated_fp) {
      throw std::logic_error(
          "count_tp_fp: region predicate disagrees with simulation for agent " +
          inst.agents[i].id);
    }
  }
}

}  // namespace

EvalReport count_tp_fp(const LinearInstance& inst, const LinearClassifier& g,
                       const Tolerances& tol) {
  EvalReport report;
  std::vector<Outcome> outcomes;
  outcomes.reserve(inst.agents.size());
  for (const auto& agent : inst.agents) {
    Outcome o = best_response_linear(inst, agent.x, g, tol);
    if (o.classified) {
      if (o.qualified_after) {
        report.tp_mass += agent.weight;
        report.tp_count += 1;
      } else {
        report.fp_mass += agent.weight;
        report.fp_count += 1;
      }
    }
    outcomes.push_back(std::move(o));
  }
  region_cross_check(inst, g, outcomes, tol);
  return report;
}

Best2dResult solve_2d_linear(const LinearInstance& inst,
                             const Tolerances& tol) {
  if (inst.dims != 2) {
    throw std::invalid_argument("solve_2d_linear: expects a 2D instance");
  }
  const int truth_dim = movement_dimension(inst.ground_truth, inst.cost,
                                           inst.improvement_dims, tol);
  if (inst.is_improvement(truth_dim)) {
    // The ground truth already encourages improvement and is optimal.
    const EvalReport rep = count_tp_fp(inst, inst.ground_truth, tol);
    return {inst.ground_truth, rep.tp_count - rep.fp_count, false};
  }
  if (inst.improvement_dims.empty()) {
    const LinearClassifier g = shifted_classifier(inst, tol);
    const EvalReport rep = count_tp_fp(inst, g, tol);
    return {g, rep.tp_count - rep.fp_count, true};
  }
  if (inst.improvement_dims != std::vector<int>{0} || truth_dim != 1) {
    throw std::invalid_argument(
        "solve_2d_linear: expects improvement dimension 0 and a "
        "gaming-encouraging ground truth (permute dimensions)");
  }

  Best2dResult best;
  best.classifier = shifted_classifier(inst, tol);
  best.gaming_candidate = true;
  EvalReport best_rep = count_tp_fp(inst, best.classifier, tol);
  best.objective = best_rep.tp_count - best_rep.fp_count;

  for (const auto& agent : inst.agents) {
    // Cost-slope classifier putting this agent exactly at the reach limit.
    LinearClassifier g{inst.cost, inst.cost.dot(agent.x) + 1.0};
    const EvalReport rep = count_tp_fp(inst, g, tol);
    const int obj = rep.tp_count - rep.fp_count;
    bool take = false;
    if (obj != best.objective) {
      take = obj > best.objective;
    } else if (rep.tp_count != best_rep.tp_count) {
      take = rep.tp_count > best_rep.tp_count;
    } else if (!best.gaming_candidate) {
      take = g.b < best.classifier.b - tol.tie;
    }
    if (take) {
      best.classifier = g;
      best.objective = obj;
      best.gaming_candidate = false;
      best_rep = rep;
    }
  }
  return best;
}

Design2dResult solve_2d_general(const LinearInstance& inst,
                                const Tolerances& tol) {
  if (inst.dims != 2) {
    throw std::invalid_argument("solve_2d_general: expects a 2D instance");
  }
  if (inst.improvement_dims != std::vector<int>{0}) {
    throw std::invalid_argument(
        "solve_2d_general: expects improvement dimension 0 and gaming "
        "dimension 1");
  }
  const auto& truth = inst.ground_truth;
  if (truth.a[0] <= 0.0 || truth.a[1] <= 0.0) {
    throw std::invalid_argument(
        "solve_2d_general: ground-truth weights must be positive");
  }
  const int n = static_cast<int>(inst.agents.size());
  const double c0 = inst.cost[0];
  const double c1 = inst.cost[1];
  // Work in cost-rescaled coordinates, where one unit of movement in either
  // dimension costs 1 and the budget is 1.
  const double a0 = truth.a[0] / c0;
  const double a1 = truth.a[1] / c1;
  const double b = truth.b;

  struct Item {
    int agent;
    double y0, y1;
  };
  std::vector<Item> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i) {
    order.push_back({i, inst.agents[i].x[0] * c0, inst.agents[i].x[1] * c1});
  }
  std::sort(order.begin(), order.end(), [&](const Item& p, const Item& q) {
    if (p.y1 != q.y1) return p.y1 > q.y1;
    if (p.y0 != q.y0) return p.y0 < q.y0;
    return inst.agents[p.agent].id < inst.agents[q.agent].id;
  });

  struct Placed {
    double y0, y1;      // designated point, scaled space
    double own_cost;    // movement price for its agent
  };
  Design2dResult result;
  result.designs.resize(n);
  std::vector<std::optional<Placed>> placed(n);  // by sorted position

  // Smallest gaming coordinate first; earlier-placed points only ever sit
  // below the one being placed, and pushes only raise it.
  for (int pos = n - 1; pos >= 0; --pos) {
    const Item& it = order[pos];
    TargetDesign& design = result.designs[it.agent];
    design.agent = it.agent;
    const double min0 = (b - a1 * it.y1) / a0;  // boundary projection
    const double gap = min0 - it.y0;
    if (gap > 1.0 + tol.afford) {
      design.skipped_unreachable = true;
      continue;
    }
    const double max1 = it.y1 + 1.0 - std::max(gap, 0.0);  // budget endpoint
    double d1 = it.y1;
    for (int q = n - 1; q > pos; --q) {
      if (!placed[q]) {
        // Priced-out agents move only at cost <= 1; keep this point clear.
        const double reach = std::max(min0 - order[q].y0, 0.0) +
                             std::max(d1 - order[q].y1, 0.0);
        if (reach <= 1.0 + tol.afford) {
          d1 += (1.0 + tol.push) - reach;
        }
        continue;
      }
      const double reach = std::max(min0 - order[q].y0, 0.0) +
                           std::max(d1 - order[q].y1, 0.0);
      if (placed[q]->own_cost > reach) {
        if (order[q].y1 < it.y1 - tol.tie &&
            a0 * min0 + a1 * order[q].y1 >= b - tol.boundary) {
          throw std::logic_error(
              "solve_2d_general: a lower agent would qualify at a higher "
              "designated point");
        }
        d1 += placed[q]->own_cost - reach;  // raise to indifference
      }
    }
    design.push = d1 - it.y1;
    if (d1 > max1 + tol.afford) {
      design.discarded_over_budget = true;
      continue;
    }
    placed[pos] = Placed{min0, d1, std::max(gap, 0.0) + (d1 - it.y1)};
    Vec p(2);
    p << min0 / c0, d1 / c1;
    design.point = p;
  }

  for (int pos = 0; pos < n; ++pos) {
    if (!placed[pos]) continue;
    Vec p(2);
    p << placed[pos]->y0 / c0, placed[pos]->y1 / c1;
    const bool duplicate =
        std::any_of(result.p_final.begin(), result.p_final.end(),
                    [&](const Vec& q) { return q == p; });
    if (!duplicate) result.p_final.push_back(p);
  }

  LinearInstance with_targets = inst;
  with_targets.targets = result.p_final;
  const DiscreteInstance compiled =
      compile_linear_to_discrete(with_targets, TiePolicy::Optimistic, tol);
  std::vector<int> all(result.p_final.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
  result.report = evaluate_criteria(compiled, all, tol);
  return result;
}

}  // namespace scx
