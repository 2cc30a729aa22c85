#include "scx/solver.hpp"

#include <numeric>

namespace scx {

SolveResult solve_no_fp(const DiscreteInstance& inst, const Tolerances& tol) {
  const int m = static_cast<int>(inst.criteria.size());
  const int n = static_cast<int>(inst.agents.size());
  SolveResult result;
  std::vector<char> alive(m, 1);
  int alive_count = m;

  // Cursor per agent into its sorted edge list. Criteria are only ever
  // deleted, so cursors advance monotonically across passes.
  std::vector<std::size_t> cursor(n, 0);
  auto cheapest_alive = [&](int i) -> const Edge* {
    const auto& edges = inst.agents[i].edges;
    auto& c = cursor[i];
    while (c < edges.size() && !alive[edges[c].criterion]) ++c;
    return c < edges.size() ? &edges[c] : nullptr;
  };

  while (alive_count > 0) {
    ++result.rounds;
    bool deleted_this_round = false;
    for (int i = 0; i < n; ++i) {
      ++result.evaluations;
      const Edge* e = cheapest_alive(i);
      if (e != nullptr && e->color == EdgeColor::Red) {
        alive[e->criterion] = 0;
        --alive_count;
        deleted_this_round = true;
        result.deletions.push_back(
            {result.rounds, inst.agents[i].id, inst.criteria[e->criterion]});
      }
    }
    if (!deleted_this_round) break;
  }

  for (int k = 0; k < m; ++k) {
    if (alive[k]) {
      result.p_final.push_back(k);
      result.p_final_ids.push_back(inst.criteria[k]);
    }
  }
  result.report = evaluate_criteria(inst, result.p_final, tol);
  return result;
}

bool verify_zero_fp(const DiscreteInstance& inst,
                    const std::vector<int>& selected, const Tolerances& tol) {
  return evaluate_criteria(inst, selected, tol).fp_count == 0;
}

}  // namespace scx
