#pragma once

#include "scx/response.hpp"
#include "scx/types.hpp"

namespace scx {

struct Deletion {
  int round = 0;
  std::string agent_id;
  std::string criterion_id;
};

struct SolveResult {
  std::vector<int> p_final;  // surviving criterion indices, instance order
  std::vector<std::string> p_final_ids;
  EvalReport report;
  int rounds = 0;
  std::vector<Deletion> deletions;
  long evaluations = 0;  // cheapest-edge evaluations, bounded by |P|*n
};

/// Maximizes (weighted) true positives subject to zero false positives:
/// repeatedly deletes any criterion that is some agent's cheapest surviving
/// neighbor via a Red edge, until a full pass over the agents deletes
/// nothing or no criterion survives.
SolveResult solve_no_fp(const DiscreteInstance& inst,
                        const Tolerances& tol = default_tol());

/// True iff the selection produces no false positive.
bool verify_zero_fp(const DiscreteInstance& inst,
                    const std::vector<int>& selected,
                    const Tolerances& tol = default_tol());

}  // namespace scx
