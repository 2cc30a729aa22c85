#include "scx/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace scx {

const char* to_string(EdgeColor c) {
  return c == EdgeColor::Blue ? "blue" : "red";
}

const char* to_string(TiePolicy t) {
  return t == TiePolicy::Pessimistic ? "pessimistic" : "optimistic";
}

bool LinearInstance::is_improvement(int j) const {
  return std::binary_search(improvement_dims.begin(), improvement_dims.end(),
                            j);
}

bool tie_prefers(const Edge& a, const Edge& b, TiePolicy policy) {
  if (a.color != b.color) {
    const EdgeColor first =
        policy == TiePolicy::Pessimistic ? EdgeColor::Red : EdgeColor::Blue;
    return a.color == first;
  }
  return a.criterion < b.criterion;
}

void sort_edges(DiscreteInstance& inst, const Tolerances& tol) {
  for (auto& agent : inst.agents) {
    auto& edges = agent.edges;
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
      if (a.cost != b.cost) return a.cost < b.cost;
      return tie_prefers(a, b, inst.tie_policy);
    });
    // Reorder runs of near-equal costs by the tie policy. Exact sort first,
    // then a linear pass, keeps the comparator a strict weak ordering.
    std::size_t i = 0;
    while (i < edges.size()) {
      std::size_t j = i + 1;
      while (j < edges.size() && edges[j].cost - edges[j - 1].cost <= tol.tie) {
        ++j;
      }
      if (j - i > 1) {
        std::stable_sort(edges.begin() + i, edges.begin() + j,
                         [&](const Edge& a, const Edge& b) {
                           return tie_prefers(a, b, inst.tie_policy);
                         });
      }
      i = j;
    }
  }
}

void validate(const DiscreteInstance& inst) {
  detail::validate_discrete(inst, true);
}

void detail::validate_discrete(const DiscreteInstance& inst,
                               bool positive_weights) {
  const int m = static_cast<int>(inst.criteria.size());
  {
    std::set<std::string> ids(inst.criteria.begin(), inst.criteria.end());
    if (static_cast<int>(ids.size()) != m) {
      throw std::invalid_argument("criteria: duplicate criterion id");
    }
  }
  for (const auto& agent : inst.agents) {
    if (!std::isfinite(agent.weight) || agent.weight < 0.0 ||
        (positive_weights && agent.weight == 0.0)) {
      throw std::invalid_argument("agent " + agent.id +
                                  ": weight must be finite and > 0");
    }
    std::set<int> seen;
    for (const auto& edge : agent.edges) {
      if (edge.criterion < 0 || edge.criterion >= m) {
        throw std::invalid_argument("agent " + agent.id +
                                    ": edge names an unknown criterion");
      }
      if (!std::isfinite(edge.cost) || edge.cost < 0.0) {
        throw std::invalid_argument("agent " + agent.id +
                                    ": edge cost must be finite and >= 0");
      }
      if (!seen.insert(edge.criterion).second) {
        throw std::invalid_argument("agent " + agent.id +
                                    ": duplicate edge to criterion " +
                                    inst.criteria[edge.criterion]);
      }
    }
    for (std::size_t i = 1; i < agent.edges.size(); ++i) {
      if (agent.edges[i].cost < agent.edges[i - 1].cost) {
        throw std::invalid_argument("agent " + agent.id +
                                    ": edges not sorted by cost");
      }
    }
  }
}

void validate(const LinearInstance& inst) {
  if (inst.dims <= 0) throw std::invalid_argument("dims must be positive");
  if (inst.cost.size() != inst.dims) {
    throw std::invalid_argument("cost: expected one entry per dimension");
  }
  for (int j = 0; j < inst.dims; ++j) {
    if (!std::isfinite(inst.cost[j]) || inst.cost[j] <= 0.0) {
      throw std::invalid_argument("cost: entries must be finite and > 0");
    }
  }
  if (!std::is_sorted(inst.improvement_dims.begin(),
                      inst.improvement_dims.end())) {
    throw std::invalid_argument("improvement_dims must be sorted");
  }
  for (std::size_t i = 0; i < inst.improvement_dims.size(); ++i) {
    const int j = inst.improvement_dims[i];
    if (j < 0 || j >= inst.dims) {
      throw std::invalid_argument("improvement_dims: index out of range");
    }
    if (i > 0 && inst.improvement_dims[i - 1] == j) {
      throw std::invalid_argument("improvement_dims: duplicate index");
    }
  }
  if (inst.ground_truth.a.size() != inst.dims) {
    throw std::invalid_argument("fstar: weight vector has wrong dimension");
  }
  if (inst.ground_truth.a.isZero(0.0)) {
    throw std::invalid_argument("fstar: weight vector must not be zero");
  }
  if ((inst.ground_truth.a.array() < 0.0).any()) {
    throw std::invalid_argument("fstar: weights must be non-negative");
  }
  for (const auto& agent : inst.agents) {
    if (agent.x.size() != inst.dims) {
      throw std::invalid_argument("agent " + agent.id +
                                  ": position has wrong dimension");
    }
    if (!std::isfinite(agent.weight) || agent.weight <= 0.0) {
      throw std::invalid_argument("agent " + agent.id +
                                  ": weight must be finite and > 0");
    }
  }
  if (inst.targets) {
    for (const auto& p : *inst.targets) {
      if (p.size() != inst.dims) {
        throw std::invalid_argument("targets: point has wrong dimension");
      }
    }
  }
}

}  // namespace scx
