#pragma once

#include <string>
#include <vector>

#include "scx/linear.hpp"
#include "scx/rng.hpp"
#include "scx/types.hpp"

namespace scx::test {

inline Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

inline LinearInstance linear2d(double a0, double a1, double b, double c0,
                               double c1, std::vector<int> improvement) {
  LinearInstance inst;
  inst.dims = 2;
  inst.cost = vec2(c0, c1);
  inst.improvement_dims = std::move(improvement);
  inst.ground_truth.a = vec2(a0, a1);
  inst.ground_truth.b = b;
  return inst;
}

inline void add_agent(LinearInstance& inst, const std::string& id, double x0,
                      double x1, double weight = 1.0) {
  inst.agents.push_back({id, vec2(x0, x1), weight});
}

struct EdgeSpec {
  std::string to;
  double cost;
  EdgeColor color;
};

inline DiscreteInstance discrete(
    std::vector<std::string> criteria,
    std::vector<std::pair<std::string, std::vector<EdgeSpec>>> agents,
    TiePolicy policy = TiePolicy::Pessimistic) {
  DiscreteInstance inst;
  inst.criteria = std::move(criteria);
  inst.tie_policy = policy;
  for (auto& [id, edges] : agents) {
    AgentNode node;
    node.id = id;
    for (const auto& e : edges) {
      int k = -1;
      for (int i = 0; i < static_cast<int>(inst.criteria.size()); ++i) {
        if (inst.criteria[i] == e.to) k = i;
      }
      node.edges.push_back({k, e.cost, e.color});
    }
    inst.agents.push_back(std::move(node));
  }
  sort_edges(inst);
  return inst;
}

inline std::vector<int> all_indices(int m) {
  std::vector<int> out(m);
  for (int i = 0; i < m; ++i) out[i] = i;
  return out;
}

// 3D instance with a planted dim-0 improving classifier; agents are sampled
// and bucketed into the three sets with a feasibility margin, so the search
// problem is satisfiable by construction.
inline LinearInstance planted_three_set_instance(Rng& rng, ThreeSets& three,
                                                 int per_bucket = 3) {
  LinearInstance inst;
  inst.dims = 3;
  inst.cost = Vec(3);
  for (int j = 0; j < 3; ++j) inst.cost[j] = rng.uniform(0.4, 2.0);
  inst.improvement_dims = {0};
  inst.ground_truth.a = Vec(3);
  for (int j = 0; j < 3; ++j) inst.ground_truth.a[j] = rng.uniform(0.3, 1.5);
  inst.ground_truth.b = rng.uniform(1.0, 4.0);

  LinearClassifier planted;
  planted.a = Vec(3);
  planted.a[0] = 1.0;
  for (int j = 1; j < 3; ++j) {
    planted.a[j] = rng.uniform(0.0, 0.9) * inst.cost[j] / inst.cost[0];
  }
  planted.b = rng.uniform(0.0, 3.0);

  const double margin = 0.05;
  const int want = 3 * per_bucket;
  int attempts = 0;
  while (static_cast<int>(inst.agents.size()) < want && ++attempts < 50000) {
    Vec x(3);
    for (int j = 0; j < 3; ++j) x[j] = rng.uniform(-4, 6);
    const int i = static_cast<int>(inst.agents.size());
    const ProjectionPoints pp = projection_points(inst, x, 0, planted);
    const double reach = planted.a.dot(pp.x_max) - planted.b;
    const double truth_gap = inst.ground_truth.a.dot(x) - inst.ground_truth.b;
    std::vector<int>* bucket = nullptr;
    if (truth_gap < -margin && pp.x_truth[0] <= pp.x_f[0] - margin &&
        pp.x_f[0] <= pp.x_max[0] - margin &&
        static_cast<int>(three.must_improve.size()) < per_bucket) {
      bucket = &three.must_improve;
    } else if (reach > margin &&
               static_cast<int>(three.must_accept.size()) < per_bucket) {
      bucket = &three.must_accept;
    } else if (reach < -margin &&
               static_cast<int>(three.must_reject.size()) < per_bucket) {
      bucket = &three.must_reject;
    }
    if (bucket == nullptr) continue;
    bucket->push_back(i);
    inst.agents.push_back({"a" + std::to_string(i), x, 1.0});
  }
  return inst;
}

}  // namespace scx::test
