#pragma once

#include <cstdint>

#include "scx/learning.hpp"
#include "scx/types.hpp"

namespace scx {

/// Seeded random bipartite instance: each (agent, criterion) pair carries an
/// edge with probability edge_prob, Blue with probability blue_prob, cost
/// uniform in [cost_min, cost_max].
DiscreteInstance gen_random_discrete(int n, int m, double edge_prob,
                                     double blue_prob, double cost_min,
                                     double cost_max, std::uint64_t seed,
                                     TiePolicy policy = TiePolicy::Pessimistic);

/// The designated-target family: m target points on the ground-truth
/// boundary, one improving and one gaming example next to each, and a
/// distribution that puts gaming mass only on the targets outside a
/// randomly drawn concept of size 3m/4.
struct LowerBoundFamily {
  int m = 0;
  double eps = 0.0;
  std::vector<int> concept_targets;  // sorted target indices in the concept
  std::vector<int> p_g;              // complement: gaming-reachable targets
  LinearInstance instance;           // 2D, with all m targets
  AgentDistribution dist;            // over the 2m compiled examples
  double opt = 0.0;                  // exact zero-FP optimum of dist
};

/// Requires m divisible by 4 and 0 < 32*eps < 1 (the construction's masses
/// must form a distribution).
LowerBoundFamily gen_lower_bound(int m, double eps, std::uint64_t seed);

/// Coverage instance: elements {0..n-1}, sets of size exactly 3, budget k.
struct CoverSpec {
  int n = 0;
  std::vector<std::vector<int>> sets;  // each of size 3
  int k = 0;
};

CoverSpec gen_random_cover_spec(int n, int m, int k, std::uint64_t seed);

/// Reduction to the bounded-false-positive problem: element agents reach
/// exactly the targets of sets containing them (Blue), one decoy agent per
/// set reaches only its own target (Red). Max TP at FP budget k equals the
/// best k-set coverage.
LinearInstance gen_max_k_cover(const CoverSpec& spec);

/// Hitting-set instance: n elements, sets of equal size s, budget k.
struct HitSpec {
  int n = 0;
  std::vector<std::vector<int>> sets;  // each of size s
  int s = 0;
  int k = 0;
};

HitSpec gen_random_hit_spec(int n, int m, int s, int k, std::uint64_t seed);

/// Reduction to the open-ended target-design problem: one agent per set
/// plus a special agent, all at movement distance exactly 2k from the
/// ground truth. Generated without targets; pair with the encoder below.
LinearInstance gen_hitting_set(const HitSpec& spec);

/// Gaming-dimension unit cost used by gen_hitting_set (midpoint of the open
/// interval the construction requires).
double hitting_set_gaming_cost(const HitSpec& spec);

/// Target points under which every agent of the hitting-set instance
/// becomes a true positive, given a hitting set of size <= k.
std::vector<Vec> encode_hitting_set_targets(const HitSpec& spec,
                                            const std::vector<int>& hitting_set);

}  // namespace scx
