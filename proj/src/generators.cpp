#include "scx/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "scx/rng.hpp"

namespace scx {

DiscreteInstance gen_random_discrete(int n, int m, double edge_prob,
                                     double blue_prob, double cost_min,
                                     double cost_max, std::uint64_t seed,
                                     TiePolicy policy) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("gen_random_discrete: n, m must be >= 0");
  }
  if (edge_prob < 0.0 || edge_prob > 1.0 || blue_prob < 0.0 ||
      blue_prob > 1.0) {
    throw std::invalid_argument(
        "gen_random_discrete: probabilities must be in [0, 1]");
  }
  if (!(cost_min > 0.0 && cost_min <= cost_max && cost_max <= 1.0)) {
    throw std::invalid_argument(
        "gen_random_discrete: costs must satisfy 0 < min <= max <= 1");
  }
  Rng rng(seed);
  DiscreteInstance inst;
  inst.tie_policy = policy;
  for (int k = 0; k < m; ++k) inst.criteria.push_back("p" + std::to_string(k));
  for (int i = 0; i < n; ++i) {
    AgentNode node;
    node.id = "x" + std::to_string(i);
    for (int k = 0; k < m; ++k) {
      if (!rng.bernoulli(edge_prob)) continue;
      const EdgeColor color =
          rng.bernoulli(blue_prob) ? EdgeColor::Blue : EdgeColor::Red;
      node.edges.push_back({k, rng.uniform(cost_min, cost_max), color});
    }
    inst.agents.push_back(std::move(node));
  }
  sort_edges(inst);
  return inst;
}

LowerBoundFamily gen_lower_bound(int m, double eps, std::uint64_t seed) {
  if (m < 4 || m % 4 != 0) {
    throw std::invalid_argument(
        "gen_lower_bound: m must be a positive multiple of 4");
  }
  if (!(eps > 0.0 && 32.0 * eps < 1.0)) {
    throw std::invalid_argument(
        "gen_lower_bound: eps must satisfy 0 < 32*eps < 1");
  }
  LowerBoundFamily family;
  family.m = m;
  family.eps = eps;

  LinearInstance inst;
  inst.dims = 2;
  inst.cost = Vec::Constant(2, 1.0);
  inst.improvement_dims = {0};
  inst.ground_truth.a = Vec::Constant(2, 1.0);
  inst.ground_truth.b = 2.0 * m;
  std::vector<Vec> targets;
  // Target index k holds the point (2(k+1), 2m - 2(k+1)), all on the
  // ground-truth boundary; example 2(k+1)-1 improves into it, example
  // m + k + 1 games into it, each at cost exactly 1.
  for (int i = 1; i <= m; ++i) {
    Vec p(2);
    p << 2.0 * i, 2.0 * m - 2.0 * i;
    targets.push_back(p);
  }
  for (int i = 1; i <= m; ++i) {
    Vec x(2);
    x << 2.0 * i - 1.0, 2.0 * m - 2.0 * i;
    inst.agents.push_back({"x" + std::to_string(i), x, 1.0});
  }
  for (int i = 1; i <= m; ++i) {
    Vec x(2);
    x << 2.0 * i, 2.0 * m - 2.0 * i - 1.0;
    inst.agents.push_back({"x" + std::to_string(m + i), x, 1.0});
  }
  inst.targets = std::move(targets);
  family.instance = std::move(inst);

  Rng rng(seed);
  family.concept_targets = rng.sample_indices(m, 3 * m / 4);
  std::sort(family.concept_targets.begin(), family.concept_targets.end());
  {
    std::vector<char> in_concept(m, 0);
    for (int k : family.concept_targets) in_concept[k] = 1;
    for (int k = 0; k < m; ++k) {
      if (!in_concept[k]) family.p_g.push_back(k);
    }
  }

  AgentDistribution dist;
  dist.support =
      compile_linear_to_discrete(family.instance, TiePolicy::Optimistic);
  std::vector<char> gaming_mass(m, 0);
  for (int k : family.p_g) gaming_mass[k] = 1;
  for (int i = 0; i < m; ++i) {
    dist.support.agents[i].weight = (1.0 - 32.0 * eps) / m;
  }
  for (int k = 0; k < m; ++k) {
    dist.support.agents[m + k].weight =
        gaming_mass[k] ? 128.0 * eps / m : 0.0;
  }
  family.opt = evaluate_criteria(dist.support, family.concept_targets).tp_mass;
  dist.opt = family.opt;
  family.dist = std::move(dist);
  return family;
}

namespace {

// Loose upper bound check: are there at least m distinct size-s subsets?
bool enough_distinct_subsets(int n, int s, int m) {
  double count = 1.0;
  for (int i = 0; i < s; ++i) count *= static_cast<double>(n - i) / (i + 1);
  return count >= m;
}

}  // namespace

CoverSpec gen_random_cover_spec(int n, int m, int k, std::uint64_t seed) {
  if (n < 3 || m < 1 || k < 0) {
    throw std::invalid_argument("gen_random_cover_spec: need n >= 3, m >= 1");
  }
  if (!enough_distinct_subsets(n, 3, m)) {
    throw std::invalid_argument(
        "gen_random_cover_spec: fewer than m distinct size-3 sets exist");
  }
  Rng rng(seed);
  CoverSpec spec;
  spec.n = n;
  spec.k = k;
  std::set<std::vector<int>> seen;
  while (static_cast<int>(spec.sets.size()) < m) {
    std::vector<int> s = rng.sample_indices(n, 3);
    std::sort(s.begin(), s.end());
    if (seen.insert(s).second) spec.sets.push_back(std::move(s));
  }
  return spec;
}

LinearInstance gen_max_k_cover(const CoverSpec& spec) {
  const int n = spec.n;
  for (const auto& s : spec.sets) {
    if (s.size() != 3) {
      throw std::invalid_argument("gen_max_k_cover: sets must have size 3");
    }
    for (int e : s) {
      if (e < 0 || e >= n) {
        throw std::invalid_argument("gen_max_k_cover: element out of range");
      }
    }
  }
  LinearInstance inst;
  inst.dims = n + 1;
  inst.cost = Vec::Constant(n + 1, 0.5);
  for (int j = 0; j < n; ++j) inst.improvement_dims.push_back(j);
  inst.ground_truth.a = Vec::Constant(n + 1, 1.0);
  inst.ground_truth.b = 4.0;

  // One agent per element: distance 2 to the targets of sets containing it.
  for (int i = 0; i < n; ++i) {
    Vec x = Vec::Zero(n + 1);
    x[i] = 1.0;
    x[n] = 1.0;
    inst.agents.push_back({"e" + std::to_string(i), x, 1.0});
  }
  // One decoy agent and one target per set; the decoy reaches only its own
  // target, through the gaming dimension.
  std::vector<Vec> targets;
  for (std::size_t j = 0; j < spec.sets.size(); ++j) {
    Vec p = Vec::Zero(n + 1);
    for (int e : spec.sets[j]) p[e] = 1.0;
    p[n] = 1.0;
    targets.push_back(p);
    Vec x = Vec::Zero(n + 1);
    for (int e : spec.sets[j]) x[e] = 1.0;
    x[n] = -1.0;
    inst.agents.push_back({"s" + std::to_string(j), x, 1.0});
  }
  inst.targets = std::move(targets);
  return inst;
}

HitSpec gen_random_hit_spec(int n, int m, int s, int k, std::uint64_t seed) {
  if (!(0 < s && s < n) || m < 1 || k < 1) {
    throw std::invalid_argument(
        "gen_random_hit_spec: need 0 < s < n, m >= 1, k >= 1");
  }
  if (!enough_distinct_subsets(n, s, m)) {
    throw std::invalid_argument(
        "gen_random_hit_spec: fewer than m distinct size-s sets exist");
  }
  Rng rng(seed);
  HitSpec spec;
  spec.n = n;
  spec.s = s;
  spec.k = k;
  std::set<std::vector<int>> seen;
  while (static_cast<int>(spec.sets.size()) < m) {
    std::vector<int> set = rng.sample_indices(n, s);
    std::sort(set.begin(), set.end());
    if (seen.insert(set).second) spec.sets.push_back(std::move(set));
  }
  return spec;
}

double hitting_set_gaming_cost(const HitSpec& spec) {
  const double base = 2.0 * spec.k * (spec.n - spec.s) + spec.s;
  return 0.5 * (1.0 / (base + 1.0) + 1.0 / base);
}

LinearInstance gen_hitting_set(const HitSpec& spec) {
  const int n = spec.n;
  for (const auto& set : spec.sets) {
    if (static_cast<int>(set.size()) != spec.s) {
      throw std::invalid_argument("gen_hitting_set: sets must have size s");
    }
    for (int e : set) {
      if (e < 0 || e >= n) {
        throw std::invalid_argument("gen_hitting_set: element out of range");
      }
    }
  }
  const double k = spec.k;
  const double level = 2.0 * k * (n - spec.s) + spec.s;
  LinearInstance inst;
  inst.dims = n + 1;
  inst.cost = Vec::Constant(n + 1, 1.0 / (2.0 * k));
  inst.cost[n] = hitting_set_gaming_cost(spec);
  for (int j = 0; j < n; ++j) inst.improvement_dims.push_back(j);
  inst.ground_truth.a = Vec::Constant(n + 1, 1.0);
  inst.ground_truth.b = level + 2.0 * k;

  for (std::size_t i = 0; i < spec.sets.size(); ++i) {
    Vec x = Vec::Constant(n + 1, 2.0 * k);
    for (int e : spec.sets[i]) x[e] = 1.0;
    x[n] = 0.0;
    inst.agents.push_back({"s" + std::to_string(i), x, 1.0});
  }
  Vec x = Vec::Zero(n + 1);
  x[n] = level;
  inst.agents.push_back({"special", x, 1.0});
  return inst;
}

std::vector<Vec> encode_hitting_set_targets(const HitSpec& spec,
                                            const std::vector<int>& hitting_set) {
  if (static_cast<int>(hitting_set.size()) > spec.k) {
    throw std::invalid_argument(
        "encode_hitting_set_targets: hitting set larger than the budget k");
  }
  for (std::size_t i = 0; i < spec.sets.size(); ++i) {
    const auto& set = spec.sets[i];
    const bool hit = std::any_of(hitting_set.begin(), hitting_set.end(),
                                 [&](int e) {
                                   return std::find(set.begin(), set.end(),
                                                    e) != set.end();
                                 });
    if (!hit) {
      throw std::invalid_argument(
          "encode_hitting_set_targets: set " + std::to_string(i) +
          " is not hit");
    }
  }
  const LinearInstance inst = gen_hitting_set(spec);
  std::vector<Vec> targets;
  for (std::size_t i = 0; i < spec.sets.size(); ++i) {
    Vec p = inst.agents[i].x;
    p[0] += 2.0 * spec.k;
    targets.push_back(p);
  }
  Vec p = inst.agents.back().x;
  for (int e : hitting_set) p[e] = 2.0;
  targets.push_back(p);
  return targets;
}

}  // namespace scx
