#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace scx {

using Vec = Eigen::VectorXd;

/// Comparison tolerances used throughout the library. All comparisons on
/// costs, ratios and halfspace membership are absolute-tolerance based;
/// the constructions this library deals in use small rationals, so the
/// defaults are far below any meaningful data scale.
struct Tolerances {
  double tie = 1e-9;       // equal-cost edge ties, equal bang-per-buck ratios
  double boundary = 1e-9;  // halfspace membership a.x >= b
  double afford = 1e-12;   // movement budget check cost <= 1
  double push = 1e-9;      // clearance added when pricing a point out of reach
  double lp_strict = 1e-6; // margin standing in for strict LP inequalities
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

enum class EdgeColor { Blue, Red };

/// Order of equal-cost edges: Pessimistic assumes the agent games when
/// indifferent (Red first), Optimistic assumes it improves (Blue first).
enum class TiePolicy { Pessimistic, Optimistic };

const char* to_string(EdgeColor c);
const char* to_string(TiePolicy t);

struct Edge {
  int criterion = -1;  // index into DiscreteInstance::criteria
  double cost = 0.0;
  EdgeColor color = EdgeColor::Blue;
};

struct AgentNode {
  std::string id;
  double weight = 1.0;
  std::vector<Edge> edges;  // sorted ascending by cost, ties per policy
};

/// Weighted, colored bipartite graph: agents on the left, criteria on the
/// right. Edge costs already encode affordability (unaffordable actions are
/// simply absent).
struct DiscreteInstance {
  std::vector<std::string> criteria;
  std::vector<AgentNode> agents;
  TiePolicy tie_policy = TiePolicy::Pessimistic;
};

/// Halfspace a.x >= b.
struct LinearClassifier {
  Vec a;
  double b = 0.0;
};

struct LinearAgent {
  std::string id;
  Vec x;  // initial position
  double weight = 1.0;
};

/// Agents in R^d with per-dimension movement costs, a split of the
/// dimensions into improvement vs. gaming, and a ground-truth halfspace
/// separating the truly qualified. Being classified positive is worth 1.
struct LinearInstance {
  int dims = 0;
  Vec cost;                          // > 0 componentwise
  std::vector<int> improvement_dims; // sorted, 0-based; the rest are gaming
  LinearClassifier ground_truth;     // non-negative weights
  std::vector<LinearAgent> agents;
  std::optional<std::vector<Vec>> targets;

  bool is_improvement(int j) const;
};

/// One agent's best response: which criterion it satisfied (if any), what
/// it paid, how it was classified, and whether it ended up truly qualified.
struct Outcome {
  std::optional<int> chosen;  // criterion/target index, for target responses
  double cost_paid = 0.0;
  bool classified = false;
  bool qualified_after = false;
  std::optional<EdgeColor> color;
};

struct EvalReport {
  double tp_mass = 0.0;
  double fp_mass = 0.0;
  int tp_count = 0;
  int fp_count = 0;
};

// Structural validation; throws std::invalid_argument naming the offending
// field. Instances produced by the generators always pass.
void validate(const DiscreteInstance& inst);
void validate(const LinearInstance& inst);

namespace detail {
// Shared structural checks; distributions relax the weight > 0 rule since
// support entries may carry zero probability.
void validate_discrete(const DiscreteInstance& inst, bool positive_weights);
}  // namespace detail

/// Sorts every agent's edge list ascending by cost, resolving near-ties
/// (within tol.tie) by the instance's tie policy and then criterion index.
void sort_edges(DiscreteInstance& inst, const Tolerances& tol = default_tol());

/// True if `a` precedes `b` under `policy` given equal cost.
bool tie_prefers(const Edge& a, const Edge& b, TiePolicy policy);

}  // namespace scx
