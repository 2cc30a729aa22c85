#pragma once

#include "scx/response.hpp"
#include "scx/types.hpp"

namespace scx {

/// The three axis-aligned markers used by the classifier constructions:
/// projections of an initial position onto the ground truth and onto a
/// candidate classifier along dimension j, and the budget endpoint.
struct ProjectionPoints {
  Vec x_truth;  // on the ground-truth boundary
  Vec x_f;      // on the candidate boundary (valid when f.a[j] != 0)
  Vec x_max;    // x shifted by 1/c[j] along j
};

ProjectionPoints projection_points(const LinearInstance& inst, const Vec& x,
                                   int j, const LinearClassifier& f);

/// Disjoint agent index sets the classifier search must accept, reject, and
/// cause to improve into qualification.
struct ThreeSets {
  std::vector<int> must_accept;
  std::vector<int> must_reject;
  std::vector<int> must_improve;
};

/// Indices of initially unqualified agents that can afford to cross the
/// ground truth along some improvement dimension.
std::vector<int> improvement_margin(const LinearInstance& inst,
                                    const Tolerances& tol = default_tol());

/// Classifier parallel to the ground truth, shifted just out of reach of
/// every initially unqualified agent. Positive exactly on the initially
/// qualified.
LinearClassifier shifted_classifier(const LinearInstance& inst,
                                    const Tolerances& tol = default_tol());

enum class LpStatus { Feasible, Infeasible, VerificationFailed };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<LinearClassifier> classifier;
  int dimension = -1;  // movement dimension of the returned classifier
};

/// Searches for a classifier with movement dimension j satisfying the three
/// set requirements, as a small dense LP feasibility problem normalized to
/// a[j] = 1. The returned point is verified by full best-response
/// simulation; a movement-dimension mismatch triggers one re-solve with the
/// offending ratio constraints made strict.
LpResult find_dimj_classifier(const LinearInstance& inst,
                              const ThreeSets& three, int j,
                              const Tolerances& tol = default_tol());

/// Tries every admissible movement dimension (improvement dimensions when
/// must_improve is nonempty, all dimensions otherwise) and returns the
/// first verified classifier.
LpResult find_linear_classifier(const LinearInstance& inst,
                                const ThreeSets& three,
                                const Tolerances& tol = default_tol());

/// Derives the canonical three sets from an instance: qualified agents must
/// be accepted, unqualified unimprovable ones rejected, and the improvement
/// margin must improve.
ThreeSets canonical_three_sets(const LinearInstance& inst,
                               const Tolerances& tol = default_tol());

/// Simulated true/false positives of a linear classifier. On 2D instances
/// with improvement dimension 0, gaming dimension 1, an
/// improvement-encouraging g and a gaming-encouraging ground truth, the
/// counts are cross-checked against the geometric region predicate.
EvalReport count_tp_fp(const LinearInstance& inst, const LinearClassifier& g,
                       const Tolerances& tol = default_tol());

struct Best2dResult {
  LinearClassifier classifier;
  int objective = 0;  // tp_count - fp_count
  bool gaming_candidate = false;
};

/// Best linear classifier in 2D by true positives minus false positives.
/// Returns the ground truth when it already encourages improvement, the
/// shifted classifier when both dimensions are gaming; otherwise compares
/// the shifted candidate against one cost-slope candidate per agent.
Best2dResult solve_2d_linear(const LinearInstance& inst,
                             const Tolerances& tol = default_tol());

struct TargetDesign {
  int agent = 0;               // index into inst.agents
  std::optional<Vec> point;    // designated target, absent when priced out
  double push = 0.0;           // total upward adjustment, cost units
  bool skipped_unreachable = false;
  bool discarded_over_budget = false;
};

struct Design2dResult {
  std::vector<Vec> p_final;
  std::vector<TargetDesign> designs;
  EvalReport report;  // zero-FP evaluation of p_final
};

/// Designated-target construction in 2D (improvement dimension 0, gaming
/// dimension 1): processes agents from the smallest gaming coordinate
/// upward, placing each target on the ground-truth boundary and pushing it
/// up the gaming dimension until no lower agent prefers it. Maximizes true
/// positives subject to no false positives.
Design2dResult solve_2d_general(const LinearInstance& inst,
                                const Tolerances& tol = default_tol());

}  // namespace scx
