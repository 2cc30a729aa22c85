#pragma once

#include <cstdint>

#include "scx/response.hpp"
#include "scx/solver.hpp"
#include "scx/types.hpp"

namespace scx {

/// Finite-support distribution over agent nodes. The support is stored as a
/// discrete instance whose agent weights are the probabilities.
struct AgentDistribution {
  DiscreteInstance support;
  std::optional<double> opt;  // exact zero-FP optimum, when the source knows it

  const std::vector<double> probabilities() const;
};

void validate(const AgentDistribution& dist);

/// Samples per the full-information bound: ceil((ln2*|P| + ln(1/delta))/eps).
long sample_size_full(double eps, double delta, int p_count);

/// Real-valued batch bound ln(p_count/delta)/eps for the partial setting.
double partial_batch_bound(double eps, double delta, double p_count);

/// Batch size for the partial-information learner: ceil of the bound above.
long batch_size_partial(double eps, double delta, int p_count);

struct PartialObservation {
  std::size_t support_index = 0;
  std::optional<int> chosen;  // criterion index
  std::optional<EdgeColor> color;
};

struct PartialRound {
  int batch = 0;
  long batch_size = 0;
  std::vector<PartialObservation> observed;  // samples examined this batch
  std::optional<int> deleted;                // criterion index
};

struct LearnResult {
  std::vector<int> p_final;
  std::vector<std::string> p_final_ids;
  long samples_used = 0;
  std::vector<std::size_t> sample_trace;  // full-info: drawn support indices
  std::vector<PartialRound> rounds;       // partial-info per-batch records
  EvalReport exact_eval;                  // performance/error against D
};

/// Full-information learner: draw i.i.d. samples with their whole
/// neighborhoods revealed, run the zero-FP solver on the sampled graph.
/// `samples_override`, when set, replaces the closed-form sample size.
LearnResult learn_full(const AgentDistribution& dist, double eps, double delta,
                       std::uint64_t seed,
                       std::optional<long> samples_override = std::nullopt,
                       const Tolerances& tol = default_tol());

/// Partial-information learner: offer the current selection to a batch of
/// samples, observing only the chosen criterion and its color; delete the
/// target of the first observed Red and restart with a fresh batch; stop on
/// a clean batch.
LearnResult learn_partial(const AgentDistribution& dist, double eps,
                          double delta, std::uint64_t seed,
                          const Tolerances& tol = default_tol());

/// Exact weighted performance/error of a selection under the distribution.
EvalReport exact_performance_error(const AgentDistribution& dist,
                                   const std::vector<int>& selected,
                                   const Tolerances& tol = default_tol());

enum class Learner { Full, Partial };

struct TrialConfig {
  Learner learner = Learner::Full;
  double eps = 0.1;
  double delta = 0.1;
  int trials = 1;
  std::uint64_t base_seed = 0;
  std::optional<double> opt;            // else oracle when |P| <= oracle_max_p
  std::optional<long> samples_override; // full-information only
  int oracle_max_p = 20;
  int threads = 1;
};

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  long samples_used = 0;
  double performance = 0.0;
  double error = 0.0;
  double opt = 0.0;
  bool success = false;
};

struct TrialTable {
  std::vector<TrialRow> rows;
  double opt = 0.0;
  double failure_rate = 0.0;
};

/// Runs independent trials (seeds base_seed + trial index); success means
/// performance >= OPT - eps and error <= eps.
TrialTable run_trials(const AgentDistribution& dist, const TrialConfig& config,
                      const Tolerances& tol = default_tol());

}  // namespace scx
