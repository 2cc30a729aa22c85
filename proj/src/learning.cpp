#include "scx/learning.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "scx/oracles.hpp"
#include "scx/rng.hpp"

namespace scx {

const std::vector<double> AgentDistribution::probabilities() const {
  std::vector<double> p;
  p.reserve(support.agents.size());
  for (const auto& a : support.agents) p.push_back(a.weight);
  return p;
}

void validate(const AgentDistribution& dist) {
  detail::validate_discrete(dist.support, false);
  double total = 0.0;
  std::set<std::string> ids;
  for (const auto& a : dist.support.agents) {
    total += a.weight;
    if (!ids.insert(a.id).second) {
      throw std::invalid_argument("distribution: duplicate support id " + a.id);
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("distribution: probabilities must sum to 1");
  }
}

long sample_size_full(double eps, double delta, int p_count) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("sample_size_full: eps must be in (0, 1]");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("sample_size_full: delta must be in (0, 1]");
  }
  if (p_count < 1) {
    throw std::invalid_argument("sample_size_full: p_count must be >= 1");
  }
  const double bound =
      (std::log(2.0) * p_count + std::log(1.0 / delta)) / eps;
  return static_cast<long>(std::ceil(bound));
}

double partial_batch_bound(double eps, double delta, double p_count) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("batch_size_partial: eps must be in (0, 1]");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("batch_size_partial: delta must be in (0, 1]");
  }
  if (!(p_count / delta > 1.0)) {
    throw std::invalid_argument("batch_size_partial: requires p_count > delta");
  }
  return std::log(p_count / delta) / eps;
}

long batch_size_partial(double eps, double delta, int p_count) {
  if (p_count < 1) {
    throw std::invalid_argument("batch_size_partial: p_count must be >= 1");
  }
  return static_cast<long>(
      std::ceil(partial_batch_bound(eps, delta, static_cast<double>(p_count))));
}

namespace {

std::vector<double> cumulative_probs(const AgentDistribution& dist) {
  std::vector<double> cum;
  cum.reserve(dist.support.agents.size());
  double total = 0.0;
  for (const auto& a : dist.support.agents) {
    total += a.weight;
    cum.push_back(total);
  }
  return cum;
}

void finish(LearnResult& result, const AgentDistribution& dist,
            const std::vector<int>& p_final, const Tolerances& tol) {
  result.p_final = p_final;
  for (int k : p_final) result.p_final_ids.push_back(dist.support.criteria[k]);
  result.exact_eval = exact_performance_error(dist, p_final, tol);
}

}  // namespace

LearnResult learn_full(const AgentDistribution& dist, double eps, double delta,
                       std::uint64_t seed, std::optional<long> samples_override,
                       const Tolerances& tol) {
  const int m = static_cast<int>(dist.support.criteria.size());
  const long n = samples_override ? *samples_override
                                  : sample_size_full(eps, delta, m);
  Rng rng(seed);
  const auto cum = cumulative_probs(dist);

  DiscreteInstance sampled;
  sampled.criteria = dist.support.criteria;
  sampled.tie_policy = dist.support.tie_policy;
  LearnResult result;
  result.samples_used = n;
  sampled.agents.reserve(n);
  result.sample_trace.reserve(n);
  for (long t = 0; t < n; ++t) {
    const std::size_t idx = rng.from_cumulative(cum);
    result.sample_trace.push_back(idx);
    AgentNode node = dist.support.agents[idx];  // full neighborhood revealed
    node.weight = 1.0;
    sampled.agents.push_back(std::move(node));
  }

  const SolveResult solved = solve_no_fp(sampled, tol);
  finish(result, dist, solved.p_final, tol);
  return result;
}

LearnResult learn_partial(const AgentDistribution& dist, double eps,
                          double delta, std::uint64_t seed,
                          const Tolerances& tol) {
  const int m = static_cast<int>(dist.support.criteria.size());
  const long batch = batch_size_partial(eps, delta, m);
  Rng rng(seed);
  const auto cum = cumulative_probs(dist);

  LearnResult result;
  std::vector<char> alive(m, 1);
  int alive_count = m;
  int batch_index = 0;
  while (alive_count > 0) {
    PartialRound round;
    round.batch = batch_index++;
    round.batch_size = batch;
    result.samples_used += batch;
    // The whole batch is drawn up front; on the first observed Red the
    // remaining draws go unexamined.
    std::vector<std::size_t> draws(batch);
    for (long t = 0; t < batch; ++t) draws[t] = rng.from_cumulative(cum);
    for (std::size_t idx : draws) {
      const Outcome o = best_response_targets(dist.support.agents[idx], alive,
                                              dist.support.tie_policy, tol);
      round.observed.push_back({idx, o.chosen, o.color});
      if (o.classified && *o.color == EdgeColor::Red) {
        round.deleted = *o.chosen;
        alive[*o.chosen] = 0;
        --alive_count;
        break;
      }
    }
    const bool clean = !round.deleted.has_value();
    result.rounds.push_back(std::move(round));
    if (clean) break;
  }

  std::vector<int> p_final;
  for (int k = 0; k < m; ++k) {
    if (alive[k]) p_final.push_back(k);
  }
  finish(result, dist, p_final, tol);
  return result;
}

EvalReport exact_performance_error(const AgentDistribution& dist,
                                   const std::vector<int>& selected,
                                   const Tolerances& tol) {
  return evaluate_criteria(dist.support, selected, tol);
}

TrialTable run_trials(const AgentDistribution& dist, const TrialConfig& config,
                      const Tolerances& tol) {
  if (config.trials < 1) {
    throw std::invalid_argument("run_trials: trials must be >= 1");
  }
  TrialTable table;
  if (config.opt) {
    table.opt = *config.opt;
  } else if (dist.opt) {
    table.opt = *dist.opt;
  } else {
    table.opt =
        oracle_subsets(dist.support, 0.0, config.oracle_max_p, tol).best_value;
  }

  table.rows.resize(config.trials);
  auto run_one = [&](int t) {
    const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(t);
    const LearnResult r =
        config.learner == Learner::Full
            ? learn_full(dist, config.eps, config.delta, seed,
                         config.samples_override, tol)
            : learn_partial(dist, config.eps, config.delta, seed, tol);
    TrialRow row;
    row.trial = t;
    row.seed = seed;
    row.samples_used = r.samples_used;
    row.performance = r.exact_eval.tp_mass;
    row.error = r.exact_eval.fp_mass;
    row.opt = table.opt;
    row.success = row.performance >= table.opt - config.eps - 1e-12 &&
                  row.error <= config.eps + 1e-12;
    table.rows[t] = row;
  };

  const int threads = std::max(1, config.threads);
  if (threads == 1 || config.trials == 1) {
    for (int t = 0; t < config.trials; ++t) run_one(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (int t = next.fetch_add(1); t < config.trials;
             t = next.fetch_add(1)) {
          run_one(t);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  int failures = 0;
  for (const auto& row : table.rows) failures += row.success ? 0 : 1;
  table.failure_rate = static_cast<double>(failures) / config.trials;
  return table;
}

}  // namespace scx
