#include "scx/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scx/generators.hpp"
#include "scx/io.hpp"
#include "scx/learning.hpp"
#include "scx/linear.hpp"
#include "scx/oracles.hpp"
#include "scx/solver.hpp"

namespace scx::cli {
namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;  // semantically valid "no result" outcomes
constexpr int kBadInput = 2;

TiePolicy parse_tie(const std::string& s) {
  if (s == "pessimistic") return TiePolicy::Pessimistic;
  if (s == "optimistic") return TiePolicy::Optimistic;
  throw io::ParseError("--tie must be pessimistic or optimistic");
}

std::filesystem::path dist_path_for(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  const std::string ext = p.extension().string();
  p.replace_extension();
  p += ".dist";
  p += ext.empty() ? ".json" : ext;
  return p;
}

int threads_from_env() {
  const char* raw = std::getenv("SCX_THREADS");
  if (raw == nullptr) return 1;
  const int v = std::atoi(raw);
  return v > 0 ? v : 1;
}

DiscreteInstance load_discrete(const std::filesystem::path& path,
                               std::optional<TiePolicy> tie_override) {
  const json j = io::load_json(path);
  const std::string kind = j.value("kind", "");
  DiscreteInstance inst;
  if (kind == "discrete") {
    inst = io::discrete_from_json(j);
  } else if (kind == "linear") {
    const LinearInstance lin = io::linear_from_json(j);
    inst = compile_linear_to_discrete(
        lin, tie_override.value_or(TiePolicy::Optimistic));
  } else {
    throw io::ParseError(path.string() +
                         ": expected kind \"discrete\" or \"linear\"");
  }
  if (tie_override && inst.tie_policy != *tie_override) {
    inst.tie_policy = *tie_override;
    sort_edges(inst);
  }
  return inst;
}

LinearInstance load_linear(const std::filesystem::path& path) {
  const json j = io::load_json(path);
  if (j.value("kind", "") != "linear") {
    throw io::ParseError(path.string() + ": expected kind \"linear\"");
  }
  return io::linear_from_json(j);
}

struct Options {
  std::string input;
  std::string out;
  std::string csv;
  double eps = 0.1;
  double delta = 0.1;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string tie;
  double k = 0.0;
  int max_p = 20;
  double grid_step = 0.05;
  std::optional<long> samples;
  // generator shape parameters
  int n = 0;
  int m = 0;
  int set_size = 2;
  double edge_prob = 0.5;
  double blue_prob = 0.5;
  double cost_min = 0.05;
  double cost_max = 1.0;
  long samples_raw = -1;
  std::vector<std::string> criteria;  // positional ids for eval
};

int cmd_gen_random(const Options& o) {
  const TiePolicy policy =
      o.tie.empty() ? TiePolicy::Pessimistic : parse_tie(o.tie);
  const DiscreteInstance inst =
      gen_random_discrete(o.n, o.m, o.edge_prob, o.blue_prob, o.cost_min,
                          o.cost_max, o.seed, policy);
  io::write_json_atomic(o.out, io::to_json(inst));
  return kOk;
}

int cmd_gen_lowerbound(const Options& o) {
  const LowerBoundFamily family = gen_lower_bound(o.m, o.eps, o.seed);
  io::write_json_atomic(o.out, io::to_json(family.instance));
  io::write_json_atomic(dist_path_for(o.out), io::to_json(family.dist));
  return kOk;
}

int cmd_gen_maxkcover(const Options& o) {
  const CoverSpec spec =
      gen_random_cover_spec(o.n, o.m, static_cast<int>(o.k), o.seed);
  io::write_json_atomic(o.out, io::to_json(gen_max_k_cover(spec)));
  return kOk;
}

int cmd_gen_hittingset(const Options& o) {
  const HitSpec spec = gen_random_hit_spec(o.n, o.m, o.set_size,
                                           static_cast<int>(o.k), o.seed);
  io::write_json_atomic(o.out, io::to_json(gen_hitting_set(spec)));
  return kOk;
}

int cmd_solve_discrete(const Options& o) {
  std::optional<TiePolicy> tie;
  if (!o.tie.empty()) tie = parse_tie(o.tie);
  const DiscreteInstance inst = load_discrete(o.input, tie);
  const SolveResult result = solve_no_fp(inst);
  io::write_json_atomic(o.out, io::to_json(result));
  return kOk;
}

int cmd_solve_linear_lp(const Options& o) {
  const LinearInstance inst = load_linear(o.input);
  const ThreeSets three = canonical_three_sets(inst);
  const LpResult result = find_linear_classifier(inst, three);
  json out = {{"kind", "result"}};
  if (result.status == LpStatus::Feasible) {
    out["status"] = "feasible";
    out["classifier"] = io::to_json(*result.classifier);
    out["movement_dimension"] = result.dimension;
  } else {
    out["status"] = result.status == LpStatus::Infeasible
                        ? "infeasible"
                        : "verification_failed";
  }
  io::write_json_atomic(o.out, out);
  return result.status == LpStatus::Feasible ? kOk : kNegative;
}

int cmd_solve_linear_2d(const Options& o) {
  const LinearInstance inst = load_linear(o.input);
  const Best2dResult result = solve_2d_linear(inst);
  io::write_json_atomic(
      o.out, json{{"kind", "result"},
                  {"classifier", io::to_json(result.classifier)},
                  {"objective", result.objective},
                  {"gaming_candidate", result.gaming_candidate}});
  return kOk;
}

int cmd_solve_general_2d(const Options& o) {
  const LinearInstance inst = load_linear(o.input);
  const Design2dResult result = solve_2d_general(inst);
  json targets = json::array();
  for (const auto& p : result.p_final) {
    targets.push_back(json::array({p[0], p[1]}));
  }
  io::write_json_atomic(o.out, json{{"kind", "result"},
                                    {"p_final", targets},
                                    {"report", io::to_json(result.report)}});
  return kOk;
}

int cmd_learn(const Options& o, Learner learner) {
  const json j = io::load_json(o.input);
  if (j.value("kind", "") != "distribution") {
    throw io::ParseError(o.input + ": expected kind \"distribution\"");
  }
  const AgentDistribution dist = io::distribution_from_json(j);
  TrialConfig config;
  config.learner = learner;
  config.eps = o.eps;
  config.delta = o.delta;
  config.trials = o.trials;
  config.base_seed = o.seed;
  config.samples_override = o.samples;
  config.oracle_max_p = o.max_p;
  config.threads = threads_from_env();
  const TrialTable table = run_trials(dist, config);
  if (!o.csv.empty()) {
    io::write_file_atomic(o.csv, io::trials_to_csv(table));
  }
  if (!o.out.empty()) {
    io::write_json_atomic(o.out,
                          json{{"kind", "result"},
                               {"opt", table.opt},
                               {"failure_rate", table.failure_rate},
                               {"trials", o.trials}});
  }
  return kOk;
}

int cmd_oracle_subsets(const Options& o) {
  std::optional<TiePolicy> tie;
  if (!o.tie.empty()) tie = parse_tie(o.tie);
  const DiscreteInstance inst = load_discrete(o.input, tie);
  const OracleResult result = oracle_subsets(inst, o.k, o.max_p);
  json witness = json::array();
  for (int k : result.witness_subset) witness.push_back(inst.criteria[k]);
  io::write_json_atomic(o.out, json{{"kind", "result"},
                                    {"best_value", result.best_value},
                                    {"witness", witness},
                                    {"enumerated", result.enumerated}});
  return kOk;
}

int cmd_oracle_linear(const Options& o) {
  const LinearInstance inst = load_linear(o.input);
  const OracleResult result = oracle_linear_grid(inst, 1.0, o.grid_step);
  io::write_json_atomic(
      o.out, json{{"kind", "result"},
                  {"best_value", result.best_value},
                  {"witness", io::to_json(*result.witness_classifier)},
                  {"enumerated", result.enumerated}});
  return kOk;
}

int cmd_oracle_targets(const Options& o) {
  const LinearInstance inst = load_linear(o.input);
  const OracleResult result = oracle_targets_2d(inst);
  json witness = json::array();
  for (const auto& p : result.witness_targets) {
    if (p) {
      witness.push_back(json::array({(*p)[0], (*p)[1]}));
    } else {
      witness.push_back(nullptr);
    }
  }
  io::write_json_atomic(o.out, json{{"kind", "result"},
                                    {"best_value", result.best_value},
                                    {"witness", witness},
                                    {"enumerated", result.enumerated}});
  return kOk;
}

int cmd_eval(const Options& o) {
  std::optional<TiePolicy> tie;
  if (!o.tie.empty()) tie = parse_tie(o.tie);
  const DiscreteInstance inst = load_discrete(o.input, tie);
  std::vector<int> selected;
  if (o.criteria.empty()) {
    for (int k = 0; k < static_cast<int>(inst.criteria.size()); ++k) {
      selected.push_back(k);
    }
  } else {
    for (const auto& id : o.criteria) {
      const auto it =
          std::find(inst.criteria.begin(), inst.criteria.end(), id);
      if (it == inst.criteria.end()) {
        throw io::ParseError("eval: unknown criterion '" + id + "'");
      }
      selected.push_back(
          static_cast<int>(std::distance(inst.criteria.begin(), it)));
    }
  }
  const EvalReport report = evaluate_criteria(inst, selected);
  io::write_json_atomic(
      o.out, json{{"kind", "result"}, {"report", io::to_json(report)}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"strategic-classification toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "output file")->required();
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "input instance file")->required();
  };

  int (*handler)(const Options&) = nullptr;
  std::optional<Learner> learner;

  auto* gen = app.add_subcommand("gen", "generate instance families");
  gen->require_subcommand(1);
  {
    auto* random = gen->add_subcommand("random", "random discrete instance");
    random->add_option("--n", o.n, "number of agents")->required();
    random->add_option("--m", o.m, "number of criteria")->required();
    random->add_option("--edge-prob", o.edge_prob, "edge probability");
    random->add_option("--blue-prob", o.blue_prob, "blue probability");
    random->add_option("--cost-min", o.cost_min, "minimum edge cost");
    random->add_option("--cost-max", o.cost_max, "maximum edge cost");
    random->add_option("--seed", o.seed, "generator seed");
    random->add_option("--tie", o.tie, "tie policy");
    add_out(random);
    random->callback([&] { handler = cmd_gen_random; });

    auto* lower = gen->add_subcommand(
        "lowerbound", "designated-target family (instance + distribution)");
    lower->add_option("--m", o.m, "number of targets (multiple of 4)")
        ->required();
    lower->add_option("--eps", o.eps, "distribution parameter, 32*eps < 1")
        ->required();
    lower->add_option("--seed", o.seed, "concept seed");
    add_out(lower);
    lower->callback([&] { handler = cmd_gen_lowerbound; });

    auto* cover = gen->add_subcommand("maxkcover", "coverage reduction");
    cover->add_option("--n", o.n, "number of elements")->required();
    cover->add_option("--m", o.m, "number of sets")->required();
    cover->add_option("--k", o.k, "false-positive budget")->required();
    cover->add_option("--seed", o.seed, "generator seed");
    add_out(cover);
    cover->callback([&] { handler = cmd_gen_maxkcover; });

    auto* hit = gen->add_subcommand("hittingset", "hitting-set reduction");
    hit->add_option("--n", o.n, "number of elements")->required();
    hit->add_option("--m", o.m, "number of sets")->required();
    hit->add_option("--s", o.set_size, "set size")->required();
    hit->add_option("--k", o.k, "hitting-set budget")->required();
    hit->add_option("--seed", o.seed, "generator seed");
    add_out(hit);
    hit->callback([&] { handler = cmd_gen_hittingset; });
  }

  auto* solve = app.add_subcommand("solve", "run a solver");
  solve->require_subcommand(1);
  {
    auto* discrete = solve->add_subcommand(
        "discrete", "maximize true positives with no false positives");
    add_input(discrete);
    add_out(discrete);
    discrete->add_option("--tie", o.tie, "tie policy override");
    discrete->callback([&] { handler = cmd_solve_discrete; });

    auto* lp = solve->add_subcommand(
        "linear-lp", "classifier satisfying the accept/reject/improve sets");
    add_input(lp);
    add_out(lp);
    lp->callback([&] { handler = cmd_solve_linear_lp; });

    auto* lin2d = solve->add_subcommand(
        "linear-2d", "2D classifier maximizing tp - fp");
    add_input(lin2d);
    add_out(lin2d);
    lin2d->callback([&] { handler = cmd_solve_linear_2d; });

    auto* gen2d = solve->add_subcommand(
        "general-2d", "2D designated targets, max tp with no fp");
    add_input(gen2d);
    add_out(gen2d);
    gen2d->callback([&] { handler = cmd_solve_general_2d; });
  }

  auto* learn = app.add_subcommand("learn", "run learning trials");
  learn->require_subcommand(1);
  {
    for (const auto& [name, which] :
         {std::pair{"full", Learner::Full},
          std::pair{"partial", Learner::Partial}}) {
      auto* cmd = learn->add_subcommand(
          name, which == Learner::Full ? "full-information learner"
                                       : "partial-information learner");
      add_input(cmd);
      cmd->add_option("--eps", o.eps, "target error")->required();
      cmd->add_option("--delta", o.delta, "failure probability")->required();
      cmd->add_option("--trials", o.trials, "number of trials");
      cmd->add_option("--seed", o.seed, "base seed");
      cmd->add_option("--csv", o.csv, "per-trial CSV output");
      cmd->add_option("--out", o.out, "aggregate JSON output");
      cmd->add_option("--max-p", o.max_p, "oracle cap for computing OPT");
      cmd->add_option("--samples", o.samples_raw,
                      "override the full-information sample size");
      const Learner w = which;
      cmd->callback([&o, &learner, w] {
        learner = w;
        if (o.samples_raw > 0) o.samples = o.samples_raw;
      });
    }
  }

  auto* oracle = app.add_subcommand("oracle", "brute-force references");
  oracle->require_subcommand(1);
  {
    auto* subsets =
        oracle->add_subcommand("subsets", "exhaustive criteria subsets");
    add_input(subsets);
    add_out(subsets);
    subsets->add_option("--k", o.k, "false-positive budget");
    subsets->add_option("--max-p", o.max_p, "enumeration cap");
    subsets->add_option("--tie", o.tie, "tie policy override");
    subsets->callback([&] { handler = cmd_oracle_subsets; });

    auto* linear = oracle->add_subcommand("linear", "2D classifier grid");
    add_input(linear);
    add_out(linear);
    linear->add_option("--grid-step", o.grid_step, "intercept step");
    linear->callback([&] { handler = cmd_oracle_linear; });

    auto* targets =
        oracle->add_subcommand("targets", "2D designation combinations");
    add_input(targets);
    add_out(targets);
    targets->callback([&] { handler = cmd_oracle_targets; });
  }

  auto* eval = app.add_subcommand("eval", "evaluate a criteria selection");
  add_input(eval);
  add_out(eval);
  eval->add_option("--tie", o.tie, "tie policy override");
  eval->add_option("criteria", o.criteria,
                   "criterion ids to select (default: all)");
  eval->callback([&] { handler = cmd_eval; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (learner) return cmd_learn(o, *learner);
    if (handler != nullptr) return handler(o);
    std::cerr << "no command selected\n";
    return kBadInput;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace scx::cli
