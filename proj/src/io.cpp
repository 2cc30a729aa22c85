#include "scx/io.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace scx::io {
namespace {

void check_fields(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& context) {
  if (!j.is_object()) {
    throw ParseError(context + ": expected an object");
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (item.key() == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(context + ": unknown field '" + item.key() + "'");
    }
  }
}

const json& require(const json& j, const char* field,
                    const std::string& context) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw ParseError(context + ": missing field '" + field + "'");
  }
  return *it;
}

double number(const json& j, const std::string& context) {
  if (!j.is_number()) throw ParseError(context + ": expected a number");
  return j.get<double>();
}

EdgeColor color_from(const json& j, const std::string& context) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "blue") return EdgeColor::Blue;
  if (s == "red") return EdgeColor::Red;
  throw ParseError(context + ": color must be \"blue\" or \"red\"");
}

TiePolicy tie_from(const json& j) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "pessimistic") return TiePolicy::Pessimistic;
  if (s == "optimistic") return TiePolicy::Optimistic;
  throw ParseError("tie_policy must be \"pessimistic\" or \"optimistic\"");
}

json edges_to_json(const DiscreteInstance& inst, const AgentNode& agent) {
  json edges = json::array();
  for (const auto& e : agent.edges) {
    edges.push_back({{"to", inst.criteria[e.criterion]},
                     {"cost", e.cost},
                     {"color", to_string(e.color)}});
  }
  return edges;
}

std::vector<Edge> edges_from_json(const json& j,
                                  const std::map<std::string, int>& index,
                                  const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": edges must be an array");
  std::vector<Edge> edges;
  for (const auto& entry : j) {
    check_fields(entry, {"to", "cost", "color"}, context + ".edges");
    const std::string to =
        require(entry, "to", context).get<std::string>();
    auto it = index.find(to);
    if (it == index.end()) {
      throw ParseError(context + ": edge names unknown criterion '" + to + "'");
    }
    edges.push_back({it->second, number(require(entry, "cost", context), context),
                     color_from(require(entry, "color", context), context)});
  }
  return edges;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vec vec_from_json(const json& j, const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": expected an array");
  Vec v(j.size());
  int i = 0;
  for (const auto& entry : j) v[i++] = number(entry, context);
  return v;
}

}  // namespace

json to_json(const DiscreteInstance& inst) {
  json agents = json::array();
  for (const auto& a : inst.agents) {
    agents.push_back({{"id", a.id},
                      {"weight", a.weight},
                      {"edges", edges_to_json(inst, a)}});
  }
  return {{"kind", "discrete"},
          {"criteria", inst.criteria},
          {"agents", agents},
          {"tie_policy", to_string(inst.tie_policy)}};
}

DiscreteInstance discrete_from_json(const json& j) {
  check_fields(j, {"kind", "criteria", "agents", "tie_policy"}, "discrete");
  DiscreteInstance inst;
  for (const auto& c : require(j, "criteria", "discrete")) {
    inst.criteria.push_back(c.get<std::string>());
  }
  std::map<std::string, int> index;
  for (int k = 0; k < static_cast<int>(inst.criteria.size()); ++k) {
    index[inst.criteria[k]] = k;
  }
  inst.tie_policy = tie_from(require(j, "tie_policy", "discrete"));
  for (const auto& a : require(j, "agents", "discrete")) {
    check_fields(a, {"id", "weight", "edges"}, "discrete.agents");
    AgentNode node;
    node.id = require(a, "id", "agent").get<std::string>();
    node.weight = a.contains("weight") ? number(a["weight"], node.id) : 1.0;
    node.edges = edges_from_json(require(a, "edges", node.id), index, node.id);
    inst.agents.push_back(std::move(node));
  }
  sort_edges(inst);
  validate(inst);
  return inst;
}

json to_json(const LinearInstance& inst) {
  json agents = json::array();
  for (const auto& a : inst.agents) {
    agents.push_back(
        {{"id", a.id}, {"x", vec_to_json(a.x)}, {"weight", a.weight}});
  }
  json out = {{"kind", "linear"},
              {"dims", inst.dims},
              {"cost", vec_to_json(inst.cost)},
              {"improvement_dims", inst.improvement_dims},
              {"fstar",
               {{"a", vec_to_json(inst.ground_truth.a)},
                {"b", inst.ground_truth.b}}},
              {"agents", agents}};
  if (inst.targets) {
    json targets = json::array();
    for (const auto& p : *inst.targets) targets.push_back(vec_to_json(p));
    out["targets"] = targets;
  }
  return out;
}

LinearInstance linear_from_json(const json& j) {
  check_fields(
      j, {"kind", "dims", "cost", "improvement_dims", "fstar", "agents",
          "targets"},
      "linear");
  LinearInstance inst;
  inst.dims = static_cast<int>(number(require(j, "dims", "linear"), "dims"));
  inst.cost = vec_from_json(require(j, "cost", "linear"), "cost");
  for (const auto& d : require(j, "improvement_dims", "linear")) {
    inst.improvement_dims.push_back(d.get<int>());
  }
  const json& fstar = require(j, "fstar", "linear");
  check_fields(fstar, {"a", "b"}, "fstar");
  inst.ground_truth.a = vec_from_json(require(fstar, "a", "fstar"), "fstar.a");
  inst.ground_truth.b = number(require(fstar, "b", "fstar"), "fstar.b");
  for (const auto& a : require(j, "agents", "linear")) {
    check_fields(a, {"id", "x", "weight"}, "linear.agents");
    LinearAgent agent;
    agent.id = require(a, "id", "agent").get<std::string>();
    agent.x = vec_from_json(require(a, "x", agent.id), agent.id);
    agent.weight = a.contains("weight") ? number(a["weight"], agent.id) : 1.0;
    inst.agents.push_back(std::move(agent));
  }
  if (j.contains("targets")) {
    std::vector<Vec> targets;
    for (const auto& p : j["targets"]) {
      targets.push_back(vec_from_json(p, "targets"));
    }
    inst.targets = std::move(targets);
  }
  validate(inst);
  return inst;
}

json to_json(const AgentDistribution& dist) {
  json support = json::array();
  for (const auto& a : dist.support.agents) {
    support.push_back({{"id", a.id},
                       {"prob", a.weight},
                       {"edges", edges_to_json(dist.support, a)}});
  }
  json out = {{"kind", "distribution"},
              {"criteria", dist.support.criteria},
              {"support", support},
              {"tie_policy", to_string(dist.support.tie_policy)}};
  if (dist.opt) out["opt"] = *dist.opt;
  return out;
}

AgentDistribution distribution_from_json(const json& j) {
  check_fields(j, {"kind", "criteria", "support", "tie_policy", "opt"},
               "distribution");
  AgentDistribution dist;
  for (const auto& c : require(j, "criteria", "distribution")) {
    dist.support.criteria.push_back(c.get<std::string>());
  }
  std::map<std::string, int> index;
  for (int k = 0; k < static_cast<int>(dist.support.criteria.size()); ++k) {
    index[dist.support.criteria[k]] = k;
  }
  dist.support.tie_policy = tie_from(require(j, "tie_policy", "distribution"));
  for (const auto& a : require(j, "support", "distribution")) {
    check_fields(a, {"id", "prob", "edges"}, "distribution.support");
    AgentNode node;
    node.id = require(a, "id", "support").get<std::string>();
    node.weight = number(require(a, "prob", node.id), node.id);
    node.edges = edges_from_json(require(a, "edges", node.id), index, node.id);
    dist.support.agents.push_back(std::move(node));
  }
  if (j.contains("opt")) dist.opt = number(j["opt"], "opt");
  sort_edges(dist.support);
  validate(dist);
  return dist;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open input file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return j;
}

json to_json(const EvalReport& report) {
  return {{"tp_mass", report.tp_mass},
          {"fp_mass", report.fp_mass},
          {"tp_count", report.tp_count},
          {"fp_count", report.fp_count}};
}

json to_json(const SolveResult& result) {
  json deletions = json::array();
  for (const auto& d : result.deletions) {
    deletions.push_back(
        {{"round", d.round}, {"agent", d.agent_id}, {"criterion", d.criterion_id}});
  }
  return {{"kind", "result"},
          {"p_final", result.p_final_ids},
          {"report", to_json(result.report)},
          {"rounds", result.rounds},
          {"deletions", deletions},
          {"evaluations", result.evaluations}};
}

json to_json(const LinearClassifier& f) {
  return {{"a", vec_to_json(f.a)}, {"b", f.b}};
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string trials_to_csv(const TrialTable& table) {
  std::string out = "trial,seed,samples_used,performance,error,opt,success\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.trial);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += std::to_string(row.samples_used);
    out += ',';
    out += format_double(row.performance);
    out += ',';
    out += format_double(row.error);
    out += ',';
    out += format_double(row.opt);
    out += ',';
    out += row.success ? '1' : '0';
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open output file: " + tmp.string());
    }
    out << contents;
    if (!out) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path, const json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace scx::io
