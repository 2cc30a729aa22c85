#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "scx/learning.hpp"
#include "scx/linear.hpp"
#include "scx/solver.hpp"
#include "scx/types.hpp"

namespace scx::io {

using json = nlohmann::ordered_json;

/// Raised on malformed or unknown input; the message names the offending
/// field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance files carry an explicit "kind": discrete, linear or distribution.
// Unknown fields are rejected.
json to_json(const DiscreteInstance& inst);
json to_json(const LinearInstance& inst);
json to_json(const AgentDistribution& dist);

DiscreteInstance discrete_from_json(const json& j);
LinearInstance linear_from_json(const json& j);
AgentDistribution distribution_from_json(const json& j);

/// Reads any instance file; `kind` receives the file's kind string.
json load_json(const std::filesystem::path& path);

json to_json(const SolveResult& result);
json to_json(const EvalReport& report);
json to_json(const LinearClassifier& f);

/// Learning trial table as CSV. Column order is part of the contract:
/// trial, seed, samples_used, performance, error, opt, success.
std::string trials_to_csv(const TrialTable& table);

/// Writes via a temp file in the same directory plus an atomic rename.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

void write_json_atomic(const std::filesystem::path& path, const json& j);

}  // namespace scx::io
