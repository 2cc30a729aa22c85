#pragma once

#include <string>
#include <vector>

namespace scx::cli {

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 1 semantically valid negative outcomes (infeasible classifier search,
/// empty results), 2 input or validation errors.
int run(const std::vector<std::string>& args);

}  // namespace scx::cli
