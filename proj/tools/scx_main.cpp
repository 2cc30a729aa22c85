#include <string>
#include <vector>

#include "scx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scx::cli::run(args);
}
