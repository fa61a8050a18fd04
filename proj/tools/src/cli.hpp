#ifndef QUANDELIER_TOOLS_CLI_HPP_
#define QUANDELIER_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace quandelier::cli {

  enum ExitCode : int { ok = 0, semantic = 1, budget = 2, parse = 3 };

  // Runs one command line (args[0] is the program name).  `env_budget` is
  // the value of QUANDELIER_BUDGET, if set.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err,
          std::optional<std::string> const& env_budget = std::nullopt);

}  // namespace quandelier::cli

#endif  // QUANDELIER_TOOLS_CLI_HPP_
