#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stringcone/stringcone.h"

namespace cli {

struct RunConfig {
  std::string subcommand;
  std::string type;
  int rank = 0;
  std::optional<std::string> word;      // canonical "1,2,1"
  std::optional<std::string> lambda;    // canonical "1,0"
  std::optional<std::string> demazure;  // "" is the identity element
  int level_bound = 2;
  std::size_t node_cap = 20000;
  std::string out;  // directory; empty means stdout
  int threads = 1;
  bool timings = false;

  // Argument string that parses back to an equal config.
  std::string canonical() const;
  bool operator==(const RunConfig&) const = default;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help; what() holds the help text.
class HelpRequested : public UsageError {
 public:
  using UsageError::UsageError;
};

// Throws UsageError for unknown subcommands or flags, missing required
// flags, malformed lists, unsupported types and non-dominant lambdas.
RunConfig parseArgs(const std::vector<std::string>& args);
RunConfig parseArgs(int argc, const char* const* argv);

// Builds a C API config; the caller frees it with sc_config_free.
sc_config* toConfig(const RunConfig& config);

// Exit status for a library status code.
int exitCode(sc_status status);

}  // namespace cli
