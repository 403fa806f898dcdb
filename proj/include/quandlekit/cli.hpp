#ifndef QUANDLEKIT_CLI_HPP
#define QUANDLEKIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quandlekit/linear_rep.hpp"

namespace quandlekit::cli {

/// Parsed command line. verb is one of check, info, h2, irreps, classify,
/// cocycle-class, table.
struct Command {
  std::string verb;
  std::string source;       // family spec or file path
  bool conj = false;        // interpret source as a group and use Conj(G)
  std::vector<int> table_n; // table: requested n values
  long long modulus = 0;    // h2: coefficient modulus (0 = |G|)
  std::uint64_t seed = 0;
  std::string format = "text"; // "text" or "json"
  Tolerances tol;
};

/// Parses argv-style arguments (without the program name). Throws
/// UsageError on unknown verbs or flags; honors QUANDLEKIT_SEED.
Command parse(const std::vector<std::string> &args);

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Executes a command, writing the report to out. Returns the exit status:
/// 0 success, 1 validation failure or hypothesis violation, 2 usage error.
int run(const Command &cmd, std::ostream &out, std::ostream &err);

/// parse + run with full error handling; the process exit status.
int main_entry(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err);

} // namespace quandlekit::cli

#endif
