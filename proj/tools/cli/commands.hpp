#pragma once

// Subcommands of the hyperrec tool. Each writes one table (CSV) or one
// document (JSON) to `out` and returns the process exit code.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperrec::cli {

enum class Format { csv, json };

/// Exit codes; never conflated.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_failure_found = 3;

/// Bad flags or parameters outside a command's domain.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string subcommand;

  // Either all of a, b, c or alpha alone; kept as text until resolved.
  std::optional<std::string> a, b, c, alpha;
  bool allow_decimal = false;  // --float

  std::optional<std::size_t> n;
  std::optional<std::size_t> n_max;  // per-command default when unset
  std::size_t samples = 1000;
  double offset = 1e-6;
  std::optional<double> tolerance;
  bool complex_mode = false;

  std::optional<double> z_re, z_im;
  std::vector<std::size_t> n_list;

  Format format = Format::csv;
  std::string output;     // empty: stdout
  std::string side_table; // density root dump / sokal approach table
};

int cmd_certify(const CommandConfig& cfg, std::ostream& out);
int cmd_gen(const CommandConfig& cfg, std::ostream& out);
int cmd_roots(const CommandConfig& cfg, std::ostream& out);
int cmd_theta(const CommandConfig& cfg, std::ostream& out);
int cmd_density(const CommandConfig& cfg, std::ostream& out);
int cmd_counterexample(const CommandConfig& cfg, std::ostream& out);
int cmd_sokal(const CommandConfig& cfg, std::ostream& out);
int cmd_limits(const CommandConfig& cfg, std::ostream& out);

/// Dispatches on cfg.subcommand, honoring cfg.output. Errors are reported
/// on `err` and mapped to exit codes.
int run_command(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line: parse, dispatch, map every failure to an exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Column headers per subcommand, in output order.
const std::vector<std::string>& csv_header(const std::string& subcommand, bool complex_mode = false);

}  // namespace hyperrec::cli
