#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

// Command drivers and report emission behind the CLI: run configuration
// (flags over optional flat key=value config file), row records, CSV/JSON
// serialization and a deterministic worker pool. Reports are byte-identical
// for identical (config, seed).

namespace monopole::reports {

enum class Format { Csv, Json };

struct RunConfig {
  std::optional<std::string> preset;        // exactly one params source
  std::optional<std::string> params_text;   // "a=..,b=..,..."
  std::vector<std::pair<std::string, double>> overrides;  // --set k=v
  std::vector<double> nu1_list;
  std::vector<double> nu2_list;
  std::string mode = "parabolic";  // or "spherical"
  int n_max = 3;
  int p_level = 3;
  int grid_n = 4000;
  std::optional<double> r_max;     // default: 25/eps heuristic, else 50
  std::optional<double> tolerance; // per-command defaults otherwise
  std::uint64_t seed = 0;
  int jobs = 0;                    // 0: hardware concurrency
  Format format = Format::Csv;
  std::optional<std::string> out_path;
  std::string suite = "all";       // verify: phi|q3|ode|oracle|all
  int trials = 50;
  double perturb_u = 0.0;          // verify fault injection
};

using Cell = std::variant<std::string, double, std::int64_t>;

struct Report {
  std::vector<std::pair<std::string, std::string>> meta;  // ordered key/value
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool all_pass = true;  // verify-style commands
};

std::string to_csv(const Report& r);
std::string to_json(const Report& r);

// Decimal rendering used in both formats: shortest of %.17g that is exact,
// i.e. 17 significant digits.
std::string format_double(double v);

struct RunResult {
  int exit_code = 0;        // 0 pass, 1 verification failure, 2 usage error
  std::string output;       // report text (empty when written to out_path)
  std::string diagnostics;  // usage/errors for stderr
};

// Full command dispatch: args as given after the program name, e.g.
// {"spectrum", "--preset", "micz", ...}. Subcommands: spectrum, algebraic,
// verify, oracle, compare, presets. Honors MONOPOLE_SPECTRA_CONFIG when
// --config is absent.
RunResult run_command(const std::vector<std::string>& args);

// Individual drivers (config must already be resolved).
Report cmd_spectrum(const RunConfig& cfg);
Report cmd_algebraic(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_oracle(const RunConfig& cfg);
Report cmd_compare(const RunConfig& cfg);
Report cmd_presets(const RunConfig& cfg);

}  // namespace monopole::reports
