// Command-line configuration: flags, `key = value` config files, and the
// mapping onto scenario configurations.
#ifndef DIRAC_CONFIG_HPP
#define DIRAC_CONFIG_HPP

#include "dirac/experiments.hpp"
#include "dirac/spectral.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dirac::cli {

enum class Subcommand { evolve, entropy_curve, distributions, figure, validate };
enum class OutputFormat { csv, svg };

struct CliConfig {
  Subcommand subcommand = Subcommand::entropy_curve;
  Real mass = 0.0;
  InitialKind kind = InitialKind::gaussian_packet;
  Complex spinor_a{1.0, 0.0};
  Complex spinor_b{1.0, 0.0};
  Real center = 0.0;
  Real width = 1.0;
  Index mode_index = 0;
  int energy_sign = 1;
  Real grid_l = 20.0;
  Index grid_n = 1024;
  Real t_start = 0.0;
  Real t_end = 1.0;
  Real t_step = 0.01;
  std::vector<Real> times;  // overrides the uniform range when nonempty
  Engine engine = Engine::spectral;
  Index kernel_step_cells = 3;
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
  std::string figure_id = "fig1";
  bool flip_mass_coupling = false;

  bool operator==(const CliConfig&) const = default;
};

/// Bad flag, bad config-file key, malformed value or violated invariant.
/// The message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOutcome {
  CliConfig config;
  bool help_requested = false;
  bool dump_requested = false;
  std::string help_text;
};

/// Parses argv (without the program name). `--config FILE` loads
/// `key = value` lines first; command-line flags then override them.
ParseOutcome parse_args(const std::vector<std::string>& args);

/// Parses a config file body. Lines are `key = value`; `#` starts a comment.
CliConfig parse_config_text(const std::string& text);

/// Emits every key as `key = value`; parse_config_text of the result
/// reproduces the same configuration.
std::string dump_config(const CliConfig& cfg);

/// Help text listing every accepted key.
std::string help_text();

std::string to_string(Subcommand s);

/// Sample times: the explicit list if given, else t_start..t_end by t_step.
std::vector<Real> sample_times(const CliConfig& cfg);

ScenarioConfig to_scenario(const CliConfig& cfg);

}  // namespace dirac::cli

#endif  // DIRAC_CONFIG_HPP
