#include "dirac/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace dirac::cli {

namespace {

struct KeyDoc {
  const char* key;
  const char* help;
};

// Every key accepted on the command line (as --key) and in config files.
constexpr std::array<KeyDoc, 20> kKeys{{
    {"mass", "particle mass m >= 0 (natural units)"},
    {"kind", "initial condition: gaussian | plane-wave | positive-energy"},
    {"spinor-a", "psi_{-1} spinor entry as re,im"},
    {"spinor-b", "psi_{+1} spinor entry as re,im"},
    {"center", "packet center x0"},
    {"width", "packet width sigma > 0"},
    {"mode-index", "plane-wave momentum index j, k = pi j / L"},
    {"energy-sign", "plane-wave energy sign: 1 or -1"},
    {"grid-l", "grid half extent L (grid covers [-L, L))"},
    {"grid-n", "grid point count N (even)"},
    {"t-start", "first sample time"},
    {"t-end", "last sample time (also the evolve/distributions time)"},
    {"t-step", "sample spacing"},
    {"times", "explicit comma-separated sample times (overrides the range)"},
    {"engine", "evolution engine: spectral | kernel"},
    {"kernel-step-cells", "target kernel step in grid cells"},
    {"output", "output path (default: standard output)"},
    {"format", "output format: csv | svg"},
    {"id", "figure id for `figure`: fig1 .. fig6"},
    {"flip-mass-coupling", "validate only: flip the mass-coupling sign of the spectral engine"},
}};

bool is_known_key(const std::string& key) {
  return key == "subcommand" ||
         std::any_of(kKeys.begin(), kKeys.end(), [&](const KeyDoc& d) { return key == d.key; });
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Real parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  Real value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(key + ": malformed number '" + text + "'");
  }
  return value;
}

Complex parse_complex(const std::string& key, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(key, text), 0.0};
  return {parse_real(key, text.substr(0, comma)), parse_real(key, text.substr(comma + 1))};
}

std::vector<Real> parse_list(const std::string& key, const std::string& text) {
  std::vector<Real> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(key, item));
  return out;
}

Subcommand parse_subcommand(const std::string& s) {
  if (s == "evolve") return Subcommand::evolve;
  if (s == "entropy-curve") return Subcommand::entropy_curve;
  if (s == "distributions") return Subcommand::distributions;
  if (s == "figure") return Subcommand::figure;
  if (s == "validate") return Subcommand::validate;
  throw ConfigError("subcommand: unknown value '" + s +
                    "' (expected evolve | entropy-curve | distributions | figure | validate)");
}

InitialKind parse_kind(const std::string& s) {
  if (s == "gaussian") return InitialKind::gaussian_packet;
  if (s == "plane-wave") return InitialKind::plane_wave;
  if (s == "positive-energy") return InitialKind::positive_energy_packet;
  throw ConfigError("kind: unknown value '" + s + "' (expected gaussian | plane-wave | positive-energy)");
}

std::string kind_name(InitialKind k) {
  switch (k) {
    case InitialKind::gaussian_packet: return "gaussian";
    case InitialKind::plane_wave: return "plane-wave";
    case InitialKind::positive_energy_packet: return "positive-energy";
  }
  return "gaussian";
}

std::string number(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_text(Complex z) { return number(z.real()) + "," + number(z.imag()); }

void check_invariants(const CliConfig& c) {
  if (c.mass < 0.0) throw ConfigError("mass: must be >= 0");
  if (!(c.width > 0.0)) throw ConfigError("width: must be > 0");
  if (!(c.grid_l > 0.0)) throw ConfigError("grid-l: must be > 0");
  if (c.grid_n < 2 || c.grid_n % 2 != 0) {
    throw ConfigError("grid-n: N = " + std::to_string(c.grid_n) +
                      " rejected; the transform pairs +k/-k modes and needs an even N >= 2");
  }
  if (c.energy_sign != 1 && c.energy_sign != -1) throw ConfigError("energy-sign: must be 1 or -1");
  if (std::norm(c.spinor_a) + std::norm(c.spinor_b) == 0.0) throw ConfigError("spinor-a: spinor (a, b) must be nonzero");
  if (c.t_start < 0.0) throw ConfigError("t-start: must be >= 0");
  if (c.t_end < c.t_start) throw ConfigError("t-end: must be >= t-start");
  if (!(c.t_step > 0.0)) throw ConfigError("t-step: must be > 0");
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    if (c.times[i] < 0.0 || (i > 0 && !(c.times[i] > c.times[i - 1]))) {
      throw ConfigError("times: must be nonnegative and strictly increasing");
    }
  }
  if (c.kernel_step_cells < 1) throw ConfigError("kernel-step-cells: must be >= 1");
  static const std::array<const char*, 6> ids{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};
  if (std::find(ids.begin(), ids.end(), c.figure_id) == ids.end()) {
    throw ConfigError("id: unknown figure '" + c.figure_id + "' (expected fig1 .. fig6)");
  }
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected `key = value`, got '" + line + "'");
    }
    std::string key = trim(line.substr(0, eq));
    if (!is_known_key(key)) throw ConfigError(key + ": unknown config key");
    pairs.emplace_back(std::move(key), trim(line.substr(eq + 1)));
  }
  return pairs;
}

// Raw text of options whose parsing is done here rather than by CLI11.
struct RawOptions {
  std::string kind, spinor_a, spinor_b, times, engine, format;
};

void build_app(CLI::App& app, CliConfig& cfg, RawOptions& raw, std::string& config_path, bool& dump) {
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_flag("-h,--help", "print this help and exit");
  auto doc = [](const char* key) {
    for (const KeyDoc& d : kKeys) {
      if (std::string(d.key) == key) return std::string(d.help);
    }
    return std::string();
  };
  app.add_option("--mass", cfg.mass, doc("mass"));
  app.add_option("--kind", raw.kind, doc("kind"));
  app.add_option("--spinor-a", raw.spinor_a, doc("spinor-a"));
  app.add_option("--spinor-b", raw.spinor_b, doc("spinor-b"));
  app.add_option("--center", cfg.center, doc("center"));
  app.add_option("--width", cfg.width, doc("width"));
  app.add_option("--mode-index", cfg.mode_index, doc("mode-index"));
  app.add_option("--energy-sign", cfg.energy_sign, doc("energy-sign"));
  app.add_option("--grid-l", cfg.grid_l, doc("grid-l"));
  app.add_option("--grid-n", cfg.grid_n, doc("grid-n"));
  app.add_option("--t-start", cfg.t_start, doc("t-start"));
  app.add_option("--t-end", cfg.t_end, doc("t-end"));
  app.add_option("--t-step", cfg.t_step, doc("t-step"));
  app.add_option("--times", raw.times, doc("times"));
  app.add_option("--engine", raw.engine, doc("engine"));
  app.add_option("--kernel-step-cells", cfg.kernel_step_cells, doc("kernel-step-cells"));
  app.add_option("-o,--output", cfg.output, doc("output"));
  app.add_option("--format", raw.format, doc("format"));
  app.add_option("--id", cfg.figure_id, doc("id"));
  app.add_flag("--flip-mass-coupling", cfg.flip_mass_coupling, doc("flip-mass-coupling"));
  app.add_option("--config", config_path, "read `key = value` settings from FILE; flags override them");
  app.add_flag("--dump-config", dump, "print the resolved configuration as a config file and exit");
}

void apply_raw(CliConfig& cfg, const RawOptions& raw) {
  if (!raw.kind.empty()) cfg.kind = parse_kind(raw.kind);
  if (!raw.spinor_a.empty()) cfg.spinor_a = parse_complex("spinor-a", raw.spinor_a);
  if (!raw.spinor_b.empty()) cfg.spinor_b = parse_complex("spinor-b", raw.spinor_b);
  if (!raw.times.empty()) cfg.times = parse_list("times", raw.times);
  if (!raw.engine.empty()) {
    if (raw.engine == "spectral") cfg.engine = Engine::spectral;
    else if (raw.engine == "kernel") cfg.engine = Engine::kernel;
    else throw ConfigError("engine: unknown value '" + raw.engine + "' (expected spectral | kernel)");
  }
  if (!raw.format.empty()) {
    if (raw.format == "csv") cfg.format = OutputFormat::csv;
    else if (raw.format == "svg") cfg.format = OutputFormat::svg;
    else throw ConfigError("format: unknown value '" + raw.format + "' (expected csv | svg)");
  }
}

// Turns CLI11's conversion messages into ones that lead with the key.
[[noreturn]] void rethrow(const CLI::ParseError& e) {
  std::string msg = e.what();
  if (msg.rfind("--", 0) == 0) msg = msg.substr(2);
  throw ConfigError(msg);
}

ParseOutcome parse_impl(const std::vector<std::string>& args, const std::string* file_text) {
  ParseOutcome outcome;
  std::vector<std::string> rest = args;
  std::string subcommand;
  if (!rest.empty() && !rest.front().empty() && rest.front().front() != '-') {
    subcommand = rest.front();
    rest.erase(rest.begin());
  }

  // Locate --config before the main parse so file values can be placed first.
  std::string config_path;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == "--config" && i + 1 < rest.size()) config_path = rest[i + 1];
    if (rest[i].rfind("--config=", 0) == 0) config_path = rest[i].substr(9);
  }
  std::string text;
  if (file_text != nullptr) {
    text = *file_text;
  } else if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("config: cannot read '" + config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  std::vector<std::string> combined;
  for (const auto& [key, value] : parse_pairs(text)) {
    if (key == "subcommand") {
      if (subcommand.empty()) subcommand = value;
      continue;
    }
    combined.push_back("--" + key + "=" + value);
  }
  combined.insert(combined.end(), rest.begin(), rest.end());

  CLI::App app("dirac: chirality decoherence of a free 1+1 dimensional Dirac particle", "dirac");
  RawOptions raw;
  std::string ignored_path;
  build_app(app, outcome.config, raw, ignored_path, outcome.dump_requested);
  app.footer(
      "Subcommands: evolve | entropy-curve | distributions | figure | validate\n"
      "Usage: dirac <subcommand> [flags]");
  std::reverse(combined.begin(), combined.end());
  try {
    app.parse(combined);
  } catch (const CLI::CallForHelp&) {
    outcome.help_requested = true;
    outcome.help_text = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    rethrow(e);
  }
  apply_raw(outcome.config, raw);
  if (!subcommand.empty()) outcome.config.subcommand = parse_subcommand(subcommand);
  check_invariants(outcome.config);
  return outcome;
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args) { return parse_impl(args, nullptr); }

CliConfig parse_config_text(const std::string& text) { return parse_impl({}, &text).config; }

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::evolve: return "evolve";
    case Subcommand::entropy_curve: return "entropy-curve";
    case Subcommand::distributions: return "distributions";
    case Subcommand::figure: return "figure";
    case Subcommand::validate: return "validate";
  }
  return "entropy-curve";
}

std::string dump_config(const CliConfig& c) {
  std::ostringstream out;
  out << "# dirac configuration\n";
  out << "subcommand = " << to_string(c.subcommand) << "\n";
  out << "mass = " << number(c.mass) << "\n";
  out << "kind = " << kind_name(c.kind) << "\n";
  out << "spinor-a = " << complex_text(c.spinor_a) << "\n";
  out << "spinor-b = " << complex_text(c.spinor_b) << "\n";
  out << "center = " << number(c.center) << "\n";
  out << "width = " << number(c.width) << "\n";
  out << "mode-index = " << c.mode_index << "\n";
  out << "energy-sign = " << c.energy_sign << "\n";
  out << "grid-l = " << number(c.grid_l) << "\n";
  out << "grid-n = " << c.grid_n << "\n";
  out << "t-start = " << number(c.t_start) << "\n";
  out << "t-end = " << number(c.t_end) << "\n";
  out << "t-step = " << number(c.t_step) << "\n";
  if (!c.times.empty()) {
    out << "times = ";
    for (std::size_t i = 0; i < c.times.size(); ++i) out << (i ? "," : "") << number(c.times[i]);
    out << "\n";
  }
  out << "engine = " << (c.engine == Engine::spectral ? "spectral" : "kernel") << "\n";
  out << "kernel-step-cells = " << c.kernel_step_cells << "\n";
  if (!c.output.empty()) out << "output = " << c.output << "\n";
  out << "format = " << (c.format == OutputFormat::csv ? "csv" : "svg") << "\n";
  out << "id = " << c.figure_id << "\n";
  out << "flip-mass-coupling = " << (c.flip_mass_coupling ? "true" : "false") << "\n";
  return out.str();
}

std::string help_text() { return parse_args({"--help"}).help_text; }

std::vector<Real> sample_times(const CliConfig& cfg) {
  if (!cfg.times.empty()) return cfg.times;
  return uniform_times(cfg.t_start, cfg.t_end, cfg.t_step);
}

ScenarioConfig to_scenario(const CliConfig& c) {
  ScenarioConfig s;
  s.mass = c.mass;
  s.initial.kind = c.kind;
  s.initial.center = c.center;
  s.initial.width = c.width;
  s.initial.spinor = Spinor(c.spinor_a, c.spinor_b);
  s.initial.mode = c.mode_index;
  s.initial.energy_sign = c.energy_sign > 0 ? EnergySign::positive : EnergySign::negative;
  s.grid = Grid1D(c.grid_l, c.grid_n);
  s.times = sample_times(c);
  s.engine = c.engine;
  s.kernel_step_cells = c.kernel_step_cells;
  return s;
}

}  // namespace dirac::cli
