// dirac: command-line front end.
//
//   dirac evolve          evolve the initial field to --t-end, write the field
//   dirac entropy-curve   entropy and density-matrix entries over the sample times
//   dirac distributions   chirality position distributions at --t-end
//   dirac figure --id N   dataset for one of fig1 .. fig6
//   dirac validate        fast self-checks
//
// Exit status: 0 success, 1 parse or validation failure, 2 runtime failure.
#include "dirac/config.hpp"
#include "dirac/csv.hpp"
#include "dirac/density.hpp"
#include "dirac/experiments.hpp"
#include "dirac/kernel.hpp"
#include "dirac/svg.hpp"
#include "dirac/validate.hpp"

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>

namespace {

using namespace dirac;
using namespace dirac::cli;

constexpr int kExitParse = 1;
constexpr int kExitRuntime = 2;

void emit(const FigureDataset& ds, const CliConfig& cfg) {
  if (cfg.format == OutputFormat::svg) {
    if (cfg.output.empty()) {
      write_svg_plot(std::cout, ds, style_for(ds));
    } else {
      write_svg_plot(ds, cfg.output, style_for(ds));
    }
    return;
  }
  if (cfg.output.empty()) {
    write_csv(std::cout, ds);
    for (const FigureDataset& inset : ds.insets) {
      std::cout << '\n';
      write_csv(std::cout, inset);
    }
    return;
  }
  write_csv(ds, cfg.output);
}

SpinorField evolved_field(const CliConfig& cfg) {
  const ScenarioConfig scenario = to_scenario(cfg);
  const SpinorField initial = make_initial(scenario.grid, scenario.initial, scenario.mass);
  if (cfg.engine == Engine::spectral) return evolve(initial, cfg.mass, cfg.t_end);
  const Index cells = commensurate_cells(scenario.grid, cfg.t_end);
  if (cells == 0) return initial;
  const Index per_step = std::max<Index>(1, cfg.kernel_step_cells);
  const int steps = static_cast<int>(std::max<Index>(1, cells / per_step));
  return evolve_to(initial, cfg.mass, cfg.t_end, steps);
}

int run(const CliConfig& cfg) {
  switch (cfg.subcommand) {
    case Subcommand::validate: {
      ValidateOptions options;
      if (cfg.flip_mass_coupling) options.coupling = MassCoupling::flipped;
      const auto checks = run_validation(options);
      print_checks(std::cout, checks);
      return all_passed(checks) ? 0 : kExitParse;
    }
    case Subcommand::entropy_curve: {
      emit(trace_dataset("entropy", run_scenario(to_scenario(cfg)).trace), cfg);
      return 0;
    }
    case Subcommand::distributions: {
      ScenarioConfig scenario = to_scenario(cfg);
      scenario.times = {cfg.t_end};
      scenario.outputs.distributions = true;
      emit(distribution_dataset("distributions", run_scenario(scenario).distributions.front()), cfg);
      return 0;
    }
    case Subcommand::figure: {
      emit(figure_by_id(cfg.figure_id), cfg);
      return 0;
    }
    case Subcommand::evolve: {
      const SpinorField field = evolved_field(cfg);
      std::fprintf(stderr, "t = %g  norm = %.15g\n", cfg.t_end, norm(field));
      if (cfg.format == OutputFormat::svg) {
        auto [minus, plus] = chirality_distributions(field);
        FigureDataset ds = distribution_dataset("evolve", {cfg.t_end, field.grid().coordinates(), minus, plus});
        emit(ds, cfg);
        return 0;
      }
      if (cfg.output.empty()) {
        write_field_csv(std::cout, field);
        return 0;
      }
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out) throw IoError("cannot open '" + cfg.output + "' for writing");
      write_field_csv(out, field);
      if (!out) throw IoError("write to '" + cfg.output + "' failed");
      return 0;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  ParseOutcome parsed;
  try {
    parsed = parse_args(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const std::exception& e) {
    std::cerr << "dirac: " << e.what() << '\n';
    return kExitParse;
  }
  if (parsed.help_requested) {
    std::cout << parsed.help_text;
    return 0;
  }
  if (parsed.dump_requested) {
    std::cout << dump_config(parsed.config);
    return 0;
  }
  try {
    return run(parsed.config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "dirac: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "dirac: " << e.what() << '\n';
    return kExitRuntime;
  }
}
