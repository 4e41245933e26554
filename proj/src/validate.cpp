#include "dirac/validate.hpp"

#include "dirac/density.hpp"
#include "dirac/experiments.hpp"
#include "dirac/initial.hpp"
#include "dirac/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dirac::cli {

namespace {

CheckResult massless_coherence() {
  const Grid1D grid = default_grid();
  const SpectralEvolver evolver(grid, 0.0);
  const ModeDecomposition modes = evolver.decompose(make_gaussian_packet(grid, 0.0, 1.0, equal_superposition()));
  Real worst = 0.0;
  for (const Real t : uniform_times(0.0, 3.0, 0.25)) {
    const ReducedDensityMatrix rho = reduce(evolver.evolve(modes, t));
    const Real coherence = std::exp(-t * t);
    worst = std::max(worst, std::abs(rho.rho01() - Complex(coherence / 2.0)));
    worst = std::max(worst, std::abs(entropy_bits(rho) - binary_entropy((1.0 + coherence) / 2.0)));
  }
  return {"massless-coherence", worst, 1e-6, worst < 1e-6};
}

CheckResult stationary_states() {
  const Grid1D grid = default_grid();
  struct Mode {
    Index j;
    EnergySign eps;
    Real m;
  };
  const Mode modes[] = {{0, EnergySign::positive, 1.0}, {7, EnergySign::negative, 1.0}, {-12, EnergySign::positive, 2.0},
                        {3, EnergySign::positive, 0.0}, {-40, EnergySign::negative, 0.5}};
  Real worst = 0.0;
  for (const Mode& mode : modes) {
    const SpectralEvolver evolver(grid, mode.m);
    const SpinorField wave = make_plane_wave(grid, mode.j, mode.eps, mode.m);
    const ReducedDensityMatrix start = reduce(wave);
    for (const Real t : uniform_times(0.0, 5.0, 0.5)) {
      worst = std::max(worst, max_entry_difference(reduce(evolver.evolve(wave, t)), start));
    }
  }
  return {"stationary-states", worst, 1e-9, worst < 1e-9};
}

CheckResult engine_cross_check(MassCoupling coupling) {
  const Grid1D grid = default_grid();
  const Real mass = 1.0;
  const Real dt = 3.0 * grid.spacing();
  const SpinorField packet = make_gaussian_packet(grid, 0.0, 1.0, equal_superposition());
  const SpinorField spectral = SpectralEvolver(grid, mass, coupling).evolve(packet, dt);
  const SpinorField kernel = evolve_step(packet, mass, dt);
  const Real deviation = relative_l2_difference(kernel, spectral);
  return {"engine-cross-check", deviation, 1e-3, deviation < 1e-3};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& options) {
  return {massless_coherence(), stationary_states(), engine_cross_check(options.coupling)};
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "%-20s deviation=%.3e tolerance=%.1e %s", c.name.c_str(), c.deviation, c.tolerance,
                  c.passed ? "PASS" : "FAIL");
    out << line << '\n';
  }
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace dirac::cli
