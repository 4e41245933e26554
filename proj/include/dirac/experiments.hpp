// Scenario runner and the datasets behind the entropy and distribution figures.
#ifndef DIRAC_EXPERIMENTS_HPP
#define DIRAC_EXPERIMENTS_HPP

#include "dirac/density.hpp"
#include "dirac/grid.hpp"
#include "dirac/initial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dirac {

enum class Engine { spectral, kernel };

struct ScenarioOutputs {
  bool entropy_trace = true;
  bool distributions = false;
  bool rdm_entries = true;
};

struct ScenarioConfig {
  Real mass = 0.0;
  InitialSpec initial{};
  Grid1D grid = default_grid();
  std::vector<Real> times{0.0};
  Engine engine = Engine::spectral;
  /// Target kernel step in grid cells; the step actually used divides each sample time.
  Index kernel_step_cells = 3;
  ScenarioOutputs outputs{};
};

/// Throws std::invalid_argument unless times are nonnegative and strictly increasing.
void validate(const ScenarioConfig& cfg);

struct DistributionSnapshot {
  Real t;
  RealVector x;
  RealVector prob_minus;
  RealVector prob_plus;
};

struct ScenarioResult {
  EntropyTrace trace;
  std::vector<DistributionSnapshot> distributions;
};

/// For each sample time evolves the initial field from t = 0 and records the
/// reduced density matrix, its entropy and optionally the chirality
/// distributions. Kernel-engine fields are renormalized before reduction.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

/// t0, t0 + step, ..., up to and including t1 (within step/1000).
std::vector<Real> uniform_times(Real t0, Real t1, Real step);

struct Series {
  std::string label;
  RealVector values;
};

struct FigureDataset {
  std::string id;
  std::string title;
  std::string abscissa_label;
  RealVector abscissa;
  std::vector<Series> series;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<FigureDataset> insets;

  /// Throws std::logic_error if column lengths differ or labels repeat.
  void check() const;
  const Series& find(const std::string& label) const;
};

/// Entropy traces on [0, 1] (step 0.01) for the equal-superposition Gaussian, one series per mass.
FigureDataset figure1(const std::vector<Real>& masses = {0.0, 1.0, 2.0});

/// t = 1 chirality distributions of the equal-superposition Gaussian for mass m.
FigureDataset figure2_3(Real m);

/// m = 1 entropy trace on [0, 2] with distribution insets at t = 0.5, 1, 1.5, 2.
FigureDataset figure4();

/// Chiral (0, 1) Gaussian, m = 1: entropy on [0, 1] with a t = 0.5 distribution inset.
FigureDataset figure5_6();

/// Dataset for a figure id fig1..fig6. Throws std::invalid_argument for unknown ids.
FigureDataset figure_by_id(const std::string& id);

/// Entropy trace as a dataset with columns S_bits, rho00, rho01_re, rho01_im, rho11.
FigureDataset trace_dataset(const std::string& id, const EntropyTrace& trace);
FigureDataset distribution_dataset(const std::string& id, const DistributionSnapshot& snap);

struct LocalMaximum {
  Real t;
  Real entropy_bits;
};

/// First interior sample strictly greater than both neighbours.
std::optional<LocalMaximum> local_max_locator(const EntropyTrace& trace);

}  // namespace dirac

#endif  // DIRAC_EXPERIMENTS_HPP
