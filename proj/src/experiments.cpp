#include "dirac/experiments.hpp"

#include "dirac/kernel.hpp"
#include "dirac/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace dirac {

namespace {

std::string format_number(Real v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Divisor d of `cells` whose step cells/d is closest to `target`, keeping the step within L/4.
int kernel_step_count(Index cells, Index target, Index max_step_cells) {
  int best = static_cast<int>(cells);
  Real best_gap = 1e300;
  for (Index d = 1; d <= cells; ++d) {
    if (cells % d != 0) continue;
    const Index step = cells / d;
    if (step > max_step_cells) continue;
    const Real gap = std::abs(static_cast<Real>(step - target));
    if (gap < best_gap) {
      best_gap = gap;
      best = static_cast<int>(d);
    }
  }
  return best;
}

SpinorField normalized(const SpinorField& f) { return Complex(1.0 / std::sqrt(norm(f))) * f; }

}  // namespace

void validate(const ScenarioConfig& cfg) {
  if (cfg.mass < 0.0) throw std::invalid_argument("mass must be nonnegative");
  if (cfg.times.empty()) throw std::invalid_argument("scenario needs at least one sample time");
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    if (cfg.times[i] < 0.0) throw std::invalid_argument("sample times must be nonnegative");
    if (i > 0 && !(cfg.times[i] > cfg.times[i - 1])) {
      throw std::invalid_argument("sample times must be strictly increasing");
    }
  }
  if (cfg.engine == Engine::kernel && cfg.kernel_step_cells < 1) {
    throw std::invalid_argument("kernel step must span at least one grid cell");
  }
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  const SpinorField initial = make_initial(cfg.grid, cfg.initial, cfg.mass);
  const SpectralEvolver evolver(cfg.grid, cfg.mass);
  const ModeDecomposition modes = evolver.decompose(initial);
  const RealVector xs = cfg.grid.coordinates();
  const Index max_step_cells = static_cast<Index>(std::floor(cfg.grid.half_extent() / 4.0 / cfg.grid.spacing()));

  ScenarioResult result;
  for (const Real t : cfg.times) {
    SpinorField field = initial;
    if (cfg.engine == Engine::spectral) {
      field = evolver.evolve(modes, t);
    } else {
      const Index cells = commensurate_cells(cfg.grid, t);
      if (cells > 0) {
        const int steps = kernel_step_count(cells, cfg.kernel_step_cells, max_step_cells);
        field = normalized(evolve_to(initial, cfg.mass, t, steps));
      }
    }
    if (cfg.outputs.entropy_trace || cfg.outputs.rdm_entries) {
      result.trace.push_back(make_sample(t, reduce(field)));
    }
    if (cfg.outputs.distributions) {
      auto [minus, plus] = chirality_distributions(field);
      result.distributions.push_back({t, xs, std::move(minus), std::move(plus)});
    }
  }
  return result;
}

std::vector<Real> uniform_times(Real t0, Real t1, Real step) {
  if (!(step > 0.0)) throw std::invalid_argument("time step must be positive");
  if (t1 < t0) throw std::invalid_argument("time range end precedes its start");
  const auto count = static_cast<long>(std::floor((t1 - t0) / step + 1e-3));
  std::vector<Real> times;
  times.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) times.push_back(t0 + static_cast<Real>(i) * step);
  return times;
}

void FigureDataset::check() const {
  std::set<std::string> labels{abscissa_label};
  for (const Series& s : series) {
    if (s.values.size() != abscissa.size()) throw std::logic_error("series '" + s.label + "' length mismatch");
    if (!labels.insert(s.label).second) throw std::logic_error("duplicate series label '" + s.label + "'");
  }
  for (const FigureDataset& inset : insets) inset.check();
}

const Series& FigureDataset::find(const std::string& label) const {
  for (const Series& s : series) {
    if (s.label == label) return s;
  }
  throw std::out_of_range("dataset " + id + " has no series '" + label + "'");
}

FigureDataset trace_dataset(const std::string& id, const EntropyTrace& trace) {
  const auto n = static_cast<Index>(trace.size());
  FigureDataset ds;
  ds.id = id;
  ds.abscissa_label = "t";
  ds.abscissa.resize(n);
  RealVector s(n), r00(n), re(n), im(n), r11(n);
  for (Index i = 0; i < n; ++i) {
    const EntropySample& e = trace[static_cast<std::size_t>(i)];
    ds.abscissa(i) = e.t;
    s(i) = e.entropy_bits;
    r00(i) = e.rho00;
    re(i) = e.rho01.real();
    im(i) = e.rho01.imag();
    r11(i) = e.rho11;
  }
  ds.series = {{"S_bits", s}, {"rho00", r00}, {"rho01_re", re}, {"rho01_im", im}, {"rho11", r11}};
  return ds;
}

FigureDataset distribution_dataset(const std::string& id, const DistributionSnapshot& snap) {
  FigureDataset ds;
  ds.id = id;
  ds.abscissa_label = "x";
  ds.abscissa = snap.x;
  ds.series = {{"prob_minus", snap.prob_minus}, {"prob_plus", snap.prob_plus}};
  ds.metadata = {{"t", format_number(snap.t)}};
  return ds;
}

namespace {

ScenarioConfig equal_superposition_scenario(Real m, std::vector<Real> times) {
  ScenarioConfig cfg;
  cfg.mass = m;
  cfg.initial.spinor = equal_superposition();
  cfg.times = std::move(times);
  return cfg;
}

std::vector<std::pair<std::string, std::string>> scenario_metadata(const ScenarioConfig& cfg) {
  return {{"mass", format_number(cfg.mass)},
          {"grid_L", format_number(cfg.grid.half_extent())},
          {"grid_N", std::to_string(cfg.grid.size())},
          {"width", format_number(cfg.initial.width)},
          {"engine", cfg.engine == Engine::spectral ? "spectral" : "kernel"}};
}

}  // namespace

FigureDataset figure1(const std::vector<Real>& masses) {
  const std::vector<Real> times = uniform_times(0.0, 1.0, 0.01);
  FigureDataset ds;
  ds.id = "fig1";
  ds.title = "Entropy vs time, equal chirality superposition";
  ds.abscissa_label = "t";
  ds.abscissa = Eigen::Map<const RealVector>(times.data(), static_cast<Index>(times.size()));
  for (const Real m : masses) {
    const ScenarioConfig cfg = equal_superposition_scenario(m, times);
    const ScenarioResult r = run_scenario(cfg);
    RealVector s(static_cast<Index>(r.trace.size()));
    for (std::size_t i = 0; i < r.trace.size(); ++i) s(static_cast<Index>(i)) = r.trace[i].entropy_bits;
    ds.series.push_back({"m=" + format_number(m), std::move(s)});
  }
  ds.metadata = {{"grid_L", "20"}, {"grid_N", "1024"}, {"width", "1"}, {"spinor", "(1,1)/sqrt2"}};
  ds.check();
  return ds;
}

FigureDataset figure2_3(Real m) {
  ScenarioConfig cfg = equal_superposition_scenario(m, {1.0});
  cfg.outputs.distributions = true;
  const ScenarioResult r = run_scenario(cfg);
  FigureDataset ds = distribution_dataset(m == 0.0 ? "fig2" : "fig3", r.distributions.front());
  ds.title = "Chirality distributions at t = 1, m = " + format_number(m);
  for (auto& kv : scenario_metadata(cfg)) ds.metadata.push_back(kv);
  ds.check();
  return ds;
}

FigureDataset figure4() {
  ScenarioConfig cfg = equal_superposition_scenario(1.0, uniform_times(0.0, 2.0, 0.01));
  FigureDataset ds = trace_dataset("fig4", run_scenario(cfg).trace);
  ds.title = "Entropy vs time, m = 1";
  ds.metadata = scenario_metadata(cfg);

  ScenarioConfig inset_cfg = equal_superposition_scenario(1.0, {0.5, 1.0, 1.5, 2.0});
  inset_cfg.outputs.distributions = true;
  for (const DistributionSnapshot& snap : run_scenario(inset_cfg).distributions) {
    FigureDataset inset = distribution_dataset("fig4_t" + format_number(snap.t), snap);
    inset.title = "t = " + format_number(snap.t);
    ds.insets.push_back(std::move(inset));
  }
  ds.check();
  return ds;
}

FigureDataset figure5_6() {
  ScenarioConfig cfg;
  cfg.mass = 1.0;
  cfg.initial.spinor = Spinor(Complex(0.0), Complex(1.0));
  cfg.times = uniform_times(0.0, 1.0, 0.01);
  FigureDataset ds = trace_dataset("fig5", run_scenario(cfg).trace);
  ds.title = "Entropy vs time, chiral initial condition, m = 1";
  ds.metadata = scenario_metadata(cfg);

  cfg.times = {0.5};
  cfg.outputs.distributions = true;
  FigureDataset inset = distribution_dataset("fig6", run_scenario(cfg).distributions.front());
  inset.title = "Chirality distributions at t = 0.5, chiral initial condition";
  ds.insets.push_back(std::move(inset));
  ds.check();
  return ds;
}

FigureDataset figure_by_id(const std::string& id) {
  if (id == "fig1") return figure1();
  if (id == "fig2") return figure2_3(0.0);
  if (id == "fig3") return figure2_3(1.0);
  if (id == "fig4") return figure4();
  if (id == "fig5" || id == "fig6") {
    FigureDataset ds = figure5_6();
    if (id == "fig5") return ds;
    return ds.insets.front();
  }
  throw std::invalid_argument("unknown figure id '" + id + "' (expected fig1..fig6)");
}

std::optional<LocalMaximum> local_max_locator(const EntropyTrace& trace) {
  for (std::size_t i = 1; i + 1 < trace.size(); ++i) {
    const Real s = trace[i].entropy_bits;
    if (s > trace[i - 1].entropy_bits && s > trace[i + 1].entropy_bits) return LocalMaximum{trace[i].t, s};
  }
  return std::nullopt;
}

}  // namespace dirac
