#include <doctest.h>

#include "dirac/density.hpp"
#include "dirac/grid.hpp"
#include "dirac/initial.hpp"
#include "dirac/spectral.hpp"

#include <cmath>
#include <random>

using namespace dirac;

TEST_CASE("grid geometry") {
  const Grid1D g(20.0, 1024);
  CHECK(g.spacing() * static_cast<Real>(g.size()) == doctest::Approx(2.0 * g.half_extent()).epsilon(1e-15));
  CHECK(g.x(0) == -20.0);
  CHECK(g.x(512) == doctest::Approx(0.0));
  CHECK(g.min_mode() == -512);
  CHECK(g.max_mode() == 511);
  CHECK(g.momentum(20) == doctest::Approx(std::numbers::pi));
}

TEST_CASE("grid rejects odd, tiny or empty extents") {
  CHECK_THROWS_AS(Grid1D(20.0, 1023), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D(20.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D(0.0, 1024), std::invalid_argument);
  CHECK_NOTHROW(Grid1D(20.0, 1000));
}

TEST_CASE("gaussian packet is normalized") {
  const Grid1D g = default_grid();
  for (const Spinor& s : {Spinor(1.0, 0.0), Spinor(1.0, 1.0), Spinor(Complex(0.3, -0.2), Complex(0.0, 2.0))}) {
    CHECK(std::abs(norm(make_gaussian_packet(g, 0.0, 1.0, s)) - 1.0) < 1e-12);
  }
  CHECK(std::abs(norm(make_gaussian_packet(g, 3.5, 0.7, Spinor(1.0, 2.0))) - 1.0) < 1e-12);
}

TEST_CASE("equal superposition packet reduces to the pure state [[1,1],[1,1]]/2") {
  const ReducedDensityMatrix rho = reduce(make_gaussian_packet(default_grid(), 0.0, 1.0, Spinor(1.0, 1.0)));
  for (Index a = 0; a < 2; ++a) {
    for (Index b = 0; b < 2; ++b) CHECK(std::abs(rho(a, b) - Complex(0.5)) < 1e-12);
  }
}

TEST_CASE("a zero spinor entry stays zero") {
  const SpinorField f = make_gaussian_packet(default_grid(), 0.0, 1.0, Spinor(0.0, 1.0));
  CHECK(f.minus().cwiseAbs().maxCoeff() == 0.0);
  const auto [minus, plus] = chirality_distributions(f);
  CHECK(minus.maxCoeff() == 0.0);
  CHECK(plus.maxCoeff() > 0.0);
}

TEST_CASE("packet constructor rejects unresolvable widths") {
  const Grid1D g = default_grid();
  CHECK_THROWS_WITH_AS(make_gaussian_packet(g, 0.0, 0.05, Spinor(1.0, 0.0)), doctest::Contains("sigma/dx"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_gaussian_packet(g, 0.0, 4.0, Spinor(1.0, 0.0)), doctest::Contains("(L - |x0|)/sigma"),
                       std::invalid_argument);
  CHECK_THROWS_AS(make_gaussian_packet(g, 0.0, 1.0, Spinor(0.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(make_gaussian_packet(g, 0.0, -1.0, Spinor(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("norm is quadratic and vanishes on the zero field") {
  const Grid1D g = default_grid();
  CHECK(norm(SpinorField(g)) == 0.0);
  const SpinorField f = make_gaussian_packet(g, 0.0, 1.0, Spinor(1.0, 0.0));
  CHECK(norm(Complex(2.0) * f) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("plane waves are box normalized and out-of-range modes rejected") {
  const Grid1D g = default_grid();
  const SpinorField w = make_plane_wave(g, 5, EnergySign::positive, 1.0);
  CHECK(std::abs(norm(w) - 1.0) < 1e-12);
  CHECK_THROWS_AS(make_plane_wave(g, 512, EnergySign::positive, 1.0), std::out_of_range);
  CHECK_NOTHROW(make_plane_wave(g, -512, EnergySign::positive, 1.0));

  // k = 0 plane waves are constant spinors, orthogonal between energy signs.
  const SpinorField up = make_plane_wave(g, 0, EnergySign::positive, 1.0);
  const SpinorField down = make_plane_wave(g, 0, EnergySign::negative, 1.0);
  CHECK((up.values().rowwise() - up.values().row(0)).cwiseAbs().maxCoeff() < 1e-15);
  const Complex overlap = (up.values().conjugate().cwiseProduct(down.values())).sum() * g.spacing();
  CHECK(std::abs(overlap) < 1e-14);
}

TEST_CASE("distributions integrate to the density-matrix diagonal") {
  const Grid1D g = default_grid();
  const SpinorField f = evolve(make_gaussian_packet(g, 0.5, 1.2, Spinor(Complex(1.0, 0.5), 0.7)), 1.0, 0.8);
  const auto [minus, plus] = chirality_distributions(f);
  const ReducedDensityMatrix rho = reduce(f);
  CHECK(std::abs(minus.sum() * g.spacing() - rho.rho00()) < 1e-12);
  CHECK(std::abs(plus.sum() * g.spacing() - rho.rho11()) < 1e-12);
}

TEST_CASE("position moments of the centred unit Gaussian") {
  const PositionMoments m = position_moments(make_gaussian_packet(default_grid(), 0.0, 1.0, Spinor(1.0, 1.0)));
  CHECK(std::abs(m.mean) < 1e-10);
  // |psi|^2 ~ exp(-x^2) has variance sigma^2 / 2.
  CHECK(m.variance == doctest::Approx(0.5).epsilon(1e-10));
  CHECK_THROWS_AS(position_moments(SpinorField(default_grid())), std::invalid_argument);
}

TEST_CASE("positive-energy packet disperses") {
  InitialSpec spec;
  spec.kind = InitialKind::positive_energy_packet;
  const SpinorField f = make_initial(default_grid(), spec, 1.0);
  CHECK(std::abs(norm(f) - 1.0) < 1e-12);
  CHECK(position_moments(evolve(f, 1.0, 2.0)).variance > position_moments(f).variance);
}

TEST_CASE("reflection symmetry: (a, b) at x0 mirrors to (b, a) at -x0") {
  const Grid1D g = default_grid();
  std::mt19937 rng(7);
  std::uniform_real_distribution<Real> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Spinor s(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
    const Real x0 = 3.0 * u(rng);
    const Real sigma = 1.0 + 0.5 * u(rng);
    const SpinorField mirrored = swap_chirality(reflect(make_gaussian_packet(g, x0, sigma, s)));
    const SpinorField direct = make_gaussian_packet(g, -x0, sigma, Spinor(s(1), s(0)));
    CHECK(max_abs_difference(mirrored, direct) < 1e-14);
  }
}
