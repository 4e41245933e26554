#include <doctest.h>

#include "bessel_oracle.hpp"
#include "dirac/initial.hpp"
#include "dirac/kernel.hpp"
#include "dirac/spectral.hpp"

#include <cmath>

using namespace dirac;

namespace {

constexpr Chirality kMinus = Chirality::negative;
constexpr Chirality kPlus = Chirality::positive;

SpinorField packet(const Grid1D& g) { return make_gaussian_packet(g, 0.0, 1.0, equal_superposition()); }

}  // namespace

TEST_CASE("kernel vanishes for a massless particle") {
  for (const Real dx : {-0.5, 0.0, 0.3, 1.0}) {
    CHECK(kernel_smooth(kPlus, kPlus, dx, 1.0, 0.0) == Complex(0.0));
    CHECK(kernel_smooth(kPlus, kMinus, dx, 1.0, 0.0) == Complex(0.0));
  }
}

TEST_CASE("kernel values against the Bessel oracle") {
  // tau = sqrt(1 - 0.36) = 0.8
  const Real m = 1.5, dt = 1.0, dx = 0.6, tau = 0.8;
  const Real j0 = oracle::bessel_j(0, m * tau);
  const Real j1 = oracle::bessel_j(1, m * tau);
  CHECK(std::abs(kernel_smooth(kMinus, kPlus, dx, dt, m) - Complex(0.0, m * j0 / 2.0)) < 1e-14);
  CHECK(std::abs(kernel_smooth(kPlus, kMinus, dx, dt, m) - Complex(0.0, m * j0 / 2.0)) < 1e-14);
  CHECK(std::abs(kernel_smooth(kPlus, kPlus, dx, dt, m) - Complex(-(dt + dx) * m * j1 / (2.0 * tau))) < 1e-14);
  CHECK(std::abs(kernel_smooth(kMinus, kMinus, dx, dt, m) - Complex(-(dt - dx) * m * j1 / (2.0 * tau))) < 1e-14);
}

TEST_CASE("kernel limits and edges") {
  CHECK(std::abs(kernel_smooth(kPlus, kMinus, 0.0, 1e-9, 2.0) - Complex(0.0, 1.0)) < 1e-12);
  CHECK(kernel_smooth(kPlus, kPlus, -0.7, 0.7, 1.0) == Complex(0.0));
  CHECK(kernel_smooth(kMinus, kMinus, 0.7, 0.7, 1.0) == Complex(0.0));
  // tau = 0 on the forward edge: J1(m tau)/tau -> m/2.
  CHECK(std::abs(kernel_smooth(kPlus, kPlus, 0.7, 0.7, 2.0) - Complex(-1.4 * 2.0 * 0.5)) < 1e-14);
  CHECK_THROWS_AS(kernel_smooth(kPlus, kPlus, 1.5, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(kernel_smooth(kPlus, kPlus, 0.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("same-chirality entries are real, cross entries imaginary") {
  for (const Real dx : {-0.9, -0.2, 0.0, 0.5}) {
    CHECK(kernel_smooth(kPlus, kPlus, dx, 1.0, 1.3).imag() == 0.0);
    CHECK(kernel_smooth(kMinus, kPlus, dx, 1.0, 1.3).real() == 0.0);
  }
}

TEST_CASE("step length must be commensurate with the grid") {
  const Grid1D g = default_grid();
  CHECK(commensurate_cells(g, 0.0) == 0);
  CHECK(commensurate_cells(g, 3.0 * g.spacing()) == 3);
  CHECK_THROWS_WITH_AS(commensurate_cells(g, 0.1), doctest::Contains("nearest commensurate step is 0.1171875"),
                       std::invalid_argument);
  CHECK_THROWS_AS(evolve_step(packet(g), 1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(evolve_step(packet(g), 1.0, 256.0 * g.spacing()), std::invalid_argument);
}

TEST_CASE("zero step is the identity") {
  const SpinorField f = packet(default_grid());
  CHECK(max_abs_difference(evolve_step(f, 1.0, 0.0), f) == 0.0);
}

TEST_CASE("massless steps are exact translations") {
  const Grid1D g = default_grid();
  const SpinorField f = packet(g);
  const Index cells = 7;
  const SpinorField moved = evolve_step(f, 0.0, static_cast<Real>(cells) * g.spacing());
  for (Index i = 0; i < g.size(); ++i) {
    CHECK(moved.plus()(i) == f.plus()((i - cells + g.size()) % g.size()));
    CHECK(moved.minus()(i) == f.minus()((i + cells) % g.size()));
  }
  // Any split of the same total time gives the same translation.
  const Real t = 30.0 * g.spacing();
  const SpinorField once = evolve_to(f, 0.0, t, 1);
  for (const int n : {2, 3, 5, 10}) CHECK(max_abs_difference(evolve_to(f, 0.0, t, n), once) == 0.0);
}

TEST_CASE("single step agrees with the spectral engine") {
  for (const Index n : {Index{1024}, Index{4096}}) {
    const Grid1D g(20.0, n);
    const Index cells = std::lround(0.1 / g.spacing());
    const Real dt = static_cast<Real>(cells) * g.spacing();
    const Real tol = n == 1024 ? 1e-3 : 1e-4;
    for (const Real m : {0.5, 1.0, 2.0}) {
      const SpinorField f = packet(g);
      const Real rel = relative_l2_difference(evolve_step(f, m, dt), evolve(f, m, dt));
      CAPTURE(n);
      CAPTURE(m);
      CHECK(rel < tol);
    }
  }
}

TEST_CASE("a wrong mass-coupling sign is detected by the cross-check") {
  const Grid1D g = default_grid();
  const SpinorField f = packet(g);
  const Real dt = 3.0 * g.spacing();
  const SpectralEvolver flipped(g, 1.0, MassCoupling::flipped);
  CHECK(relative_l2_difference(evolve_step(f, 1.0, dt), flipped.evolve(f, dt)) > 1e-2);
}

TEST_CASE("lightcone causality") {
  const Grid1D g = default_grid();
  SpinorArray values = SpinorArray::Zero(g.size(), 2);
  const Index a = 500, b = 520;
  for (Index i = a; i <= b; ++i) values.row(i) << Complex(1.0, 0.5), Complex(-0.3, 1.0);
  const SpinorField f(g, values);
  const Index cells = 6;
  const SpinorField out = evolve_step(f, 1.7, static_cast<Real>(cells) * g.spacing());
  for (Index i = 0; i < g.size(); ++i) {
    if (i < a - cells || i > b + cells) CHECK(out.values().row(i).cwiseAbs().maxCoeff() < 1e-14);
  }
  CHECK(out.values().row(a - cells).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("per-step norm drift stays bounded") {
  const Grid1D g = default_grid();
  const SpinorField f = packet(g);
  for (const Real m : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(norm(evolve_step(f, m, 3.0 * g.spacing())) - 1.0) < 5e-3);
  }
}

TEST_CASE("one-step evolve_to is evolve_step") {
  const Grid1D g = default_grid();
  const SpinorField f = packet(g);
  const Real dt = 9.0 * g.spacing();
  CHECK(max_abs_difference(evolve_to(f, 1.0, dt, 1), evolve_step(f, 1.0, dt)) == 0.0);
  CHECK_THROWS_AS(evolve_to(f, 1.0, dt, 0), std::invalid_argument);
  CHECK_THROWS_AS(evolve_to(f, 1.0, dt, 2), std::invalid_argument);
}

TEST_CASE("composed steps: quadrature error is spatial, norm defect shrinks with the step") {
  // t = 1 over 40 or 80 cells; every step count below divides both.
  const SpinorField coarse_f = packet(Grid1D(16.0, 1280));
  const SpinorField fine_f = packet(Grid1D(16.0, 2560));
  const SpinorField coarse_ref = evolve(coarse_f, 1.0, 1.0);
  const SpinorField fine_ref = evolve(fine_f, 1.0, 1.0);

  Real previous_defect = 1.0;
  for (const int n : {5, 10, 20}) {
    const SpinorField coarse = evolve_to(coarse_f, 1.0, 1.0, n);
    const SpinorField fine = evolve_to(fine_f, 1.0, 1.0, n);
    const Real coarse_err = relative_l2_difference(coarse, coarse_ref);
    const Real fine_err = relative_l2_difference(fine, fine_ref);
    CAPTURE(n);
    CHECK(coarse_err < 1e-4);
    // Halving dx cuts the error by about four.
    CHECK(coarse_err / fine_err > 3.5);
    CHECK(coarse_err / fine_err < 4.5);
    const Real defect = std::abs(norm(coarse) - 1.0);
    CHECK(defect < previous_defect);
    previous_defect = defect;
  }
}
