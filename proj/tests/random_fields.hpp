// Smooth random spinor fields for property tests.
#ifndef DIRAC_TESTS_RANDOM_FIELDS_HPP
#define DIRAC_TESTS_RANDOM_FIELDS_HPP

#include "dirac/grid.hpp"

#include <cmath>
#include <random>

namespace testing_support {

// Sum of three Gaussian bumps with random centres, carrier waves and spinors,
// normalized to 1. Bumps stay well away from the grid edges.
inline dirac::SpinorField random_field(const dirac::Grid1D& g, std::mt19937& rng) {
  using namespace dirac;
  std::normal_distribution<Real> n(0.0, 1.0);
  std::uniform_real_distribution<Real> u(-1.0, 1.0);
  SpinorArray values = SpinorArray::Zero(g.size(), 2);
  for (int bump = 0; bump < 3; ++bump) {
    const Real x0 = 0.3 * g.half_extent() * u(rng);
    const Real k0 = 2.0 * u(rng);
    const Spinor s(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
    for (Index i = 0; i < g.size(); ++i) {
      const Real d = g.x(i) - x0;
      const Complex w = std::exp(-0.5 * d * d) * std::polar(1.0, k0 * g.x(i));
      values(i, 0) += w * s(0);
      values(i, 1) += w * s(1);
    }
  }
  const Real scale = 1.0 / std::sqrt(values.squaredNorm() * g.spacing());
  return SpinorField(g, scale * values);
}

}  // namespace testing_support

#endif  // DIRAC_TESTS_RANDOM_FIELDS_HPP
