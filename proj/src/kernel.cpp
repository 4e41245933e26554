#include "dirac/kernel.hpp"

#include "dirac/bessel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dirac {

Complex kernel_smooth(Chirality to, Chirality from, Real dx, Real dt, Real m) {
  if (!(dt > 0.0) || std::abs(dx) > dt * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "kernel sampled outside the lightcone: dx = " << dx << ", dt = " << dt;
    throw std::domain_error(msg.str());
  }
  if (m == 0.0) return Complex(0.0);
  const Real tau = std::sqrt(std::max(0.0, dt * dt - dx * dx));
  if (to == from) {
    const Real alpha = sign_of(from);
    return Complex(-(dt + alpha * dx) * m * m * bessel::j1_over_x(m * tau) / 2.0, 0.0);
  }
  return Complex(0.0, m * bessel::j0(m * tau) / 2.0);
}

Index commensurate_cells(const Grid1D& grid, Real dt) {
  const Real ratio = dt / grid.spacing();
  const Real nearest = std::round(ratio);
  if (std::abs(ratio - nearest) > 1e-9 * std::max(1.0, std::abs(ratio))) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "time step " << dt << " is not a multiple of dx = " << grid.spacing() << "; nearest commensurate step is "
        << std::max(1.0, nearest) * grid.spacing();
    throw std::invalid_argument(msg.str());
  }
  return static_cast<Index>(nearest);
}

SpinorField evolve_step(const SpinorField& field, Real m, Real dt) {
  const Grid1D& grid = field.grid();
  if (dt < 0.0) throw std::invalid_argument("kernel step must be nonnegative");
  const Index cells = commensurate_cells(grid, dt);
  if (cells == 0) return field;
  if (dt > grid.half_extent() / 4.0) {
    std::ostringstream msg;
    msg << "kernel step " << dt << " exceeds L/4 = " << grid.half_extent() / 4.0;
    throw std::invalid_argument(msg.str());
  }
  const Index n = grid.size();
  const Real h = grid.spacing();
  const Real step = static_cast<Real>(cells) * h;

  // weights[d + cells](to, from) multiplies psi_from(x - d h); trapezoid end weights halved.
  std::vector<Eigen::Matrix2cd> weights(static_cast<std::size_t>(2 * cells + 1));
  constexpr Chirality order[2] = {Chirality::negative, Chirality::positive};
  for (Index d = -cells; d <= cells; ++d) {
    const Real offset = static_cast<Real>(d) * h;
    const Real w = (d == -cells || d == cells) ? 0.5 * h : h;
    Eigen::Matrix2cd& k = weights[static_cast<std::size_t>(d + cells)];
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) k(a, b) = w * kernel_smooth(order[a], order[b], offset, step, m);
    }
  }

  const SpinorArray& psi = field.values();
  SpinorArray out(n, 2);
  for (Index i = 0; i < n; ++i) {
    // Delta term: psi_alpha(x - alpha dt).
    out(i, 0) = psi((i + cells) % n, 0);
    out(i, 1) = psi((i - cells % n + n) % n, 1);
    if (m == 0.0) continue;
    Complex acc0(0.0), acc1(0.0);
    for (Index d = -cells; d <= cells; ++d) {
      const Index src = ((i - d) % n + n) % n;
      const Eigen::Matrix2cd& k = weights[static_cast<std::size_t>(d + cells)];
      acc0 += k(0, 0) * psi(src, 0) + k(0, 1) * psi(src, 1);
      acc1 += k(1, 0) * psi(src, 0) + k(1, 1) * psi(src, 1);
    }
    out(i, 0) += acc0;
    out(i, 1) += acc1;
  }
  return SpinorField(grid, std::move(out));
}

SpinorField evolve_to(const SpinorField& field, Real m, Real t, int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("kernel evolution needs at least one step");
  const Real dt = t / static_cast<Real>(n_steps);
  // Round the step onto the grid once so every step shifts by the same cell count.
  const Real step = static_cast<Real>(commensurate_cells(field.grid(), dt)) * field.grid().spacing();
  SpinorField current = field;
  for (int s = 0; s < n_steps; ++s) current = evolve_step(current, m, step);
  return current;
}

}  // namespace dirac
