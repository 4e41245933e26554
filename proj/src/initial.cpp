#include "dirac/initial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dirac {

SpinorField make_gaussian_packet(const Grid1D& grid, Real center, Real width, const Spinor& spinor) {
  if (!(width > 0.0)) throw std::invalid_argument("packet width sigma must be positive");
  if (spinor.squaredNorm() == 0.0) throw std::invalid_argument("packet spinor must be nonzero");
  const Real dx = grid.spacing();
  if (width < 3.0 * dx) {
    std::ostringstream msg;
    msg << "packet unresolved: sigma/dx = " << width / dx << " < 3";
    throw std::invalid_argument(msg.str());
  }
  const Real room = grid.half_extent() - std::abs(center);
  if (room < 6.0 * width) {
    std::ostringstream msg;
    msg << "packet wraps around: (L - |x0|)/sigma = " << room / width << " < 6";
    throw std::invalid_argument(msg.str());
  }

  const Index n = grid.size();
  RealVector profile(n);
  for (Index i = 0; i < n; ++i) {
    const Real u = (grid.x(i) - center) / width;
    profile(i) = std::exp(-0.5 * u * u);
  }
  const Spinor s = spinor.normalized();
  SpinorArray values(n, 2);
  values.col(0) = s(0) * profile.cast<Complex>();
  values.col(1) = s(1) * profile.cast<Complex>();
  const Real scale = 1.0 / std::sqrt(values.squaredNorm() * dx);
  return SpinorField(grid, scale * values);
}

SpinorField make_plane_wave(const Grid1D& grid, Index mode, EnergySign eps, Real mass) {
  if (!grid.has_mode(mode)) {
    std::ostringstream msg;
    msg << "mode index " << mode << " outside [" << grid.min_mode() << ", " << grid.max_mode() << "]";
    throw std::out_of_range(msg.str());
  }
  const Real k = grid.momentum(mode);
  const Eigen::Vector2d u = energy_spinor(k, mass, eps);
  const Real scale = 1.0 / std::sqrt(grid.extent());
  const Index n = grid.size();
  SpinorArray values(n, 2);
  for (Index i = 0; i < n; ++i) {
    const Complex wave = scale * std::polar(1.0, k * grid.x(i));
    values(i, 0) = wave * u(0);
    values(i, 1) = wave * u(1);
  }
  return SpinorField(grid, std::move(values));
}

Spinor equal_superposition() { return Spinor(Complex(1.0), Complex(1.0)) / std::sqrt(2.0); }

SpinorField make_initial(const Grid1D& grid, const InitialSpec& spec, Real mass) {
  switch (spec.kind) {
    case InitialKind::gaussian_packet:
      return make_gaussian_packet(grid, spec.center, spec.width, spec.spinor);
    case InitialKind::plane_wave:
      return make_plane_wave(grid, spec.mode, spec.energy_sign, mass);
    case InitialKind::positive_energy_packet: {
      const SpinorField packet = make_gaussian_packet(grid, spec.center, spec.width, spec.spinor);
      const SpinorField projected = project_energy(packet, mass, EnergySign::positive);
      const Real weight = norm(projected);
      if (!(weight > 0.0)) throw std::invalid_argument("packet has no positive-energy content");
      return Complex(1.0 / std::sqrt(weight)) * projected;
    }
  }
  throw std::invalid_argument("unknown initial condition kind");
}

}  // namespace dirac
