// Initial-condition constructors. Every field built here has grid norm 1.
#ifndef DIRAC_INITIAL_HPP
#define DIRAC_INITIAL_HPP

#include "dirac/grid.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

/// psi_alpha(x_i) = c s_alpha exp(-(x_i - x0)^2 / (2 sigma^2)), normalized.
///
/// Requires sigma >= 3 dx and L - |x0| >= 6 sigma; throws std::invalid_argument
/// naming the violated ratio otherwise. Also throws for a zero spinor.
SpinorField make_gaussian_packet(const Grid1D& grid, Real center, Real width, const Spinor& spinor);

/// e^{i k_j x} u(k_j, eps) / sqrt(2L). Throws std::out_of_range for a mode outside the grid.
SpinorField make_plane_wave(const Grid1D& grid, Index mode, EnergySign eps, Real mass);

/// Chirality-equal spinor (1, 1) / sqrt(2).
Spinor equal_superposition();

enum class InitialKind { gaussian_packet, plane_wave, positive_energy_packet };

struct InitialSpec {
  InitialKind kind = InitialKind::gaussian_packet;
  Real center = 0.0;
  Real width = 1.0;
  Spinor spinor = Spinor(Complex(1.0), Complex(1.0));
  Index mode = 0;
  EnergySign energy_sign = EnergySign::positive;
};

/// Builds the field described by `spec` for a particle of mass `mass`.
/// positive_energy_packet is the Gaussian packet with its negative-energy
/// content removed, renormalized to 1.
SpinorField make_initial(const Grid1D& grid, const InitialSpec& spec, Real mass);

}  // namespace dirac

#endif  // DIRAC_INITIAL_HPP
