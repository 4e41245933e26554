// Real-space evolution by convolution with the exact retarded propagator.
//
// Over a time step dt the propagator is a lightcone delta term, which
// translates component alpha by alpha * dt, plus a smooth Bessel kernel
// supported on |dx| <= dt:
//
//     same chirality:      -(dt + alpha dx) m J1(m tau) / (2 tau)
//     opposite chirality:   i m J0(m tau) / 2
//
// with tau = sqrt(dt^2 - dx^2). The delta term is realized as an exact cyclic
// shift, so steps must be whole multiples of the grid spacing. Quadrature of
// the smooth part is trapezoidal over the closed lightcone interval, which
// makes a step accurate to O(dx^2) but not exactly unitary; this engine is
// a validator for the spectral evolver, not a production evolver.
#ifndef DIRAC_KERNEL_HPP
#define DIRAC_KERNEL_HPP

#include "dirac/grid.hpp"

namespace dirac {

/// Non-delta part of the propagator from chirality `from` to `to`.
/// Requires dt > 0 and |dx| <= dt; throws std::domain_error otherwise.
Complex kernel_smooth(Chirality to, Chirality from, Real dx, Real dt, Real m);

/// Number of grid cells spanned by dt. Throws std::invalid_argument if dt is
/// not a whole multiple of the spacing; the message suggests the nearest one.
Index commensurate_cells(const Grid1D& grid, Real dt);

/// One propagator step of length dt (dt = j dx, j >= 0, dt <= L/4).
SpinorField evolve_step(const SpinorField& field, Real m, Real dt);

/// n_steps equal propagator steps covering total time t.
SpinorField evolve_to(const SpinorField& field, Real m, Real t, int n_steps);

}  // namespace dirac

#endif  // DIRAC_KERNEL_HPP
