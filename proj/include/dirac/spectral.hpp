// Plane-wave evolution of the 1+1 dimensional Dirac equation.
//
// In the chiral basis (psi_{-1}, psi_{+1}) the momentum-space Hamiltonian is
//
//     H(k) = [[-k, -m],
//             [-m, +k]],
//
// so each massless component alpha translates with velocity alpha and the
// mass term couples the two chiralities. H(k) has eigenvalues eps * omega(k)
// with omega = sqrt(k^2 + m^2); the eigenvectors u(k, eps) are real.
//
// A field is expanded over box-normalized plane waves
//
//     psi(x_i) = sum_{j, eps} a(k_j, eps) e^{i k_j x_i} u(k_j, eps) / sqrt(2L),
//
// so sum |a|^2 equals the grid norm of psi and a unit plane wave has a
// single amplitude of modulus 1.
#ifndef DIRAC_SPECTRAL_HPP
#define DIRAC_SPECTRAL_HPP

#include "dirac/grid.hpp"

#include <memory>
#include <vector>

namespace dirac {

enum class EnergySign : int { negative = -1, positive = +1 };

constexpr Index column_of(EnergySign e) { return e == EnergySign::negative ? 0 : 1; }
constexpr int sign_of(EnergySign e) { return static_cast<int>(e); }
constexpr EnergySign opposite(EnergySign e) {
  return e == EnergySign::negative ? EnergySign::positive : EnergySign::negative;
}

/// Sign of the off-diagonal mass coupling. `flipped` exists only so the
/// engine cross-check can be shown to detect a wrong convention.
enum class MassCoupling { standard, flipped };

/// omega(k) = +sqrt(k^2 + m^2). Throws std::invalid_argument for m < 0.
Real dispersion(Real k, Real m);

Eigen::Matrix2d chiral_hamiltonian(Real k, Real m, MassCoupling coupling = MassCoupling::standard);

/// Normalized eigenvector of H(k) for eigenvalue eps * omega(k). The first
/// nonvanishing component is real and nonnegative. At k = m = 0 the
/// massless k > 0 assignment is used: u(+1) = (0, 1), u(-1) = (1, 0).
Eigen::Vector2d energy_spinor(Real k, Real m, EnergySign eps, MassCoupling coupling = MassCoupling::standard);

/// omega and u(k, eps) for every grid momentum. Rows are in signed-mode
/// order: row s corresponds to j = s - N/2.
class EnergyEigenbasis {
 public:
  EnergyEigenbasis(Grid1D grid, Real mass, MassCoupling coupling = MassCoupling::standard);

  const Grid1D& grid() const { return grid_; }
  Real mass() const { return mass_; }
  MassCoupling coupling() const { return coupling_; }
  Index size() const { return grid_.size(); }

  Index row_of_mode(Index j) const { return j - grid_.min_mode(); }
  Index mode_of_row(Index s) const { return s + grid_.min_mode(); }

  Real momentum(Index s) const { return grid_.momentum(mode_of_row(s)); }
  Real omega(Index s) const { return omega_(s); }
  const RealVector& omegas() const { return omega_; }
  Eigen::Vector2d spinor(Index s, EnergySign eps) const {
    return eps == EnergySign::positive ? Eigen::Vector2d(positive_.row(s).transpose())
                                       : Eigen::Vector2d(negative_.row(s).transpose());
  }

 private:
  Grid1D grid_;
  Real mass_;
  MassCoupling coupling_;
  RealVector omega_;
  Eigen::Matrix<Real, Eigen::Dynamic, 2> positive_;
  Eigen::Matrix<Real, Eigen::Dynamic, 2> negative_;
};

/// Amplitudes a(k_j, eps). Column 0 is eps = -1, column 1 is eps = +1;
/// rows follow EnergyEigenbasis row order.
using ModeAmplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 2>;

class ModeDecomposition {
 public:
  ModeDecomposition(std::shared_ptr<const EnergyEigenbasis> basis, ModeAmplitudes amplitudes);

  const EnergyEigenbasis& basis() const { return *basis_; }
  std::shared_ptr<const EnergyEigenbasis> shared_basis() const { return basis_; }
  const Grid1D& grid() const { return basis_->grid(); }
  Real mass() const { return basis_->mass(); }
  const ModeAmplitudes& amplitudes() const { return amplitudes_; }

  /// Amplitude at signed mode index j.
  Complex amplitude(Index j, EnergySign eps) const {
    return amplitudes_(basis_->row_of_mode(j), column_of(eps));
  }

  /// sum |a|^2; equals the norm of the originating field.
  Real total_weight() const { return amplitudes_.squaredNorm(); }

 private:
  std::shared_ptr<const EnergyEigenbasis> basis_;
  ModeAmplitudes amplitudes_;
};

/// Reusable decomposition/evolution machinery for one (grid, mass) pair.
/// Holds FFT scratch state, so an instance must not be shared between threads.
class SpectralEvolver {
 public:
  SpectralEvolver(Grid1D grid, Real mass, MassCoupling coupling = MassCoupling::standard);
  ~SpectralEvolver();
  SpectralEvolver(SpectralEvolver&&) noexcept;
  SpectralEvolver& operator=(SpectralEvolver&&) noexcept;

  const EnergyEigenbasis& basis() const { return *basis_; }
  std::shared_ptr<const EnergyEigenbasis> shared_basis() const { return basis_; }

  ModeDecomposition decompose(const SpinorField& field) const;
  SpinorField reconstruct(const ModeDecomposition& modes) const;
  SpinorField evolve(const SpinorField& field, Real t) const;
  SpinorField evolve(const ModeDecomposition& modes, Real t) const;
  SpinorField project(const SpinorField& field, EnergySign keep) const;

 private:
  struct Transform;
  std::shared_ptr<const EnergyEigenbasis> basis_;
  std::unique_ptr<Transform> transform_;
};

/// Multiplies each amplitude by e^{-i eps omega t}.
ModeDecomposition evolve_modes(const ModeDecomposition& modes, Real t);

/// Keeps only amplitudes with energy sign `keep`.
ModeDecomposition project_modes(const ModeDecomposition& modes, EnergySign keep);

ModeDecomposition decompose(const SpinorField& field, Real m);
SpinorField reconstruct(const ModeDecomposition& modes);
SpinorField evolve(const SpinorField& field, Real m, Real t);
SpinorField project_energy(const SpinorField& field, Real m, EnergySign keep);

}  // namespace dirac

#endif  // DIRAC_SPECTRAL_HPP
