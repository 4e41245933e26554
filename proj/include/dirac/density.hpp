// Reduced chirality density matrices and their von Neumann entropy.
#ifndef DIRAC_DENSITY_HPP
#define DIRAC_DENSITY_HPP

#include "dirac/grid.hpp"
#include "dirac/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace dirac {

/// 2x2 chirality density matrix, basis order (-1, +1).
///
/// Construction checks Hermiticity (1e-12), unit trace (1e-10) and
/// eigenvalues >= -1e-12, throwing std::invalid_argument on violation.
class ReducedDensityMatrix {
 public:
  static constexpr Real hermitian_tol = 1e-12;
  static constexpr Real trace_tol = 1e-10;
  static constexpr Real eigenvalue_floor = -1e-12;

  explicit ReducedDensityMatrix(const Eigen::Matrix2cd& entries);

  const Eigen::Matrix2cd& entries() const { return entries_; }
  Complex operator()(Index row, Index col) const { return entries_(row, col); }

  Real rho00() const { return entries_(0, 0).real(); }
  Real rho11() const { return entries_(1, 1).real(); }
  Complex rho01() const { return entries_(0, 1); }

 private:
  Eigen::Matrix2cd entries_;
};

/// rho_{a a'} = sum_i psi_a(x_i) conj(psi_a'(x_i)) dx.
/// Throws std::invalid_argument unless norm(field) = 1 within 1e-6; the sum
/// is divided by the norm so the result has unit trace to round-off.
ReducedDensityMatrix reduce(const SpinorField& field);

/// Momentum-space route: rho(t) = sum_k c_k(t) c_k(t)^dagger with
/// c_k(t) = sum_eps a(k, eps) e^{-i eps omega t} u(k, eps).
/// No field is reconstructed.
ReducedDensityMatrix reduce_from_modes(const ModeDecomposition& modes, Real t);

/// (lambda_+, lambda_-) of a 2x2 Hermitian matrix with unit trace, clamped
/// to [0, 1] so that lambda_+ + lambda_- = 1 and lambda_+ >= lambda_-.
template <typename Derived>
std::pair<Real, Real> eigenvalues2(const Eigen::MatrixBase<Derived>& rho) {
  const Real half_gap = 0.5 * (std::real(rho(0, 0)) - std::real(rho(1, 1)));
  const Real radius = std::sqrt(half_gap * half_gap + std::norm(rho(0, 1)));
  const Real upper = std::clamp(0.5 + radius, 0.5, 1.0);
  return {upper, 1.0 - upper};
}

inline std::pair<Real, Real> eigenvalues2(const ReducedDensityMatrix& rho) { return eigenvalues2(rho.entries()); }

/// -p log2 p - (1 - p) log2 (1 - p), with 0 log 0 = 0.
Real binary_entropy(Real p);

/// von Neumann entropy in bits; 0 for pure states, 1 for the maximally mixed state.
Real entropy_bits(const ReducedDensityMatrix& rho);

/// True iff some momentum carries both energy signs with |a| > tol.
/// Throws std::invalid_argument unless tol > 0.
bool decoherence_predicate(const ModeDecomposition& modes, Real tol);

struct EntropySample {
  Real t;
  Real entropy_bits;
  Real rho00;
  Real rho11;
  Complex rho01;
};

using EntropyTrace = std::vector<EntropySample>;

EntropySample make_sample(Real t, const ReducedDensityMatrix& rho);

/// max over entries of |a - b|.
Real max_entry_difference(const ReducedDensityMatrix& a, const ReducedDensityMatrix& b);

}  // namespace dirac

#endif  // DIRAC_DENSITY_HPP
