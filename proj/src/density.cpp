#include "dirac/density.hpp"

#include <sstream>
#include <stdexcept>

namespace dirac {

ReducedDensityMatrix::ReducedDensityMatrix(const Eigen::Matrix2cd& entries) : entries_(entries) {
  const Real asymmetry = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > hermitian_tol) {
    std::ostringstream msg;
    msg << "density matrix not Hermitian: max |rho - rho^dagger| = " << asymmetry;
    throw std::invalid_argument(msg.str());
  }
  const Real trace = entries_.trace().real();
  if (std::abs(trace - 1.0) > trace_tol) {
    std::ostringstream msg;
    msg << "density matrix trace " << trace << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
  // Unclamped lower eigenvalue.
  const Real half_gap = 0.5 * (rho00() - rho11());
  const Real lower = 0.5 * trace - std::sqrt(half_gap * half_gap + std::norm(entries_(0, 1)));
  if (lower < eigenvalue_floor) {
    std::ostringstream msg;
    msg << "density matrix not positive semidefinite: eigenvalue " << lower;
    throw std::invalid_argument(msg.str());
  }
}

ReducedDensityMatrix reduce(const SpinorField& field) {
  const Real total = norm(field);
  if (std::abs(total - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "reduce requires a normalized field, norm = " << total;
    throw std::invalid_argument(msg.str());
  }
  const SpinorArray& psi = field.values();
  // Dividing by the norm keeps the trace at 1 to round-off for fields that
  // are normalized only to within the accepted 1e-6.
  const Eigen::Matrix2cd rho = (field.grid().spacing() / total) * (psi.transpose() * psi.conjugate());
  return ReducedDensityMatrix(rho);
}

ReducedDensityMatrix reduce_from_modes(const ModeDecomposition& modes, Real t) {
  const EnergyEigenbasis& basis = modes.basis();
  const ModeAmplitudes& amps = modes.amplitudes();
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (Index s = 0; s < amps.rows(); ++s) {
    const Complex forward = std::polar(1.0, -basis.omega(s) * t);
    const Eigen::Vector2cd c = amps(s, 1) * forward * basis.spinor(s, EnergySign::positive).cast<Complex>() +
                               amps(s, 0) * std::conj(forward) * basis.spinor(s, EnergySign::negative).cast<Complex>();
    rho.noalias() += c * c.adjoint();
  }
  return ReducedDensityMatrix(rho);
}

Real binary_entropy(Real p) {
  auto term = [](Real q) { return q > 0.0 ? -q * std::log2(q) : 0.0; };
  return term(p) + term(1.0 - p);
}

Real entropy_bits(const ReducedDensityMatrix& rho) {
  const auto [upper, lower] = eigenvalues2(rho);
  (void)lower;
  return std::clamp(binary_entropy(upper), 0.0, 1.0);
}

bool decoherence_predicate(const ModeDecomposition& modes, Real tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("decoherence tolerance must be positive");
  const ModeAmplitudes& amps = modes.amplitudes();
  for (Index s = 0; s < amps.rows(); ++s) {
    if (std::abs(amps(s, 0)) > tol && std::abs(amps(s, 1)) > tol) return true;
  }
  return false;
}

EntropySample make_sample(Real t, const ReducedDensityMatrix& rho) {
  return {t, entropy_bits(rho), rho.rho00(), rho.rho11(), rho.rho01()};
}

Real max_entry_difference(const ReducedDensityMatrix& a, const ReducedDensityMatrix& b) {
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

}  // namespace dirac
