#include "dirac/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac {

Real dispersion(Real k, Real m) {
  if (m < 0.0) throw std::invalid_argument("mass must be nonnegative, got " + std::to_string(m));
  return std::sqrt(k * k + m * m);
}

namespace {

Real coupling_sign(MassCoupling coupling) { return coupling == MassCoupling::standard ? -1.0 : 1.0; }

}  // namespace

Eigen::Matrix2d chiral_hamiltonian(Real k, Real m, MassCoupling coupling) {
  const Real off = coupling_sign(coupling) * m;
  Eigen::Matrix2d h;
  h << -k, off, off, k;
  return h;
}

Eigen::Vector2d energy_spinor(Real k, Real m, EnergySign eps, MassCoupling coupling) {
  const Real omega = dispersion(k, m);
  if (omega == 0.0) {
    return eps == EnergySign::positive ? Eigen::Vector2d(0.0, 1.0) : Eigen::Vector2d(1.0, 0.0);
  }
  const Real lambda = sign_of(eps) * omega;
  const Real off = coupling_sign(coupling) * m;
  // Either row of (H - lambda) gives a null vector; take the better conditioned one.
  const Eigen::Vector2d from_first_row(off, k + lambda);
  const Eigen::Vector2d from_second_row(k - lambda, -off);
  Eigen::Vector2d v = from_first_row.squaredNorm() >= from_second_row.squaredNorm() ? from_first_row : from_second_row;
  v.normalize();
  const Real lead = v(0) != 0.0 ? v(0) : v(1);
  if (lead < 0.0) v = -v;
  return v;
}

EnergyEigenbasis::EnergyEigenbasis(Grid1D grid, Real mass, MassCoupling coupling)
    : grid_(grid),
      mass_(mass),
      coupling_(coupling),
      omega_(grid.size()),
      positive_(grid.size(), 2),
      negative_(grid.size(), 2) {
  if (mass < 0.0) throw std::invalid_argument("mass must be nonnegative, got " + std::to_string(mass));
  for (Index s = 0; s < grid_.size(); ++s) {
    const Real k = momentum(s);
    omega_(s) = dispersion(k, mass);
    positive_.row(s) = energy_spinor(k, mass, EnergySign::positive, coupling).transpose();
    negative_.row(s) = energy_spinor(k, mass, EnergySign::negative, coupling).transpose();
  }
}

ModeDecomposition::ModeDecomposition(std::shared_ptr<const EnergyEigenbasis> basis, ModeAmplitudes amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (!basis_) throw std::invalid_argument("mode decomposition requires an eigenbasis");
  if (amplitudes_.rows() != basis_->size()) {
    throw std::invalid_argument("mode amplitude count does not match the grid");
  }
}

struct SpectralEvolver::Transform {
  Eigen::FFT<Real> fft;
  ComplexVector in;
  ComplexVector out;

  explicit Transform(Index n) : in(n), out(n) { fft.SetFlag(Eigen::FFT<Real>::Unscaled); }
};

SpectralEvolver::SpectralEvolver(Grid1D grid, Real mass, MassCoupling coupling)
    : basis_(std::make_shared<const EnergyEigenbasis>(grid, mass, coupling)),
      transform_(std::make_unique<Transform>(grid.size())) {}

SpectralEvolver::~SpectralEvolver() = default;
SpectralEvolver::SpectralEvolver(SpectralEvolver&&) noexcept = default;
SpectralEvolver& SpectralEvolver::operator=(SpectralEvolver&&) noexcept = default;

namespace {

// FFT bin holding signed mode j.
Index bin_of_mode(Index j, Index n) { return (j + n) % n; }

// e^{i k_j L} = (-1)^j accounts for the grid starting at x_0 = -L.
Real origin_phase(Index j) { return (j % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

ModeDecomposition SpectralEvolver::decompose(const SpinorField& field) const {
  const Grid1D& grid = basis_->grid();
  if (!(field.grid() == grid)) throw std::invalid_argument("field grid does not match the evolver grid");
  const Index n = grid.size();
  Eigen::Matrix<Complex, Eigen::Dynamic, 2> spectrum(n, 2);
  for (Index c = 0; c < 2; ++c) {
    transform_->in = field.values().col(c);
    transform_->fft.fwd(transform_->out.data(), transform_->in.data(), n);
    spectrum.col(c) = transform_->out;
  }
  const Real scale = std::sqrt(grid.extent()) / static_cast<Real>(n);
  ModeAmplitudes amps(n, 2);
  for (Index s = 0; s < n; ++s) {
    const Index j = basis_->mode_of_row(s);
    const Eigen::Matrix<Complex, 1, 2> f = spectrum.row(bin_of_mode(j, n));
    const Real phase = origin_phase(j) * scale;
    for (EnergySign eps : {EnergySign::negative, EnergySign::positive}) {
      const Eigen::Vector2d u = basis_->spinor(s, eps);
      amps(s, column_of(eps)) = phase * (u(0) * f(0) + u(1) * f(1));
    }
  }
  return ModeDecomposition(basis_, std::move(amps));
}

SpinorField SpectralEvolver::reconstruct(const ModeDecomposition& modes) const {
  const Grid1D& grid = basis_->grid();
  if (!(modes.grid() == grid)) throw std::invalid_argument("mode grid does not match the evolver grid");
  const Index n = grid.size();
  const Real scale = 1.0 / std::sqrt(grid.extent());
  Eigen::Matrix<Complex, Eigen::Dynamic, 2> spectrum(n, 2);
  const ModeAmplitudes& amps = modes.amplitudes();
  for (Index s = 0; s < n; ++s) {
    const Index j = basis_->mode_of_row(s);
    const Eigen::Vector2d up = basis_->spinor(s, EnergySign::positive);
    const Eigen::Vector2d um = basis_->spinor(s, EnergySign::negative);
    const Complex ap = amps(s, 1);
    const Complex am = amps(s, 0);
    const Real phase = origin_phase(j) * scale;
    spectrum(bin_of_mode(j, n), 0) = phase * (ap * up(0) + am * um(0));
    spectrum(bin_of_mode(j, n), 1) = phase * (ap * up(1) + am * um(1));
  }
  SpinorArray values(n, 2);
  for (Index c = 0; c < 2; ++c) {
    transform_->in = spectrum.col(c);
    transform_->fft.inv(transform_->out.data(), transform_->in.data(), n);
    values.col(c) = transform_->out;
  }
  return SpinorField(grid, std::move(values));
}

SpinorField SpectralEvolver::evolve(const SpinorField& field, Real t) const {
  return reconstruct(evolve_modes(decompose(field), t));
}

SpinorField SpectralEvolver::evolve(const ModeDecomposition& modes, Real t) const {
  return reconstruct(evolve_modes(modes, t));
}

SpinorField SpectralEvolver::project(const SpinorField& field, EnergySign keep) const {
  return reconstruct(project_modes(decompose(field), keep));
}

ModeDecomposition evolve_modes(const ModeDecomposition& modes, Real t) {
  ModeAmplitudes amps = modes.amplitudes();
  const RealVector& omega = modes.basis().omegas();
  for (Index s = 0; s < amps.rows(); ++s) {
    const Complex forward = std::polar(1.0, -omega(s) * t);  // e^{-i omega t}
    amps(s, 1) *= forward;
    amps(s, 0) *= std::conj(forward);
  }
  return ModeDecomposition(modes.shared_basis(), std::move(amps));
}

ModeDecomposition project_modes(const ModeDecomposition& modes, EnergySign keep) {
  ModeAmplitudes amps = modes.amplitudes();
  amps.col(column_of(opposite(keep))).setZero();
  return ModeDecomposition(modes.shared_basis(), std::move(amps));
}

ModeDecomposition decompose(const SpinorField& field, Real m) { return SpectralEvolver(field.grid(), m).decompose(field); }

SpinorField reconstruct(const ModeDecomposition& modes) {
  return SpectralEvolver(modes.grid(), modes.mass(), modes.basis().coupling()).reconstruct(modes);
}

SpinorField evolve(const SpinorField& field, Real m, Real t) { return SpectralEvolver(field.grid(), m).evolve(field, t); }

SpinorField project_energy(const SpinorField& field, Real m, EnergySign keep) {
  return SpectralEvolver(field.grid(), m).project(field, keep);
}

}  // namespace dirac
