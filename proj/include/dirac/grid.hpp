// Uniform periodic grid and two-component spinor fields on it.
#ifndef DIRAC_GRID_HPP
#define DIRAC_GRID_HPP

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <utility>

namespace dirac {

using Real = double;
using Complex = std::complex<Real>;
using Index = Eigen::Index;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Per-site chirality amplitudes. Column 0 holds psi_{-1}, column 1 holds psi_{+1}.
using SpinorArray = Eigen::Matrix<Complex, Eigen::Dynamic, 2>;
using Spinor = Eigen::Matrix<Complex, 2, 1>;

/// Chirality label of a spinor component. Component alpha moves with velocity alpha when m = 0.
enum class Chirality : int { negative = -1, positive = +1 };

constexpr Index column_of(Chirality c) { return c == Chirality::negative ? 0 : 1; }
constexpr int sign_of(Chirality c) { return static_cast<int>(c); }
constexpr Chirality opposite(Chirality c) {
  return c == Chirality::negative ? Chirality::positive : Chirality::negative;
}

/// Periodic grid covering [-L, L) with N points, x_i = -L + i dx.
///
/// Discrete momenta are k_j = pi j / L for -N/2 <= j < N/2. The Nyquist mode
/// j = -N/2 is counted as a negative momentum.
class Grid1D {
 public:
  /// Throws std::invalid_argument unless L > 0, N >= 2 and N is even.
  Grid1D(Real half_extent, Index n_points);

  Real half_extent() const { return half_extent_; }
  Index size() const { return n_points_; }
  Real spacing() const { return spacing_; }
  Real extent() const { return 2.0 * half_extent_; }

  Real x(Index i) const { return -half_extent_ + static_cast<Real>(i) * spacing_; }
  RealVector coordinates() const;

  Index min_mode() const { return -n_points_ / 2; }
  Index max_mode() const { return n_points_ / 2 - 1; }
  bool has_mode(Index j) const { return j >= min_mode() && j <= max_mode(); }
  Real momentum(Index j) const { return std::numbers::pi * static_cast<Real>(j) / half_extent_; }

  bool operator==(const Grid1D& other) const = default;

 private:
  Real half_extent_;
  Index n_points_;
  Real spacing_;
};

/// L = 20, N = 1024.
Grid1D default_grid();

/// Spinor field psi(x_i) sampled on a grid. Immutable once built.
class SpinorField {
 public:
  explicit SpinorField(Grid1D grid);
  /// Throws std::invalid_argument if values.rows() != grid.size().
  SpinorField(Grid1D grid, SpinorArray values);

  const Grid1D& grid() const { return grid_; }
  const SpinorArray& values() const { return values_; }
  Index size() const { return values_.rows(); }

  auto component(Chirality c) const { return values_.col(column_of(c)); }
  auto minus() const { return values_.col(0); }
  auto plus() const { return values_.col(1); }

 private:
  Grid1D grid_;
  SpinorArray values_;
};

SpinorField operator+(const SpinorField& a, const SpinorField& b);
SpinorField operator-(const SpinorField& a, const SpinorField& b);
SpinorField operator*(Complex scale, const SpinorField& f);

/// Rectangle/trapezoid sum of psi^dagger psi dx (identical on a periodic grid).
Real norm(const SpinorField& field);

/// Largest |psi_alpha(x_i)| over both components.
Real max_abs_difference(const SpinorField& a, const SpinorField& b);

/// ||a - b||_2 / ||b||_2 over all sites and both components.
Real relative_l2_difference(const SpinorField& a, const SpinorField& b);

/// Returns (|psi_{-1}(x_i)|^2, |psi_{+1}(x_i)|^2).
std::pair<RealVector, RealVector> chirality_distributions(const SpinorField& field);

struct PositionMoments {
  Real mean;
  Real variance;
};

/// Throws std::invalid_argument for a zero-norm field.
PositionMoments position_moments(const SpinorField& field);

/// Grid reflection x -> -x, i.e. site i maps to site (N - i) mod N. Components are not swapped.
SpinorField reflect(const SpinorField& field);

/// Swaps the chirality components.
SpinorField swap_chirality(const SpinorField& field);

}  // namespace dirac

#endif  // DIRAC_GRID_HPP
