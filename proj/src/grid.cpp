#include "dirac/grid.hpp"

#include <stdexcept>
#include <string>

namespace dirac {

Grid1D::Grid1D(Real half_extent, Index n_points)
    : half_extent_(half_extent), n_points_(n_points), spacing_(0.0) {
  if (!(half_extent > 0.0)) {
    throw std::invalid_argument("grid half extent L must be positive, got " + std::to_string(half_extent));
  }
  if (n_points < 2 || n_points % 2 != 0) {
    throw std::invalid_argument("grid point count N must be even and >= 2, got " + std::to_string(n_points));
  }
  spacing_ = 2.0 * half_extent / static_cast<Real>(n_points);
}

RealVector Grid1D::coordinates() const {
  RealVector xs(n_points_);
  for (Index i = 0; i < n_points_; ++i) xs(i) = x(i);
  return xs;
}

Grid1D default_grid() { return Grid1D(20.0, 1024); }

SpinorField::SpinorField(Grid1D grid) : grid_(grid), values_(SpinorArray::Zero(grid.size(), 2)) {}

SpinorField::SpinorField(Grid1D grid, SpinorArray values) : grid_(grid), values_(std::move(values)) {
  if (values_.rows() != grid_.size()) {
    throw std::invalid_argument("spinor field has " + std::to_string(values_.rows()) + " sites but grid has " +
                                std::to_string(grid_.size()));
  }
}

namespace {

void require_same_grid(const SpinorField& a, const SpinorField& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("spinor fields live on different grids");
}

}  // namespace

SpinorField operator+(const SpinorField& a, const SpinorField& b) {
  require_same_grid(a, b);
  return SpinorField(a.grid(), a.values() + b.values());
}

SpinorField operator-(const SpinorField& a, const SpinorField& b) {
  require_same_grid(a, b);
  return SpinorField(a.grid(), a.values() - b.values());
}

SpinorField operator*(Complex scale, const SpinorField& f) { return SpinorField(f.grid(), scale * f.values()); }

Real norm(const SpinorField& field) { return field.values().squaredNorm() * field.grid().spacing(); }

Real max_abs_difference(const SpinorField& a, const SpinorField& b) {
  require_same_grid(a, b);
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

Real relative_l2_difference(const SpinorField& a, const SpinorField& b) {
  require_same_grid(a, b);
  return (a.values() - b.values()).norm() / b.values().norm();
}

std::pair<RealVector, RealVector> chirality_distributions(const SpinorField& field) {
  return {field.minus().cwiseAbs2(), field.plus().cwiseAbs2()};
}

PositionMoments position_moments(const SpinorField& field) {
  const RealVector density = field.values().rowwise().squaredNorm();
  const Real total = density.sum();
  if (!(total > 0.0)) throw std::invalid_argument("position moments of a zero-norm field are undefined");
  const RealVector xs = field.grid().coordinates();
  const Real mean = xs.dot(density) / total;
  const Real variance = (xs.array() - mean).square().matrix().dot(density) / total;
  return {mean, variance};
}

SpinorField reflect(const SpinorField& field) {
  const Index n = field.size();
  SpinorArray out(n, 2);
  for (Index i = 0; i < n; ++i) out.row(i) = field.values().row((n - i) % n);
  return SpinorField(field.grid(), std::move(out));
}

SpinorField swap_chirality(const SpinorField& field) {
  SpinorArray out(field.size(), 2);
  out.col(0) = field.plus();
  out.col(1) = field.minus();
  return SpinorField(field.grid(), std::move(out));
}

}  // namespace dirac
