#include "burgers/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace burgers {

Grid1D::Grid1D(double half_width, std::size_t num_points)
    : half_width_(half_width), num_points_(num_points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("grid half-width must be positive");
  }
  if (num_points < 3 || num_points % 2 == 0) {
    throw std::invalid_argument("grid point count must be odd and at least 3");
  }
}

std::vector<double> Grid1D::coordinates() const {
  std::vector<double> xs(num_points_);
  for (std::size_t i = 0; i < num_points_; ++i) xs[i] = coordinate(i);
  return xs;
}

Field1D::Field1D(Grid1D grid) : grid_(grid), values_(grid.size(), 0.0) {}

Field1D::Field1D(Grid1D grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("field size does not match grid");
  }
  if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument("field contains non-finite values");
  }
}

Field1D Field1D::sample(const Grid1D& grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid.coordinate(i));
  return Field1D(grid, std::move(v));
}

double Field1D::l2_norm() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return std::sqrt(grid_.spacing() * sum);
}

double Field1D::linf_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace burgers
