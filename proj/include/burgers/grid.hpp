#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace burgers {

/// Uniform grid on [-L, L] with an odd number of points, so the origin is a
/// node. Coordinates are L * (i - m) / m, which makes the grid exactly
/// symmetric and puts the end points exactly at +/-L.
class Grid1D {
 public:
  /// Throws std::invalid_argument unless L > 0 and N is odd and >= 3.
  Grid1D(double half_width, std::size_t num_points);

  double half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return num_points_; }
  std::size_t center() const noexcept { return (num_points_ - 1) / 2; }
  double spacing() const noexcept { return half_width_ / static_cast<double>(center()); }
  double coordinate(std::size_t i) const noexcept {
    const auto m = static_cast<double>(center());
    return half_width_ * ((static_cast<double>(i) - m) / m);
  }
  std::vector<double> coordinates() const;

  bool operator==(const Grid1D&) const = default;

 private:
  double half_width_;
  std::size_t num_points_;
};

/// Vorticity samples on a grid.
class Field1D {
 public:
  explicit Field1D(Grid1D grid);  // zero field
  /// Throws std::invalid_argument on size mismatch or non-finite values.
  Field1D(Grid1D grid, std::vector<double> values);

  static Field1D sample(const Grid1D& grid, const std::function<double(double)>& f);

  const Grid1D& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double>& values() noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// sqrt(h sum v_i^2)
  double l2_norm() const;
  double linf_norm() const;

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

}  // namespace burgers
