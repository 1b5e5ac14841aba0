#pragma once
// Refinement studies against the exact separable solution
// e^{-lambda_n tau} h_n(xi) of the similarity equation.

#include <cstddef>
#include <vector>

#include "burgers/grid.hpp"

namespace burgers {

struct SpatialPoint {
  std::size_t num_points;
  double spacing;
  double error;  ///< max norm at tau_end
  double order;  ///< against the previous row; NaN for the first
};

struct TemporalPoint {
  double dt;
  double error;  ///< max norm against a dt/16 reference on the same grid
  double order;
};

/// RK4 with CFL 0.4 on Grid1D(half_width, N) for each N.
std::vector<SpatialPoint> spatial_convergence(double alpha, int n, double tau_end, double half_width,
                                              const std::vector<std::size_t>& num_points);

/// RK4 with the given fixed steps on one grid; spatial error cancels
/// because the reference is the same semi-discrete system.
std::vector<TemporalPoint> temporal_convergence(double alpha, int n, double tau_end, const Grid1D& grid,
                                                const std::vector<double>& dts);

}  // namespace burgers
