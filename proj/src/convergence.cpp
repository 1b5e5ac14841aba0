#include "burgers/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "burgers/exact_solutions.hpp"
#include "burgers/pde_solver.hpp"

namespace burgers {
namespace {

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Field1D run(const Field1D& initial, double alpha, double tau_end, DtPolicy dt) {
  EvolveSpec spec;
  spec.equation = SimilarityEquation{alpha};
  spec.end_time = tau_end;
  spec.dt = dt;
  spec.norm_samples = 2;
  return evolve(initial, spec).final_field;
}

}  // namespace

std::vector<SpatialPoint> spatial_convergence(double alpha, int n, double tau_end, double half_width,
                                              const std::vector<std::size_t>& num_points) {
  const EigenMode mode(n, alpha);
  const double decay = std::exp(-eigenvalue(n, alpha) * tau_end);
  std::vector<SpatialPoint> out;
  for (std::size_t N : num_points) {
    const Grid1D grid(half_width, N);
    const Field1D u0 = Field1D::sample(grid, [&](double xi) { return eigenmode(mode, xi); });
    const Field1D u = run(u0, alpha, tau_end, CflDt{0.4});
    const Field1D exact = Field1D::sample(grid, [&](double xi) { return decay * eigenmode(mode, xi); });
    SpatialPoint p{N, grid.spacing(), max_diff(u.values(), exact.values()),
                   std::numeric_limits<double>::quiet_NaN()};
    if (!out.empty()) p.order = std::log(out.back().error / p.error) / std::log(out.back().spacing / p.spacing);
    out.push_back(p);
  }
  return out;
}

std::vector<TemporalPoint> temporal_convergence(double alpha, int n, double tau_end, const Grid1D& grid,
                                                const std::vector<double>& dts) {
  if (dts.empty()) return {};
  const EigenMode mode(n, alpha);
  const Field1D u0 = Field1D::sample(grid, [&](double xi) { return eigenmode(mode, xi); });
  const double finest = *std::min_element(dts.begin(), dts.end());
  const Field1D ref = run(u0, alpha, tau_end, FixedDt{finest / 16.0});
  std::vector<TemporalPoint> out;
  for (double dt : dts) {
    const Field1D u = run(u0, alpha, tau_end, FixedDt{dt});
    TemporalPoint p{dt, max_diff(u.values(), ref.values()), std::numeric_limits<double>::quiet_NaN()};
    if (!out.empty()) p.order = std::log(out.back().error / p.error) / std::log(out.back().dt / dt);
    out.push_back(p);
  }
  return out;
}

}  // namespace burgers
