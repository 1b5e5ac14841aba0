#include "burgers/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "burgers/exact_solutions.hpp"
#include "burgers/special_functions.hpp"

namespace burgers {

std::string to_string(DiscrepancyItem item) {
  switch (item) {
    case DiscrepancyItem::AlphaMapping:
      return "AlphaMapping";
    case DiscrepancyItem::SteadyArgScaling:
      return "SteadyArgScaling";
    case DiscrepancyItem::EigenGaussianExponent:
      return "EigenGaussianExponent";
    case DiscrepancyItem::WPrefactor:
      return "WPrefactor";
  }
  return "unknown";
}

double printed_steady_omega(double alpha, double xi) {
  // e^{-alpha xi^2/4} D_{1/alpha - 1}(xi)
  return std::exp(-0.25 * alpha * xi * xi) * parabolic_cylinder_d(1.0 / alpha - 1.0, xi);
}

double printed_eigenmode(int n, double alpha, double xi) {
  const double v = hermite_weighted(n, std::sqrt(0.5 * alpha) * xi, -0.25 * alpha * xi * xi);
  return n % 2 == 0 ? v : -v;
}

double w_derivative_residual(const SimilarityFrame& frame, double alpha, double t, const Grid1D& x_grid,
                             bool printed_prefactor) {
  const ExactSolution steady{SteadyProfile(alpha, 1.0)};
  const double g = gamma_at(frame.strain(), t);
  const double tau = frame.tau_of(t);
  const double factor = printed_prefactor ? std::sqrt(g / frame.nu()) : std::sqrt(frame.nu() / g);
  auto w = [&](double x) { return factor * similarity_w(steady, frame.xi_of(x, t), tau, 1e-10); };
  double scale = 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < x_grid.size(); ++i) {
    const double x = x_grid.coordinate(i);
    const double omega = physical_omega(steady, frame, x, t);
    scale = std::max(scale, std::abs(omega));
    worst = std::max(worst, std::abs(fd_first_derivative(w, x, kResidualStep) - omega));
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

DiscrepancyReport build_discrepancy_report(const CrossCheckResult& alpha_evidence) {
  DiscrepancyReport report;

  {
    double printed_err = 0.0;
    double implemented_err = 0.0;
    for (const auto& c : alpha_evidence.candidates) {
      if (c.label == "1 - 2 c1") printed_err = c.max_error;
      if (c.label == "1 - c1") implemented_err = c.max_error;
    }
    std::ostringstream measure;
    measure << "max-norm error of the physical evolution of h_" << alpha_evidence.mode_n
            << " against the similarity prediction (c1 = " << alpha_evidence.c1
            << ", c2 = " << alpha_evidence.c2 << ", t_end = " << alpha_evidence.t_end << ")";
    report.entries.push_back({DiscrepancyItem::AlphaMapping, "alpha = 1 - 2 c1", "alpha = 1 - c1",
                              printed_err, implemented_err, measure.str()});
  }

  const Grid1D grid(8.0, 401);
  {
    const double alpha = 2.0;
    const double printed = ode_residual([&](double xi) { return printed_steady_omega(alpha, xi); }, alpha,
                                        0.0, grid);
    const double implemented = pde_residual_steady(alpha, grid);
    report.entries.push_back({DiscrepancyItem::SteadyArgScaling,
                              "Omega = C1 e^{-alpha xi^2/4} D_{1/alpha-1}(xi)",
                              "Omega = C1 e^{-alpha xi^2/4} D_{1/alpha-1}(sqrt(alpha) xi)", printed,
                              implemented,
                              "normalized residual of Omega'' + alpha xi Omega' + Omega at alpha = 2 on [-8, 8]"});
  }
  {
    const double alpha = 1.0;
    const double printed =
        ode_residual([&](double xi) { return printed_eigenmode(0, alpha, xi); }, alpha, 0.0, grid);
    const EigenMode h0(0, alpha);
    const double implemented =
        ode_residual([&](double xi) { return eigenmode(h0, xi); }, alpha, eigenvalue(0, alpha), grid);
    report.entries.push_back({DiscrepancyItem::EigenGaussianExponent,
                              "h_n = (-1)^n e^{-alpha xi^2/4} H_n(sqrt(alpha/2) xi)",
                              "h_n = (-1)^n e^{-alpha xi^2/2} H_n(sqrt(alpha/2) xi)", printed, implemented,
                              "normalized residual of h'' + alpha xi h' + (1 + lambda_0) h for n = 0, alpha = 1"});
  }
  {
    const SimilarityFrame frame(StrainModel::constant(4.0), 1.0);
    const Grid1D x_grid(4.0, 81);
    const double printed = w_derivative_residual(frame, 1.0, 0.0, x_grid, true);
    const double implemented = w_derivative_residual(frame, 1.0, 0.0, x_grid, false);
    report.entries.push_back({DiscrepancyItem::WPrefactor,
                              "W = C1 sqrt(gamma/nu) int_0^xi Omega d eta",
                              "W = int_0^x Omega dx' = sqrt(nu/gamma) int_0^xi Omega d eta", printed,
                              implemented,
                              "normalized max |dW/dx - Omega| for the alpha = 1 steady profile, gamma = 4, nu = 1"});
  }
  return report;
}

}  // namespace burgers
