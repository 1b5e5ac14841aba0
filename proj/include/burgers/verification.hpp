#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burgers/grid.hpp"
#include "burgers/pde_solver.hpp"
#include "burgers/strain_model.hpp"

namespace burgers {

/// Step of the 6th-order central stencils used by the residual oracles.
inline constexpr double kResidualStep = 0.01;

/// 6th-order central first and second derivatives of f at x.
double fd_first_derivative(const std::function<double(double)>& f, double x, double step);
double fd_second_derivative(const std::function<double(double)>& f, double x, double step);

/// max over interior grid points of |h'' + alpha xi h' + (1 + lambda) h|,
/// divided by max|h| over the grid (0 for the zero profile).
double ode_residual(const std::function<double(double)>& profile, double alpha, double lambda,
                    const Grid1D& grid, double step = kResidualStep);

/// ode_residual of steady_omega(alpha, C1 = 1) with lambda = 0.
double pde_residual_steady(double alpha, const Grid1D& grid, double step = kResidualStep);

struct SpectrumEntry {
  int index;
  double computed;     ///< eigenvalue of -A
  double closed_form;  ///< (n+1) alpha - 1
  double abs_error;
};

struct SpectrumReport {
  double alpha;
  Grid1D grid;
  std::vector<SpectrumEntry> entries;  ///< ascending
  /// Largest imaginary part; zero because the operator is symmetrized exactly.
  double imag_residue = 0.0;

  double max_abs_error() const;
};

struct SpectrumOptions {
  int max_modes = 12;
  double max_spacing = 0.05;
};

/// k smallest eigenvalues of -A, where A is the centered tridiagonal
/// discretization of h -> h'' + alpha xi h' + h with zero Dirichlet ends.
/// A is similar to a symmetric tridiagonal matrix (diagonal scaling by the
/// square roots of the off-diagonal ratios, the discrete analogue of the
/// e^{alpha xi^2/4} weight); eigenvalues come from Sturm-sequence bisection.
SpectrumReport discrete_spectrum(double alpha, const Grid1D& grid, int k,
                                 const SpectrumOptions& options = {});

/// Smallest `count` eigenvalues of a symmetric tridiagonal matrix.
/// diag has n entries, off has n-1.
std::vector<double> tridiagonal_smallest_eigenvalues(const std::vector<double>& diag,
                                                     const std::vector<double>& off, int count);

struct DecaySample {
  double tau;
  double amplitude;
};

struct DecayFit {
  double rate;
  double r_squared;
  std::size_t samples_used;
};

/// Least-squares slope of -ln(amplitude) against tau over the samples with
/// tau >= tau_0 + 5% of the range. r^2 is 1 when the fitted data are exactly
/// constant. Throws std::invalid_argument for fewer than 10 samples and
/// DomainError for non-positive amplitudes.
DecayFit decay_rate_fit(const std::vector<DecaySample>& series);

/// Uses the L2 norms of an evolution.
DecayFit decay_rate_fit(const std::vector<NormSample>& norms);

struct CrossCheckOptions {
  std::size_t num_points = 2001;
  double xi_extent = 10.0;  ///< min over t of xi at the physical boundary
  double cfl_factor = 0.4;
  double threshold = 5e-3;  ///< discretization-level max-norm error
};

struct AlphaCandidate {
  std::string label;  ///< "1 - c1" or "1 - 2 c1"
  double alpha;
  double max_error;  ///< +inf when alpha <= 0
  bool passes;
};

struct CrossCheckResult {
  double c1;
  double c2;  ///< -1/gamma0 for a constant model
  double nu;
  int mode_n;
  double t_end;
  double tau_end;
  Grid1D grid;
  std::vector<AlphaCandidate> candidates;
  std::optional<double> winning_alpha;
  bool degenerate = false;  ///< both candidates coincide (c1 = 0)
};

/// Evolves the physical equation from h_n(xi(x, 0)) and compares at t_end
/// with e^{-lambda_n tau(t_end)} h_n(xi(x, t_end)) for alpha = 1 - c1 and
/// alpha = 1 - 2 c1. The candidate whose error is at discretization level
/// (<= threshold) wins.
CrossCheckResult cross_check_transform(const SimilarityFrame& frame, int mode_n, double t_end,
                                       const CrossCheckOptions& options = {});
CrossCheckResult cross_check_transform(double c1, double c2, double nu, int mode_n, double t_end,
                                       const CrossCheckOptions& options = {});

}  // namespace burgers
