#pragma once

// Ledger of the places where the implemented closed forms differ from the
// formulas as printed, with residual evidence for each.

#include <string>
#include <vector>

#include "burgers/verification.hpp"

namespace burgers {

enum class DiscrepancyItem { AlphaMapping, SteadyArgScaling, EigenGaussianExponent, WPrefactor };

std::string to_string(DiscrepancyItem item);

struct DiscrepancyEntry {
  DiscrepancyItem item;
  std::string printed_form;
  std::string implemented_form;
  double printed_residual;      ///< error/residual of the printed form
  double implemented_residual;  ///< same measure for the implemented form
  std::string measure;          ///< what the residuals measure

  double separation() const { return printed_residual / implemented_residual; }
};

struct DiscrepancyReport {
  std::vector<DiscrepancyEntry> entries;
};

/// Printed forms, kept only as evidence for the report.
double printed_steady_omega(double alpha, double xi);
double printed_eigenmode(int n, double alpha, double xi);

/// max |dW/dx - Omega| / max|Omega| over the x grid, for the steady
/// profile at time t, using W = sqrt(gamma/nu) int_0^xi Omega (printed) or
/// the defining quadrature (implemented).
double w_derivative_residual(const SimilarityFrame& frame, double alpha, double t, const Grid1D& x_grid,
                             bool printed_prefactor);

/// Builds all four entries. The alpha mapping is evidenced by the given
/// cross-check (errors of the 1 - 2 c1 and 1 - c1 candidates).
DiscrepancyReport build_discrepancy_report(const CrossCheckResult& alpha_evidence);

}  // namespace burgers
