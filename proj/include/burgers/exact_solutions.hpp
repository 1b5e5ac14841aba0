#pragma once

// Closed-form solutions of the constant-coefficient similarity equation
//
//   dOmega/dtau = Omega + alpha xi dOmega/dxi + d2Omega/dxi2,
//
// with Omega -> 0 as |xi| -> infinity.
//
//   steady:     Omega(xi)  = C1 e^{-alpha xi^2/4} D_{1/alpha-1}(sqrt(alpha) xi)
//   eigenmodes: h_n(xi)    = (-1)^n e^{-alpha xi^2/2} H_n(sqrt(alpha/2) xi)
//               lambda_n   = (n+1) alpha - 1
//   separable:  Omega(xi,tau) = sum_n c_n h_n(xi) e^{-lambda_n tau}

#include <memory>
#include <variant>
#include <vector>

#include "burgers/special_functions.hpp"
#include "burgers/strain_model.hpp"

namespace burgers {

class SteadyProfile {
 public:
  /// Throws std::invalid_argument unless alpha > 0.
  SteadyProfile(double alpha, double c_amp);

  double alpha() const noexcept { return alpha_; }
  double c_amp() const noexcept { return c_amp_; }
  /// Order 1/alpha - 1 of the parabolic cylinder function.
  double order() const noexcept { return 1.0 / alpha_ - 1.0; }
  const ParabolicCylinder& pcf() const noexcept { return *pcf_; }

 private:
  double alpha_;
  double c_amp_;
  std::shared_ptr<const ParabolicCylinder> pcf_;
};

class EigenMode {
 public:
  /// Throws std::invalid_argument unless n >= 0 and alpha > 0.
  EigenMode(int n, double alpha);

  int n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }

 private:
  int n_;
  double alpha_;
};

struct ModeTerm {
  double coeff;
  EigenMode mode;
};

class SeparableSolution {
 public:
  static constexpr std::size_t kMaxModes = 64;

  /// All terms must share alpha. Superpositions longer than kMaxModes drop
  /// coefficients below 1e-14; if still too long, std::invalid_argument.
  SeparableSolution(double alpha, std::vector<ModeTerm> terms);

  /// Single mode with coefficient coeff.
  static SeparableSolution single(const EigenMode& mode, double coeff = 1.0);

  double alpha() const noexcept { return alpha_; }
  const std::vector<ModeTerm>& terms() const noexcept { return terms_; }

 private:
  double alpha_;
  std::vector<ModeTerm> terms_;
};

using ExactSolution = std::variant<SteadyProfile, SeparableSolution>;

/// lambda_n = (n+1) alpha - 1.
double eigenvalue(int n, double alpha);

double steady_omega(const SteadyProfile& p, double xi);
double eigenmode(const EigenMode& m, double xi);

/// Throws DomainError for tau < 0.
double separable_omega(const SeparableSolution& s, double xi, double tau);

/// Omega(xi, tau) of either family (steady ignores tau).
double similarity_omega(const ExactSolution& s, double xi, double tau);

/// int_0^xi Omega(eta, tau) d eta by adaptive Gauss-Kronrod.
/// Throws AccuracyError if the error estimate exceeds abs_tol.
double similarity_w(const ExactSolution& s, double xi, double tau, double abs_tol = 1e-10);

/// Axial velocity W(x, t) = int_0^x Omega(xi(x', t)) dx' with W(0) = 0.
double w_profile(const SteadyProfile& p, const SimilarityFrame& frame, double x, double t);
double w_profile(const ExactSolution& s, const SimilarityFrame& frame, double x, double t);

/// Similarity solution evaluated at (xi(x, t), tau(t)); coordinates only,
/// the amplitude is not rescaled.
double physical_omega(const ExactSolution& s, const SimilarityFrame& frame, double x, double t);

/// Smallest xi_cut >= 0 with |h_n(xi)| < rel * max|h_n| for all |xi| >= xi_cut,
/// from the Gaussian envelope e^{-z^2} P_n(|z|) >= |h_n| where P_n has the
/// Hermite coefficients taken in absolute value.
double decay_cutoff(const EigenMode& m, double rel = 1e-10);

}  // namespace burgers
