#pragma once

// Imposed strain rate gamma(t) of the modified 2D Burgers vortex, and the
// similarity coordinates (xi, tau) it induces.
//
//   Constant:  gamma(t) = gamma0
//   Rational:  gamma(t) = -1 / (2 c1 t + c2),   gamma' = 2 c1 gamma^2
//
//   xi  = sqrt(gamma(t) / nu) * x
//   tau = int_0^t gamma(t') dt'

#include <limits>

namespace burgers {

enum class StrainKind { Constant, Rational };

class StrainModel {
 public:
  /// Throws std::invalid_argument unless gamma0 > 0.
  static StrainModel constant(double gamma0);
  /// Throws std::invalid_argument unless c2 < 0 (so gamma(0) > 0).
  static StrainModel rational(double c1, double c2);

  StrainKind kind() const noexcept { return kind_; }
  double gamma0() const noexcept { return gamma0_; }
  /// Zero for the constant family.
  double c1() const noexcept { return c1_; }
  /// Only meaningful for the rational family.
  double c2() const noexcept { return c2_; }

 private:
  StrainModel(StrainKind kind, double gamma0, double c1, double c2)
      : kind_(kind), gamma0_(gamma0), c1_(c1), c2_(c2) {}

  StrainKind kind_;
  double gamma0_;
  double c1_;
  double c2_;
};

/// First time at which gamma blows up; +infinity when it never does.
double horizon(const StrainModel& model);

/// gamma(t). Throws DomainError for t < 0 or t >= horizon.
double gamma_at(const StrainModel& model, double t);

/// d gamma / dt.
double gamma_rate(const StrainModel& model, double t);

/// Exact antiderivative tau(t) = int_0^t gamma.
double tau_of(const StrainModel& model, double t);

/// Coefficient alpha of the constant-coefficient similarity equation,
/// alpha = 1 - c1 (confirmed by verification::cross_check_transform).
double alpha_of(const StrainModel& model);

/// The alternative mapping 1 - 2 c1, kept for the discrepancy report.
double printed_alpha_of(const StrainModel& model);

/// Eigenmodes stay bounded only for alpha > 0.
inline bool eigenmodes_bounded(double alpha) { return alpha > 0.0; }

class SimilarityFrame {
 public:
  /// Throws std::invalid_argument unless nu > 0.
  SimilarityFrame(StrainModel strain, double nu);

  const StrainModel& strain() const noexcept { return strain_; }
  double nu() const noexcept { return nu_; }

  double xi_of(double x, double t) const;
  double x_of(double xi, double t) const;
  double tau_of(double t) const { return burgers::tau_of(strain_, t); }

 private:
  StrainModel strain_;
  double nu_;
};

}  // namespace burgers
