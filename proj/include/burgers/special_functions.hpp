#pragma once

#include <string>
#include <vector>

namespace burgers {

/// Physicists' Hermite polynomial H_n(z) by upward three-term recurrence.
/// Throws std::invalid_argument for n < 0 and std::range_error when the
/// value overflows.
double hermite(int n, double z);

/// H_n(z) * exp(log_weight), evaluated with a rescaled recurrence so that
/// neither factor overflows on its own.
double hermite_weighted(int n, double z, double log_weight);

/// Hermite function e^{-z^2/2} H_n(z).
inline double hermite_function(int n, double z) { return hermite_weighted(n, z, -0.5 * z * z); }

/// 1/Gamma(x), exactly zero at the poles of Gamma.
double reciprocal_gamma(double x);

/// sin(pi x) and cos(pi x), exact at (half-)integers.
double sin_pi(double x);
double cos_pi(double x);

enum class ParCylMethod { SeriesNearOrigin, OdeIntegration, Asymptotic };

std::string to_string(ParCylMethod method);

struct ParCylOptions {
  double near_tol = 1e-10;  ///< tolerance for |z| <= 10
  double far_tol = 1e-8;    ///< tolerance for |z| > 10
  double series_radius = 4.0;
  double far_seed = 20.0;  ///< smallest z for the inward march seed
  double node_spacing = 0.125;
  double max_abs_z = 40.0;
};

/// Parabolic cylinder function D_nu(z) (Whittaker), the solution of
///   u'' + (nu + 1/2 - z^2/4) u = 0
/// that decays as z -> +infinity.
///
/// Evaluation strategy:
///  - |z| <= R: Taylor series of the Weber equation about z = 0, where
///    R <= options.series_radius is shrunk for larger nu until the series'
///    rounding estimate is 1% of near_tol. Seeded with D_nu(0) = 2^{nu/2} sqrt(pi) / Gamma((1-nu)/2) and
///    D_nu'(0) = -2^{(nu+1)/2} sqrt(pi) / Gamma(-nu/2).
///  - z > R: Taylor-step integration *inward* from the
///    large-z asymptotic expansion seeded at z >= far_seed (the decaying
///    branch is dominant in that direction). Beyond the seed the expansion
///    is used directly.
///  - z < -R: D_nu(-x) = cos(pi nu) D_nu(x) + G(x), where
///    G(x) = D_nu(-x) - cos(pi nu) D_nu(x) is the growing solution with
///    G(0), G'(0) taken from the origin values, integrated outward. G is
///    identically zero at integer nu.
///
/// All values are carried as mantissa * exp(log_scale), so weighted()
/// can return e^{-z^2/4} D_nu(z) without overflow even when D_nu does not
/// fit in a double.
///
/// Immutable after construction; safe to share between threads.
class ParabolicCylinder {
 public:
  explicit ParabolicCylinder(double nu, ParCylOptions options = {});

  double nu() const noexcept { return nu_; }
  const ParCylOptions& options() const noexcept { return options_; }

  /// D_nu(z). Throws DomainError for |z| > max_abs_z and AccuracyError when
  /// the error estimate exceeds the tolerance.
  double operator()(double z) const;

  /// e^{-z^2/4} D_nu(z).
  double weighted(double z) const;

  /// D_nu'(z).
  double derivative(double z) const;

  ParCylMethod method_for(double z) const;

  double origin_value() const noexcept { return d0_; }
  double origin_slope() const noexcept { return d0_prime_; }
  /// Point where the inward march is seeded from the asymptotic expansion.
  double series_radius() const noexcept { return radius_; }
  double seed_point() const noexcept { return seed_z_; }
  /// Relative truncation error of the asymptotic seed.
  double seed_error() const noexcept { return seed_err_; }

 private:
  struct Scaled {
    double value = 0.0;  // actual = value * exp(log_scale)
    double slope = 0.0;
    double log_scale = 0.0;
    double err = 0.0;  // absolute error estimate, mantissa units
  };
  struct Node {
    double u;
    double du;
    double log_scale;
  };

  Scaled evaluate(double z) const;
  Scaled positive_side(double x) const;
  Scaled growing_part(double x) const;
  void check_accuracy(const Scaled& s, double z) const;

  double nu_;
  ParCylOptions options_;
  double d0_;
  double d0_prime_;
  double cos_pi_nu_;
  double g0_;
  double g0_prime_;
  double radius_ = 0.0;  // series used for |z| <= radius_
  double seed_z_ = 0.0;
  double seed_err_ = 0.0;
  double origin_err_ = 0.0;
  std::vector<Node> decaying_nodes_;  // z = R + k s, k = 0..K
  std::vector<Node> growing_nodes_;   // x = R + k s, G(x)
};

/// One-shot D_nu(z); builds a ParabolicCylinder per call.
double parabolic_cylinder_d(double nu, double z);

}  // namespace burgers
