#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include <boost/numeric/odeint.hpp>

#include "burgers/errors.hpp"
#include "burgers/special_functions.hpp"

using namespace burgers;

namespace {

// D_v(z) to 20 digits, evaluated independently with mpmath.pcfd at 50 digits
struct Reference {
  double nu, z, value;
};
constexpr Reference kTable[] = {
    {0.5, 1.3, 0.78786259379706460211},
    {0.5, -1.3, -0.43177945748689879033},
    {-0.5, 0.0, 1.2162802142575202831},
    {-0.5, 2.0, 0.24301889396360194159},
    {-0.5, -6.0, 4730.4267231445331474},
    {2.5, 5.5, 0.034570610731222292789},
    {1.7, -9.0, 1758206.0554681387145},
    {-1.5, 12.0, 5.5091584164097950209e-18},
    {3.2, 25.0, 4.0967796555226888607e-64},
    {-2.0, -8.0, 178193407.05760824643},
    {0.3, 30.0, 5.3324715680240075516e-98},
    {-0.5, -14.142135623730951, 1.9534586046856755075e+21},
    {4.0, 3.0, 3.1619767368559301035},
    {0.999999, -7.0, -0.011457248464874023534},
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Weber equation integrated from the origin values in the Gamma-function form.
double weber_ode(double nu, double z_end) {
  using State = std::array<double, 2>;
  const double sqrt_pi = std::sqrt(M_PI);
  State u{std::pow(2.0, nu / 2) * sqrt_pi / std::tgamma((1 - nu) / 2),
          -std::pow(2.0, (nu + 1) / 2) * sqrt_pi / std::tgamma(-nu / 2)};
  const auto rhs = [nu](const State& s, State& ds, double z) {
    ds[0] = s[1];
    ds[1] = (0.25 * z * z - nu - 0.5) * s[0];
  };
  namespace ode = boost::numeric::odeint;
  ode::integrate_adaptive(ode::make_controlled(1e-14, 1e-14, ode::runge_kutta_dopri5<State>()), rhs, u, 0.0,
                          z_end, z_end / 100);
  return u[0];
}

}  // namespace

TEST_CASE("hermite polynomials") {
  CHECK(hermite(0, 3.7) == 1.0);
  CHECK(hermite(1, 2.0) == 4.0);
  CHECK(hermite(2, 1.0) == 2.0);
  // direct expansions
  for (double z : {-2.5, -0.3, 0.0, 0.7, 3.1}) {
    CHECK(hermite(2, z) == doctest::Approx(4 * z * z - 2).epsilon(1e-15));
    CHECK(hermite(3, z) == doctest::Approx(8 * z * z * z - 12 * z).epsilon(1e-14));
    CHECK(hermite(4, z) == doctest::Approx(16 * std::pow(z, 4) - 48 * z * z + 12).epsilon(1e-13));
    CHECK(hermite(5, z) == doctest::Approx(32 * std::pow(z, 5) - 160 * std::pow(z, 3) + 120 * z).epsilon(1e-13));
  }
  CHECK_THROWS_AS(hermite(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hermite(300, 1e3), std::range_error);
}

TEST_CASE("hermite functions") {
  CHECK(hermite_function(0, 0.0) == 1.0);
  CHECK(hermite_function(1, 1.0) == doctest::Approx(2 * std::exp(-0.5)).epsilon(1e-15));
  for (int n = 0; n <= 6; ++n) {
    for (double z : {-3.0, 0.4, 2.2}) {
      CHECK(hermite_function(n, z) == doctest::Approx(hermite(n, z) * std::exp(-0.5 * z * z)).epsilon(1e-13));
    }
  }
}

TEST_CASE("hermite function at large degree and argument stays finite") {
  // log-space explicit sum: H_n(z) = n! sum_m (-1)^m (2z)^{n-2m} / (m! (n-2m)!)
  const int n = 50;
  const double z = 25.0;
  long double sum = 0.0L;
  const long double shift = -0.5L * z * z;
  for (int m = 0; 2 * m <= n; ++m) {
    const long double log_term = std::lgamma(n + 1.0L) - std::lgamma(m + 1.0L) - std::lgamma(n - 2 * m + 1.0L) +
                                 (n - 2 * m) * std::log(2.0L * z) + shift;
    sum += (m % 2 == 0 ? 1.0L : -1.0L) * std::exp(log_term);
  }
  const double v = hermite_function(n, z);
  CHECK(std::isfinite(v));
  CHECK(std::abs(v) < 1.0);
  CHECK(rel(v, static_cast<double>(sum)) < 1e-10);
  CHECK(std::isfinite(hermite_weighted(200, 30.0, -0.5 * 900.0)));
}

TEST_CASE("parabolic cylinder: elementary orders") {
  CHECK(parabolic_cylinder_d(0.0, 1.0) == doctest::Approx(std::exp(-0.25)).epsilon(1e-12));
  CHECK(parabolic_cylinder_d(1.0, 2.0) == doctest::Approx(2 * std::exp(-1.0)).epsilon(1e-12));
  // D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z / sqrt 2)
  for (int n = 0; n <= 8; ++n) {
    const ParabolicCylinder d(n);
    for (double z = -12.0; z <= 12.0; z += 0.37) {
      const double ref = std::pow(2.0, -0.5 * n) * std::exp(-0.25 * z * z) * hermite(n, z / std::sqrt(2.0));
      CHECK(std::abs(d(z) - ref) <= 1e-10 * std::max(std::abs(ref), 1e-300) + 1e-300);
    }
  }
}

TEST_CASE("parabolic cylinder: high-precision reference table") {
  for (const auto& r : kTable) {
    CAPTURE(r.nu);
    CAPTURE(r.z);
    CHECK(rel(parabolic_cylinder_d(r.nu, r.z), r.value) < (std::abs(r.z) <= 10 ? 1e-10 : 1e-8));
  }
}

TEST_CASE("parabolic cylinder: ODE integration from the origin agrees with the series") {
  for (double nu : {0.5, -0.5, 1.7, 3.2}) {
    for (double z : {1.3, -1.3, 3.5, -3.5}) {
      CAPTURE(nu);
      CAPTURE(z);
      CHECK(rel(parabolic_cylinder_d(nu, z), weber_ode(nu, z)) < 1e-9);
    }
  }
}

TEST_CASE("parabolic cylinder: recurrence and derivative identities") {
  for (double nu : {-1.7, -0.5, 0.25, 1.0, 2.6}) {
    const ParabolicCylinder up(nu + 1), mid(nu), down(nu - 1);
    for (double z = -8.0; z <= 8.0; z += 0.5) {
      const double a = up(z), b = z * mid(z), c = nu * down(z);
      CHECK(std::abs(a - b + c) <= 1e-9 * std::max(1.0, std::abs(a) + std::abs(b) + std::abs(c)));
      // D_v' = z/2 D_v - D_{v+1}
      const double dd = 0.5 * z * mid(z) - up(z);
      CHECK(std::abs(mid.derivative(z) - dd) <= 1e-9 * std::max(1.0, std::abs(0.5 * z * mid(z)) + std::abs(a)));
    }
  }
}

TEST_CASE("parabolic cylinder: continuity across method boundaries") {
  for (double nu : {-1.3, 0.5, 2.9}) {
    const ParabolicCylinder d(nu);
    for (double edge : {-d.series_radius(), d.series_radius(), d.seed_point()}) {
      const double lo = d(std::nextafter(edge, -100.0));
      const double hi = d(std::nextafter(edge, 100.0));
      CHECK(std::abs(lo - hi) <= 1e-10 * std::abs(hi));
    }
    CHECK(d.method_for(0.5) == ParCylMethod::SeriesNearOrigin);
    CHECK(d.series_radius() <= 4.0);
    CHECK(d.method_for(7.0) == ParCylMethod::OdeIntegration);
    CHECK(d.method_for(-7.0) == ParCylMethod::OdeIntegration);
  }
}

TEST_CASE("parabolic cylinder: weighted values do not overflow") {
  const ParabolicCylinder d(-0.5);
  const double z = -35.0;
  CHECK(std::isfinite(d.weighted(z)));
  CHECK(d.weighted(z) > 0.0);
  CHECK_THROWS_AS(d(41.0), DomainError);
}

TEST_CASE("parabolic cylinder: Weber residual at random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> nu_dist(-2.0, 4.0), z_dist(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double nu = nu_dist(rng), z = z_dist(rng), h = 0.01;
    const ParabolicCylinder d(nu);
    // 6th-order second difference, coefficients (1/90, -3/20, 3/2, -49/18)
    const double u2 = (2 * (d(z + 3 * h) + d(z - 3 * h)) / 180.0 - 3 * (d(z + 2 * h) + d(z - 2 * h)) / 20.0 +
                       3 * (d(z + h) + d(z - h)) / 2.0 - 49 * d(z) / 18.0) /
                      (h * h);
    const double scale = std::abs(d(z)) + std::abs(u2) + std::abs(d(z + 3 * h)) + std::abs(d(z - 3 * h));
    CAPTURE(nu);
    CAPTURE(z);
    CHECK(std::abs(u2 + (nu + 0.5 - 0.25 * z * z) * d(z)) <= 1e-8 * scale);
  }
}

TEST_CASE("gamma helpers") {
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-2.0) == 0.0);
  CHECK(reciprocal_gamma(0.5) == doctest::Approx(1 / std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(reciprocal_gamma(-0.5) == doctest::Approx(1 / std::tgamma(-0.5)).epsilon(1e-14));
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(cos_pi(2.5) == 0.0);
  CHECK(cos_pi(1.0) == -1.0);
}
