#include <doctest.h>

#include <array>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "burgers/errors.hpp"
#include "burgers/exact_solutions.hpp"
#include "burgers/verification.hpp"

using namespace burgers;

namespace {

// h'' + alpha xi h' + h = 0 integrated from given origin data
double steady_ode(double alpha, double h0, double dh0, double xi_end) {
  using State = std::array<double, 2>;
  State u{h0, dh0};
  const auto rhs = [alpha](const State& s, State& ds, double xi) {
    ds[0] = s[1];
    ds[1] = -alpha * xi * s[1] - s[0];
  };
  namespace ode = boost::numeric::odeint;
  ode::integrate_adaptive(ode::make_controlled(1e-14, 1e-14, ode::runge_kutta_dopri5<State>()), rhs, u, 0.0,
                          xi_end, xi_end / 100);
  return u[0];
}

}  // namespace

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue(0, 1.0) == 0.0);
  CHECK(eigenvalue(2, 0.5) == 0.5);
  CHECK(eigenvalue(3, 1.0) == 3.0);
  CHECK(eigenvalue(0, 0.5) == -0.5);
}

TEST_CASE("eigenmodes") {
  CHECK(eigenmode(EigenMode(0, 1.0), 0.0) == 1.0);
  CHECK(eigenmode(EigenMode(0, 1.0), 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(eigenmode(EigenMode(1, 2.0), 0.0) == 0.0);
  // h_1 = -e^{-alpha xi^2/2} * 2 sqrt(alpha/2) xi
  const double a = 1.5, xi = 0.8;
  CHECK(eigenmode(EigenMode(1, a), xi) ==
        doctest::Approx(-std::exp(-a * xi * xi / 2) * 2 * std::sqrt(a / 2) * xi).epsilon(1e-14));
  CHECK_THROWS_AS(EigenMode(-1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EigenMode(0, 0.0), std::invalid_argument);
}

TEST_CASE("eigenmodes solve the mode equation") {
  const Grid1D grid(8.0, 161);
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    for (int n = 0; n <= 5; ++n) {
      const EigenMode m(n, alpha);
      const double res =
          ode_residual([&](double xi) { return eigenmode(m, xi); }, alpha, eigenvalue(n, alpha), grid);
      CAPTURE(alpha);
      CAPTURE(n);
      CHECK(res < 1e-7);
    }
  }
}

TEST_CASE("steady profile") {
  CHECK(steady_omega(SteadyProfile(1.0, 1.0), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(steady_omega(SteadyProfile(1.0, 1.0), 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(steady_omega(SteadyProfile(1.0, 3.0), 2.0) == doctest::Approx(3 * std::exp(-2.0)).epsilon(1e-12));

  // high-precision references
  CHECK(steady_omega(SteadyProfile(0.5, 1.0), 1.0) == doctest::Approx(0.55069531490318374762).epsilon(1e-12));
  CHECK(steady_omega(SteadyProfile(2.0, 1.0), 1.0) == doctest::Approx(0.27633419847701400958).epsilon(1e-12));
  CHECK(steady_omega(SteadyProfile(2.0, 1.0), -3.0) == doctest::Approx(0.70330946127344589346).epsilon(1e-12));

  // ODE integration from the origin data of the closed form
  for (double alpha : {0.5, 0.8, 2.0, 3.0}) {
    const SteadyProfile p(alpha, 1.0);
    const double h0 = p.pcf().origin_value();
    const double dh0 = std::sqrt(alpha) * p.pcf().origin_slope();
    for (double xi : {1.0, -1.0, 2.5, -2.5}) {
      CAPTURE(alpha);
      CAPTURE(xi);
      const double ref = steady_ode(alpha, h0, dh0, xi);
      CHECK(std::abs(steady_omega(p, xi) - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
  CHECK_THROWS_AS(SteadyProfile(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("separable solutions") {
  const SeparableSolution s0 = SeparableSolution::single(EigenMode(0, 1.0));
  CHECK(separable_omega(s0, 0.0, 5.0) == 1.0);
  const SeparableSolution s1 = SeparableSolution::single(EigenMode(1, 1.0));
  CHECK(separable_omega(s1, 1.0, 1.0) == doctest::Approx(eigenmode(EigenMode(1, 1.0), 1.0) * std::exp(-1.0)));
  const SeparableSolution two(1.5, {{0.3, EigenMode(0, 1.5)}, {-2.0, EigenMode(3, 1.5)}});
  for (double xi : {-1.0, 0.2, 2.0}) {
    CHECK(separable_omega(two, xi, 0.0) ==
          doctest::Approx(0.3 * eigenmode(EigenMode(0, 1.5), xi) - 2.0 * eigenmode(EigenMode(3, 1.5), xi)));
  }
  CHECK_THROWS_AS(separable_omega(two, 0.0, -1.0), DomainError);
  CHECK_THROWS_AS(SeparableSolution(1.0, {{1.0, EigenMode(0, 2.0)}}), std::invalid_argument);
}

TEST_CASE("axial velocity W") {
  const SimilarityFrame unit(StrainModel::constant(1.0), 1.0);
  const SteadyProfile p(1.0, 1.0);
  CHECK(w_profile(p, unit, 0.0, 0.0) == 0.0);
  CHECK(w_profile(p, unit, 10.0, 0.0) == doctest::Approx(std::sqrt(M_PI / 2)).epsilon(1e-12));
  CHECK(w_profile(p, unit, -1.7, 0.0) == doctest::Approx(-w_profile(p, unit, 1.7, 0.0)).epsilon(1e-14));

  // against a direct quadrature of Omega in x
  const SimilarityFrame frame(StrainModel::rational(-0.5, -1.0), 0.6);
  const SteadyProfile q(1.5, 2.0);
  const ExactSolution s = q;
  for (double t : {0.0, 1.3}) {
    for (double x : {0.4, -2.0, 3.0}) {
      const double direct = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          [&](double xx) { return physical_omega(s, frame, xx, t); }, 0.0, x, 15, 1e-14);
      CHECK(w_profile(q, frame, x, t) == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("physical vorticity") {
  const SimilarityFrame unit(StrainModel::constant(1.0), 1.0);
  const ExactSolution steady = SteadyProfile(1.0, 2.5);
  CHECK(physical_omega(steady, unit, 0.0, 3.0) == doctest::Approx(2.5).epsilon(1e-14));
  const ExactSolution h0 = SeparableSolution::single(EigenMode(0, 1.0));
  CHECK(physical_omega(h0, unit, 1.0, 2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  const ExactSolution h1 = SeparableSolution::single(EigenMode(1, 1.0));
  CHECK(physical_omega(h1, unit, 0.0, 0.7) == 0.0);
}

TEST_CASE("decay cutoff bounds the mode envelope") {
  for (int n : {0, 3, 10}) {
    const EigenMode m(n, 1.0);
    const double zc = decay_cutoff(m, 1e-10);
    CHECK(zc > 0.0);
    double peak = 0.0;
    for (double xi = 0.0; xi < zc; xi += 0.01) peak = std::max(peak, std::abs(eigenmode(m, xi)));
    for (double xi = zc; xi < zc + 5; xi += 0.01) CHECK(std::abs(eigenmode(m, xi)) <= 1e-10 * peak * 1.001);
  }
}
