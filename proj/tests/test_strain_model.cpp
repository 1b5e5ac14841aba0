#include <doctest.h>

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "burgers/errors.hpp"
#include "burgers/strain_model.hpp"

using namespace burgers;

TEST_CASE("gamma at sample times") {
  const auto r = StrainModel::rational(-0.5, -1.0);
  CHECK(gamma_at(r, 0.0) == 1.0);
  CHECK(gamma_at(r, 1.0) == 0.5);
  CHECK(gamma_at(StrainModel::constant(2.0), 7.0) == 2.0);
}

TEST_CASE("gamma rate satisfies gamma' = 2 c1 gamma^2") {
  const auto r = StrainModel::rational(0.3, -2.0);
  for (double t : {0.0, 0.5, 2.0}) {
    const double h = 1e-5;
    const double fd = (gamma_at(r, t + h) - gamma_at(r, std::max(0.0, t - h))) / (t > 0.0 ? 2 * h : h);
    CHECK(gamma_rate(r, t) == doctest::Approx(2 * 0.3 * std::pow(gamma_at(r, t), 2)).epsilon(1e-14));
    CHECK(gamma_rate(r, t) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("tau is the integral of gamma") {
  CHECK(tau_of(StrainModel::constant(2.0), 3.0) == 6.0);
  CHECK(tau_of(StrainModel::rational(-0.5, -1.0), 0.0) == 0.0);
  CHECK(tau_of(StrainModel::constant(1.0), 0.0) == 0.0);

  const auto r = StrainModel::rational(-0.5, -1.0);
  CHECK(std::abs(tau_of(r, 1.0) - std::log(2.0)) < 1e-15);

  // independent adaptive quadrature of gamma
  for (const auto& m : {StrainModel::rational(-0.5, -1.0), StrainModel::rational(0.4, -1.5),
                        StrainModel::rational(1e-9, -1.0)}) {
    for (double t : {0.1, 0.9, 1.8}) {
      if (!(t < horizon(m))) continue;
      const double q = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          [&](double s) { return gamma_at(m, s); }, 0.0, t, 15, 1e-15);
      CHECK(std::abs(tau_of(m, t) - q) < 1e-12);
    }
  }
}

TEST_CASE("c1 = 0 reduces to the constant model") {
  const auto r = StrainModel::rational(0.0, -0.5);
  const auto c = StrainModel::constant(2.0);
  for (double t : {0.0, 0.25, 3.0}) {
    CHECK(gamma_at(r, t) == gamma_at(c, t));
    CHECK(tau_of(r, t) == tau_of(c, t));
  }
  CHECK(alpha_of(r) == 1.0);
  CHECK(printed_alpha_of(r) == 1.0);
}

TEST_CASE("horizon") {
  CHECK(horizon(StrainModel::constant(1.0)) == std::numeric_limits<double>::infinity());
  CHECK(horizon(StrainModel::rational(0.5, -1.0)) == 1.0);
  CHECK(horizon(StrainModel::rational(-0.5, -1.0)) == std::numeric_limits<double>::infinity());

  const auto r = StrainModel::rational(0.5, -1.0);
  CHECK_NOTHROW(gamma_at(r, 0.999));
  CHECK_THROWS_AS(gamma_at(r, 1.0), DomainError);
  CHECK_THROWS_AS(tau_of(r, 1.5), DomainError);
  CHECK_THROWS_AS(gamma_at(r, -0.1), DomainError);
}

TEST_CASE("alpha mapping") {
  CHECK(alpha_of(StrainModel::rational(-0.5, -1.0)) == 1.5);
  CHECK(printed_alpha_of(StrainModel::rational(-0.5, -1.0)) == 2.0);
  CHECK(alpha_of(StrainModel::constant(3.0)) == 1.0);
  CHECK(eigenmodes_bounded(0.5));
  CHECK_FALSE(eigenmodes_bounded(0.0));
  CHECK_FALSE(eigenmodes_bounded(alpha_of(StrainModel::rational(1.5, -1.0))));
}

TEST_CASE("invalid models") {
  CHECK_THROWS_AS(StrainModel::constant(0.0), std::invalid_argument);
  CHECK_THROWS_AS(StrainModel::constant(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(StrainModel::rational(0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(StrainModel::rational(0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SimilarityFrame(StrainModel::constant(1.0), 0.0), std::invalid_argument);
}

TEST_CASE("similarity coordinate") {
  const SimilarityFrame unit(StrainModel::constant(1.0), 1.0);
  CHECK(unit.xi_of(2.0, 0.3) == 2.0);
  CHECK(unit.xi_of(0.0, 5.0) == 0.0);
  const SimilarityFrame four(StrainModel::constant(4.0), 1.0);
  CHECK(four.xi_of(3.0, 0.0) == 6.0);

  const SimilarityFrame frame(StrainModel::rational(-0.5, -1.0), 0.7);
  for (double x : {-2.0, 0.5, 4.0}) {
    for (double t : {0.0, 1.0, 3.0}) {
      CHECK(frame.x_of(frame.xi_of(x, t), t) == doctest::Approx(x).epsilon(1e-15));
      CHECK(frame.xi_of(x, t) == doctest::Approx(std::sqrt(gamma_at(frame.strain(), t) / 0.7) * x));
    }
  }
}
