#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "burgers/discrepancy.hpp"
#include "burgers/errors.hpp"
#include "burgers/exact_solutions.hpp"
#include "burgers/verification.hpp"

using namespace burgers;

TEST_CASE("tridiagonal eigenvalues match a dense solver") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n : {2, 7, 40}) {
    std::vector<double> diag(n), off(n - 1);
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) dense(i, i) = diag[i] = u(rng);
    for (int i = 0; i + 1 < n; ++i) dense(i, i + 1) = dense(i + 1, i) = off[i] = u(rng);
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense).eigenvalues();
    const int k = std::min(n, 5);
    const auto got = tridiagonal_smallest_eigenvalues(diag, off, k);
    REQUIRE(got.size() == static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) CHECK(got[i] == doctest::Approx(ref(i)).epsilon(1e-12));
  }
}

TEST_CASE("discrete spectrum reproduces (n+1) alpha - 1") {
  const Grid1D grid(10.0, 2001);
  const auto one = discrete_spectrum(1.0, grid, 4);
  REQUIRE(one.entries.size() == 4);
  for (int n = 0; n < 4; ++n) CHECK(one.entries[n].computed == doctest::Approx(n).epsilon(1e-3));
  CHECK(one.max_abs_error() < 1e-3);
  CHECK(one.imag_residue == 0.0);

  const auto half = discrete_spectrum(0.5, grid, 1);
  CHECK(std::abs(half.entries[0].computed + 0.5) < 1e-3);

  const auto two = discrete_spectrum(2.0, grid, 2);
  CHECK(std::abs(two.entries[0].computed - 1.0) < 1e-3);
  CHECK(std::abs(two.entries[1].computed - 3.0) < 1e-3);

  CHECK(discrete_spectrum(1.0, grid, 0).entries.empty());
  CHECK_THROWS_AS(discrete_spectrum(1.0, Grid1D(10.0, 101), 2), std::invalid_argument);
  CHECK_THROWS_AS(discrete_spectrum(-1.0, grid, 2), std::invalid_argument);
}

TEST_CASE("discrete spectrum against a dense nonsymmetric solve") {
  const Grid1D grid(6.0, 241);
  const double alpha = 1.5, h = grid.spacing();
  const int m = static_cast<int>(grid.size()) - 2;
  Eigen::MatrixXd minus_a = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    const double xi = grid.coordinate(j + 1);
    minus_a(j, j) = 2 / (h * h) - 1;
    if (j > 0) minus_a(j, j - 1) = -(1 / (h * h) - alpha * xi / (2 * h));
    if (j + 1 < m) minus_a(j, j + 1) = -(1 / (h * h) + alpha * xi / (2 * h));
  }
  Eigen::VectorXd ev = Eigen::EigenSolver<Eigen::MatrixXd>(minus_a, false).eigenvalues().real();
  std::sort(ev.data(), ev.data() + ev.size());
  const auto rep = discrete_spectrum(alpha, grid, 5);
  for (int n = 0; n < 5; ++n) CHECK(rep.entries[n].computed == doctest::Approx(ev(n)).epsilon(1e-9));
}

TEST_CASE("decay rate fit") {
  std::vector<DecaySample> s;
  for (int i = 0; i <= 100; ++i) s.push_back({0.01 * i, std::exp(-2.0 * 0.01 * i)});
  const auto fit = decay_rate_fit(s);
  CHECK(fit.rate == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<DecaySample> flat;
  for (int i = 0; i <= 100; ++i) flat.push_back({0.01 * i, 3.0});
  CHECK(decay_rate_fit(flat).rate == 0.0);
  CHECK(decay_rate_fit(flat).r_squared == 1.0);

  CHECK_THROWS_AS(decay_rate_fit(std::vector<DecaySample>(5, {0.0, 1.0})), std::invalid_argument);
  flat[20].amplitude = 0.0;
  CHECK_THROWS_AS(decay_rate_fit(flat), DomainError);
}

TEST_CASE("ode residual") {
  const Grid1D grid(8.0, 161);
  CHECK(ode_residual([](double xi) { return std::exp(-xi * xi / 2); }, 1.0, 0.0, grid) < 1e-7);
  CHECK(ode_residual([](double) { return 0.0; }, 1.0, 0.0, grid) == 0.0);
  // exponent -xi^2/4 leaves (1/2 - xi^2/4) e^{-xi^2/4}
  CHECK(ode_residual([](double xi) { return printed_eigenmode(0, 1.0, xi); }, 1.0, 0.0, grid) > 0.1);
  CHECK(pde_residual_steady(1.0, grid) < 1e-7);
  CHECK(pde_residual_steady(2.0, grid) < 1e-7);
  CHECK(ode_residual([](double xi) { return printed_steady_omega(2.0, xi); }, 2.0, 0.0, grid) > 0.1);
}

TEST_CASE("cross-check: constant strain is degenerate") {
  CrossCheckOptions opts;
  opts.num_points = 1001;
  const auto r = cross_check_transform(SimilarityFrame(StrainModel::constant(1.0), 1.0), 0, 1.0, opts);
  CHECK(r.degenerate);
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.candidates[0].passes);
  CHECK(r.candidates[1].passes);
  REQUIRE(r.winning_alpha);
  CHECK(*r.winning_alpha == 1.0);
}

TEST_CASE("cross-check: rational strain picks 1 - c1") {
  CrossCheckOptions opts;
  opts.num_points = 1001;
  const auto r0 = cross_check_transform(-0.5, -1.0, 1.0, 0, 1.0, opts);
  const auto r1 = cross_check_transform(-0.5, -1.0, 1.0, 1, 0.5, opts);
  for (const auto* r : {&r0, &r1}) {
    CHECK_FALSE(r->degenerate);
    REQUIRE(r->winning_alpha);
    CHECK(*r->winning_alpha == 1.5);
  }
  CHECK_THROWS_AS(cross_check_transform(0.5, -1.0, 1.0, 0, 1.0), DomainError);
}

TEST_CASE("discrepancy report") {
  CrossCheckOptions opts;
  opts.num_points = 1001;
  const auto report = build_discrepancy_report(cross_check_transform(-0.5, -1.0, 1.0, 0, 1.0, opts));
  REQUIRE(report.entries.size() == 4);
  CHECK(report.entries[0].item == DiscrepancyItem::AlphaMapping);
  CHECK(report.entries[1].item == DiscrepancyItem::SteadyArgScaling);
  CHECK(report.entries[2].item == DiscrepancyItem::EigenGaussianExponent);
  CHECK(report.entries[3].item == DiscrepancyItem::WPrefactor);
  CHECK(report.entries[0].separation() >= 10);
  for (int i = 1; i < 4; ++i) CHECK(report.entries[i].separation() >= 1e4);

  // the printed W prefactor is off by gamma/nu
  const SimilarityFrame frame(StrainModel::constant(4.0), 1.0);
  const Grid1D xs(4.0, 81);
  CHECK(w_derivative_residual(frame, 1.0, 0.0, xs, false) < 1e-8);
  CHECK(w_derivative_residual(frame, 1.0, 0.0, xs, true) > 1.0);
}
