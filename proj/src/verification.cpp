#include "burgers/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "burgers/errors.hpp"
#include "burgers/exact_solutions.hpp"

namespace burgers {

double fd_first_derivative(const std::function<double(double)>& f, double x, double step) {
  const double s = step;
  return ((f(x + 3 * s) - f(x - 3 * s)) - 9.0 * (f(x + 2 * s) - f(x - 2 * s)) +
          45.0 * (f(x + s) - f(x - s))) /
         (60.0 * s);
}

double fd_second_derivative(const std::function<double(double)>& f, double x, double step) {
  const double s = step;
  return (2.0 * (f(x + 3 * s) + f(x - 3 * s)) - 27.0 * (f(x + 2 * s) + f(x - 2 * s)) +
          270.0 * (f(x + s) + f(x - s)) - 490.0 * f(x)) /
         (180.0 * s * s);
}

double ode_residual(const std::function<double(double)>& profile, double alpha, double lambda,
                    const Grid1D& grid, double step) {
  double scale = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) scale = std::max(scale, std::abs(profile(grid.coordinate(i))));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double xi = grid.coordinate(i);
    const double r = fd_second_derivative(profile, xi, step) +
                     alpha * xi * fd_first_derivative(profile, xi, step) + (1.0 + lambda) * profile(xi);
    worst = std::max(worst, std::abs(r));
  }
  return worst / scale;
}

double pde_residual_steady(double alpha, const Grid1D& grid, double step) {
  const SteadyProfile p(alpha, 1.0);
  return ode_residual([&](double xi) { return steady_omega(p, xi); }, alpha, 0.0, grid, step);
}

double SpectrumReport::max_abs_error() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.abs_error);
  return m;
}

std::vector<double> tridiagonal_smallest_eigenvalues(const std::vector<double>& diag,
                                                     const std::vector<double>& off, int count) {
  const std::size_t n = diag.size();
  if (off.size() + 1 != n) throw std::invalid_argument("tridiagonal: off-diagonal size mismatch");
  if (count < 0 || static_cast<std::size_t>(count) > n) {
    throw std::invalid_argument("tridiagonal: requested eigenvalue count out of range");
  }
  // Gershgorin interval
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const double norm = std::max(std::abs(lo), std::abs(hi));
  const double pivot_floor = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();

  // number of eigenvalues strictly below x
  auto below = [&](double x) {
    std::size_t neg = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++neg;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(q) < pivot_floor) q = -pivot_floor;
      q = diag[i] - x - off[i - 1] * off[i - 1] / q;
      if (q < 0.0) ++neg;
    }
    return neg;
  };

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  const double tol = 4.0 * std::numeric_limits<double>::epsilon() * norm;
  for (int j = 0; j < count; ++j) {
    double a = values.empty() ? lo : values.back() - tol;
    double b = hi;
    for (int it = 0; it < 200 && b - a > tol; ++it) {
      const double mid = 0.5 * (a + b);
      if (below(mid) <= static_cast<std::size_t>(j)) {
        a = mid;
      } else {
        b = mid;
      }
    }
    values.push_back(0.5 * (a + b));
  }
  return values;
}

SpectrumReport discrete_spectrum(double alpha, const Grid1D& grid, int k, const SpectrumOptions& options) {
  if (!(alpha > 0.0)) throw std::invalid_argument("discrete_spectrum requires alpha > 0");
  if (k < 0 || k > options.max_modes) {
    std::ostringstream msg;
    msg << "discrete_spectrum: k = " << k << " outside [0, " << options.max_modes << "]";
    throw std::invalid_argument(msg.str());
  }
  if (grid.spacing() > options.max_spacing) {
    std::ostringstream msg;
    msg << "discrete_spectrum: spacing " << grid.spacing() << " exceeds " << options.max_spacing;
    throw std::invalid_argument(msg.str());
  }
  SpectrumReport report{alpha, grid, {}, 0.0};
  if (k == 0) return report;

  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const std::size_t m = grid.size() - 2;  // interior unknowns
  std::vector<double> diag(m, 2.0 * inv_h2 - 1.0);
  std::vector<double> off(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const double xi_j = grid.coordinate(j + 1);
    const double xi_next = grid.coordinate(j + 2);
    // -A has upper entry -(1/h^2 + alpha xi_j/(2h)) and lower -(1/h^2 - alpha xi_{j+1}/(2h))
    const double product = (inv_h2 + 0.5 * alpha * xi_j / h) * (inv_h2 - 0.5 * alpha * xi_next / h);
    if (!(product > 0.0)) {
      throw NumericError("discrete_spectrum: operator is not symmetrizable on this grid (alpha L h >= 2)");
    }
    off[j] = -std::sqrt(product);
  }
  const std::vector<double> values = tridiagonal_smallest_eigenvalues(diag, off, k);
  for (int n = 0; n < k; ++n) {
    const double exact = eigenvalue(n, alpha);
    const double computed = values[static_cast<std::size_t>(n)];
    if (!std::isfinite(computed)) throw NumericError("discrete_spectrum: eigenvalue iteration failed");
    report.entries.push_back({n, computed, exact, std::abs(computed - exact)});
  }
  return report;
}

DecayFit decay_rate_fit(const std::vector<DecaySample>& series) {
  if (series.size() < 10) throw std::invalid_argument("decay_rate_fit needs at least 10 samples");
  for (const auto& s : series) {
    if (!(s.amplitude > 0.0)) {
      std::ostringstream msg;
      msg << "decay_rate_fit: amplitude " << s.amplitude << " at tau = " << s.tau << " is not positive";
      throw DomainError(msg.str());
    }
  }
  const auto [min_it, max_it] = std::minmax_element(
      series.begin(), series.end(), [](const auto& a, const auto& b) { return a.tau < b.tau; });
  const double cut = min_it->tau + 0.05 * (max_it->tau - min_it->tau);

  std::vector<double> xs;
  std::vector<double> ys;
  // log amplitudes relative to the first fitted one, so an exactly
  // constant series gives exactly zero deviations
  double y_ref = NAN;
  for (const auto& s : series) {
    if (s.tau >= cut) {
      if (std::isnan(y_ref)) y_ref = -std::log(s.amplitude);
      xs.push_back(s.tau);
      ys.push_back(-std::log(s.amplitude) - y_ref);
    }
  }
  const auto n = static_cast<double>(xs.size());
  if (xs.size() < 2) throw std::invalid_argument("decay_rate_fit: fit window holds fewer than 2 samples");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("decay_rate_fit: all samples share one tau");
  const double slope = sxy / sxx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + slope * (xs[i] - mx));
    ss_res += r * r;
  }
  const double r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return {slope, r2, xs.size()};
}

DecayFit decay_rate_fit(const std::vector<NormSample>& norms) {
  std::vector<DecaySample> series;
  series.reserve(norms.size());
  for (const auto& s : norms) series.push_back({s.time, s.l2});
  return decay_rate_fit(series);
}

namespace {

double candidate_error(const SimilarityFrame& frame, int mode_n, double alpha, double t_end,
                       const Grid1D& grid, const CrossCheckOptions& options) {
  const EigenMode mode(mode_n, alpha);
  const Field1D initial =
      Field1D::sample(grid, [&](double x) { return eigenmode(mode, frame.xi_of(x, 0.0)); });
  EvolveSpec spec{PhysicalEquation{frame}, t_end, CflDt{options.cfl_factor}, TimeScheme::ExplicitRK4,
                  Boundary::DirichletZero, {}, 2};
  const EvolveResult out = evolve(initial, spec);
  const double decay = std::exp(-eigenvalue(mode_n, alpha) * frame.tau_of(t_end));
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double expected = decay * eigenmode(mode, frame.xi_of(grid.coordinate(i), t_end));
    worst = std::max(worst, std::abs(out.final_field[i] - expected));
  }
  return worst;
}

}  // namespace

CrossCheckResult cross_check_transform(const SimilarityFrame& frame, int mode_n, double t_end,
                                       const CrossCheckOptions& options) {
  const StrainModel& strain = frame.strain();
  if (!(t_end > 0.0)) throw std::invalid_argument("cross_check_transform requires t_end > 0");
  if (!(t_end < horizon(strain))) {
    std::ostringstream msg;
    msg << "t_end = " << t_end << " is at or beyond the strain horizon " << horizon(strain);
    throw DomainError(msg.str());
  }
  if (mode_n < 0) throw std::invalid_argument("mode index must be nonnegative");

  // the physical half-width keeps xi(L, t) >= xi_extent at every t
  const double gamma_min = std::min(gamma_at(strain, 0.0), gamma_at(strain, t_end));
  const Grid1D grid(options.xi_extent * std::sqrt(frame.nu() / gamma_min), options.num_points);

  const double c2 = strain.kind() == StrainKind::Rational ? strain.c2() : -1.0 / strain.gamma0();
  CrossCheckResult result{strain.c1(), c2, frame.nu(), mode_n, t_end, frame.tau_of(t_end), grid, {}, {}, false};
  const std::pair<std::string, double> candidates[] = {{"1 - c1", alpha_of(strain)},
                                                       {"1 - 2 c1", printed_alpha_of(strain)}};
  for (const auto& [label, alpha] : candidates) {
    AlphaCandidate c{label, alpha, std::numeric_limits<double>::infinity(), false};
    if (alpha > 0.0) {
      c.max_error = candidate_error(frame, mode_n, alpha, t_end, grid, options);
      c.passes = c.max_error <= options.threshold;
    }
    result.candidates.push_back(c);
  }
  result.degenerate = result.candidates[0].alpha == result.candidates[1].alpha;
  std::vector<double> passing;
  for (const auto& c : result.candidates) {
    if (c.passes) passing.push_back(c.alpha);
  }
  if (passing.size() == 1 || (passing.size() == 2 && result.degenerate)) {
    result.winning_alpha = passing.front();
  }
  return result;
}

CrossCheckResult cross_check_transform(double c1, double c2, double nu, int mode_n, double t_end,
                                       const CrossCheckOptions& options) {
  return cross_check_transform(SimilarityFrame(StrainModel::rational(c1, c2), nu), mode_n, t_end, options);
}

}  // namespace burgers
