#include "burgers/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "burgers/convergence.hpp"
#include "burgers/discrepancy.hpp"
#include "burgers/exact_solutions.hpp"
#include "burgers/pde_solver.hpp"
#include "burgers/special_functions.hpp"
#include "burgers/verification.hpp"

namespace burgers {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Small helper for "key=value" detail strings with 3 significant digits.
class Detail {
 public:
  Detail& operator<<(const std::string& s) {
    ss_ << s;
    return *this;
  }
  Detail& operator<<(const char* s) {
    ss_ << s;
    return *this;
  }
  Detail& operator<<(double v) {
    ss_ << std::setprecision(3) << v;
    return *this;
  }
  Detail& operator<<(int v) {
    ss_ << v;
    return *this;
  }
  Detail& operator<<(std::size_t v) {
    ss_ << v;
    return *this;
  }
  std::string str() const { return ss_.str(); }

 private:
  std::ostringstream ss_;
};

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Field1D sample_mode(const Grid1D& grid, int n, double alpha) {
  const EigenMode mode(n, alpha);
  return Field1D::sample(grid, [&](double xi) { return eigenmode(mode, xi); });
}

EvolveSpec similarity_spec(double alpha, double tau_end, TimeScheme scheme = TimeScheme::ExplicitRK4,
                           Boundary boundary = Boundary::DirichletZero) {
  EvolveSpec spec;
  spec.equation = SimilarityEquation{alpha};
  spec.end_time = tau_end;
  spec.scheme = scheme;
  spec.boundary = boundary;
  return spec;
}

// 1. Discrete eigenvalues against (n+1) alpha - 1, and their refinement order.
CriterionResult eigenvalue_law() {
  const auto start = Clock::now();
  bool ok = true;
  Detail d;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const SpectrumReport coarse = discrete_spectrum(alpha, Grid1D(10.0, 2001), 5);
    const SpectrumReport fine = discrete_spectrum(alpha, Grid1D(10.0, 4001), 5);
    double min_order = INFINITY;
    for (std::size_t n = 0; n < coarse.entries.size(); ++n) {
      const double order = std::log2(coarse.entries[n].abs_error / fine.entries[n].abs_error);
      min_order = std::isnan(order) ? NAN : std::min(min_order, order);
      if (std::isnan(min_order)) break;
    }
    const bool err_ok = coarse.max_abs_error() < 1e-3;
    const bool order_ok = min_order >= 1.9;
    ok = ok && err_ok && order_ok;
    d << "alpha=" << alpha << ": max err " << coarse.max_abs_error() << (err_ok ? "" : " (FAIL)")
      << ", refined " << fine.max_abs_error() << ", min order " << min_order << (order_ok ? "" : " (FAIL)")
      << "; ";
  }
  const double t = seconds_since(start);
  const bool time_ok = t < 30.0;
  d << "runtime " << t << " s" << (time_ok ? "" : " (FAIL, limit 30 s)");
  return {1, "eigenvalue law", ok && time_ok, d.str(), t};
}

// 2. Evolved eigenmodes decay at lambda_n.
CriterionResult separable_dynamics() {
  const auto start = Clock::now();
  bool ok = true;
  Detail d;
  const Grid1D grid(10.0, 2001);
  for (double alpha : {1.0, 2.0}) {
    for (int n = 0; n <= 3; ++n) {
      const EvolveResult r = evolve(sample_mode(grid, n, alpha), similarity_spec(alpha, 1.0));
      const DecayFit fit = decay_rate_fit(r.norms);
      const double lambda = eigenvalue(n, alpha);
      const bool rate_ok = std::abs(fit.rate - lambda) < 1e-3;
      const bool r2_ok = fit.r_squared > 0.9999;
      ok = ok && rate_ok && r2_ok;
      d << "(a=" << alpha << ",n=" << n << ") rate " << fit.rate << (rate_ok ? "" : " (FAIL)");
      d << " r2 ";
      std::ostringstream r2;
      r2 << std::setprecision(6) << fit.r_squared;
      d << r2.str() << (r2_ok ? "" : " (FAIL)") << "; ";
    }
  }
  const double t = seconds_since(start);
  const bool time_ok = t < 60.0;
  d << "runtime " << t << " s" << (time_ok ? "" : " (FAIL, limit 60 s)");
  return {2, "separable dynamics", ok && time_ok, d.str(), t};
}

// 3. Steady profile: ODE residual and invariance under the evolution.
CriterionResult steady_solution() {
  const auto start = Clock::now();
  bool ok = true;
  Detail d;
  const Grid1D grid(10.0, 2001);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const double res = pde_residual_steady(alpha, grid);
    const SteadyProfile p(alpha, 1.0);
    const Field1D u0 = Field1D::sample(grid, [&](double xi) { return steady_omega(p, xi); });
    const EvolveResult r =
        evolve(u0, similarity_spec(alpha, 2.0, TimeScheme::ExplicitRK4, Boundary::DirichletHeld));
    const double change = max_diff(r.final_field.values(), u0.values());
    const bool res_ok = res < 1e-7;
    const bool change_ok = change < 5e-4;
    ok = ok && res_ok && change_ok;
    d << "alpha=" << alpha << ": residual " << res << (res_ok ? "" : " (FAIL)") << ", change " << change
      << (change_ok ? "" : " (FAIL)") << "; ";
  }
  const double t = seconds_since(start);
  d << "runtime " << t << " s";
  return {3, "steady solution", ok, d.str(), t};
}

// 4. The physical-equation oracle singles out one alpha mapping.
CriterionResult transform_chain() {
  const auto start = Clock::now();
  bool ok = true;
  Detail d;
  std::vector<double> winners;
  for (std::size_t N : {std::size_t{2001}, std::size_t{1001}}) {
    for (int n : {0, 1}) {
      CrossCheckOptions opts;
      opts.num_points = N;
      const double t_end = n == 0 ? 1.0 : 0.5;
      const CrossCheckResult r = cross_check_transform(-0.5, -1.0, 1.0, n, t_end, opts);
      std::vector<const AlphaCandidate*> passing;
      for (const auto& c : r.candidates) {
        if (c.passes) passing.push_back(&c);
      }
      bool run_ok = passing.size() == 1 && !r.degenerate && r.winning_alpha.has_value();
      d << "(N=" << N << ",n=" << n << ") ";
      for (const auto& c : r.candidates) d << c.label << ": " << c.max_error << " ";
      if (run_ok) {
        const AlphaCandidate& win = *passing.front();
        const AlphaCandidate& lose = &r.candidates[0] == &win ? r.candidates[1] : r.candidates[0];
        run_ok = win.max_error < 5e-3 && lose.max_error >= 10.0 * win.max_error;
        winners.push_back(win.alpha);
        d << "-> alpha " << win.alpha;
      }
      d << (run_ok ? "; " : " (FAIL); ");
      ok = ok && run_ok;
    }
  }
  const bool consistent =
      !winners.empty() && std::all_of(winners.begin(), winners.end(), [&](double a) { return a == winners[0]; });
  d << (consistent ? "winner consistent" : "winner NOT consistent");
  const double t = seconds_since(start);
  return {4, "transform chain", ok && consistent, d.str(), t};
}

// 5. alpha = 1 recovers the constant-strain Gaussian case.
CriterionResult alpha_one_reduction() {
  const auto start = Clock::now();
  bool lambda_ok = true;
  for (int n = 0; n <= 10; ++n) lambda_ok = lambda_ok && eigenvalue(n, 1.0) == static_cast<double>(n);
  const Grid1D grid(10.0, 2001);
  const EigenMode h0(0, 1.0);
  const SteadyProfile steady(1.0, 1.0);
  const double amp = steady_omega(steady, 0.0) / eigenmode(h0, 0.0);
  double gauss_err = 0.0;
  double steady_err = 0.0;
  for (double xi : grid.coordinates()) {
    gauss_err = std::max(gauss_err, std::abs(eigenmode(h0, xi) - std::exp(-0.5 * xi * xi)));
    steady_err = std::max(steady_err, std::abs(steady_omega(steady, xi) - amp * eigenmode(h0, xi)));
  }
  const bool ok = lambda_ok && gauss_err <= 1e-12 && steady_err <= 1e-10;
  Detail d;
  d << "lambda_n == n for n<=10: " << (lambda_ok ? "yes" : "NO") << "; |h0 - gaussian| " << gauss_err
    << "; |steady - " << amp << " h0| " << steady_err;
  return {5, "alpha = 1 reduction", ok, d.str(), seconds_since(start)};
}

// 6. Parabolic cylinder function identities.
CriterionResult special_function_identities() {
  const auto start = Clock::now();
  Detail d;

  // D_{v+1} - z D_v + v D_{v-1} = 0
  double rec = 0.0;
  for (int k = 0; k <= 60; ++k) {
    const double nu = -2.0 + 0.1 * k;
    const ParabolicCylinder up(nu + 1.0), mid(nu), down(nu - 1.0);
    for (int j = 0; j <= 320; ++j) {
      const double z = -8.0 + 0.05 * j;
      const double a = up(z), b = z * mid(z), c = nu * down(z);
      rec = std::max(rec, std::abs(a - b + c) / std::max(1.0, std::abs(a) + std::abs(b) + std::abs(c)));
    }
  }

  // D_n(z) = 2^{-n/2} e^{-z^2/4} H_n(z / sqrt 2)
  double herm = 0.0;
  for (int n = 0; n <= 6; ++n) {
    const ParabolicCylinder pcf(n);
    for (int j = 0; j <= 1200; ++j) {
      const double z = -6.0 + 0.01 * j;
      const double ref = std::pow(2.0, -0.5 * n) * std::exp(-0.25 * z * z) * hermite(n, z / std::sqrt(2.0));
      herm = std::max(herm, std::abs(pcf(z) - ref) / std::max(1.0, std::abs(ref)));
    }
  }

  // u'' + (v + 1/2 - z^2/4) u = 0 at random points
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> nu_dist(-2.0, 4.0), z_dist(-10.0, 10.0);
  double weber = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double nu = nu_dist(rng);
    const double z = z_dist(rng);
    const ParabolicCylinder pcf(nu);
    const auto f = [&](double s) { return pcf(s); };
    const double h = kResidualStep;
    const double u2 = fd_second_derivative(f, z, h);
    double scale = 0.0;
    for (int s = -3; s <= 3; ++s) scale = std::max(scale, std::abs(pcf(z + s * h)));
    const double r = u2 + (nu + 0.5 - 0.25 * z * z) * pcf(z);
    weber = std::max(weber, std::abs(r) / (scale + std::abs(u2)));
  }

  const double t = seconds_since(start);
  const bool ok = rec < 1e-9 && herm < 1e-10 && weber < 1e-8 && t < 10.0;
  d << "recurrence " << rec << (rec < 1e-9 ? "" : " (FAIL)") << "; hermite reduction " << herm
    << (herm < 1e-10 ? "" : " (FAIL)") << "; weber " << weber << (weber < 1e-8 ? "" : " (FAIL)")
    << "; runtime " << t << " s" << (t < 10.0 ? "" : " (FAIL, limit 10 s)");
  return {6, "special functions", ok, d.str(), t};
}

// 7. Spatial and temporal orders, linearity, parity.
CriterionResult solver_orders() {
  const auto start = Clock::now();
  Detail d;
  bool ok = true;

  const auto space = spatial_convergence(1.0, 1, 1.0, 10.0, {251, 501, 1001, 2001});
  double space_order = INFINITY;
  for (std::size_t i = 1; i < space.size(); ++i) space_order = std::min(space_order, space[i].order);
  const bool space_ok = space_order >= 1.9;
  d << "spatial orders";
  for (std::size_t i = 1; i < space.size(); ++i) d << " " << space[i].order;
  d << (space_ok ? "" : " (FAIL)");

  const auto time = temporal_convergence(2.0, 2, 1.0, Grid1D(10.0, 81), {0.02, 0.01, 0.005});
  double time_order = INFINITY;
  for (std::size_t i = 1; i < time.size(); ++i) time_order = std::min(time_order, time[i].order);
  const bool time_ok = time_order >= 3.8;
  d << "; rk4 orders";
  for (std::size_t i = 1; i < time.size(); ++i) d << " " << time[i].order;
  d << (time_ok ? "" : " (FAIL)");
  ok = space_ok && time_ok;

  const Grid1D grid(10.0, 401);
  const Field1D odd = sample_mode(grid, 1, 1.0);
  const Field1D even = sample_mode(grid, 2, 1.0);
  const double a = 0.7, b = -1.3;
  std::vector<double> mix(grid.size());
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = a * odd[i] + b * even[i];
  double lin = 0.0, parity = 0.0;
  for (TimeScheme scheme : {TimeScheme::ExplicitRK4, TimeScheme::ImplicitTrapezoidal}) {
    const EvolveSpec spec = similarity_spec(1.0, 0.5, scheme);
    const Field1D uo = evolve(odd, spec).final_field;
    const Field1D ue = evolve(even, spec).final_field;
    const Field1D um = evolve(Field1D(grid, mix), spec).final_field;
    std::vector<double> combo(grid.size());
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = a * uo[i] + b * ue[i];
    lin = std::max(lin, max_diff(um.values(), combo) / max_abs(um.values()));
    const std::size_t last = grid.size() - 1;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      parity = std::max(parity, std::abs(uo[i] + uo[last - i]) / uo.linf_norm());
      parity = std::max(parity, std::abs(ue[i] - ue[last - i]) / ue.linf_norm());
    }
  }
  const bool lin_ok = lin <= 1e-12;
  const bool parity_ok = parity <= 1e-12;
  ok = ok && lin_ok && parity_ok;
  d << "; linearity " << lin << (lin_ok ? "" : " (FAIL)") << "; parity " << parity << (parity_ok ? "" : " (FAIL)");
  return {7, "solver orders", ok, d.str(), seconds_since(start)};
}

// 8. The discrepancy report and its evidence.
CriterionResult discrepancy_ledger() {
  const auto start = Clock::now();
  const CrossCheckResult cross = cross_check_transform(-0.5, -1.0, 1.0, 0, 1.0);
  const DiscrepancyReport report = build_discrepancy_report(cross);
  const std::vector<DiscrepancyItem> expected{DiscrepancyItem::AlphaMapping, DiscrepancyItem::SteadyArgScaling,
                                              DiscrepancyItem::EigenGaussianExponent,
                                              DiscrepancyItem::WPrefactor};
  bool ok = report.entries.size() == expected.size();
  Detail d;
  for (std::size_t i = 0; ok && i < expected.size(); ++i) ok = report.entries[i].item == expected[i];
  if (!ok) d << "report does not list exactly the four expected items; ";
  for (const auto& e : report.entries) {
    const double need = e.item == DiscrepancyItem::AlphaMapping ? 10.0 : 1e4;
    const bool item_ok = e.separation() >= need;
    ok = ok && item_ok;
    d << to_string(e.item) << " separation " << e.separation() << (item_ok ? "" : " (FAIL)") << "; ";
  }
  const bool winner_ok = cross.winning_alpha && *cross.winning_alpha == alpha_of(StrainModel::rational(-0.5, -1.0));
  ok = ok && winner_ok;
  d << "cross-check winner " << (winner_ok ? "1 - c1" : "NOT 1 - c1");
  return {8, "discrepancy ledger", ok, d.str(), seconds_since(start)};
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const char* names[] = {"eigenvalue law",      "separable dynamics", "steady solution",
                                "transform chain",     "alpha = 1 reduction", "special functions",
                                "solver orders",       "discrepancy ledger"};
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: return eigenvalue_law();
      case 2: return separable_dynamics();
      case 3: return steady_solution();
      case 4: return transform_chain();
      case 5: return alpha_one_reduction();
      case 6: return special_function_identities();
      case 7: return solver_orders();
      default: return discrepancy_ledger();
    }
  } catch (const std::exception& e) {
    return {id, names[id - 1], false, std::string("exception: ") + e.what(), seconds_since(start)};
  }
}

std::vector<CriterionResult> run_acceptance(unsigned threads, const std::vector<int>& ids) {
  std::vector<int> todo = ids;
  if (todo.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
  }
  std::vector<CriterionResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) results[i] = run_criterion(todo[i]);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream ss;
  ss << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << std::fixed
     << std::setprecision(1) << r.seconds << " s): " << r.detail;
  return ss.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    all = all && r.passed;
  }
  return {{"criteria", arr}, {"all_passed", all}};
}

}  // namespace burgers
