#include "burgers/exact_solutions.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "burgers/errors.hpp"

namespace burgers {

SteadyProfile::SteadyProfile(double alpha, double c_amp) : alpha_(alpha), c_amp_(c_amp) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("steady profile requires alpha > 0");
  }
  if (!std::isfinite(c_amp)) throw std::invalid_argument("steady profile amplitude must be finite");
  pcf_ = std::make_shared<const ParabolicCylinder>(order());
}

EigenMode::EigenMode(int n, double alpha) : n_(n), alpha_(alpha) {
  if (n < 0) throw std::invalid_argument("eigenmode index must be nonnegative");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("eigenmode requires alpha > 0");
  }
}

SeparableSolution::SeparableSolution(double alpha, std::vector<ModeTerm> terms)
    : alpha_(alpha), terms_(std::move(terms)) {
  if (!(alpha > 0.0)) throw std::invalid_argument("separable solution requires alpha > 0");
  for (const ModeTerm& t : terms_) {
    if (t.mode.alpha() != alpha_) {
      throw std::invalid_argument("all modes of a separable solution must share alpha");
    }
    if (!std::isfinite(t.coeff)) throw std::invalid_argument("mode coefficient must be finite");
  }
  if (terms_.size() > kMaxModes) {
    std::erase_if(terms_, [](const ModeTerm& t) { return std::abs(t.coeff) < 1e-14; });
  }
  if (terms_.size() > kMaxModes) {
    std::ostringstream msg;
    msg << "superposition has " << terms_.size() << " significant modes; at most " << kMaxModes
        << " are supported";
    throw std::invalid_argument(msg.str());
  }
}

SeparableSolution SeparableSolution::single(const EigenMode& mode, double coeff) {
  return SeparableSolution(mode.alpha(), {ModeTerm{coeff, mode}});
}

double eigenvalue(int n, double alpha) { return (n + 1.0) * alpha - 1.0; }

double steady_omega(const SteadyProfile& p, double xi) {
  // e^{-alpha xi^2/4} = e^{-z^2/4} with z = sqrt(alpha) xi
  return p.c_amp() * p.pcf().weighted(std::sqrt(p.alpha()) * xi);
}

double eigenmode(const EigenMode& m, double xi) {
  const double z = std::sqrt(0.5 * m.alpha()) * xi;
  const double value = hermite_weighted(m.n(), z, -0.5 * m.alpha() * xi * xi);
  return (m.n() % 2 == 0) ? value : -value;
}

double separable_omega(const SeparableSolution& s, double xi, double tau) {
  if (!(tau >= 0.0)) throw DomainError("separable solution requires tau >= 0");
  double sum = 0.0;
  for (const ModeTerm& t : s.terms()) {
    sum += t.coeff * eigenmode(t.mode, xi) * std::exp(-eigenvalue(t.mode.n(), s.alpha()) * tau);
  }
  return sum;
}

double similarity_omega(const ExactSolution& s, double xi, double tau) {
  return std::visit(
      [&](const auto& sol) -> double {
        using T = std::decay_t<decltype(sol)>;
        if constexpr (std::is_same_v<T, SteadyProfile>) {
          return steady_omega(sol, xi);
        } else {
          return separable_omega(sol, xi, tau);
        }
      },
      s);
}

double similarity_w(const ExactSolution& s, double xi, double tau, double abs_tol) {
  if (xi == 0.0) return 0.0;
  double error = 0.0;
  auto f = [&](double eta) { return similarity_omega(s, eta, tau); };
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, xi, 15, 1e-12, &error);
  if (!(error <= abs_tol)) {
    std::ostringstream msg;
    msg << "W quadrature to xi = " << xi << " did not converge (error estimate " << error << ")";
    throw AccuracyError(msg.str(), error);
  }
  return value;
}

double w_profile(const ExactSolution& s, const SimilarityFrame& frame, double x, double t) {
  const double gamma = gamma_at(frame.strain(), t);
  const double tau = frame.tau_of(t);
  // dx' = sqrt(nu/gamma) d xi
  return std::sqrt(frame.nu() / gamma) * similarity_w(s, frame.xi_of(x, t), tau);
}

double w_profile(const SteadyProfile& p, const SimilarityFrame& frame, double x, double t) {
  return w_profile(ExactSolution{p}, frame, x, t);
}

double physical_omega(const ExactSolution& s, const SimilarityFrame& frame, double x, double t) {
  return similarity_omega(s, frame.xi_of(x, t), frame.tau_of(t));
}

double decay_cutoff(const EigenMode& m, double rel) {
  const int n = m.n();
  auto envelope = [n](double z) {
    // P_{k+1} = 2 z P_k + 2 k P_{k-1}, all terms nonnegative for z >= 0
    double log_scale = 0.0;
    double prev = 1.0;
    double cur = n == 0 ? 1.0 : 2.0 * z;
    for (int k = 1; k < n; ++k) {
      const double next = 2.0 * z * cur + 2.0 * k * prev;
      prev = cur;
      cur = next;
      if (cur > 1e200) {
        cur *= 1e-200;
        prev *= 1e-200;
        log_scale += 200.0 * std::log(10.0);
      }
    }
    return cur * std::exp(log_scale - z * z);
  };
  const double scale = std::sqrt(0.5 * m.alpha());
  // max |h_n| by dense sampling over the oscillatory region
  const double z_turn = std::sqrt(2.0 * n + 1.0) + 3.0;
  double peak = 0.0;
  for (double z = 0.0; z <= z_turn; z += 1e-3) {
    peak = std::max(peak, std::abs(hermite_weighted(n, z, -z * z)));
  }
  const double target = rel * peak;
  // the envelope rises to a single peak and then decays; scan past the peak
  double z = 0.0;
  double prev_env = envelope(0.0);
  bool falling = false;
  for (;; z += 1e-3) {
    const double env = envelope(z);
    falling = falling || env < prev_env;
    if (falling && env < target) break;
    prev_env = env;
  }
  return z / scale;
}

}  // namespace burgers
