#include "burgers/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRescale = 0x1p500;
constexpr double kRescaleLog = 500.0 * std::numbers::ln2;

struct TaylorStep {
  double u;
  double du;
  double abs_sum;
};

// Advance (u, u') of the Weber equation u'' = (z^2/4 - nu - 1/2) u from z0
// to z0 + h with its Taylor series about z0. With t = z - z0 the
// coefficient is q0 + (z0/2) t + t^2/4, which gives the recurrence
//   (k+2)(k+1) a_{k+2} = q0 a_k + (z0/2) a_{k-1} + a_{k-2}/4.
// b_k = a_k h^k is iterated directly to keep magnitudes in range.
TaylorStep taylor_step(double nu, double z0, double u0, double du0, double h) {
  if (h == 0.0) return {u0, du0, std::abs(u0)};
  const double q0 = 0.25 * z0 * z0 - nu - 0.5;
  const double h2 = h * h;
  const double c0 = q0 * h2;
  const double c1 = 0.5 * z0 * h2 * h;
  const double c2 = 0.25 * h2 * h2;

  //   b_{k+2} = (c0 b_k + c1 b_{k-1} + c2 b_{k-2}) / ((k+2)(k+1))
  double b_km2 = 0.0;
  double b_km1 = 0.0;
  double b_k = u0;
  double b_kp1 = du0 * h;
  double u = u0 + b_kp1;
  double k_b_sum = b_kp1;  // sum of k b_k = h u'(z0 + h)
  double abs_sum = std::abs(u0) + std::abs(b_kp1);
  int quiet = 0;
  for (int k = 0; k < 4000; ++k) {
    const double b_kp2 = (c0 * b_k + c1 * b_km1 + c2 * b_km2) / ((k + 2.0) * (k + 1.0));
    u += b_kp2;
    k_b_sum += (k + 2.0) * b_kp2;
    abs_sum += (k + 3.0) * std::abs(b_kp2);
    b_km2 = b_km1;
    b_km1 = b_k;
    b_k = b_kp1;
    b_kp1 = b_kp2;
    const double tail = std::abs(b_kp1) + std::abs(b_k) + std::abs(b_km1);
    if (tail <= 1e-18 * abs_sum || abs_sum == 0.0) {
      if (++quiet >= 2 && k >= 4) return {u, k_b_sum / h, abs_sum};
    } else {
      quiet = 0;
    }
  }
  throw AccuracyError("Weber Taylor step did not converge", std::numeric_limits<double>::infinity());
}

struct Asymptotic {
  double value;  // mantissa; D = value * exp(log_scale)
  double slope;
  double log_scale;
  double rel_err;
};

// D_nu(z) ~ z^nu e^{-z^2/4} sum_s (-1)^s (-nu)_{2s} / (s! (2 z^2)^s)
Asymptotic asymptotic_expansion(double nu, double z) {
  const double inv_2z2 = 1.0 / (2.0 * z * z);
  double term = 1.0;
  double sum = 1.0;
  double dsum = nu / z - 0.5 * z;
  double smallest = 1.0;
  double rel_err = kEps;
  for (int s = 1; s < 400; ++s) {
    const double next =
        -term * (nu - 2.0 * s + 2.0) * (nu - 2.0 * s + 1.0) * inv_2z2 / static_cast<double>(s);
    if (std::abs(next) > smallest) {
      // divergent tail: truncate at the smallest term
      rel_err = smallest / std::abs(sum);
      break;
    }
    term = next;
    smallest = std::abs(term);
    sum += term;
    dsum += term * ((nu - 2.0 * s) / z - 0.5 * z);
    if (smallest <= 1e-17 * std::abs(sum)) {
      rel_err = kEps;
      break;
    }
  }
  return {sum, dsum, nu * std::log(z) - 0.25 * z * z, std::max(rel_err, kEps)};
}

double tolerance_for(const ParCylOptions& options, double z) {
  return std::abs(z) <= 10.0 ? options.near_tol : options.far_tol;
}

}  // namespace

double hermite(int n, double z) {
  if (n < 0) throw std::invalid_argument("hermite: degree must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) {
    std::ostringstream msg;
    msg << "hermite: H_" << n << "(" << z << ") overflows double precision";
    throw std::range_error(msg.str());
  }
  return cur;
}

double hermite_weighted(int n, double z, double log_weight) {
  if (n < 0) throw std::invalid_argument("hermite: degree must be nonnegative");
  if (n == 0) return std::exp(log_weight);
  double prev = 1.0;
  double cur = 2.0 * z;
  double log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += kRescaleLog;
    }
  }
  return cur * std::exp(log_scale + log_weight);
}

double sin_pi(double x) {
  const double n = std::round(x);
  const double f = x - n;
  const double s = std::sin(std::numbers::pi * f);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double reciprocal_gamma(double x) {
  if (x >= 0.5) return 1.0 / std::tgamma(x);
  // reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  return sin_pi(x) * std::tgamma(1.0 - x) / std::numbers::pi;
}

std::string to_string(ParCylMethod method) {
  switch (method) {
    case ParCylMethod::SeriesNearOrigin:
      return "series";
    case ParCylMethod::OdeIntegration:
      return "ode";
    case ParCylMethod::Asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

ParabolicCylinder::ParabolicCylinder(double nu, ParCylOptions options)
    : nu_(nu), options_(options) {
  if (!std::isfinite(nu)) throw std::invalid_argument("parabolic cylinder order must be finite");
  if (!(options_.series_radius > 0.0) || !(options_.node_spacing > 0.0) ||
      !(options_.far_seed > options_.series_radius)) {
    throw std::invalid_argument("invalid parabolic cylinder options");
  }
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  d0_ = std::exp2(0.5 * nu) * sqrt_pi * reciprocal_gamma(0.5 * (1.0 - nu));
  d0_prime_ = -std::exp2(0.5 * (nu + 1.0)) * sqrt_pi * reciprocal_gamma(-0.5 * nu);
  cos_pi_nu_ = cos_pi(nu);
  const double s_half = sin_pi(0.5 * nu);
  const double c_half = cos_pi(0.5 * nu);
  // G(x) = D(-x) - cos(pi nu) D(x):  G(0) = (1 - cos pi nu) D(0),
  // G'(0) = -(1 + cos pi nu) D'(0)
  g0_ = 2.0 * s_half * s_half * d0_;
  g0_prime_ = -2.0 * c_half * c_half * d0_prime_;
  origin_err_ = 8.0 * kEps * (std::abs(d0_) + std::abs(d0_prime_));

  // Series radius: the origin series cancels badly near |z| = 4 once nu is
  // a few units, so shrink the radius until its own error estimate is well
  // inside the tolerance; the marches cover the rest.
  const double s = options_.node_spacing;
  radius_ = options_.series_radius;
  while (radius_ > 4.0 * s) {
    double worst = 0.0;
    for (double z : {-radius_, radius_}) {
      const TaylorStep step = taylor_step(nu, 0.0, d0_, d0_prime_, z);
      const double err = 8.0 * kEps * step.abs_sum + origin_err_ * std::exp(0.25 * z * z);
      worst = std::max(worst, err / std::max(1.0, std::abs(step.u)));
    }
    if (worst <= 0.01 * options_.near_tol) break;
    radius_ -= 4.0 * s;
  }
  const double R = radius_;

  // Asymptotic seed: push it outward until the expansion is accurate.
  double seed = std::max(options_.far_seed, R + s);
  Asymptotic asym = asymptotic_expansion(nu, seed);
  while (asym.rel_err > 1e-15 && seed < 60.0) {
    seed += 5.0;
    asym = asymptotic_expansion(nu, seed);
  }
  const auto n_dec = static_cast<std::size_t>(std::ceil((seed - R) / s));
  seed_z_ = R + static_cast<double>(n_dec) * s;
  asym = asymptotic_expansion(nu, seed_z_);
  seed_err_ = asym.rel_err;

  decaying_nodes_.resize(n_dec + 1);
  {
    double u = asym.value;
    double du = asym.slope;
    double ls = asym.log_scale;
    const double m = std::abs(u);
    u /= m;
    du /= m;
    ls += std::log(m);
    decaying_nodes_[n_dec] = {u, du, ls};
    for (std::size_t k = n_dec; k-- > 0;) {
      const double z_from = R + static_cast<double>(k + 1) * s;
      const double z_to = R + static_cast<double>(k) * s;
      const TaylorStep step = taylor_step(nu, z_from, u, du, z_to - z_from);
      const double mag = std::abs(step.u) > 0.0 ? std::abs(step.u) : 1.0;
      u = step.u / mag;
      du = step.du / mag;
      ls += std::log(mag);
      decaying_nodes_[k] = {u, du, ls};
    }
  }

  const double x_max = std::max(options_.max_abs_z, R);
  const auto n_grow = static_cast<std::size_t>(std::ceil((x_max - R) / s));
  growing_nodes_.resize(n_grow + 1);
  {
    const TaylorStep first = taylor_step(nu, 0.0, g0_, g0_prime_, R);
    double u = first.u;
    double du = first.du;
    double ls = 0.0;
    growing_nodes_[0] = {u, du, ls};
    for (std::size_t k = 0; k < n_grow; ++k) {
      const double x_from = R + static_cast<double>(k) * s;
      const TaylorStep step = taylor_step(nu, x_from, u, du, s);
      const double mag = std::abs(step.u) > 0.0 ? std::abs(step.u) : 1.0;
      u = step.u / mag;
      du = step.du / mag;
      ls += std::log(mag);
      growing_nodes_[k + 1] = {u, du, ls};
    }
  }
}

ParCylMethod ParabolicCylinder::method_for(double z) const {
  if (std::abs(z) <= radius_) return ParCylMethod::SeriesNearOrigin;
  if (z >= seed_z_) return ParCylMethod::Asymptotic;
  return ParCylMethod::OdeIntegration;
}

ParabolicCylinder::Scaled ParabolicCylinder::positive_side(double x) const {
  const double R = radius_;
  const double s = options_.node_spacing;
  if (x >= seed_z_) {
    const Asymptotic a = asymptotic_expansion(nu_, x);
    return {a.value, a.slope, a.log_scale, a.rel_err * std::abs(a.value)};
  }
  const auto last = decaying_nodes_.size() - 1;
  auto k = static_cast<std::size_t>(std::ceil((x - R) / s));
  k = std::min(k, last);
  const Node& node = decaying_nodes_[k];
  const double z_node = R + static_cast<double>(k) * s;
  const TaylorStep step = taylor_step(nu_, z_node, node.u, node.du, x - z_node);
  const double steps = static_cast<double>(last - k + 1);
  const double rel = seed_err_ + 4.0 * kEps * steps;
  return {step.u, step.du, node.log_scale, rel * std::abs(step.u) + 4.0 * kEps * step.abs_sum};
}

ParabolicCylinder::Scaled ParabolicCylinder::growing_part(double x) const {
  const double R = radius_;
  const double s = options_.node_spacing;
  auto k = static_cast<std::size_t>(std::floor((x - R) / s));
  k = std::min(k, growing_nodes_.size() - 1);
  const Node& node = growing_nodes_[k];
  const double x_node = R + static_cast<double>(k) * s;
  const TaylorStep step = taylor_step(nu_, x_node, node.u, node.du, x - x_node);
  const double rel = 4.0 * kEps * static_cast<double>(k + 2);
  return {step.u, step.du, node.log_scale, rel * std::abs(step.u) + 4.0 * kEps * step.abs_sum};
}

ParabolicCylinder::Scaled ParabolicCylinder::evaluate(double z) const {
  if (!(std::abs(z) <= options_.max_abs_z)) {
    std::ostringstream msg;
    msg << "parabolic cylinder argument |z| = " << std::abs(z) << " exceeds " << options_.max_abs_z;
    throw DomainError(msg.str());
  }
  const double R = radius_;
  if (std::abs(z) <= R) {
    const TaylorStep step = taylor_step(nu_, 0.0, d0_, d0_prime_, z);
    return {step.u, step.du, 0.0, 8.0 * kEps * step.abs_sum + origin_err_ * std::exp(0.25 * z * z)};
  }
  if (z > 0.0) return positive_side(z);

  // D(-x) = cos(pi nu) D(x) + G(x);  d/dz = -d/dx
  const double x = -z;
  const Scaled dec = positive_side(x);
  if (g0_ == 0.0 && g0_prime_ == 0.0) {
    // integer order: G = 0 and D(-x) = (-1)^n D(x) exactly
    return {cos_pi_nu_ * dec.value, -cos_pi_nu_ * dec.slope, dec.log_scale, dec.err};
  }
  const Scaled gro = growing_part(x);
  const double ls = std::max(dec.log_scale, gro.log_scale);
  const double wd = std::exp(dec.log_scale - ls) * cos_pi_nu_;
  const double wg = std::exp(gro.log_scale - ls);
  Scaled out;
  out.value = wd * dec.value + wg * gro.value;
  out.slope = -(wd * dec.slope + wg * gro.slope);
  out.log_scale = ls;
  out.err = std::abs(wd) * dec.err + wg * gro.err;
  return out;
}

void ParabolicCylinder::check_accuracy(const Scaled& s, double z) const {
  const double tol = tolerance_for(options_, z);
  const double floor_units = std::exp(-s.log_scale);  // 1 in mantissa units
  const double allowed = tol * std::max(floor_units, std::abs(s.value));
  if (!(s.err <= allowed)) {
    const double achieved = s.err / std::max(floor_units, std::abs(s.value));
    std::ostringstream msg;
    msg << "D_" << nu_ << "(" << z << "): estimated error " << achieved << " exceeds tolerance "
        << tol << " (" << to_string(method_for(z)) << " method)";
    throw AccuracyError(msg.str(), achieved);
  }
}

double ParabolicCylinder::operator()(double z) const {
  const Scaled s = evaluate(z);
  check_accuracy(s, z);
  return s.value * std::exp(s.log_scale);
}

double ParabolicCylinder::weighted(double z) const {
  const Scaled s = evaluate(z);
  check_accuracy(s, z);
  return s.value * std::exp(s.log_scale - 0.25 * z * z);
}

double ParabolicCylinder::derivative(double z) const {
  const Scaled s = evaluate(z);
  check_accuracy(s, z);
  return s.slope * std::exp(s.log_scale);
}

double parabolic_cylinder_d(double nu, double z) { return ParabolicCylinder(nu)(z); }

}  // namespace burgers
