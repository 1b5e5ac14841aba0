#include "burgers/strain_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

void check_time(const StrainModel& model, double t) {
  if (!(t >= 0.0)) {
    std::ostringstream msg;
    msg << "time " << t << " is negative; strain models start at t = 0";
    throw DomainError(msg.str());
  }
  const double t_star = horizon(model);
  if (t >= t_star) {
    std::ostringstream msg;
    msg << "time " << t << " is at or beyond the strain horizon t* = " << t_star
        << " where gamma(t) = -1/(2 c1 t + c2) blows up";
    throw DomainError(msg.str());
  }
}

}  // namespace

StrainModel StrainModel::constant(double gamma0) {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) {
    throw std::invalid_argument("constant strain requires gamma0 > 0");
  }
  return StrainModel(StrainKind::Constant, gamma0, 0.0, 0.0);
}

StrainModel StrainModel::rational(double c1, double c2) {
  if (!std::isfinite(c1) || !std::isfinite(c2)) {
    throw std::invalid_argument("rational strain requires finite c1, c2");
  }
  if (!(c2 < 0.0)) {
    throw std::invalid_argument("rational strain requires c2 < 0 so that gamma(0) = -1/c2 > 0");
  }
  return StrainModel(StrainKind::Rational, -1.0 / c2, c1, c2);
}

double horizon(const StrainModel& model) {
  if (model.kind() == StrainKind::Constant || model.c1() <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  // zero of 2 c1 t + c2
  return -model.c2() / (2.0 * model.c1());
}

double gamma_at(const StrainModel& model, double t) {
  check_time(model, t);
  if (model.kind() == StrainKind::Constant) return model.gamma0();
  return -1.0 / (2.0 * model.c1() * t + model.c2());
}

double gamma_rate(const StrainModel& model, double t) {
  const double g = gamma_at(model, t);
  return 2.0 * model.c1() * g * g;
}

double tau_of(const StrainModel& model, double t) {
  check_time(model, t);
  if (model.kind() == StrainKind::Constant) return model.gamma0() * t;
  const double c1 = model.c1();
  const double c2 = model.c2();
  if (c1 == 0.0) return (-1.0 / c2) * t;
  // -(1/(2 c1)) ln((2 c1 t + c2)/c2), written with log1p for small c1 t
  return -std::log1p(2.0 * c1 * t / c2) / (2.0 * c1);
}

double alpha_of(const StrainModel& model) { return 1.0 - model.c1(); }

double printed_alpha_of(const StrainModel& model) { return 1.0 - 2.0 * model.c1(); }

SimilarityFrame::SimilarityFrame(StrainModel strain, double nu) : strain_(strain), nu_(nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw std::invalid_argument("viscosity nu must be positive");
  }
}

double SimilarityFrame::xi_of(double x, double t) const {
  return std::sqrt(gamma_at(strain_, t) / nu_) * x;
}

double SimilarityFrame::x_of(double xi, double t) const {
  return std::sqrt(nu_ / gamma_at(strain_, t)) * xi;
}

}  // namespace burgers
