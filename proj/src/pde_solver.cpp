#include "burgers/pde_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

// D (u_{i+1} - 2u_i + u_{i-1}) / h^2 + A x_i (u_{i+1} - u_{i-1}) / (2h) + G u_i
struct Coefficients {
  double diffusion;
  double stretch;
  double growth;
};

class Operator {
 public:
  explicit Operator(const Grid1D& grid) : inv_h2_(1.0 / (grid.spacing() * grid.spacing())), adv_(grid.size()) {
    const double inv_2h = 0.5 / grid.spacing();
    for (std::size_t i = 0; i < grid.size(); ++i) adv_[i] = grid.coordinate(i) * inv_2h;
  }

  // Sums are grouped so that mirrored points see identical rounding; this
  // keeps even/odd data exactly even/odd.
  void apply(const Coefficients& c, const std::vector<double>& u, std::vector<double>& out) const {
    const std::size_t n = u.size();
    const double d = c.diffusion * inv_h2_;
    out[0] = 0.0;
    out[n - 1] = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double diff = (u[i + 1] + u[i - 1]) - 2.0 * u[i];
      const double grad = u[i + 1] - u[i - 1];
      out[i] = d * diff + (c.stretch * adv_[i]) * grad + c.growth * u[i];
    }
  }

  double lower(const Coefficients& c, std::size_t i) const {
    return c.diffusion * inv_h2_ - c.stretch * adv_[i];
  }
  double upper(const Coefficients& c, std::size_t i) const {
    return c.diffusion * inv_h2_ + c.stretch * adv_[i];
  }
  double diagonal(const Coefficients& c) const { return -2.0 * c.diffusion * inv_h2_ + c.growth; }

 private:
  double inv_h2_;
  std::vector<double> adv_;
};

Coefficients coefficients_at(const Equation& eq, double t) {
  if (const auto* sim = std::get_if<SimilarityEquation>(&eq)) {
    return {1.0, sim->alpha, 1.0};
  }
  const auto& phys = std::get<PhysicalEquation>(eq);
  const double g = gamma_at(phys.frame.strain(), t);
  return {phys.frame.nu(), g, g};
}

// Largest |stretch| over [0, end]; gamma is monotone on the rational family.
double max_stretch(const Equation& eq, double end_time) {
  if (const auto* sim = std::get_if<SimilarityEquation>(&eq)) return std::abs(sim->alpha);
  const auto& strain = std::get<PhysicalEquation>(eq).frame.strain();
  return std::max(gamma_at(strain, 0.0), gamma_at(strain, end_time));
}

double diffusion_of(const Equation& eq) {
  if (std::holds_alternative<SimilarityEquation>(eq)) return 1.0;
  return std::get<PhysicalEquation>(eq).frame.nu();
}

bool all_finite(const std::vector<double>& u) {
  return std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v); });
}

class Stepper {
 public:
  Stepper(const Grid1D& grid, const EvolveSpec& spec)
      : op_(grid), spec_(spec), k1_(grid.size()), k2_(grid.size()), k3_(grid.size()),
        k4_(grid.size()), tmp_(grid.size()), sub_(grid.size()), diag_(grid.size()), sup_(grid.size()),
        rhs_(grid.size()) {}

  void step(std::vector<double>& u, double t, double dt) {
    if (spec_.scheme == TimeScheme::ExplicitRK4) {
      rk4(u, t, dt);
    } else {
      trapezoidal(u, t, dt);
    }
  }

 private:
  void rk4(std::vector<double>& u, double t, double dt) {
    const std::size_t n = u.size();
    const Coefficients c0 = coefficients_at(spec_.equation, t);
    const Coefficients ch = coefficients_at(spec_.equation, t + 0.5 * dt);
    const Coefficients c1 = coefficients_at(spec_.equation, t + dt);
    op_.apply(c0, u, k1_);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + 0.5 * dt * k1_[i];
    op_.apply(ch, tmp_, k2_);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + 0.5 * dt * k2_[i];
    op_.apply(ch, tmp_, k3_);
    for (std::size_t i = 0; i < n; ++i) tmp_[i] = u[i] + dt * k3_[i];
    op_.apply(c1, tmp_, k4_);
    const double w = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] += w * ((k1_[i] + k4_[i]) + 2.0 * (k2_[i] + k3_[i]));
    }
  }

  // (I - dt/2 L(t+dt)) u^{n+1} = (I + dt/2 L(t)) u^n, interior unknowns only.
  void trapezoidal(std::vector<double>& u, double t, double dt) {
    const std::size_t n = u.size();
    const Coefficients c0 = coefficients_at(spec_.equation, t);
    const Coefficients c1 = coefficients_at(spec_.equation, t + dt);
    op_.apply(c0, u, k1_);
    const double half = 0.5 * dt;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      rhs_[i] = u[i] + half * k1_[i];
      sub_[i] = -half * op_.lower(c1, i);
      diag_[i] = 1.0 - half * op_.diagonal(c1);
      sup_[i] = -half * op_.upper(c1, i);
    }
    // known end values move to the right-hand side
    rhs_[1] -= sub_[1] * u[0];
    rhs_[n - 2] -= sup_[n - 2] * u[n - 1];
    // Thomas algorithm on rows 1..n-2
    for (std::size_t i = 2; i + 1 < n; ++i) {
      const double m = sub_[i] / diag_[i - 1];
      diag_[i] -= m * sup_[i - 1];
      rhs_[i] -= m * rhs_[i - 1];
    }
    u[n - 2] = rhs_[n - 2] / diag_[n - 2];
    for (std::size_t i = n - 2; i-- > 1;) {
      u[i] = (rhs_[i] - sup_[i] * u[i + 1]) / diag_[i];
    }
  }

  Operator op_;
  const EvolveSpec& spec_;
  std::vector<double> k1_, k2_, k3_, k4_, tmp_;
  std::vector<double> sub_, diag_, sup_, rhs_;
};

}  // namespace

void EvolveSpec::validate() const {
  if (!(end_time >= 0.0) || !std::isfinite(end_time)) {
    throw std::invalid_argument("end time must be finite and nonnegative");
  }
  if (const auto* sim = std::get_if<SimilarityEquation>(&equation)) {
    if (!(sim->alpha > 0.0)) throw std::invalid_argument("similarity equation requires alpha > 0");
  } else {
    const auto& strain = std::get<PhysicalEquation>(equation).frame.strain();
    const double t_star = horizon(strain);
    if (!(end_time < t_star)) {
      std::ostringstream msg;
      msg << "end time " << end_time << " is at or beyond the strain horizon " << t_star;
      throw DomainError(msg.str());
    }
  }
  if (const auto* fixed = std::get_if<FixedDt>(&dt)) {
    if (!(fixed->dt > 0.0)) throw std::invalid_argument("fixed dt must be positive");
  } else {
    const double f = std::get<CflDt>(dt).factor;
    if (!(f > 0.0 && f <= 1.0)) throw std::invalid_argument("cfl factor must lie in (0, 1]");
  }
  for (double t : snapshot_times) {
    if (!(t >= 0.0 && t <= end_time)) {
      throw std::invalid_argument("snapshot times must lie in [0, end_time]");
    }
  }
}

double max_time_step(const EvolveSpec& spec, const Grid1D& grid) {
  if (const auto* fixed = std::get_if<FixedDt>(&spec.dt)) return fixed->dt;
  const double factor = std::get<CflDt>(spec.dt).factor;
  const double h = grid.spacing();
  const double speed = max_stretch(spec.equation, spec.end_time) * grid.half_width();
  const double advective = speed > 0.0 ? h / speed : std::numeric_limits<double>::infinity();
  if (spec.scheme == TimeScheme::ImplicitTrapezoidal) return factor * advective;
  const double diffusive = h * h / (2.0 * diffusion_of(spec.equation));
  return factor * std::min(diffusive, advective);
}

EvolveResult evolve(const Field1D& initial, const EvolveSpec& spec) {
  spec.validate();
  const Grid1D& grid = initial.grid();
  std::vector<double> u = initial.values();
  if (spec.boundary == Boundary::DirichletZero) {
    const double scale = initial.linf_norm();
    if (std::abs(u.front()) > 1e-10 * scale || std::abs(u.back()) > 1e-10 * scale) {
      throw std::invalid_argument(
          "initial data does not satisfy the zero Dirichlet condition at +/-L; widen the grid or "
          "use held boundaries");
    }
    u.front() = 0.0;
    u.back() = 0.0;
  }

  // checkpoints: norm samples, snapshots, and the end
  std::set<double> checkpoints{0.0, spec.end_time};
  const std::size_t samples = spec.norm_samples;
  for (std::size_t k = 0; samples >= 2 && k < samples; ++k) {
    checkpoints.insert(spec.end_time * (static_cast<double>(k) / static_cast<double>(samples - 1)));
  }
  const std::set<double> snapshot_set(spec.snapshot_times.begin(), spec.snapshot_times.end());
  checkpoints.insert(snapshot_set.begin(), snapshot_set.end());
  std::set<double> norm_set;
  for (std::size_t k = 0; samples >= 2 && k < samples; ++k) {
    norm_set.insert(spec.end_time * (static_cast<double>(k) / static_cast<double>(samples - 1)));
  }
  if (samples == 1) norm_set.insert(spec.end_time);

  EvolveResult result{Field1D(grid), {}, {}, 0, 0.0};
  const double dt_max = max_time_step(spec, grid);
  Stepper stepper(grid, spec);
  auto record = [&](double t) {
    if (norm_set.contains(t) || snapshot_set.contains(t)) {
      Field1D f(grid, u);
      if (norm_set.contains(t)) result.norms.push_back({t, f.l2_norm(), f.linf_norm()});
      if (snapshot_set.contains(t)) result.snapshots.push_back({t, std::move(f)});
    }
  };

  auto it = checkpoints.begin();
  double t_prev = *it;
  record(t_prev);
  for (++it; it != checkpoints.end(); ++it) {
    const double t_next = *it;
    const double span = t_next - t_prev;
    const auto steps =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / dt_max * (1.0 - 1e-12))));
    const double dt = span / static_cast<double>(steps);
    result.largest_dt = std::max(result.largest_dt, dt);
    for (std::size_t k = 0; k < steps; ++k) {
      stepper.step(u, t_prev + static_cast<double>(k) * dt, dt);
      ++result.steps;
      if ((result.steps & 63u) == 0 && !all_finite(u)) {
        std::ostringstream msg;
        msg << "non-finite vorticity by step " << result.steps << " (t = " << t_prev + (k + 1) * dt
            << ", dt = " << dt << ")";
        throw InstabilityError(msg.str(), result.steps);
      }
    }
    if (!all_finite(u)) {
      std::ostringstream msg;
      msg << "non-finite vorticity by step " << result.steps << " (t = " << t_next << ")";
      throw InstabilityError(msg.str(), result.steps);
    }
    t_prev = t_next;
    record(t_prev);
  }
  result.final_field = Field1D(grid, std::move(u));
  return result;
}

Field1D rhs_physical(const Field1D& field, double gamma, double nu) {
  if (!(gamma > 0.0) || !(nu > 0.0)) throw std::invalid_argument("rhs_physical requires gamma, nu > 0");
  Operator op(field.grid());
  std::vector<double> out(field.grid().size());
  op.apply({nu, gamma, gamma}, field.values(), out);
  return Field1D(field.grid(), std::move(out));
}

Field1D rhs_similarity(const Field1D& field, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("rhs_similarity requires alpha > 0");
  Operator op(field.grid());
  std::vector<double> out(field.grid().size());
  op.apply({1.0, alpha, 1.0}, field.values(), out);
  return Field1D(field.grid(), std::move(out));
}

std::string to_string(TimeScheme scheme) {
  return scheme == TimeScheme::ExplicitRK4 ? "rk4" : "trapezoidal";
}

std::string to_string(Boundary boundary) {
  return boundary == Boundary::DirichletZero ? "dirichlet_zero" : "dirichlet_held";
}

}  // namespace burgers
