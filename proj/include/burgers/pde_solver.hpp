#pragma once

// Method-of-lines solvers for the two vorticity equations
//
//   physical:    dOmega/dt   = gamma(t) x Omega_x + gamma(t) Omega + nu Omega_xx
//   similarity:  dOmega/dtau = alpha xi Omega_xi + Omega + Omega_xixi
//
// on a truncated symmetric interval, second-order centered differences in
// space, and RK4 or trapezoidal (Crank-Nicolson) in time.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "burgers/grid.hpp"
#include "burgers/strain_model.hpp"

namespace burgers {

struct SimilarityEquation {
  double alpha;
};

struct PhysicalEquation {
  SimilarityFrame frame;
};

using Equation = std::variant<SimilarityEquation, PhysicalEquation>;

struct FixedDt {
  double dt;
};

/// dt <= factor * min(h^2 / (2 nu_eff), h / max|a|) for RK4,
/// dt <= factor * h / max|a| for the trapezoidal rule.
struct CflDt {
  double factor = 0.4;
};

using DtPolicy = std::variant<FixedDt, CflDt>;

enum class TimeScheme { ExplicitRK4, ImplicitTrapezoidal };

/// DirichletZero pins the end values at 0. DirichletHeld keeps the initial
/// end values, which is the exact truncation for a steady profile whose
/// tail decays only algebraically.
enum class Boundary { DirichletZero, DirichletHeld };

struct EvolveSpec {
  Equation equation;
  double end_time = 1.0;  ///< t_end (physical) or tau_end (similarity)
  DtPolicy dt = CflDt{};
  TimeScheme scheme = TimeScheme::ExplicitRK4;
  Boundary boundary = Boundary::DirichletZero;
  std::vector<double> snapshot_times;
  std::size_t norm_samples = 101;  ///< uniformly spaced on [0, end_time]

  /// Throws std::invalid_argument / DomainError.
  void validate() const;
};

struct NormSample {
  double time;
  double l2;
  double linf;
};

struct Snapshot {
  double time;
  Field1D field;
};

struct EvolveResult {
  Field1D final_field;
  std::vector<NormSample> norms;
  std::vector<Snapshot> snapshots;
  std::size_t steps = 0;
  double largest_dt = 0.0;
};

/// Integrates from time 0 to spec.end_time.
/// Throws InstabilityError on NaN/Inf, DomainError beyond the strain horizon,
/// std::invalid_argument if a DirichletZero run starts with nonzero ends.
EvolveResult evolve(const Field1D& initial, const EvolveSpec& spec);

/// Discrete right-hand sides; end points are held, so their entries are 0.
Field1D rhs_physical(const Field1D& field, double gamma, double nu);
Field1D rhs_similarity(const Field1D& field, double alpha);

/// Largest dt the policy allows for this spec on this grid.
double max_time_step(const EvolveSpec& spec, const Grid1D& grid);

std::string to_string(TimeScheme scheme);
std::string to_string(Boundary boundary);

}  // namespace burgers
