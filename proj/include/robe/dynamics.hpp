#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robe/model.hpp"
#include "robe/stability.hpp"

namespace robe {

inline constexpr double kSingularityGuardRadius = 1e-6;

/// Time-ordered solution record of the full nonlinear equations of motion.
struct Trajectory {
  std::vector<double> times;
  std::vector<PhaseState> states;
  ModelParams params;
  double tol = 0.0;
  double jacobi_initial = 0.0;
  bool terminated_early = false;
  double termination_time = 0.0;
  std::string termination_reason;
};

/// Integrate the nonlinear system from state0 over [0, t_final] (t_final may
/// be negative). Samples land on multiples of `stride`; stride <= 0 records
/// every accepted step. Approaching the secondary closer than the guard
/// radius terminates the run with a flag rather than an exception.
Trajectory integrate(const PhaseState& state0, const ModelParams& par, double t_final, double tol,
                     double stride = 0.0);

/// Displacement from an equilibrium and its rate, (xi, eta, zeta) and
/// derivatives.
struct PerturbationState {
  Eigen::Vector3d displacement{0.0, 0.0, 0.0};
  Eigen::Vector3d rate{0.0, 0.0, 0.0};

  Vector6d to_vector() const {
    Vector6d v;
    v << displacement, rate;
    return v;
  }
  static PerturbationState from_vector(const Vector6d& v) {
    return PerturbationState{v.head<3>(), v.tail<3>()};
  }
};

/// Solution record of the constant-coefficient variational system
///   xi_dd - 2n eta_d = oxx xi,  eta_dd + 2n xi_d = oyy eta,  zeta_dd = ozz zeta
/// using the coefficients of the given linearization flavor.
struct VariationalTrajectory {
  std::vector<double> times;
  std::vector<PerturbationState> states;
  Linearization lin;
  double tol = 0.0;
};

VariationalTrajectory variational_integrate(const PerturbationState& pert0,
                                            const Linearization& lin, double t_final, double tol,
                                            double stride = 0.0);

/// One probe direction: the signed coordinate axis, the largest displacement
/// ratio seen, per-axis displacement maxima, and the first time the
/// displacement exceeded ten times the kick (if it did).
struct ProbeDirection {
  Eigen::Vector3d direction{0.0, 0.0, 0.0};
  double max_ratio = 0.0;  ///< max ||pos(t) - eq|| / epsilon
  Eigen::Vector3d max_component_abs{0.0, 0.0, 0.0};
  std::optional<double> first_exceed_time;
  bool terminated_early = false;
};

struct ProbeReport {
  double epsilon = 0.0;
  double t_final = 0.0;
  std::vector<ProbeDirection> directions;  ///< +x, -x, +y, -y, +z, -z
  double max_ratio = 0.0;
  std::optional<double> first_exceed_time;
};

/// Kick the particle off the equilibrium by epsilon along each of the six
/// signed coordinate axes and watch the nonlinear displacement. epsilon = 0
/// is allowed and reports an identically zero ratio.
ProbeReport perturbation_probe(const ModelParams& par, const EquilibriumPoint& eq, double epsilon,
                               double t_final, double tol);

}  // namespace robe
