#include "robe/dynamics.hpp"

#include <cmath>

#include "robe/rk45.hpp"

namespace robe {

Trajectory integrate(const PhaseState& state0, const ModelParams& par, double t_final, double tol,
                     double stride) {
  if (!(tol >= 1e-14 && tol <= 1e-6))
    throw std::domain_error("integrate: tol must lie in [1e-14, 1e-6]");
  if (t_final == 0.0) throw std::domain_error("integrate: t_final must be nonzero");
  if (!(r2(state0.position, par) > 0.0))
    throw SingularityError("integrate: initial state sits on the secondary");

  Trajectory traj;
  traj.params = par;
  traj.tol = tol;
  traj.jacobi_initial = jacobi_constant(state0, par);

  auto rhs = [&par](double, const Vector6d& y) { return equations_of_motion(y, par); };
  auto on_sample = [&traj](double t, const Vector6d& y) {
    traj.times.push_back(t);
    traj.states.push_back(PhaseState::from_vector(y));
  };
  auto stop = [&par](double, const Vector6d& y) -> std::optional<std::string> {
    if (r2(Eigen::Vector3d(y.head<3>()), par) < kSingularityGuardRadius)
      return "approached the secondary closer than the guard radius";
    return std::nullopt;
  };

  const auto reason =
      detail::dopri5<6>(rhs, state0.to_vector(), 0.0, t_final, tol, stride, on_sample, stop);
  if (reason) {
    traj.terminated_early = true;
    traj.termination_time = traj.times.back();
    traj.termination_reason = *reason;
  }
  return traj;
}

VariationalTrajectory variational_integrate(const PerturbationState& pert0,
                                            const Linearization& lin, double t_final, double tol,
                                            double stride) {
  if (!(tol >= 1e-14 && tol <= 1e-6))
    throw std::domain_error("variational_integrate: tol must lie in [1e-14, 1e-6]");
  if (t_final == 0.0) throw std::domain_error("variational_integrate: t_final must be nonzero");

  VariationalTrajectory traj;
  traj.lin = lin;
  traj.tol = tol;

  const double twon = 2.0 * std::sqrt(lin.n_sq);
  auto rhs = [&lin, twon](double, const Vector6d& y) {
    Vector6d d;
    d[0] = y[3];
    d[1] = y[4];
    d[2] = y[5];
    d[3] = lin.oxx * y[0] + twon * y[4];
    d[4] = lin.oyy * y[1] - twon * y[3];
    d[5] = lin.ozz * y[2];
    return d;
  };
  auto on_sample = [&traj](double t, const Vector6d& y) {
    traj.times.push_back(t);
    traj.states.push_back(PerturbationState::from_vector(y));
  };
  auto stop = [](double, const Vector6d&) -> std::optional<std::string> { return std::nullopt; };

  detail::dopri5<6>(rhs, pert0.to_vector(), 0.0, t_final, tol, stride, on_sample, stop);
  return traj;
}

ProbeReport perturbation_probe(const ModelParams& par, const EquilibriumPoint& eq, double epsilon,
                               double t_final, double tol) {
  if (epsilon != 0.0 && !(epsilon >= 1e-8 && epsilon <= 1e-3))
    throw std::domain_error("perturbation_probe: epsilon must be 0 or in [1e-8, 1e-3]");
  if (!(t_final > 0.0)) throw std::domain_error("perturbation_probe: t_final must be positive");

  ProbeReport rep;
  rep.epsilon = epsilon;
  rep.t_final = t_final;
  const Eigen::Vector3d eq_pos(eq.x, 0.0, 0.0);

  for (int axis = 0; axis < 3; ++axis) {
    for (double sign : {+1.0, -1.0}) {
      ProbeDirection dir;
      dir.direction = Eigen::Vector3d::Zero();
      dir.direction[axis] = sign;

      PhaseState s0;
      s0.position = eq_pos + epsilon * dir.direction;
      s0.velocity = Eigen::Vector3d::Zero();

      auto rhs = [&par](double, const Vector6d& y) { return equations_of_motion(y, par); };
      auto on_sample = [&](double t, const Vector6d& y) {
        const Eigen::Vector3d delta = y.head<3>() - eq_pos;
        dir.max_component_abs = dir.max_component_abs.cwiseMax(delta.cwiseAbs());
        if (epsilon > 0.0) {
          const double ratio = delta.norm() / epsilon;
          dir.max_ratio = std::max(dir.max_ratio, ratio);
          if (!dir.first_exceed_time && ratio > 10.0) dir.first_exceed_time = t;
        }
      };
      auto stop = [&par](double, const Vector6d& y) -> std::optional<std::string> {
        if (r2(Eigen::Vector3d(y.head<3>()), par) < kSingularityGuardRadius)
          return "approached the secondary closer than the guard radius";
        return std::nullopt;
      };
      // Zero stride: observe every accepted step, so a crossing can not slip
      // between samples.
      dir.terminated_early =
          detail::dopri5<6>(rhs, s0.to_vector(), 0.0, t_final, tol, 0.0, on_sample, stop)
              .has_value();

      if (epsilon > 0.0) {
        rep.max_ratio = std::max(rep.max_ratio, dir.max_ratio);
        if (dir.first_exceed_time &&
            (!rep.first_exceed_time || *dir.first_exceed_time < *rep.first_exceed_time))
          rep.first_exceed_time = dir.first_exceed_time;
      }
      rep.directions.push_back(dir);
    }
  }
  return rep;
}

}  // namespace robe
