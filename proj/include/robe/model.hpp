#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "robe/errors.hpp"

namespace robe {

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// Physical configuration of the model: a fluid-filled oblate primary of mass
/// m1 centred at (-mu, 0, 0), a point-mass secondary m2 at (1 - mu, 0, 0), and
/// a buoyant test particle inside the fluid. Lengths are normalised to the
/// primary separation, time so that the unperturbed mean motion is 1.
struct ModelParams {
  double mu = 0.0;  ///< mass ratio m2 / (m1 + m2), in [0, 1)
  double a1 = 0.0;  ///< oblateness coefficient of the fluid primary, >= 0
  double k = 0.0;   ///< buoyancy parameter (4/3) pi rho1 (1 - rho1/rho3)

  /// Squared mean motion of the rotating frame. Always derived from a1, never
  /// stored, so the two can not drift apart.
  double n_sq() const { return 1.0 + 1.5 * a1; }
  double n() const { return std::sqrt(n_sq()); }
};

/// Validating constructor for ModelParams.
inline ModelParams make_params(double mu, double a1, double k) {
  if (!(mu >= 0.0 && mu < 1.0))
    throw std::domain_error("make_params: mu must lie in [0, 1), got " + std::to_string(mu));
  if (!(a1 >= 0.0))
    throw std::domain_error("make_params: a1 must be >= 0, got " + std::to_string(a1));
  if (!std::isfinite(mu) || !std::isfinite(a1) || !std::isfinite(k))
    throw std::domain_error("make_params: parameters must be finite");
  return ModelParams{mu, a1, k};
}

/// Buoyancy parameter from the fluid density rho1 and the particle density
/// rho3: k = (4/3) pi rho1 (1 - rho1/rho3). Positive when the particle is
/// denser than the fluid, negative when the fluid is denser.
inline double k_from_densities(double rho1, double rho3) {
  if (!(rho1 > 0.0) || !(rho3 > 0.0))
    throw std::domain_error("k_from_densities: densities must be positive");
  return (4.0 / 3.0) * M_PI * rho1 * (1.0 - rho1 / rho3);
}

inline Eigen::Vector3d primary_center(const ModelParams& par) {
  return {-par.mu, 0.0, 0.0};
}
inline Eigen::Vector3d secondary_center(const ModelParams& par) {
  return {1.0 - par.mu, 0.0, 0.0};
}

namespace detail {
template <typename Derived>
inline void check_vector3() {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
}
}  // namespace detail

/// Distance to the fluid primary's centre.
template <typename Derived>
typename Derived::Scalar r1(const Eigen::MatrixBase<Derived>& pos, const ModelParams& par) {
  detail::check_vector3<Derived>();
  using S = typename Derived::Scalar;
  Eigen::Matrix<S, 3, 1> d(pos[0] + S(par.mu), pos[1], pos[2]);
  return d.norm();
}

/// Distance to the point-mass secondary.
template <typename Derived>
typename Derived::Scalar r2(const Eigen::MatrixBase<Derived>& pos, const ModelParams& par) {
  detail::check_vector3<Derived>();
  using S = typename Derived::Scalar;
  Eigen::Matrix<S, 3, 1> d(pos[0] + S(par.mu) - S(1), pos[1], pos[2]);
  return d.norm();
}

/// Effective potential in the rotating frame,
///   Omega = n^2/2 (x^2 + y^2) - k r1^2 + mu / r2.
/// The buoyancy term is quadratic in r1: its Hessian is the constant -2k on
/// the diagonal, which is what the on-axis second derivatives require.
template <typename Derived>
typename Derived::Scalar omega(const Eigen::MatrixBase<Derived>& pos, const ModelParams& par) {
  detail::check_vector3<Derived>();
  using S = typename Derived::Scalar;
  const Eigen::Matrix<S, 3, 1> ds(pos[0] + S(par.mu) - S(1), pos[1], pos[2]);
  const S dist2 = ds.norm();
  if (!(dist2 > S(0))) throw SingularityError("omega: position coincides with the secondary (r2 = 0)");
  const Eigen::Matrix<S, 3, 1> dp(pos[0] + S(par.mu), pos[1], pos[2]);
  return S(0.5) * S(par.n_sq()) * (pos[0] * pos[0] + pos[1] * pos[1]) -
         S(par.k) * dp.squaredNorm() + S(par.mu) / dist2;
}

/// Gradient of the effective potential:
///   Omega_x = n^2 x - 2k (x + mu) - mu (x + mu - 1) / r2^3, etc.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 1> omega_gradient(const Eigen::MatrixBase<Derived>& pos,
                                                             const ModelParams& par) {
  detail::check_vector3<Derived>();
  using S = typename Derived::Scalar;
  const Eigen::Matrix<S, 3, 1> ds(pos[0] + S(par.mu) - S(1), pos[1], pos[2]);
  const S dist2 = ds.norm();
  if (!(dist2 > S(0)))
    throw SingularityError("omega_gradient: position coincides with the secondary (r2 = 0)");
  const Eigen::Matrix<S, 3, 1> dp(pos[0] + S(par.mu), pos[1], pos[2]);
  const Eigen::Matrix<S, 3, 1> rotating(S(par.n_sq()) * pos[0], S(par.n_sq()) * pos[1], S(0));
  return rotating - S(2.0 * par.k) * dp - (S(par.mu) / (dist2 * dist2 * dist2)) * ds;
}

/// Hessian of the effective potential. Symmetric by construction; on the x
/// axis it reduces to diag(n^2 - 2k + 2 mu/r2^3, n^2 - 2k - mu/r2^3,
/// -2k - mu/r2^3).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 3> omega_hessian(const Eigen::MatrixBase<Derived>& pos,
                                                            const ModelParams& par) {
  detail::check_vector3<Derived>();
  using S = typename Derived::Scalar;
  using Mat3 = Eigen::Matrix<S, 3, 3>;
  const Eigen::Matrix<S, 3, 1> ds(pos[0] + S(par.mu) - S(1), pos[1], pos[2]);
  const S dsq = ds.squaredNorm();
  if (!(dsq > S(0)))
    throw SingularityError("omega_hessian: position coincides with the secondary (r2 = 0)");
  const S dist = std::sqrt(dsq);
  const S inv5 = S(par.mu) / (dsq * dsq * dist);
  Mat3 h = inv5 * (S(3) * ds * ds.transpose() - dsq * Mat3::Identity());
  h -= S(2.0 * par.k) * Mat3::Identity();
  h(0, 0) += S(par.n_sq());
  h(1, 1) += S(par.n_sq());
  return h;
}

/// Position and velocity in the rotating (synodic) frame.
struct PhaseState {
  Eigen::Vector3d position{0.0, 0.0, 0.0};
  Eigen::Vector3d velocity{0.0, 0.0, 0.0};

  Vector6d to_vector() const {
    Vector6d v;
    v << position, velocity;
    return v;
  }
  static PhaseState from_vector(const Vector6d& v) {
    return PhaseState{v.head<3>(), v.tail<3>()};
  }
};

/// Right-hand side of the equations of motion,
///   xddot - 2n ydot = Omega_x,  yddot + 2n xdot = Omega_y,  zddot = Omega_z.
/// Returns (vx, vy, vz, ax, ay, az).
inline Vector6d equations_of_motion(const PhaseState& state, const ModelParams& par) {
  const Eigen::Vector3d g = omega_gradient(state.position, par);
  const double twon = 2.0 * par.n();
  Vector6d out;
  out.head<3>() = state.velocity;
  out[3] = g[0] + twon * state.velocity[1];
  out[4] = g[1] - twon * state.velocity[0];
  out[5] = g[2];
  return out;
}

inline Vector6d equations_of_motion(const Vector6d& state, const ModelParams& par) {
  return equations_of_motion(PhaseState::from_vector(state), par);
}

/// First integral of the autonomous rotating-frame system: C = 2 Omega - v^2.
inline double jacobi_constant(const PhaseState& state, const ModelParams& par) {
  return 2.0 * omega(state.position, par) - state.velocity.squaredNorm();
}

inline constexpr double kFdGradientStep = 1e-5;
inline constexpr double kFdHessianStep = 1e-4;

/// Central-difference gradient of omega, O(h^2). Independent check on the
/// closed forms; every stencil point must stay clear of r2 = 0.
inline Eigen::Vector3d fd_gradient(const Eigen::Vector3d& pos, const ModelParams& par,
                                   double h = kFdGradientStep) {
  if (!(h > 0.0)) throw std::domain_error("fd_gradient: step must be positive");
  Eigen::Vector3d g;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d hi = Eigen::Vector3d::Zero();
    hi[i] = h;
    g[i] = (omega(Eigen::Vector3d(pos + hi), par) - omega(Eigen::Vector3d(pos - hi), par)) / (2.0 * h);
  }
  return g;
}

/// Central-difference Hessian of omega, O(h^2).
inline Eigen::Matrix3d fd_hessian(const Eigen::Vector3d& pos, const ModelParams& par,
                                  double h = kFdHessianStep) {
  if (!(h > 0.0)) throw std::domain_error("fd_hessian: step must be positive");
  Eigen::Matrix3d m;
  const double f0 = omega(pos, par);
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d hi = Eigen::Vector3d::Zero();
    hi[i] = h;
    m(i, i) = (omega(Eigen::Vector3d(pos + hi), par) - 2.0 * f0 +
               omega(Eigen::Vector3d(pos - hi), par)) /
              (h * h);
    for (int j = i + 1; j < 3; ++j) {
      Eigen::Vector3d hj = Eigen::Vector3d::Zero();
      hj[j] = h;
      const double fpp = omega(Eigen::Vector3d(pos + hi + hj), par);
      const double fpm = omega(Eigen::Vector3d(pos + hi - hj), par);
      const double fmp = omega(Eigen::Vector3d(pos - hi + hj), par);
      const double fmm = omega(Eigen::Vector3d(pos - hi - hj), par);
      m(i, j) = m(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }
  return m;
}

}  // namespace robe
