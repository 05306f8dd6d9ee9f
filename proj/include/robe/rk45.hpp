#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <string>

#include "robe/errors.hpp"

namespace robe::detail {

inline constexpr double kMinStep = 1e-15;

/// Adaptive Dormand-Prince 5(4) driver with PI step-size control and FSAL.
///
/// rhs:       y' = rhs(t, y)
/// on_sample: called at t0, at every stride landing, at the final time, and
///            at an early-termination state (every accepted step when
///            stride <= 0)
/// stop:      checked after each accepted step; a non-empty result ends the
///            integration early with that reason
///
/// tol is applied as both absolute and relative tolerance. t1 < t0 integrates
/// backward.
template <int N, typename Rhs, typename Sample, typename Stop>
std::optional<std::string> dopri5(Rhs&& rhs, Eigen::Matrix<double, N, 1> y, double t0, double t1,
                                  double tol, double stride, Sample&& on_sample, Stop&& stop) {
  using Vec = Eigen::Matrix<double, N, 1>;
  if (t1 == t0) throw std::domain_error("dopri5: empty integration interval");
  const double dir = t1 > t0 ? 1.0 : -1.0;

  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double t = t0;
  Vec k1 = rhs(t, y);

  double last_emitted = t0;
  bool emitted_any = false;
  auto emit = [&](double te, const Vec& ye) {
    if (emitted_any && te == last_emitted) return;
    on_sample(te, ye);
    last_emitted = te;
    emitted_any = true;
  };
  emit(t0, y);

  long sample_index = 1;
  auto next_sample = [&]() { return t0 + dir * stride * sample_index; };
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)); };

  // Initial step from the state and derivative scales; the controller takes
  // over immediately.
  double h_nat = std::min(0.01 * (1.0 + y.norm()) / (1.0 + k1.norm()), std::abs(t1 - t0) * 0.1);
  h_nat = std::max(h_nat, 100 * kMinStep);
  double err_prev = 1.0;

  while (!near(t, t1)) {
    double target = t1;
    if (stride > 0.0) {
      const double ns = next_sample();
      if ((ns - t1) * dir < 0.0) target = ns;
    }
    double h = h_nat;
    bool clamped = false;
    if (std::abs(target - t) <= h) {
      h = std::abs(target - t);
      clamped = true;
    }
    if (h < kMinStep)
      throw ConvergenceError("dopri5: step size underflow at t = " + std::to_string(t));
    const double hs = dir * h;

    const Vec k2 = rhs(t + c2 * hs, Vec(y + hs * (a21 * k1)));
    const Vec k3 = rhs(t + c3 * hs, Vec(y + hs * (a31 * k1 + a32 * k2)));
    const Vec k4 = rhs(t + c4 * hs, Vec(y + hs * (a41 * k1 + a42 * k2 + a43 * k3)));
    const Vec k5 = rhs(t + c5 * hs, Vec(y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
    const Vec k6 =
        rhs(t + hs, Vec(y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
    const Vec ynew = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec k7 = rhs(t + hs, ynew);
    const Vec errv = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      const double scale = tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = errv[i] / scale;
      err += r * r;
    }
    err = std::sqrt(err / N);

    if (err <= 1.0) {
      t = clamped ? target : t + hs;
      y = ynew;
      k1 = k7;  // FSAL
      if (stride > 0.0) {
        if (clamped && near(t, next_sample())) {
          emit(t, y);
          ++sample_index;
        }
        if (near(t, t1)) emit(t1, y);
      } else {
        emit(t, y);
      }
      if (auto reason = stop(t, y)) {
        emit(t, y);
        return reason;
      }
      const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.17) * std::pow(err_prev, 0.04);
      err_prev = std::max(err, 1e-10);
      if (!clamped)
        h_nat = h * std::min(5.0, std::max(0.2, fac));
      else
        h_nat = std::max(h_nat, h * std::min(5.0, std::max(0.2, fac)));
    } else {
      const double shrink = std::max(0.2, 0.9 * std::pow(err, -0.2));
      h_nat = h * shrink;
      err_prev = err;
    }
  }
  emit(t1, y);
  return std::nullopt;
}

}  // namespace robe::detail
