#pragma once

#include <array>
#include <complex>
#include <utility>

#include "robe/equilibria.hpp"
#include "robe/model.hpp"

namespace robe {

/// The two linearization conventions kept side by side.
///
/// numeric: second derivatives from the analytic Hessian, so the coefficient
/// A = mu / r2^3 is built from the unsigned distance cube.
///
/// paper_replica: A = mu / (x + mu - 1)^3 with the *signed* cube, matching the
/// first-order treatment this model descends from; the aggregates
/// oxx = B + 2A, oyy = B - A are then applied verbatim. Only the z derivative
/// keeps the unsigned cube in both conventions.
enum class Flavor { numeric, paper_replica };

const char* to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

enum class Verdict { stable, unstable, marginal };

const char* to_string(Verdict v);

/// Second derivatives of Omega at an axis equilibrium plus the A, B aggregates.
struct Linearization {
  double oxx = 0.0;
  double oyy = 0.0;
  double ozz = 0.0;
  double a_coef = 0.0;  ///< A: mu over the (signed or unsigned) distance cube
  double b_coef = 0.0;  ///< B = n^2 - 2k
  double n_sq = 1.0;
  Flavor flavor = Flavor::numeric;
};

Linearization linearize(const ModelParams& par, const EquilibriumPoint& eq, Flavor flavor);

/// Coefficients (p, q) of the biquadratic lambda^4 + p lambda^2 + q = 0,
/// i.e. p = -(2B + A - 4 n^2), q = (B - A)(B + 2A).
std::pair<double, double> characteristic_coefficients(const Linearization& lin);

/// The four roots of lambda^4 + p lambda^2 + q = 0 via the quadratic in
/// lambda^2, solved in complex arithmetic with the cancellation-free form.
/// Ordered (+sqrt(Lp), -sqrt(Lp), +sqrt(Lm), -sqrt(Lm)) with Lp the root of
/// larger real part.
std::array<std::complex<double>, 4> solve_quartic_even(double p, double q);

// Classification thresholds. Real parts inside +-1e-12 count as zero (double
// precision eigenvalue noise at unit-scale coefficients); a lambda^2 pair
// closer than the relative band below is treated as repeated, which makes the
// verdict marginal rather than stable (a repeated imaginary pair is not
// linearly stable in general).
inline constexpr double kUnstableReTol = 1e-12;
inline constexpr double kStableLambdaSqMax = -1e-14;
inline constexpr double kLambdaSqPairBand = 1e-9;
inline constexpr double kMarginalOzzBand = 1e-14;

/// Vertical mode: zeta_ddot = ozz * zeta, so lambda^2 = ozz. Stable for
/// ozz < 0 (pure oscillation), unstable for ozz > 0.
std::pair<double, Verdict> vertical_mode(const Linearization& lin);

struct StabilityReport {
  double p = 0.0;
  double q = 0.0;
  double discriminant = 0.0;  ///< D = p^2 - 4q
  std::array<std::complex<double>, 4> planar_roots{};
  /// Planar mode shape per root, the (xi, eta) amplitude pair normalised so
  /// its largest component is 1.
  std::array<std::array<std::complex<double>, 2>, 4> mode_ratios{};
  double vertical_root_sq = 0.0;
  Verdict verdict_planar = Verdict::marginal;
  Verdict verdict_vertical = Verdict::marginal;
  double max_re_lambda = 0.0;
};

/// Verdict from the lambda^2 pair: unstable when any root leaves the
/// imaginary axis beyond tolerance, stable when both lambda^2 are real,
/// strictly negative and distinct, marginal otherwise.
Verdict planar_verdict(const std::complex<double>& lambda_sq_plus,
                       const std::complex<double>& lambda_sq_minus, double max_re_lambda);

StabilityReport classify(const Linearization& lin);
StabilityReport classify(const ModelParams& par, const EquilibriumPoint& eq, Flavor flavor);

}  // namespace robe
