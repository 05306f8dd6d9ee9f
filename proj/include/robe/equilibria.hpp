#pragma once

#include <optional>
#include <vector>

#include "robe/model.hpp"

namespace robe {

enum class EquilibriumMethod { numeric, paper_formula };

const char* to_string(EquilibriumMethod m);

/// A collinear equilibrium candidate on the x axis (y = z = 0).
struct EquilibriumPoint {
  double x = 0.0;
  double residual = 0.0;  ///< Omega_x evaluated at x
  EquilibriumMethod method = EquilibriumMethod::numeric;
  std::optional<std::array<double, 2>> bracket;  ///< search interval, numeric only
};

/// Omega_x restricted to the x axis:
///   n^2 x - 2k (x + mu) - mu (x + mu - 1) / |x + mu - 1|^3.
double axis_gradient(double x, const ModelParams& par);

inline constexpr double kRootResidualTol = 1e-12;
inline constexpr int kRootMaxIter = 200;

/// Root of axis_gradient inside [lo, hi] by Brent's method (bisection with
/// secant / inverse-quadratic acceleration). The returned point carries a
/// residual certificate |Omega_x(x*)| <= 1e-12 (1 + |x*|); a root that can not
/// be polished below that bound raises ConvergenceError.
EquilibriumPoint find_equilibrium_numeric(const ModelParams& par, double lo, double hi);

/// All axis equilibria found by sampling [x_min, x_max] on a uniform grid and
/// refining every sign change. The grid is split at the singular abscissa
/// x = 1 - mu so no cell straddles the pole. Results sorted ascending in x.
std::vector<EquilibriumPoint> scan_axis_equilibria(const ModelParams& par, double x_min,
                                                   double x_max, int samples);

inline constexpr double kDefaultScanMin = -0.999;
inline constexpr double kDefaultScanMax = 0.999;
inline constexpr int kDefaultScanSamples = 4096;

/// First-order closed-form location x = (1 - 3/2 a1 + 4k) mu. Kept as a
/// separate, comparable path; its residual is reported, not constrained.
EquilibriumPoint paper_equilibrium(const ModelParams& par);

/// The numeric equilibrium nearest the shell centre (-mu, 0, 0), from a
/// default-range scan. This is the point whose stability the model is about;
/// raises NoSignChangeError when the scan finds no root at all.
EquilibriumPoint primary_equilibrium(const ModelParams& par);

}  // namespace robe
