#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robe/model.hpp"

namespace robe {

/// Roots in A of the vanishing-discriminant condition for the planar
/// biquadratic, ordered a_minus <= a_plus.
struct DiscriminantRoots {
  double a_plus = 0.0;
  double a_minus = 0.0;
};

/// First-order printed forms: A+ = 8/9 + (4/3) a1 - 4k, A- = 4k.
DiscriminantRoots discriminant_roots_paper(double a1, double k);

/// Exact roots of the expanded condition 9 A^2 - 8 n^2 A + 32 n^2 k = 0.
/// (The source text prints the constant term as 3 n^2 k, but only 32 n^2 k is
/// consistent with both the expansion and the first-order roots above; both
/// labelled forms are exposed, nothing is silently replaced.)
/// Raises NoRealRootError when n^2 < 18 k.
DiscriminantRoots discriminant_roots_exact(double n_sq, double k);

/// All four closed-form critical-mass branches, labelled by the sign chosen
/// in the quadratic inversion (p/m) and by which discriminant root is
/// substituted (p = A+, m = A-).
struct CriticalMassReport {
  double a1 = 0.0;
  double k = 0.0;
  DiscriminantRoots paper_roots;
  std::optional<DiscriminantRoots> exact_roots;  ///< absent when no real roots
  double mu_pp = 0.0;  ///< -(8/9 + 4/3 a1 - 4k)
  double mu_pm = 0.0;  ///< -4k
  double mu_mp = 0.0;  ///< -2/(12 - 9 a1 + 24k) + (8/9 + 4/3 a1 - 4k)
  double mu_mm = 0.0;  ///< -2/(12 - 9 a1 + 24k) + 4k
  /// The admissible branch the closed-form analysis selects (mu_pp). The sign
  /// is preserved; range tests compare magnitudes.
  double mu_admissible = 0.0;
  std::optional<double> mu_numeric;
  std::optional<std::array<double, 2>> numeric_bracket;
  std::vector<std::string> methods;
};

/// Closed-form pipeline only (branches + admissible value). Raises
/// std::domain_error when the common denominator 12 - 9 a1 + 24k vanishes.
CriticalMassReport critical_mass_paper(double a1, double k);

inline constexpr double kMuBisectTol = 1e-10;

/// Numeric ground truth: locate the zero crossing of the planar discriminant
/// D(mu) = p^2 - 4q along mu at fixed (a1, k), where p, q come from the
/// numeric linearization at the numerically located equilibrium. Returns
/// nullopt when D has the same sign at both ends of [mu_lo, mu_hi].
std::optional<double> critical_mass_numeric(double a1, double k, double mu_lo, double mu_hi);

/// D(mu) evaluated through the numeric pipeline (exposed for scans/oracles).
double discriminant_at_mu(double mu, double a1, double k);

}  // namespace robe
