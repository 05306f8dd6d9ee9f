#include "robe/critical_mass.hpp"

#include <cmath>

#include "robe/equilibria.hpp"
#include "robe/stability.hpp"

namespace robe {

DiscriminantRoots discriminant_roots_paper(double a1, double k) {
  return {8.0 / 9.0 + (4.0 / 3.0) * a1 - 4.0 * k, 4.0 * k};
}

DiscriminantRoots discriminant_roots_exact(double n_sq, double k) {
  if (!(n_sq > 0.0)) throw std::domain_error("discriminant_roots_exact: n_sq must be positive");
  // 9 A^2 - 8 n^2 A + 32 n^2 k = 0
  const double disc = 64.0 * n_sq * n_sq - 4.0 * 9.0 * 32.0 * n_sq * k;
  if (disc < 0.0)
    throw NoRealRootError("discriminant_roots_exact: no real roots (n^2 < 18 k)");
  const double sq = std::sqrt(disc);
  // Same cancellation-free pattern as the quartic path: big root by sign,
  // small root from the product 32 n^2 k / 9.
  const double big = (8.0 * n_sq + sq) / 18.0;  // n_sq > 0, so -b is negative: big root is +
  double small;
  if (big != 0.0)
    small = (32.0 * n_sq * k / 9.0) / big;
  else
    small = 0.0;
  return {std::max(big, small), std::min(big, small)};
}

CriticalMassReport critical_mass_paper(double a1, double k) {
  const double den = 12.0 - 9.0 * a1 + 24.0 * k;
  if (den == 0.0)
    throw std::domain_error("critical_mass_paper: degenerate denominator 12 - 9 a1 + 24 k = 0");
  CriticalMassReport rep;
  rep.a1 = a1;
  rep.k = k;
  rep.paper_roots = discriminant_roots_paper(a1, k);
  try {
    rep.exact_roots = discriminant_roots_exact(1.0 + 1.5 * a1, k);
  } catch (const NoRealRootError&) {
    rep.exact_roots = std::nullopt;
  }
  const double aplus_form = 8.0 / 9.0 + (4.0 / 3.0) * a1 - 4.0 * k;
  rep.mu_pp = -aplus_form;
  rep.mu_pm = -4.0 * k;
  rep.mu_mp = -2.0 / den + aplus_form;
  rep.mu_mm = -2.0 / den + 4.0 * k;
  rep.mu_admissible = rep.mu_pp;
  rep.methods = {"paper"};
  return rep;
}

double discriminant_at_mu(double mu, double a1, double k) {
  const ModelParams par = make_params(mu, a1, k);
  const EquilibriumPoint eq = primary_equilibrium(par);
  const Linearization lin = linearize(par, eq, Flavor::numeric);
  const auto [p, q] = characteristic_coefficients(lin);
  return p * p - 4.0 * q;
}

std::optional<double> critical_mass_numeric(double a1, double k, double mu_lo, double mu_hi) {
  if (!(mu_lo > 0.0 && mu_lo < mu_hi && mu_hi < 1.0))
    throw std::domain_error("critical_mass_numeric: need 0 < mu_lo < mu_hi < 1");
  double lo = mu_lo, hi = mu_hi;
  double dlo = discriminant_at_mu(lo, a1, k);
  double dhi = discriminant_at_mu(hi, a1, k);
  if (dlo == 0.0) return lo;
  if (dhi == 0.0) return hi;
  if ((dlo > 0.0) == (dhi > 0.0)) return std::nullopt;
  while (hi - lo > kMuBisectTol) {
    const double mid = 0.5 * (lo + hi);
    const double dmid = discriminant_at_mu(mid, a1, k);
    if (dmid == 0.0) return mid;
    if ((dmid > 0.0) == (dlo > 0.0)) {
      lo = mid;
      dlo = dmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace robe
