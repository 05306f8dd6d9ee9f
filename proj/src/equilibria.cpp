#include "robe/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace robe {

const char* to_string(EquilibriumMethod m) {
  return m == EquilibriumMethod::numeric ? "numeric" : "paper_formula";
}

double axis_gradient(double x, const ModelParams& par) {
  const double d = x + par.mu - 1.0;
  if (d == 0.0) throw SingularityError("axis_gradient: x coincides with the secondary");
  const double ad = std::abs(d);
  return par.n_sq() * x - 2.0 * par.k * (x + par.mu) - par.mu * d / (ad * ad * ad);
}

namespace {

// Brent-Dekker on f(x) = axis_gradient(x). Derivative-free, keeps a bracket
// at every step, so it is immune to the pole as long as the initial bracket
// does not straddle it.
double brent_root(const ModelParams& par, double a, double b, double fa, double fb) {
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < kRootMaxIter; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 1e-16;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;  // bisection
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qa = fa / fc, rb = fb / fc;
        p = s * (2.0 * m * qa * (qa - rb) - (b - a) * (rb - 1.0));
        q = (qa - 1.0) * (rb - 1.0) * (s - 1.0);
      }
      if (p > 0.0)
        q = -q;
      else
        p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = axis_gradient(b, par);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
  }
  throw ConvergenceError("find_equilibrium_numeric: no convergence in 200 iterations");
}

}  // namespace

EquilibriumPoint find_equilibrium_numeric(const ModelParams& par, double lo, double hi) {
  if (!(lo < hi)) throw std::domain_error("find_equilibrium_numeric: bracket must satisfy lo < hi");
  const double xs = 1.0 - par.mu;
  if (lo == xs || hi == xs)
    throw std::domain_error("find_equilibrium_numeric: bracket endpoint sits on the singularity");
  if ((lo < xs) != (hi < xs))
    throw std::domain_error("find_equilibrium_numeric: bracket straddles the singularity x = 1 - mu");
  double fa = axis_gradient(lo, par);
  double fb = axis_gradient(hi, par);
  if (fa == 0.0) return EquilibriumPoint{lo, 0.0, EquilibriumMethod::numeric, {{lo, hi}}};
  if (fb == 0.0) return EquilibriumPoint{hi, 0.0, EquilibriumMethod::numeric, {{lo, hi}}};
  if ((fa > 0.0) == (fb > 0.0))
    throw NoSignChangeError("find_equilibrium_numeric: axis gradient has the same sign at both bracket endpoints");
  const double root = brent_root(par, lo, hi, fa, fb);
  const double res = axis_gradient(root, par);
  if (std::abs(res) > kRootResidualTol * (1.0 + std::abs(root)))
    throw ConvergenceError("find_equilibrium_numeric: residual certificate not met");
  return EquilibriumPoint{root, res, EquilibriumMethod::numeric, {{lo, hi}}};
}

namespace {

void scan_segment(const ModelParams& par, double lo, double hi, int samples,
                  std::vector<EquilibriumPoint>& out) {
  if (!(lo < hi) || samples < 2) return;
  double xp = lo;
  double fp = axis_gradient(xp, par);
  for (int i = 1; i < samples; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
    const double f = axis_gradient(x, par);
    if (fp == 0.0) {
      out.push_back(EquilibriumPoint{xp, 0.0, EquilibriumMethod::numeric, {{xp, x}}});
    } else if ((fp > 0.0) != (f > 0.0)) {
      out.push_back(find_equilibrium_numeric(par, xp, x));
    }
    xp = x;
    fp = f;
  }
  if (fp == 0.0) out.push_back(EquilibriumPoint{xp, 0.0, EquilibriumMethod::numeric, {{xp, xp}}});
}

}  // namespace

std::vector<EquilibriumPoint> scan_axis_equilibria(const ModelParams& par, double x_min,
                                                   double x_max, int samples) {
  if (!(x_min < x_max)) throw std::domain_error("scan_axis_equilibria: need x_min < x_max");
  if (samples < 100) throw std::domain_error("scan_axis_equilibria: need at least 100 samples");
  std::vector<EquilibriumPoint> out;
  const double xs = 1.0 - par.mu;
  if (xs > x_min && xs < x_max) {
    // Split at the pole; the margin keeps the endpoint samples finite.
    const double margin = 1e-9 * (1.0 + std::abs(xs));
    const double span = x_max - x_min;
    const int left = std::max(2, static_cast<int>(samples * (xs - x_min) / span));
    const int right = std::max(2, samples - left);
    scan_segment(par, x_min, xs - margin, left, out);
    scan_segment(par, xs + margin, x_max, right, out);
  } else {
    scan_segment(par, x_min, x_max, samples, out);
  }
  std::sort(out.begin(), out.end(),
            [](const EquilibriumPoint& a, const EquilibriumPoint& b) { return a.x < b.x; });
  // A root landing exactly on a grid node shows up in two adjacent cells.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const EquilibriumPoint& a, const EquilibriumPoint& b) {
                          return std::abs(a.x - b.x) <= 1e-11 * (1.0 + std::abs(a.x));
                        }),
            out.end());
  return out;
}

EquilibriumPoint paper_equilibrium(const ModelParams& par) {
  const double x = (1.0 - 1.5 * par.a1 + 4.0 * par.k) * par.mu;
  double res = std::numeric_limits<double>::quiet_NaN();
  if (x + par.mu - 1.0 != 0.0) res = axis_gradient(x, par);
  return EquilibriumPoint{x, res, EquilibriumMethod::paper_formula, std::nullopt};
}

EquilibriumPoint primary_equilibrium(const ModelParams& par) {
  const auto roots = scan_axis_equilibria(par, kDefaultScanMin, kDefaultScanMax, kDefaultScanSamples);
  if (roots.empty())
    throw NoSignChangeError("primary_equilibrium: no axis equilibrium in the default scan range");
  const double center = -par.mu;
  const auto best = std::min_element(roots.begin(), roots.end(),
                                     [center](const EquilibriumPoint& a, const EquilibriumPoint& b) {
                                       return std::abs(a.x - center) < std::abs(b.x - center);
                                     });
  return *best;
}

}  // namespace robe
