#include "robe/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace robe {

const char* to_string(Flavor f) {
  return f == Flavor::numeric ? "numeric" : "paper_replica";
}

Flavor flavor_from_string(const std::string& s) {
  if (s == "numeric") return Flavor::numeric;
  if (s == "paper_replica") return Flavor::paper_replica;
  throw std::domain_error("unknown flavor '" + s + "' (expected numeric or paper_replica)");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::unstable: return "unstable";
    default: return "marginal";
  }
}

Linearization linearize(const ModelParams& par, const EquilibriumPoint& eq, Flavor flavor) {
  const double d = eq.x + par.mu - 1.0;
  if (d == 0.0) throw SingularityError("linearize: equilibrium coincides with the secondary");
  const double ad = std::abs(d);
  const double b = par.n_sq() - 2.0 * par.k;
  Linearization lin;
  lin.b_coef = b;
  lin.n_sq = par.n_sq();
  lin.flavor = flavor;
  if (flavor == Flavor::numeric) {
    const Eigen::Matrix3d h = omega_hessian(Eigen::Vector3d(eq.x, 0.0, 0.0), par);
    lin.oxx = h(0, 0);
    lin.oyy = h(1, 1);
    lin.ozz = h(2, 2);
    lin.a_coef = par.mu / (ad * ad * ad);
  } else {
    lin.a_coef = par.mu / (d * d * d);
    lin.oxx = b + 2.0 * lin.a_coef;
    lin.oyy = b - lin.a_coef;
    lin.ozz = -2.0 * par.k - par.mu / (ad * ad * ad);
  }
  return lin;
}

std::pair<double, double> characteristic_coefficients(const Linearization& lin) {
  const double p = -(2.0 * lin.b_coef + lin.a_coef - 4.0 * lin.n_sq);
  const double q = (lin.b_coef - lin.a_coef) * (lin.b_coef + 2.0 * lin.a_coef);
  return {p, q};
}

std::array<std::complex<double>, 4> solve_quartic_even(double p, double q) {
  using C = std::complex<double>;
  const C disc = C(p * p - 4.0 * q, 0.0);
  const C sq = std::sqrt(disc);
  // Cancellation-free quadratic: compute the larger-magnitude root first,
  // recover the other from the product q = Lp * Lm.
  C lam_a, lam_b;
  if (p >= 0.0)
    lam_a = (-p - sq) / 2.0;
  else
    lam_a = (-p + sq) / 2.0;
  if (std::abs(lam_a) > 0.0)
    lam_b = C(q, 0.0) / lam_a;
  else
    lam_b = (-p - (p >= 0.0 ? -sq : sq)) / 2.0;
  // Order by real part so the first pair comes from the larger lambda^2.
  C lp = lam_a, lm = lam_b;
  if (lp.real() < lm.real() || (lp.real() == lm.real() && lp.imag() < lm.imag())) std::swap(lp, lm);
  const C sp = std::sqrt(lp), sm = std::sqrt(lm);
  return {sp, -sp, sm, -sm};
}

std::pair<double, Verdict> vertical_mode(const Linearization& lin) {
  if (std::abs(lin.ozz) <= kMarginalOzzBand) return {lin.ozz, Verdict::marginal};
  return {lin.ozz, lin.ozz < 0.0 ? Verdict::stable : Verdict::unstable};
}

Verdict planar_verdict(const std::complex<double>& lp, const std::complex<double>& lm,
                       double max_re_lambda) {
  if (max_re_lambda > kUnstableReTol) return Verdict::unstable;
  const double imag_band = kLambdaSqPairBand * (1.0 + std::abs(lp) + std::abs(lm));
  const bool real_pair = std::abs(lp.imag()) <= imag_band && std::abs(lm.imag()) <= imag_band;
  const bool negative = lp.real() <= kStableLambdaSqMax && lm.real() <= kStableLambdaSqMax;
  const bool distinct = std::abs(lp - lm) > kLambdaSqPairBand * (1.0 + std::abs(lp) + std::abs(lm));
  if (real_pair && negative && distinct) return Verdict::stable;
  return Verdict::marginal;
}

namespace {

std::array<std::complex<double>, 2> mode_ratio(const std::complex<double>& lambda,
                                               const Linearization& lin) {
  using C = std::complex<double>;
  const double n = std::sqrt(lin.n_sq);
  const C l2 = lambda * lambda;
  // Null vector of [[l^2 - oxx, -2 n l], [2 n l, l^2 - oyy]]: either row works
  // when lambda is a root; take the better conditioned one.
  const C v1[2] = {2.0 * n * lambda, l2 - lin.oxx};
  const C v2[2] = {-(l2 - lin.oyy), 2.0 * n * lambda};
  const double n1 = std::abs(v1[0]) + std::abs(v1[1]);
  const double n2 = std::abs(v2[0]) + std::abs(v2[1]);
  C a, b;
  if (n1 >= n2 && n1 > 0.0) {
    a = v1[0];
    b = v1[1];
  } else if (n2 > 0.0) {
    a = v2[0];
    b = v2[1];
  } else {
    return {C(1.0, 0.0), C(0.0, 0.0)};
  }
  const C pivot = std::abs(a) >= std::abs(b) ? a : b;
  return {a / pivot, b / pivot};
}

}  // namespace

StabilityReport classify(const Linearization& lin) {
  StabilityReport rep;
  const auto [p, q] = characteristic_coefficients(lin);
  rep.p = p;
  rep.q = q;
  rep.discriminant = p * p - 4.0 * q;
  rep.planar_roots = solve_quartic_even(p, q);
  for (int i = 0; i < 4; ++i) rep.mode_ratios[i] = mode_ratio(rep.planar_roots[i], lin);
  rep.max_re_lambda = -std::numeric_limits<double>::infinity();
  for (const auto& r : rep.planar_roots) rep.max_re_lambda = std::max(rep.max_re_lambda, r.real());
  const auto lp = rep.planar_roots[0] * rep.planar_roots[0];
  const auto lm = rep.planar_roots[2] * rep.planar_roots[2];
  rep.verdict_planar = planar_verdict(lp, lm, rep.max_re_lambda);
  const auto [vsq, vv] = vertical_mode(lin);
  rep.vertical_root_sq = vsq;
  rep.verdict_vertical = vv;
  return rep;
}

StabilityReport classify(const ModelParams& par, const EquilibriumPoint& eq, Flavor flavor) {
  return classify(linearize(par, eq, flavor));
}

}  // namespace robe
