#include "librate/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace librate {

namespace {

using cplx = std::complex<double>;

cplx eval_quartic(const CharCoeffs& co, cplx z) {
  return (((z + co.a) * z + co.b) * z + co.c) * z + co.d;
}

void sort_roots(std::array<cplx, 4>& r) {
  std::sort(r.begin(), r.end(), [](const cplx& u, const cplx& v) {
    double au = std::abs(u.imag()), av = std::abs(v.imag());
    if (au != av) return au < av;
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
  });
}

StabilityReport make_report(const CharCoeffs& co, std::array<cplx, 4> roots,
                            RootMethod method) {
  sort_roots(roots);
  double worst = 0;
  for (const auto& z : roots) worst = std::max(worst, std::abs(eval_quartic(co, z)));
  StabilityReport rep;
  rep.roots = roots;
  rep.method = method;
  rep.classification = classify_roots(roots);
  rep.max_residual = worst;
  return rep;
}

}  // namespace

Classification classify_roots(const std::array<cplx, 4>& roots, double re_tol) {
  double scale = 1;
  for (const auto& z : roots) scale = std::max(scale, std::abs(z));
  for (const auto& z : roots)
    if (z.real() > re_tol) return Classification::Unstable;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-8 * scale)
        return Classification::Marginal;
  return Classification::Stable;
}

CharCoeffs char_coeffs(const SystemParams& p, const EquilibriumPoint& pt) {
  const auto d = derive(p);
  if (p.q1 == 0)
    throw DegenerateInput("characteristic coefficients need q1 > 0");

  const auto rr = distances(p, pt.x, pt.y);
  const double r1sq = rr.r1 * rr.r1;
  const double r1cb = r1sq * rr.r1;
  const double r2sq = rr.r2 * rr.r2;
  const double r2cb = r2sq * rr.r2;
  const double r1p4 = r1sq * r1sq;
  const double r1p5 = r1p4 * rr.r1;
  const double r2p5 = r2cb * r2sq;
  const double n2 = d.n * d.n;
  const double ysq = pt.y * pt.y;
  const double dx1 = pt.x + p.mu;
  const double ob = 1 + 2.5 * p.a2 / r2sq;

  CharCoeffs co;
  co.g_aux = (1 - p.a2) * (1 - d.delta * d.delta * (1 - p.a2) / 4);
  co.f_aux = (1 - p.mu) * p.q1 / r1cb +
             p.mu / r2cb * (1 + 1.5 * p.a2 / r2sq);
  co.e_aux = p.mu * p.a2 / r2p5 + p.mu / (r1sq * r2p5) * ob * ysq;

  const bool triangular = pt.label == "L4" || pt.label == "L5";
  if (d.w1 == 0 && triangular) {
    // At the exact no-drag triangular point r2 = 1 identically, and the
    // reduced block below is exact; using it keeps the stability flip at the
    // critical mass ratio exact as well.
    co.a = 0;
    co.c = 0;
    co.f_aux = n2;
    co.b = n2 - 3 * p.mu * p.a2;
    co.d = 9 * p.mu * (1 - p.mu) * co.g_aux;
    return co;
  }

  co.a = 3 * d.w1 / r1sq;
  co.b = 2 * n2 - co.f_aux - 3 * p.mu * p.a2 / r2p5 +
         2 * d.w1 * d.w1 / r1p4;
  co.c = -co.a * (1 + co.e_aux);
  co.d = (n2 - co.f_aux) * (n2 + 2 * co.f_aux - 3 * p.mu * p.a2 / r2p5) +
         9 * p.mu * (1 - p.mu) * p.q1 / (r1p5 * r2p5) * ob * ysq -
         6 * d.n * d.w1 / (r1p4 * r2p5) * ob * (dx1 * (dx1 - 1) + ysq);
  return co;
}

StabilityReport roots_no_drag(const CharCoeffs& co) {
  if (co.a != 0 || co.c != 0)
    throw std::invalid_argument("no-drag root formula needs a = c = 0");
  cplx disc = std::sqrt(cplx(co.b * co.b - 4 * co.d, 0));
  cplx l2fast = (-co.b - disc) / 2.0;  // larger |lambda^2|
  cplx l2slow = (-co.b + disc) / 2.0;
  cplx rf = std::sqrt(l2fast), rs = std::sqrt(l2slow);
  return make_report(co, {rf, -rf, rs, -rs}, RootMethod::NoDrag);
}

StabilityReport roots_ferrari(const CharCoeffs& co) {
  if (co.a == 0) {
    auto rep = roots_no_drag(co);
    rep.method = RootMethod::FerrariSeries;
    return rep;
  }
  const double disc = co.b * co.b - 4 * co.d;
  if (disc == 0)
    throw DegenerateInput("series pivot b^2 - 4d vanishes");
  const double e = co.e_aux;
  const double alpha1 = ((1 + e) * (1 + e + co.b) + co.d) / (2 * disc);
  if (std::abs(alpha1 * co.a * co.a) > 0.1 * std::abs(co.b))
    throw SeriesInvalid("drag coefficient too large for the series solver");
  const double s2 = 1 + 8 * alpha1;
  if (s2 <= 0)
    throw DegenerateInput("series discriminant is not positive");
  const double s = std::sqrt(s2);
  const double l = co.b / 2 + alpha1 * co.a * co.a;
  const double b1 = l * (1 + 1 / s) + (1 + e) / s;
  const double b2 = l * (1 - 1 / s) - (1 + e) / s;
  const double mp = co.a * (1 + s) / 4;
  const double mm = co.a * (1 - s) / 4;
  cplx rad1 = std::sqrt(cplx(mp * mp - b1, 0));
  cplx rad2 = std::sqrt(cplx(mm * mm - b2, 0));
  return make_report(
      co, {-mp + rad1, -mp - rad1, -mm + rad2, -mm - rad2},
      RootMethod::FerrariSeries);
}

StabilityReport roots_oracle(const CharCoeffs& co) {
  std::array<cplx, 4> z;
  const cplx seed(0.4, 0.9);
  cplx acc = 1;
  for (auto& zi : z) {
    acc *= seed;
    zi = acc;
  }
  const double target = 1e-12 * std::max(1.0, std::abs(co.d));
  bool converged = false;
  for (int iter = 0; iter < 500 && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < 4; ++i) {
      cplx denom = 1;
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (std::abs(denom) < 1e-100) {
        z[i] += cplx(1e-8, 1e-8);
        converged = false;
        continue;
      }
      cplx pv = eval_quartic(co, z[i]);
      z[i] -= pv / denom;
      if (std::abs(eval_quartic(co, z[i])) > target) converged = false;
    }
  }
  if (!converged) {
    double worst = 0;
    for (const auto& zi : z)
      worst = std::max(worst, std::abs(eval_quartic(co, zi)));
    if (worst > target)
      throw NoConvergence("root iteration missed its residual target");
  }
  return make_report(co, z, RootMethod::Oracle);
}

CriticalMass critical_mass(int k, double q1, double a2) {
  if (k < 1) throw std::invalid_argument("resonance order k must be >= 1");
  if (!(q1 >= 0 && q1 <= 1))
    throw std::invalid_argument("q1 must lie in [0, 1]");
  if (!(a2 >= 0)) throw std::invalid_argument("a2 must be >= 0");

  const double q23 = std::cbrt(q1) * std::cbrt(q1);
  const double g = (1 - a2) * (1 - q23 * (1 - a2) / 4);
  const double kk = static_cast<double>(k) * k;
  const double K = kk / ((kk + 1) * (kk + 1));
  const double rad = 9 * g - 4 * K + 9 * K * a2 * a2;
  if (g < 0 || rad < 0)
    throw DegenerateInput("negative radicand in critical mass ratio");

  CriticalMass cm;
  cm.k = k;
  cm.K = K;
  cm.mu_k = (3 * g + 2 * K * a2 + 3 * K * a2 * a2 -
             std::sqrt(g) * std::sqrt(rad)) /
            (6 * (g + K * a2 * a2));
  const double b = 1 + 1.5 * a2 - 3 * cm.mu_k * a2;
  cm.omega2 = std::sqrt(b / (kk + 1));
  cm.omega1 = k * cm.omega2;
  return cm;
}

double critical_mass_series(int k, double a2, double eps) {
  switch (k) {
    case 1:
      return 0.0385208965 + 0.6755841373 * a2 - 0.0089174706 * eps;
    case 2:
      return 0.0242938971 + 0.4322031625 * a2 - 0.0055364958 * eps;
    case 3:
      return 0.0135160160 + 0.2430452832 * a2 - 0.0030452832 * eps;
    default:
      throw std::invalid_argument("series expansions cover k = 1, 2, 3");
  }
}

double routh_boundary(double q1, double a2) {
  if (!(q1 >= 0 && q1 <= 1))
    throw std::invalid_argument("q1 must lie in [0, 1]");
  if (!(a2 >= 0)) throw std::invalid_argument("a2 must be >= 0");
  const double q23 = std::cbrt(q1) * std::cbrt(q1);
  const double g = (1 - a2) * (1 - q23 * (1 - a2) / 4);
  const double n2 = 1 + 1.5 * a2;
  auto margin = [&](double mu) {
    const double b = n2 - 3 * mu * a2;
    return b * b - 36 * mu * (1 - mu) * g;
  };
  double lo = 1e-12, hi = 0.5 - 1e-12;
  if (!(margin(lo) > 0 && margin(hi) < 0))
    throw NoConvergence("stability margin has no sign change in mu");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (margin(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

StabilityReport classify_point(const SystemParams& p,
                               const EquilibriumPoint& pt, SolveMethod method,
                               double re_tol) {
  const auto d = derive(p);
  const auto co = char_coeffs(p, pt);
  StabilityReport rep;
  switch (method) {
    case SolveMethod::NoDrag:
      rep = roots_no_drag(co);
      break;
    case SolveMethod::Ferrari:
      rep = roots_ferrari(co);
      break;
    case SolveMethod::Oracle:
      rep = roots_oracle(co);
      break;
    case SolveMethod::Auto:
      if (d.w1 == 0) {
        rep = roots_no_drag(co);
      } else {
        try {
          rep = roots_ferrari(co);
        } catch (const SeriesInvalid&) {
          rep = roots_oracle(co);
        }
      }
      break;
  }
  rep.classification = classify_roots(rep.roots, re_tol);
  return rep;
}

}  // namespace librate
