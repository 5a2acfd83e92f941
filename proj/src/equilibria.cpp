#include "librate/equilibria.hpp"

#include <cmath>
#include <limits>

namespace librate {

namespace {

double rest_residual(const SystemParams& p, double x, double y) {
  try {
    auto g = grad_at_rest(p, x, y);
    return std::hypot(g.ux, g.uy);
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

// On-axis force n^2 x - (1-mu) q1 (x+mu)/|x+mu|^3 - ... ; the rest-frame drag
// term contributes nothing to Ux at y = 0, so grad_at_rest evaluates it.
double axis_force(const SystemParams& p, double x) {
  return grad_at_rest(p, x, 0.0).ux;
}

// The on-axis force is strictly monotone within each region, so a sign
// change brackets the unique root there.
double axis_root(const SystemParams& p, double lo, double hi,
                 const std::string& label) {
  double flo = axis_force(p, lo);
  double fhi = axis_force(p, hi);
  if (!(flo < 0) == !(fhi < 0))
    throw NoConvergence("no on-axis sign change bracketing " + label);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = axis_force(p, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct AxisSeed {
  double x;
  double y;  // drag-scale magnitude, positive
};

// Seed y at the drag-to-stiffness ratio n w1 r1^2 / |f - n^2|, the scale of
// the true off-axis displacement.
AxisSeed axis_seed(const SystemParams& p, double lo, double hi,
                   const std::string& label) {
  const auto d = derive(p);
  double x = axis_root(p, lo, hi, label);
  if (d.w1 == 0) return {x, 0.0};
  auto rr = distances(p, x, 0.0);
  double f = (1 - p.mu) * p.q1 / (rr.r1 * rr.r1 * rr.r1) +
             p.mu / (rr.r2 * rr.r2 * rr.r2) *
                 (1 + 1.5 * p.a2 / (rr.r2 * rr.r2));
  double stiff = std::abs(f - d.n * d.n);
  if (stiff == 0) throw DegenerateInput("vanishing stiffness at axis root");
  return {x, d.n * d.w1 * rr.r1 * rr.r1 / stiff};
}

constexpr double kEdge = 1e-6;  // keeps brackets off the primaries

AxisSeed axis_seed_l1(const SystemParams& p) {
  return axis_seed(p, -p.mu + kEdge, 1 - p.mu - kEdge, "L1");
}
AxisSeed axis_seed_l2(const SystemParams& p) {
  return axis_seed(p, 1 - p.mu + kEdge, 3.0, "L2");
}
AxisSeed axis_seed_l3(const SystemParams& p) {
  return axis_seed(p, -3.0, -p.mu - kEdge, "L3");
}

EquilibriumPoint make_estimate(const SystemParams& p, const std::string& label,
                               double x, double y) {
  EquilibriumPoint pt;
  pt.label = label;
  pt.x = x;
  pt.y = y;
  pt.residual = rest_residual(p, x, y);
  pt.provenance = Provenance::AnalyticEstimate;
  return pt;
}

}  // namespace

TriangularExpansion triangular_expansion(const SystemParams& p, bool south) {
  const auto d = derive(p);
  if (p.q1 == 0)
    throw DegenerateInput("triangular geometry collapses at q1 = 0");
  TriangularExpansion t;
  const double d2 = d.delta * d.delta;
  t.x0 = d2 / 2 - p.mu;
  t.y0 = (south ? -1 : 1) * d.delta * std::sqrt(1 - d2 / 4);
  t.eps2 = d.n * d.w1 * (1 - 2.5 * p.a2) / (3 * p.mu * t.y0);
  t.eps1 = -d.n * d.w1 / (6 * (1 - p.mu) * t.y0) - p.a2 / 2;
  t.gamma = 1 - 2 * p.mu;
  t.eps = 1 - p.q1;
  return t;
}

std::vector<EquilibriumPoint> triangular_estimates(const SystemParams& p,
                                                   TriangularForm form) {
  const auto d = derive(p);
  if (p.q1 == 0)
    throw DegenerateInput("triangular estimates are indeterminate at q1 = 0");

  std::vector<EquilibriumPoint> out;
  for (bool south : {false, true}) {
    double x = 0, y = 0;
    switch (form) {
      case TriangularForm::Perturbed: {
        const auto t = triangular_expansion(p, south);
        const double d2 = d.delta * d.delta;
        const double nx = (1 - p.mu) * (1 + 2.5 * p.a2) +
                          p.mu * (1 - p.a2 / 2) * (d2 / 2);
        x = t.x0 - (d2 / 2) * p.a2 -
            d.n * d.w1 * nx / (3 * p.mu * (1 - p.mu) * t.y0);
        const double ny = 2 * p.mu - 1 - p.mu * (1 - 1.5 * p.a2) * (d2 / 2) +
                          3.5 * (1 - p.mu) * p.a2;
        const double s = 1 -
                         d2 * (1 - d2 / 2) * p.a2 * p.a2 / (t.y0 * t.y0) -
                         d.n * d.w1 * d2 * ny /
                             (3 * p.mu * (1 - p.mu) * t.y0 * t.y0 * t.y0);
        if (s <= 0)
          throw DegenerateInput("triangular y radicand is not positive");
        y = t.y0 * std::sqrt(s);
        break;
      }
      case TriangularForm::NoDrag: {
        const double d2 = d.delta * d.delta;
        x = d.delta / 2 - p.mu - d.delta * p.a2 / 2;
        y = d.delta *
            (std::sqrt(1 - d2 / 4) - (1 - d2 / 2) * (1 + d2 / 4) * p.a2);
        if (south) y = -y;
        break;
      }
      case TriangularForm::Series: {
        const double gamma = 1 - 2 * p.mu;
        const double eps = 1 - p.q1;
        const double s3 = std::sqrt(3.0);
        const double sgn = south ? -1 : 1;
        x = gamma / 2 - eps / 3 - p.a2 / 2 + p.a2 * eps / 3 -
            sgn * ((9 + gamma) / (6 * s3)) * d.n * d.w1 -
            sgn * (4 * gamma * eps / (27 * s3)) * d.n * d.w1;
        y = (s3 / 2) * (1 - 2 * eps / 9 - p.a2 / 3 - 2 * p.a2 * eps / 9 +
                        sgn * ((1 + gamma) / (9 * s3)) * d.n * d.w1 -
                        sgn * (4 * gamma * eps / (27 * s3)) * d.n * d.w1);
        if (south) y = -y;
        break;
      }
    }
    out.push_back(make_estimate(p, south ? "L5" : "L4", x, y));
  }
  return out;
}

std::vector<EquilibriumPoint> collinear_estimates(const SystemParams& p,
                                                  CollinearForm form,
                                                  double y_seed) {
  const auto d = derive(p);
  if (p.q1 == 0)
    throw DegenerateInput("collinear estimates are indeterminate at q1 = 0");

  // Inner-branch and far-branch points share the radius expression around the
  // radiating primary; each gets its own drag-scale y.
  auto y_for = [&](const AxisSeed& s) { return y_seed > 0 ? y_seed : s.y; };

  auto drag_over = [&](double denom_scale, double y) -> double {
    // n w1 / (denom_scale * y) with the w1 = 0 limit taken first.
    if (d.w1 == 0) return 0.0;
    double denom = denom_scale * y;
    double v = d.n * d.w1 / denom;
    if (denom == 0 || !std::isfinite(v))
      throw DegenerateInput("drag bracket denominator underflow");
    return v;
  };

  auto r1_squared = [&](double y) -> double {
    const double base = std::cbrt(p.q1 / (d.n * d.n));
    if (form == CollinearForm::Closed) {
      double br = 1 + drag_over(2 * (1 - p.mu), y) + 1.5 * p.a2;
      if (br <= 0) throw DegenerateInput("radius bracket is not positive");
      return base * base * std::pow(br, -2.0 / 3.0);
    }
    double r1 = base * (1 - drag_over(6 * (1 - p.mu), y));
    return r1 * r1;
  };

  auto inner_x = [&](double y, double sign) -> double {
    double rad = r1_squared(y) - y * y;
    if (rad <= 0) throw DegenerateInput("collinear x radicand is not positive");
    return -p.mu + sign * std::sqrt(rad);
  };

  const auto s1 = axis_seed_l1(p);
  const auto s2 = axis_seed_l2(p);
  const auto s3 = axis_seed_l3(p);

  std::vector<EquilibriumPoint> out;
  double y1 = y_for(s1);
  out.push_back(make_estimate(p, "L1", inner_x(y1, +1), y1));

  // Far branch around the secondary: the bracket demands the y sign that
  // keeps it positive (negative y when drag is on).
  double y2 = y_for(s2);
  double x2 = 0, y2_used = y2;
  bool done = false;
  for (double y : {y2, -y2}) {
    double br = 1 - drag_over(p.mu, y) * (1 - 2.5 * p.a2);
    if (d.w1 != 0 && br <= 0) continue;
    double r2 = std::pow(br, -1.0 / 3.0);
    double rad = r2 * r2 - y * y;
    if (rad <= 0) continue;
    x2 = 1 - p.mu + std::sqrt(rad);
    y2_used = y;
    done = true;
    break;
  }
  if (!done) throw DegenerateInput("far-branch bracket is not positive");
  out.push_back(make_estimate(p, "L2", x2, y2_used));

  double y3 = y_for(s3);
  out.push_back(make_estimate(p, "L3", inner_x(y3, -1), y3));
  return out;
}

EquilibriumPoint refine(const SystemParams& p, const EquilibriumPoint& seed,
                        double tol, int max_iter) {
  derive(p);
  const long double h = 1e-7L;
  auto field = [&](long double x, long double y) {
    return detail::grad_eval<long double>(p, x, y, 0.0L, 0.0L,
                                          kCollisionFloor);
  };

  long double x = seed.x, y = seed.y;
  auto g = field(x, y);
  long double res = std::hypot(g.ux, g.uy);
  int it = 0;
  int polish = 2;  // full steps taken after first hitting tolerance
  for (; it < max_iter; ++it) {
    if (res < static_cast<long double>(tol)) {
      if (polish == 0) break;
      --polish;
    }
    auto gxp = field(x + h, y), gxm = field(x - h, y);
    auto gyp = field(x, y + h), gym = field(x, y - h);
    long double j11 = (gxp.ux - gxm.ux) / (2 * h);
    long double j12 = (gyp.ux - gym.ux) / (2 * h);
    long double j21 = (gxp.uy - gxm.uy) / (2 * h);
    long double j22 = (gyp.uy - gym.uy) / (2 * h);
    long double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(static_cast<double>(det)) ||
        std::abs(det) < 1e-30L)
      throw DegenerateInput("singular Jacobian refining " + seed.label);
    long double dx = -(j22 * g.ux - j12 * g.uy) / det;
    long double dy = -(j11 * g.uy - j21 * g.ux) / det;

    // Damping: halve the step only when the residual blows up.  A moderate
    // transient rise must be allowed: at small mu the triangular Jacobians
    // are nearly singular, and the Newton path dips through residual bumps
    // that a monotone line search would stall on.
    bool moved = false;
    long double step = 1;
    for (int t = 0; t < 30; ++t) {
      long double xn = x + step * dx, yn = y + step * dy;
      auto gn = field(xn, yn);
      long double rn = std::hypot(gn.ux, gn.uy);
      if (std::isfinite(static_cast<double>(rn)) && rn <= 100 * res) {
        x = xn;
        y = yn;
        g = gn;
        res = rn;
        moved = true;
        break;
      }
      step /= 2;
    }
    if (!moved) {
      if (res < static_cast<long double>(tol)) break;  // at the rounding floor
      throw NoConvergence("refinement stalled at " + seed.label);
    }
  }
  if (!(res < static_cast<long double>(tol)))
    throw NoConvergence("refinement did not reach tolerance at " + seed.label);

  EquilibriumPoint pt;
  pt.label = seed.label.empty() ? region_label(p, static_cast<double>(x),
                                               static_cast<double>(y))
                                : seed.label;
  pt.x = static_cast<double>(x);
  pt.y = static_cast<double>(y);
  pt.residual = static_cast<double>(res);
  pt.provenance = Provenance::Refined;
  pt.converged = true;
  pt.iterations = it;
  return pt;
}

std::vector<EquilibriumPoint> find_all(const SystemParams& p) {
  derive(p);
  std::vector<EquilibriumPoint> out;

  auto push_refined = [&](const EquilibriumPoint& seed) {
    try {
      out.push_back(refine(p, seed));
    } catch (const Error&) {
      EquilibriumPoint failed = seed;
      failed.converged = false;
      out.push_back(failed);
    }
  };

  auto push_failed = [&](const std::string& label) {
    EquilibriumPoint failed;
    failed.label = label;
    failed.x = failed.y = failed.residual =
        std::numeric_limits<double>::quiet_NaN();
    failed.converged = false;
    out.push_back(failed);
  };

  using SeedFn = AxisSeed (*)(const SystemParams&);
  const std::pair<const char*, SeedFn> collinear[] = {
      {"L1", axis_seed_l1}, {"L2", axis_seed_l2}, {"L3", axis_seed_l3}};
  for (auto [label, fn] : collinear) {
    try {
      AxisSeed s = fn(p);
      EquilibriumPoint seed;
      seed.label = label;
      seed.x = s.x;
      seed.y = s.y;
      push_refined(seed);
    } catch (const Error&) {
      push_failed(label);
    }
  }

  try {
    for (const auto& seed : triangular_estimates(p, TriangularForm::Perturbed))
      push_refined(seed);
  } catch (const Error&) {
    push_failed("L4");
    push_failed("L5");
  }
  return out;
}

std::string region_label(const SystemParams& p, double x, double y) {
  if (x <= -p.mu) return "L3";
  if (x >= 1 - p.mu) return "L2";
  if (std::abs(y) > 0.1) return y > 0 ? "L4" : "L5";
  return "L1";
}

}  // namespace librate
