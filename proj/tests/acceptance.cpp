// Acceptance harness: runs every shipping criterion against pinned reference
// values and prints one PASS/FAIL line per criterion, with per-cell detail on
// failure. Exit status is nonzero when any criterion fails. The librate CLI
// binary used by the determinism checks is passed via --cli.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "librate/io.hpp"

using namespace librate;

namespace {

using Clock = std::chrono::steady_clock;

std::string g_cli;  // path to the CLI binary, empty when not supplied

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

struct Criterion {
  const char* name = "";
  std::string stats;
  std::vector<std::string> faults;

  void fault(std::string msg) { faults.push_back(std::move(msg)); }
};

bool finish(const Criterion& c) {
  const bool ok = c.faults.empty();
  std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", c.name,
              c.stats.empty() ? "" : " ", c.stats.c_str());
  const size_t cap = 12;
  for (size_t i = 0; i < c.faults.size() && i < cap; ++i)
    std::printf("       %s\n", c.faults[i].c_str());
  if (c.faults.size() > cap)
    std::printf("       ... %zu more\n", c.faults.size() - cap);
  std::fflush(stdout);
  return ok;
}

// Worst pairing distance between two root quadruples under greedy nearest
// matching; the sets compared here are far better separated than any gap we
// tolerate, so greedy matching is exact.
double match_gap(const std::array<std::complex<double>, 4>& a,
                 const std::array<std::complex<double>, 4>& b) {
  std::array<bool, 4> used{};
  double worst = 0;
  for (const auto& ra : a) {
    int best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 4; ++j) {
      if (used[j]) continue;
      double d = std::abs(ra - b[j]);
      if (d < dist) dist = d, best = j;
    }
    used[best] = true;
    if (dist > worst) worst = dist;
  }
  return worst;
}

EquilibriumPoint refined_l4(const SystemParams& p) {
  return refine(p, triangular_estimates(p)[0]);
}

// Jacobi constant at the triangular estimate across a reference grid of
// (a2, q1) cells, 5e-4 absolute; the q1 = 0 column must degenerate.
void c4_reference_grid(Criterion& c) {
  const double kA2[6] = {0, 0.2, 0.4, 0.6, 0.8, 1.0};
  const double kQ1[4] = {1.0, 0.75, 0.5, 0.25};
  const double kC4[6][4] = {
      {2.99997, 2.47643, 1.88988, 1.19058},
      {3.27697, 2.70632, 2.06659, 1.30303},
      {3.51014, 2.89885, 2.21377, 1.3961},
      {3.71975, 3.0698, 2.34214, 1.47515},
      {3.98328, 3.30328, 2.53573, 1.61041},
      {4.62593, 4.06149, 3.42503, 2.62291}};
  const auto t0 = Clock::now();
  SystemParams p;
  const auto curves = c4_curves(p, std::vector<double>(kA2, kA2 + 6),
                                {1.0, 0.75, 0.5, 0.25, 0.0});
  double worst = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double got = curves[i].points[j].values[2];
      const double diff = std::abs(got - kC4[i][j]);
      if (diff > worst) worst = diff;
      if (!(diff <= 5e-4))
        c.fault(strf("a2=%g q1=%g: C=%.9g want %g diff %.2e", kA2[i], kQ1[j],
                     got, kC4[i][j], diff));
    }
    if (!std::isnan(curves[i].points[4].values[2]))
      c.fault(strf("a2=%g q1=0: expected the degenerate marker", kA2[i]));
  }
  const double dt = seconds_since(t0);
  if (!(dt < 1.0)) c.fault(strf("runtime %.3f s exceeds 1 s", dt));
  c.stats = strf("(24 cells, worst |dC| %.2e, %.3f s)", worst, dt);
}

// Triangular point coordinates across the same kind of grid, 5e-4 absolute,
// including the classical corner cell (0.499949, 0.86605).
void triangular_position_reference(Criterion& c) {
  const double kA2[5] = {0, 0.25, 0.5, 0.75, 1.0};
  const double kQ1[4] = {1.0, 0.75, 0.5, 0.25};
  const double kX4[5][4] = {
      {0.499949, 0.412692, 0.314934, 0.198383},
      {0.374929, 0.30949, 0.236175, 0.148765},
      {0.249906, 0.206284, 0.157412, 0.099146},
      {0.12488, 0.103076, 0.0786479, 0.0495247},
      {-0.000148407, -0.000134579, -0.000118667, -0.0000980564}};
  const double kY4[5][4] = {
      {0.86605, 0.809425, 0.728552, 0.597927},
      {0.847795, 0.790465, 0.709777, 0.581035},
      {0.790543, 0.73068, 0.650249, 0.527174},
      {0.684579, 0.61834, 0.536576, 0.422435},
      {0.499831, 0.412542, 0.314727, 0.198036}};
  const auto t0 = Clock::now();
  double worst = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 4; ++j) {
      SystemParams p;
      p.q1 = kQ1[j];
      p.a2 = kA2[i];
      const auto l4 = triangular_estimates(p)[0];
      const double dx = std::abs(l4.x - kX4[i][j]);
      const double dy = std::abs(l4.y - kY4[i][j]);
      if (dx > worst) worst = dx;
      if (dy > worst) worst = dy;
      if (!(dx <= 5e-4))
        c.fault(strf("a2=%g q1=%g: x=%.9g want %g diff %.2e", kA2[i], kQ1[j],
                     l4.x, kX4[i][j], dx));
      if (!(dy <= 5e-4))
        c.fault(strf("a2=%g q1=%g: y=%.9g want %g diff %.2e", kA2[i], kQ1[j],
                     l4.y, kY4[i][j], dy));
    }
  }
  SystemParams degenerate;
  degenerate.q1 = 0;
  bool threw = false;
  try {
    triangular_estimates(degenerate);
  } catch (const DegenerateInput&) {
    threw = true;
  }
  if (!threw) c.fault("q1=0: expected degenerate-input rejection");
  const double dt = seconds_since(t0);
  if (!(dt < 1.0)) c.fault(strf("runtime %.3f s exceeds 1 s", dt));
  c.stats = strf("(40 cells, worst |d| %.2e, %.3f s)", worst, dt);
}

// Critical mass ratio over 50 reference cells (k = 1..5, five q1 values, two
// oblateness values), 2e-5 absolute.
void critical_mass_reference(Criterion& c) {
  const double kQ1[5] = {1.0, 0.75, 0.5, 0.25, 0.0};
  const double kA2[2] = {0.0, 0.02};
  const double kMu[2][5][5] = {
      {{0.0385209, 0.0363201, 0.0341355, 0.0318518, 0.0285955},
       {0.0242939, 0.0229262, 0.0215661, 0.0201415, 0.0181056},
       {0.013516, 0.0127632, 0.0120136, 0.0112275, 0.0101021},
       {0.00827037, 0.0078121, 0.00735548, 0.00687629, 0.00618979},
       {0.0055092, 0.00520474, 0.004901287, 0.00490128, 0.00412616}},
      {{0.0413469, 0.0390477, 0.0367581, 0.0343567, 0.0309186},
       {0.026094, 0.0246633, 0.0232361, 0.0217366, 0.019585},
       {0.0145252, 0.0137369, 0.0129496, 0.0121214, 0.0109312},
       {0.00889015, 0.00841007, 0.00793029, 0.00742525, 0.00669897},
       {0.00592287, 0.00560384, 0.00528491, 0.00494909, 0.00446598}}};
  const auto t0 = Clock::now();
  double worst = 0;
  for (int t = 0; t < 2; ++t) {
    for (int k = 1; k <= 5; ++k) {
      for (int j = 0; j < 5; ++j) {
        const double got = critical_mass(k, kQ1[j], kA2[t]).mu_k;
        const double want = kMu[t][k - 1][j];
        const double diff = std::abs(got - want);
        if (diff > worst) worst = diff;
        if (!(diff <= 2e-5))
          c.fault(strf("k=%d q1=%g a2=%g: mu_k=%.9g want %g diff %.2e", k,
                       kQ1[j], kA2[t], got, want, diff));
      }
    }
  }
  const double dt = seconds_since(t0);
  if (!(dt < 1.0)) c.fault(strf("runtime %.3f s exceeds 1 s", dt));
  c.stats = strf("(50 cells, worst |dmu| %.2e, %.3f s)", worst, dt);
}

// The bisection boundary reproduces the classical critical mass ratio and
// agrees with the closed form.
void routh_boundary_check(Criterion& c) {
  const double rb = routh_boundary(1, 0);
  const double cm = critical_mass(1, 1, 0).mu_k;
  if (!(std::abs(rb - 0.0385201) <= 1e-6))
    c.fault(strf("boundary %.10g vs reference 0.0385201, diff %.2e", rb,
                 std::abs(rb - 0.0385201)));
  if (!(std::abs(rb - cm) <= 1e-9))
    c.fault(strf("boundary %.12g vs closed form %.12g, diff %.2e", rb, cm,
                 std::abs(rb - cm)));
  c.stats = strf("(boundary %.10g, closed form %.10g)", rb, cm);
}

// Frozen linear expansions: the constant terms must match the encoded
// literals exactly; finite-difference slopes of the closed form at the
// classical corner must match the frozen linear coefficients to 5e-2
// relative.
void series_coefficients(Criterion& c) {
  const double kConst[3] = {0.0385208965, 0.0242938971, 0.0135160160};
  const double kA2Coef[3] = {0.6755841373, 0.4322031625, 0.2430452832};
  const double kEpsCoef[3] = {-0.0089174706, -0.0055364958, -0.0030452832};
  const double h = 1e-6;
  double worst = 0;
  for (int k = 1; k <= 3; ++k) {
    const double enc = critical_mass_series(k, 0, 0);
    if (enc != kConst[k - 1])
      c.fault(strf("k=%d constant %.12g differs from encoded %.12g", k, enc,
                   kConst[k - 1]));
    const double base = critical_mass(k, 1, 0).mu_k;
    const double slope_a2 = (critical_mass(k, 1, h).mu_k - base) / h;
    const double slope_eps = (critical_mass(k, 1 - h, 0).mu_k - base) / h;
    const double rel_a2 =
        std::abs(slope_a2 - kA2Coef[k - 1]) / std::abs(kA2Coef[k - 1]);
    const double rel_eps =
        std::abs(slope_eps - kEpsCoef[k - 1]) / std::abs(kEpsCoef[k - 1]);
    if (rel_a2 > worst) worst = rel_a2;
    if (rel_eps > worst) worst = rel_eps;
    if (!(rel_a2 <= 5e-2))
      c.fault(strf("k=%d a2 slope: closed form %.7g vs frozen %.7g, "
                   "rel diff %.3g",
                   k, slope_a2, kA2Coef[k - 1], rel_a2));
    if (!(rel_eps <= 5e-2))
      c.fault(strf("k=%d eps slope: closed form %.7g vs frozen %.7g, "
                   "rel diff %.3g",
                   k, slope_eps, kEpsCoef[k - 1], rel_eps));
  }
  c.stats = strf("(3 constants, 6 slopes, worst rel %.3g)", worst);
}

// Series solver vs the iterative oracle at the refined triangular point over
// a 231-set parameter grid, plus residual, conjugate-closure and coefficient
// identities on the oracle roots.
void quartic_solver_cross_validation(Criterion& c) {
  const auto t0 = Clock::now();
  const auto q1s = linspace(0.2, 1.0, 21);
  const auto a2s = linspace(0.0, 0.06, 11);
  int sets = 0, series_checked = 0;
  double worst_gap = 0, worst_res = 0, worst_conj = 0, worst_ident = 0;
  for (double q1 : q1s) {
    for (double a2 : a2s) {
      SystemParams p;
      p.q1 = q1;
      p.a2 = a2;
      const auto co = char_coeffs(p, refined_l4(p));
      const auto oracle = roots_oracle(co);
      ++sets;
      if (oracle.max_residual > worst_res) worst_res = oracle.max_residual;
      if (!(oracle.max_residual < 1e-9))
        c.fault(strf("q1=%g a2=%g: oracle residual %.2e", q1, a2,
                     oracle.max_residual));
      for (const auto& r : oracle.roots) {
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& s : oracle.roots)
          dist = std::min(dist, std::abs(std::conj(r) - s));
        if (dist > worst_conj) worst_conj = dist;
        if (!(dist <= 1e-9))
          c.fault(strf("q1=%g a2=%g: root set not conjugate-closed, gap %.2e",
                       q1, a2, dist));
      }
      std::complex<double> sum = 0, prod = 1;
      for (const auto& r : oracle.roots) {
        sum += r;
        prod *= r;
      }
      const double ds = std::abs(sum + std::complex<double>(co.a, 0)) /
                        std::max(1.0, std::abs(co.a));
      const double dp = std::abs(prod - std::complex<double>(co.d, 0)) /
                        std::max(1.0, std::abs(co.d));
      if (ds > worst_ident) worst_ident = ds;
      if (dp > worst_ident) worst_ident = dp;
      if (!(ds <= 1e-9))
        c.fault(strf("q1=%g a2=%g: root sum vs -a off by %.2e", q1, a2, ds));
      if (!(dp <= 1e-9))
        c.fault(strf("q1=%g a2=%g: root product vs d off by %.2e", q1, a2, dp));
      try {
        const auto series = roots_ferrari(co);
        ++series_checked;
        if (!(series.max_residual < 1e-9))
          c.fault(strf("q1=%g a2=%g: series residual %.2e", q1, a2,
                       series.max_residual));
        const double gap = match_gap(series.roots, oracle.roots);
        if (gap > worst_gap) worst_gap = gap;
        if (!(gap <= 1e-8))
          c.fault(
              strf("q1=%g a2=%g: series vs oracle gap %.2e", q1, a2, gap));
      } catch (const SeriesInvalid&) {
        // outside the series validity range: the oracle checks above stand
      }
    }
  }
  if (sets < 200) c.fault(strf("only %d parameter sets covered", sets));
  const double dt = seconds_since(t0);
  if (!(dt < 10.0)) c.fault(strf("runtime %.3f s exceeds 10 s", dt));
  c.stats = strf("(%d sets, %d series-checked, worst gap %.2e, "
                 "worst residual %.2e, %.3f s)",
                 sets, series_checked, worst_gap, worst_res, dt);
}

// Drag renders every sub-boundary triangular point unstable (some root with
// Re > 0); with the drag switched off all roots are purely imaginary.
void drag_instability(Criterion& c) {
  const auto t0 = Clock::now();
  const auto q1s = linspace(0.2, 1.0, 21);
  const auto a2s = linspace(0.0, 0.06, 11);
  int dragged = 0, dragfree = 0;
  double min_pos_re = std::numeric_limits<double>::infinity();
  double max_abs_re = 0;
  for (double q1 : q1s) {
    for (double a2 : a2s) {
      if (q1 < 1) {
        SystemParams p;
        p.q1 = q1;
        p.a2 = a2;
        const auto rep = roots_oracle(char_coeffs(p, refined_l4(p)));
        double re = -std::numeric_limits<double>::infinity();
        for (const auto& r : rep.roots) re = std::max(re, r.real());
        ++dragged;
        if (re < min_pos_re) min_pos_re = re;
        if (!(re > 0))
          c.fault(strf("q1=%g a2=%g: max Re %.3e not positive", q1, a2, re));
      }
      SystemParams p;
      p.q1 = q1;
      p.a2 = a2;
      p.cd = std::numeric_limits<double>::infinity();
      const auto rep = roots_oracle(char_coeffs(p, refined_l4(p)));
      ++dragfree;
      for (const auto& r : rep.roots) {
        max_abs_re = std::max(max_abs_re, std::abs(r.real()));
        if (!(std::abs(r.real()) < 1e-9))
          c.fault(strf("q1=%g a2=%g drag off: |Re| %.3e exceeds 1e-9", q1, a2,
                       std::abs(r.real())));
      }
    }
  }
  const double dt = seconds_since(t0);
  c.stats = strf("(%d dragged sets, min max-Re %.2e; %d drag-free sets, "
                 "max |Re| %.2e, %.3f s)",
                 dragged, min_pos_re, dragfree, max_abs_re, dt);
}

// Each classical collinear point carries a positive real root, from the
// characteristic quartic and from the differenced variational matrix alike.
void collinear_instability(Criterion& c) {
  SystemParams p;
  const auto pts = find_all(p);
  std::string roots;
  for (int i = 0; i < 3; ++i) {
    const auto& pt = pts[i];
    if (!pt.converged) {
      c.fault(strf("%s did not converge", pt.label.c_str()));
      continue;
    }
    const auto quartic = roots_oracle(char_coeffs(p, pt));
    double q_pos = 0;
    for (const auto& r : quartic.roots)
      if (r.real() > 1e-3 && std::abs(r.imag()) < 1e-8)
        q_pos = std::max(q_pos, r.real());
    if (!(q_pos > 0))
      c.fault(strf("%s: no positive real quartic root", pt.label.c_str()));
    const auto ve = variational_eigs(p, pt);
    double v_pos = 0;
    for (const auto& r : ve.eigenvalues)
      if (r.real() > 1e-3 && std::abs(r.imag()) < 1e-8)
        v_pos = std::max(v_pos, r.real());
    if (!(v_pos > 0))
      c.fault(strf("%s: no positive real variational eigenvalue",
                   pt.label.c_str()));
    if (!ve.reliable)
      c.fault(strf("%s: variational differencing unreliable (%.2e)",
                   pt.label.c_str(), ve.fd_disagreement));
    roots += strf("%s%s %.4g", roots.empty() ? "" : ", ", pt.label.c_str(),
                  q_pos);
  }
  c.stats = "(" + roots + ")";
}

// Differenced variational eigenvalues agree with the characteristic-quartic
// roots at all five refined points across a 3x3 parameter grid.
void linearization_consistency(Criterion& c) {
  const auto t0 = Clock::now();
  const double kQ1[3] = {0.6, 0.8, 1.0};
  const double kA2[3] = {0.0, 0.0024, 0.02};
  int points = 0;
  double worst = 0;
  for (double q1 : kQ1) {
    for (double a2 : kA2) {
      SystemParams p;
      p.q1 = q1;
      p.a2 = a2;
      for (const auto& pt : find_all(p)) {
        if (!pt.converged) {
          c.fault(strf("q1=%g a2=%g %s: unconverged", q1, a2,
                       pt.label.c_str()));
          continue;
        }
        const auto rep = roots_oracle(char_coeffs(p, pt));
        const auto ve = variational_eigs(p, pt);
        const double gap = match_gap(ve.eigenvalues, rep.roots);
        ++points;
        if (gap > worst) worst = gap;
        if (!(gap <= 1e-6))
          c.fault(strf("q1=%g a2=%g %s: eigenvalue gap %.2e", q1, a2,
                       pt.label.c_str(), gap));
      }
    }
  }
  const double dt = seconds_since(t0);
  if (!(dt < 5.0)) c.fault(strf("runtime %.3f s exceeds 5 s", dt));
  c.stats = strf("(%d points, worst gap %.2e, %.3f s)", points, worst, dt);
}

// Without drag the Jacobi constant is conserved along a libration orbit, and
// the integrator converges at fourth order.
void conservation_and_order(Criterion& c) {
  SystemParams p;
  const auto l4 = refined_l4(p);
  const State s0{l4.x + 1e-3, l4.y + 1e-3, 0, 0};
  const auto tr = integrate(p, s0, 100.0, 1e-3, 1);
  if (tr.aborted) c.fault("trajectory aborted");
  const double c0 = tr.samples.front().c;
  double drift = 0;
  for (const auto& s : tr.samples) drift = std::max(drift, std::abs(s.c - c0));
  if (!(drift < 1e-8))
    c.fault(strf("Jacobi drift %.3e exceeds 1e-8", drift));

  const State u0{0.4, 0.8, 0.05, -0.02};
  auto end_state = [&](double h) {
    return integrate(p, u0, 1.0, h, 1 << 30).samples.back().s;
  };
  const State ref = end_state(0.0025);
  auto gap = [](const State& a, const State& b) {
    double g = 0;
    for (int i = 0; i < 4; ++i) g = std::max(g, std::abs(a[i] - b[i]));
    return g;
  };
  const double e1 = gap(end_state(0.02), ref);
  const double e2 = gap(end_state(0.01), ref);
  const double order = std::log2(e1 / e2);
  if (!(order >= 3.8 && order <= 4.2))
    c.fault(strf("observed order %.3f outside [3.8, 4.2]", order));
  c.stats = strf("(drift %.2e over t=100, order %.3f)", drift, order);
}

// With drag on, the refined near-axis points sit strictly off the axis, by
// no more than the drag scale, and still satisfy the residual bound.
void collinear_displacement(Criterion& c) {
  SystemParams p;
  p.q1 = 0.75;
  p.a2 = 0.0024;
  const auto pts = find_all(p);
  std::string ys;
  for (int i = 0; i < 3; ++i) {
    const auto& pt = pts[i];
    if (!pt.converged) {
      c.fault(strf("%s did not converge", pt.label.c_str()));
      continue;
    }
    if (!(pt.y != 0)) c.fault(strf("%s: y is exactly zero", pt.label.c_str()));
    if (!(std::abs(pt.y) < 1e-6))
      c.fault(strf("%s: |y| %.3e exceeds the drag scale", pt.label.c_str(),
                   std::abs(pt.y)));
    if (!(pt.residual < 1e-10))
      c.fault(strf("%s: residual %.3e exceeds 1e-10", pt.label.c_str(),
                   pt.residual));
    ys += strf("%s%s y=%.2e", ys.empty() ? "" : ", ", pt.label.c_str(), pt.y);
  }
  c.stats = "(" + ys + ")";
}

// Byte-identical output from repeated CLI runs and from serial vs parallel
// sweeps, through the real binary.
void determinism(Criterion& c) {
  if (g_cli.empty()) {
    c.fault("no --cli <path> argument supplied");
    return;
  }
  auto slurp = [](const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto shell = [&](const std::string& cmd) {
    return std::system(cmd.c_str());
  };
  const std::string q = "'" + g_cli + "' ";
  const char* fa = "acceptance_repeat_a.csv";
  const char* fb = "acceptance_repeat_b.csv";
  const char* fs = "acceptance_sweep_serial.csv";
  const char* fp = "acceptance_sweep_parallel.csv";
  size_t bytes = 0;
  if (shell(q + "c4 --q1-count 16 --out " + fa) != 0 ||
      shell(q + "c4 --q1-count 16 --out " + fb) != 0) {
    c.fault("c4 invocation failed");
  } else {
    const std::string a = slurp(fa), b = slurp(fb);
    bytes += a.size();
    if (a.empty()) c.fault("c4 output is empty");
    if (a != b) c.fault("repeated c4 runs differ");
  }
  if (shell("LIBRATE_THREADS=1 " + q +
            "zvc --q1 0.8 --nx 61 --ny 61 --out " + fs) != 0 ||
      shell("LIBRATE_THREADS=3 " + q +
            "zvc --q1 0.8 --nx 61 --ny 61 --out " + fp) != 0) {
    c.fault("zvc invocation failed");
  } else {
    const std::string s = slurp(fs), pl = slurp(fp);
    bytes += s.size();
    if (s.empty()) c.fault("zvc output is empty");
    if (s != pl) c.fault("serial and parallel zvc sweeps differ");
  }
  std::remove(fa);
  std::remove(fb);
  std::remove(fs);
  std::remove(fp);
  c.stats = strf("(%zu bytes compared)", bytes);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) g_cli = argv[++i];
  }
  struct Entry {
    const char* name;
    void (*fn)(Criterion&);
  };
  const Entry entries[] = {
      {"c4-reference-grid", c4_reference_grid},
      {"triangular-position-reference", triangular_position_reference},
      {"critical-mass-reference", critical_mass_reference},
      {"routh-boundary", routh_boundary_check},
      {"series-coefficients", series_coefficients},
      {"quartic-solver-cross-validation", quartic_solver_cross_validation},
      {"drag-instability", drag_instability},
      {"collinear-instability", collinear_instability},
      {"linearization-consistency", linearization_consistency},
      {"conservation-and-order", conservation_and_order},
      {"collinear-displacement", collinear_displacement},
      {"determinism", determinism},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion crit;
    crit.name = e.name;
    try {
      e.fn(crit);
    } catch (const std::exception& ex) {
      crit.fault(strf("unhandled exception: %s", ex.what()));
    }
    if (!finish(crit)) ++failed;
  }
  std::printf("%d of 12 criteria passed\n",
              static_cast<int>(sizeof entries / sizeof entries[0]) - failed);
  return failed == 0 ? 0 : 1;
}
