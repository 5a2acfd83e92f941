#pragma once

#include <array>
#include <complex>

#include "librate/equilibria.hpp"

namespace librate {

// Coefficients of the characteristic quartic
//   lambda^4 + a lambda^3 + b lambda^2 + c lambda + d = 0
// at an equilibrium, plus the auxiliaries entering them:
//   e_aux  couples the drag coefficient into c = -a (1 + e_aux)
//   f_aux  combined gravity + oblateness stiffness at the point
//   g_aux  no-drag auxiliary (1 - a2)(1 - q1^(2/3)(1 - a2)/4)
struct CharCoeffs {
  double a, b, c, d;
  double e_aux, f_aux, g_aux;
};

CharCoeffs char_coeffs(const SystemParams& p, const EquilibriumPoint& pt);

enum class RootMethod { NoDrag, FerrariSeries, Oracle };
enum class Classification { Stable, Unstable, Marginal };

struct StabilityReport {
  std::array<std::complex<double>, 4> roots;  // sorted |Im| asc, Re asc, Im asc
  RootMethod method;
  Classification classification;
  double max_residual;  // max |p(root)| over the four roots
};

// Re > re_tol on any root => Unstable; otherwise a repeated root => Marginal;
// otherwise Stable (roots with |Re| <= re_tol count as purely imaginary).
Classification classify_roots(const std::array<std::complex<double>, 4>& roots,
                              double re_tol = 1e-9);

// Closed form for the biquadratic case: lambda^2 = (-b +- sqrt(b^2-4d))/2.
// Requires a = 0 and c = 0 (throws std::invalid_argument otherwise).
StabilityReport roots_no_drag(const CharCoeffs& co);

// Small-drag series solution built on the resolvent cubic of the quartic,
// first order in a^2. Delegates to the closed form when a == 0. Throws
// SeriesInvalid when |alpha1 a^2| > 0.1 |b| and DegenerateInput when the
// series discriminant goes negative or b^2 - 4d vanishes.
StabilityReport roots_ferrari(const CharCoeffs& co);

// Durand-Kerner iteration, used as ground truth in tests. Converges to
// |p(root)| < 1e-12 max(1, |d|); throws NoConvergence after 500 sweeps.
StabilityReport roots_oracle(const CharCoeffs& co);

struct CriticalMass {
  int k;        // resonance order, omega1 = k omega2
  double K;     // k^2 / (k^2 + 1)^2
  double mu_k;  // critical mass ratio
  double omega1, omega2;
};

// Critical mass ratio where the two libration frequencies at the triangular
// points satisfy omega1 = k omega2 (drag off). k = 1 is the stability
// boundary. q1 = 0 is a valid input here (the expression stays finite).
CriticalMass critical_mass(int k, double q1, double a2);

// Frozen linear expansions of mu_k in a2 and eps = 1 - q1 for k = 1, 2, 3.
double critical_mass_series(int k, double a2, double eps);

// Stability boundary by bisection on b^2 = 4d over mu in (0, 1/2); agrees
// with critical_mass(1, q1, a2) to solver tolerance.
double routh_boundary(double q1, double a2);

enum class SolveMethod { Auto, NoDrag, Ferrari, Oracle };

// Builds the quartic at the point and dispatches: no-drag closed form when
// w1 = 0, the series solver otherwise, the oracle on demand or as fallback
// when the series is outside its validity range.
StabilityReport classify_point(const SystemParams& p,
                               const EquilibriumPoint& pt,
                               SolveMethod method = SolveMethod::Auto,
                               double re_tol = 1e-9);

}  // namespace librate
