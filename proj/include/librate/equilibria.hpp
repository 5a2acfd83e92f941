#pragma once

#include <string>
#include <vector>

#include "librate/dynamics.hpp"

namespace librate {

enum class Provenance { AnalyticEstimate, Refined };

struct EquilibriumPoint {
  std::string label;  // "L1".."L5"
  double x = 0;
  double y = 0;
  double residual = 0;  // |(Ux, Uy)| at rest
  Provenance provenance = Provenance::AnalyticEstimate;
  bool converged = true;  // false when refinement failed for this point
  int iterations = 0;
};

// Photogravitational triangular geometry and its first-order perturbations:
// r1 = delta (1 + eps1), r2 = 1 + eps2 about the unperturbed (x0, y0).
struct TriangularExpansion {
  double x0, y0;
  double eps1, eps2;
  double gamma;  // 1 - 2 mu
  double eps;    // 1 - q1
};

TriangularExpansion triangular_expansion(const SystemParams& p,
                                         bool south = false);

// Closed:     direct closed form for x with its own drag coefficient inside
//             the bracket.
// FromRadius: x rebuilt from the perturbed-radius expansions (which carry a
//             different drag coefficient; the two disagree at O(w1) and the
//             refiner is the arbiter).
enum class CollinearForm { Closed, FromRadius };

// Perturbed: drag + oblateness perturbation of the photogravitational
//            triangle (the default; matches the reference tables).
// NoDrag:    w1 = 0 closed form, first order in a2.
// Series:    linear series in (1 - q1) and a2 about the classical point.
enum class TriangularForm { Perturbed, NoDrag, Series };

// Analytic estimates of L1, L2, L3 (in that order). y_seed > 0 overrides the
// automatic drag-scale y used inside the brackets. Throws DegenerateInput for
// q1 = 0 and when mu * y underflows in the drag bracket.
std::vector<EquilibriumPoint> collinear_estimates(
    const SystemParams& p, CollinearForm form = CollinearForm::Closed,
    double y_seed = 0);

// Analytic estimates of L4 and L5 (in that order). Throws DegenerateInput
// for q1 = 0.
std::vector<EquilibriumPoint> triangular_estimates(
    const SystemParams& p, TriangularForm form = TriangularForm::Perturbed);

// Damped Newton on (Ux, Uy) at rest with a central-difference Jacobian,
// evaluated internally in long double. Terminates at residual < tol; throws
// NoConvergence after max_iter iterations and DegenerateInput on a singular
// Jacobian.
EquilibriumPoint refine(const SystemParams& p, const EquilibriumPoint& seed,
                        double tol = 1e-12, int max_iter = 50);

// All five points, refined, in order L1, L2, L3, L4, L5. Collinear-family
// seeds come from the on-axis no-drag force root of each region plus a
// drag-scale y; triangular seeds from the analytic estimates. Per-point
// refinement failures are flagged on the point, not thrown.
std::vector<EquilibriumPoint> find_all(const SystemParams& p);

// Region labeling: "L3" for x <= -mu, "L2" for x >= 1-mu, else "L1" for
// near-axis points and "L4"/"L5" by y sign for triangular ones.
std::string region_label(const SystemParams& p, double x, double y);

}  // namespace librate
