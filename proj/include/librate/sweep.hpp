#pragma once

#include <string>
#include <vector>

#include "librate/equilibria.hpp"

namespace librate {

struct GridSpec {
  double x_min = -1.5, x_max = 1.5;
  double y_min = -1.5, y_max = 1.5;
  int nx = 601, ny = 601;
};

// Row-major values[iy * nx + ix]; NaN marks a missing value (collision node).
struct GridResult {
  GridSpec spec;
  std::vector<double> values;
};

// One sampled curve: value columns per parameter value; NaN marks missing.
struct CurvePoint {
  double param;
  std::vector<double> values;
};

struct Curve {
  std::string label;
  std::vector<std::string> columns;
  std::vector<CurvePoint> points;
};

using CurveSet = std::vector<Curve>;

// Jacobi constant at zero velocity on each grid node.
GridResult zvc_grid(const SystemParams& p, const GridSpec& spec);

// C4 = 2U at the triangular estimate across q1, one curve per a2 value.
// q1 = 0 points carry the missing marker.
CurveSet c4_curves(const SystemParams& p, const std::vector<double>& a2_list,
                   const std::vector<double>& q1_grid);

// Refined L1..L5 positions across q1 at fixed a2, mu; columns x, y.
CurveSet equilibrium_locus(const SystemParams& p,
                           const std::vector<double>& q1_grid);

// mu_k(q1) resonance curves, one curve per (k, a2) pair; the k = 1 curve is
// the stability boundary.
CurveSet stability_region(const SystemParams& p,
                          const std::vector<double>& q1_grid,
                          const std::vector<double>& a2_list,
                          const std::vector<int>& k_list);

// Evenly spaced grid helper: count values from lo to hi inclusive, computed
// as lo + (hi-lo) * i/(count-1) so endpoints and simple fractions are exact.
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace librate
