#pragma once

#include <array>
#include <complex>
#include <vector>

#include "librate/equilibria.hpp"

namespace librate {

struct TrajectorySample {
  double t;
  State s;
  double c;  // Jacobi constant at the sample
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step = 0;
  SystemParams params;
  bool aborted = false;  // a non-finite state ended the run early
};

// One classical fourth-order Runge-Kutta step; the drag force depends on
// velocity, so the full state enters every stage. Requires h > 0.
State step_rk4(const SystemParams& p, const State& s, double h);

// Fixed-step loop recording every record_every-th step (plus the initial and
// final states). Collision errors propagate; a non-finite state returns the
// partial trajectory with aborted set.
Trajectory integrate(const SystemParams& p, const State& s0, double t_end,
                     double h = 1e-3, int record_every = 100);

struct VariationalEigs {
  std::array<std::complex<double>, 4> eigenvalues;  // sorted like root reports
  double fd_disagreement;  // max Jacobian-entry change from h to h/2
  bool reliable;           // fd_disagreement <= 1e-5
};

// Eigenvalues of the 4x4 Jacobian of the first-order system at the point,
// built by central differences (h = 1e-7, evaluated in long double) and fed
// through the same quartic machinery as the root oracle.
VariationalEigs variational_eigs(const SystemParams& p,
                                 const EquilibriumPoint& pt);

}  // namespace librate
