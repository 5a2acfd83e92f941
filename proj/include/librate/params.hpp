#pragma once

namespace librate {

// Problem parameters. Units: distances scaled by the primary separation,
// masses by the total mass, time so the unperturbed mean motion is 1.
//   mu  mass ratio m2/(m1+m2) of the smaller primary, 0 < mu < 1/2
//   q1  mass-reduction factor of the radiating primary, 0 <= q1 <= 1
//       (fraction of its gravity left after radiation pressure)
//   a2  oblateness coefficient of the secondary, >= 0
//   cd  dimensionless speed of light; cd = inf turns the drag off exactly
struct SystemParams {
  double mu = 3.0e-5;
  double q1 = 1.0;
  double a2 = 0.0;
  double cd = 299792458.0;
};

// Scalars derived from SystemParams.
//   n      perturbed mean motion, n^2 = 1 + 3 a2 / 2
//   w1     drag strength (1-mu)(1-q1)/cd; 0 iff q1 = 1 or cd = inf
//   delta  q1^(1/3)
struct DerivedParams {
  double n;
  double w1;
  double delta;
};

// Validates p and computes the derived scalars. Throws std::invalid_argument
// on NaN or out-of-range fields. q1 = 0 is accepted here; operations that
// divide by q1-dependent quantities throw DegenerateInput instead.
DerivedParams derive(const SystemParams& p);

}  // namespace librate
