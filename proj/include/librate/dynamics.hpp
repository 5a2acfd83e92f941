#pragma once

#include <array>
#include <cmath>

#include "librate/errors.hpp"
#include "librate/params.hpp"

namespace librate {

// Planar rotating-frame state {x, y, vx, vy}.
using State = std::array<double, 4>;

struct Distances {
  double r1;  // distance to the radiating primary at (-mu, 0)
  double r2;  // distance to the oblate secondary at (1-mu, 0)
};

// Right-hand sides Ux, Uy of  xdd - 2n yd = Ux,  ydd + 2n xd = Uy.
struct Gradient {
  double ux, uy;
};

struct Accel {
  double ax, ay;
};

inline constexpr double kCollisionFloor = 1e-12;

namespace detail {

// Field evaluation templated on the scalar type: the Newton refiner and the
// variational differencing run it in long double, everything else in double.
// The drag block is skipped entirely when w1 == 0 so that the no-drag field
// is bitwise even/odd in y and exactly zero along the axis.

template <class T>
struct RadiiT {
  T dx1, dx2, r1, r2;
};

template <class T>
RadiiT<T> radii(const SystemParams& p, T x, T y, double floor) {
  T dx1 = x + static_cast<T>(p.mu);
  T dx2 = dx1 - static_cast<T>(1);
  T r1 = std::sqrt(dx1 * dx1 + y * y);
  T r2 = std::sqrt(dx2 * dx2 + y * y);
  if (r1 < static_cast<T>(floor) || r2 < static_cast<T>(floor))
    throw CollisionError("state within collision floor of a primary");
  return {dx1, dx2, r1, r2};
}

template <class T>
struct GradT {
  T ux, uy;
};

template <class T>
GradT<T> grad_eval(const SystemParams& p, T x, T y, T vx, T vy, double floor) {
  const T one = static_cast<T>(1);
  const T mu = static_cast<T>(p.mu);
  const T a2 = static_cast<T>(p.a2);
  const T n = std::sqrt(one + static_cast<T>(1.5) * a2);
  const T w1 = (one - mu) * (one - static_cast<T>(p.q1)) / static_cast<T>(p.cd);
  const auto rr = radii(p, x, y, floor);
  const T r1sq = rr.r1 * rr.r1;
  const T r1cb = r1sq * rr.r1;
  const T r2sq = rr.r2 * rr.r2;
  const T r2cb = r2sq * rr.r2;
  const T r2p5 = r2cb * r2sq;
  const T gm1 = (one - mu) * static_cast<T>(p.q1) / r1cb;
  const T gm2 = mu / r2cb;
  const T ob = static_cast<T>(1.5) * mu * a2 / r2p5;

  T ux = n * n * x - gm1 * rr.dx1 - gm2 * rr.dx2 - ob * rr.dx2;
  T uy = n * n * y - gm1 * y - gm2 * y - ob * y;
  if (w1 != static_cast<T>(0)) {
    const T radial = rr.dx1 * vx + y * vy;
    ux -= (w1 / r1sq) * (rr.dx1 * radial / r1sq + vx - n * y);
    uy -= (w1 / r1sq) * (y * radial / r1sq + vy + n * rr.dx1);
  }
  return {ux, uy};
}

template <class T>
T force_eval(const SystemParams& p, T x, T y, T vx, T vy, double floor) {
  const T one = static_cast<T>(1);
  const T mu = static_cast<T>(p.mu);
  const T n = std::sqrt(one + static_cast<T>(1.5) * static_cast<T>(p.a2));
  const T w1 = (one - mu) * (one - static_cast<T>(p.q1)) / static_cast<T>(p.cd);
  const auto rr = radii(p, x, y, floor);
  T u = n * n * (x * x + y * y) / static_cast<T>(2) +
        (one - mu) * static_cast<T>(p.q1) / rr.r1 + mu / rr.r2 +
        mu * static_cast<T>(p.a2) / (static_cast<T>(2) * rr.r2 * rr.r2 * rr.r2);
  if (w1 != static_cast<T>(0)) {
    u += w1 * ((rr.dx1 * vx + y * vy) / (static_cast<T>(2) * rr.r1 * rr.r1) -
               n * std::atan2(y, rr.dx1));
  }
  return u;
}

}  // namespace detail

// Distances to the two primaries; throws CollisionError below the floor.
Distances distances(const SystemParams& p, double x, double y,
                    double floor = kCollisionFloor);

// Force function U of the rotating frame. The drag part is velocity dependent
// and U is not a potential for it; U is meaningful through the Jacobi constant
// and zero-velocity data only.
double force_function(const SystemParams& p, const State& s,
                      double floor = kCollisionFloor);

// Ux, Uy with the full velocity-dependent drag bracket.
Gradient grad(const SystemParams& p, const State& s,
              double floor = kCollisionFloor);

// Ux, Uy at zero velocity. The rest-frame drag terms +n w1 y / r1^2 and
// -n w1 (x+mu) / r1^2 remain; a zero of this field is an equilibrium.
Gradient grad_at_rest(const SystemParams& p, double x, double y,
                      double floor = kCollisionFloor);

// Accelerations (ax, ay) = (Ux + 2n vy, Uy - 2n vx).
Accel accel(const SystemParams& p, const State& s,
            double floor = kCollisionFloor);

// Jacobi constant C = 2U - vx^2 - vy^2; conserved when w1 = 0.
double jacobi(const SystemParams& p, const State& s,
              double floor = kCollisionFloor);

}  // namespace librate
