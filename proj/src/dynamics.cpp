#include "librate/dynamics.hpp"

namespace librate {

Distances distances(const SystemParams& p, double x, double y, double floor) {
  auto rr = detail::radii<double>(p, x, y, floor);
  return {rr.r1, rr.r2};
}

double force_function(const SystemParams& p, const State& s, double floor) {
  return detail::force_eval<double>(p, s[0], s[1], s[2], s[3], floor);
}

Gradient grad(const SystemParams& p, const State& s, double floor) {
  auto g = detail::grad_eval<double>(p, s[0], s[1], s[2], s[3], floor);
  return {g.ux, g.uy};
}

Gradient grad_at_rest(const SystemParams& p, double x, double y, double floor) {
  auto g = detail::grad_eval<double>(p, x, y, 0.0, 0.0, floor);
  return {g.ux, g.uy};
}

Accel accel(const SystemParams& p, const State& s, double floor) {
  const double n = std::sqrt(1.0 + 1.5 * p.a2);
  auto g = detail::grad_eval<double>(p, s[0], s[1], s[2], s[3], floor);
  return {g.ux + 2.0 * n * s[3], g.uy - 2.0 * n * s[2]};
}

double jacobi(const SystemParams& p, const State& s, double floor) {
  return 2.0 * force_function(p, s, floor) - s[2] * s[2] - s[3] * s[3];
}

}  // namespace librate
