#include "librate/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace librate {

DerivedParams derive(const SystemParams& p) {
  if (std::isnan(p.mu) || std::isnan(p.q1) || std::isnan(p.a2) ||
      std::isnan(p.cd))
    throw std::invalid_argument("parameters must not be NaN");
  if (!(p.mu > 0 && p.mu < 0.5))
    throw std::invalid_argument("mu must lie in (0, 1/2), got " +
                                std::to_string(p.mu));
  if (!(p.q1 >= 0 && p.q1 <= 1))
    throw std::invalid_argument("q1 must lie in [0, 1], got " +
                                std::to_string(p.q1));
  if (!(p.a2 >= 0))
    throw std::invalid_argument("a2 must be >= 0, got " + std::to_string(p.a2));
  if (!(p.cd > 0))
    throw std::invalid_argument("cd must be > 0, got " + std::to_string(p.cd));

  DerivedParams d;
  d.n = std::sqrt(1.0 + 1.5 * p.a2);
  d.w1 = (1.0 - p.mu) * (1.0 - p.q1) / p.cd;
  d.delta = std::cbrt(p.q1);
  return d;
}

}  // namespace librate
