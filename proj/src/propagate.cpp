#include "librate/propagate.hpp"

#include <cmath>
#include <stdexcept>

#include "librate/stability.hpp"

namespace librate {

namespace {

State rhs(const SystemParams& p, const State& s) {
  auto a = accel(p, s);
  return {s[2], s[3], a.ax, a.ay};
}

State axpy(const State& s, double h, const State& k) {
  return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2], s[3] + h * k[3]};
}

bool finite(const State& s) {
  return std::isfinite(s[0]) && std::isfinite(s[1]) && std::isfinite(s[2]) &&
         std::isfinite(s[3]);
}

}  // namespace

State step_rk4(const SystemParams& p, const State& s, double h) {
  if (!(h > 0)) throw std::invalid_argument("step size must be positive");
  State k1 = rhs(p, s);
  State k2 = rhs(p, axpy(s, h / 2, k1));
  State k3 = rhs(p, axpy(s, h / 2, k2));
  State k4 = rhs(p, axpy(s, h, k3));
  State out;
  for (int i = 0; i < 4; ++i)
    out[i] = s[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

Trajectory integrate(const SystemParams& p, const State& s0, double t_end,
                     double h, int record_every) {
  if (!(t_end > 0)) throw std::invalid_argument("t_end must be positive");
  if (!(h > 0)) throw std::invalid_argument("step size must be positive");
  if (record_every < 1)
    throw std::invalid_argument("record_every must be >= 1");
  derive(p);

  Trajectory tr;
  tr.step = h;
  tr.params = p;
  const long long steps = std::max(1LL, std::llround(t_end / h));
  tr.samples.reserve(static_cast<size_t>(steps / record_every) + 2);
  State s = s0;
  tr.samples.push_back({0.0, s, jacobi(p, s)});
  for (long long i = 1; i <= steps; ++i) {
    s = step_rk4(p, s, h);
    if (!finite(s)) {
      tr.aborted = true;
      break;
    }
    if (i % record_every == 0 || i == steps)
      tr.samples.push_back({i * h, s, jacobi(p, s)});
  }
  return tr;
}

VariationalEigs variational_eigs(const SystemParams& p,
                                 const EquilibriumPoint& pt) {
  derive(p);
  using ld = long double;
  const ld n = std::sqrt(1.0L + 1.5L * static_cast<ld>(p.a2));

  auto accel_ld = [&](const std::array<ld, 4>& u) -> std::array<ld, 2> {
    auto g = detail::grad_eval<ld>(p, u[0], u[1], u[2], u[3], kCollisionFloor);
    return {g.ux + 2 * n * u[3], g.uy - 2 * n * u[2]};
  };

  auto jacobian = [&](ld h) {
    std::array<std::array<ld, 4>, 4> j{};
    j[0] = {0, 0, 1, 0};
    j[1] = {0, 0, 0, 1};
    const std::array<ld, 4> base = {static_cast<ld>(pt.x),
                                    static_cast<ld>(pt.y), 0.0L, 0.0L};
    for (int col = 0; col < 4; ++col) {
      auto up = base, dn = base;
      up[col] += h;
      dn[col] -= h;
      auto fp = accel_ld(up), fm = accel_ld(dn);
      j[2][col] = (fp[0] - fm[0]) / (2 * h);
      j[3][col] = (fp[1] - fm[1]) / (2 * h);
    }
    return j;
  };

  const ld h = 1e-7L;
  auto j1 = jacobian(h);
  auto j2 = jacobian(h / 2);
  ld disagree = 0;
  for (int r = 2; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      disagree = std::max(disagree, std::abs(j1[r][c] - j2[r][c]));

  auto matmul = [](const std::array<std::array<ld, 4>, 4>& a,
                   const std::array<std::array<ld, 4>, 4>& b) {
    std::array<std::array<ld, 4>, 4> c{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  auto trace = [](const std::array<std::array<ld, 4>, 4>& m) {
    return m[0][0] + m[1][1] + m[2][2] + m[3][3];
  };

  const auto& m1 = j1;
  auto m2 = matmul(m1, m1);
  auto m3 = matmul(m2, m1);
  auto m4 = matmul(m3, m1);
  ld t1 = trace(m1), t2 = trace(m2), t3 = trace(m3), t4 = trace(m4);
  // Power sums to elementary symmetric functions.
  ld e1 = t1;
  ld e2 = (e1 * t1 - t2) / 2;
  ld e3 = (e2 * t1 - e1 * t2 + t3) / 3;
  ld e4 = (e3 * t1 - e2 * t2 + e1 * t3 - t4) / 4;

  CharCoeffs co{};
  co.a = static_cast<double>(-e1);
  co.b = static_cast<double>(e2);
  co.c = static_cast<double>(-e3);
  co.d = static_cast<double>(e4);
  auto rep = roots_oracle(co);

  VariationalEigs out;
  out.eigenvalues = rep.roots;
  out.fd_disagreement = static_cast<double>(disagree);
  out.reliable = out.fd_disagreement <= 1e-5;
  return out;
}

}  // namespace librate
