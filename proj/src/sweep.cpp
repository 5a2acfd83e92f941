#include "librate/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "librate/equilibria.hpp"
#include "librate/stability.hpp"

namespace librate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// LIBRATE_THREADS pins the worker count (useful for reproducibility checks);
// otherwise one worker per hardware thread. Results never depend on the
// count, only wall time does.
int thread_budget(size_t jobs) {
  size_t budget = std::thread::hardware_concurrency();
  if (budget == 0) budget = 1;
  if (const char* env = std::getenv("LIBRATE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024)
      budget = static_cast<size_t>(v);
  }
  return static_cast<int>(std::max<size_t>(1, std::min(budget, jobs)));
}

// Runs fn(i) for i in [0, jobs) across a static partition. Each job writes
// only its own output slot, so results are identical for any thread count.
template <typename Fn>
void parallel_for(size_t jobs, Fn&& fn) {
  const int nt = thread_budget(jobs);
  if (nt <= 1) {
    for (size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::mutex guard;
  pool.reserve(static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (size_t i = static_cast<size_t>(t); i < jobs;
             i += static_cast<size_t>(nt))
          fn(i);
      } catch (...) {
        if (!failed.exchange(true)) {
          std::lock_guard<std::mutex> lk(guard);
          first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("linspace needs count >= 1");
  std::vector<double> out(static_cast<size_t>(count));
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < count; ++i)
    out[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return out;
}

GridResult zvc_grid(const SystemParams& p, const GridSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2)
    throw std::invalid_argument("grid needs at least 2 samples per axis");
  derive(p);
  GridResult out;
  out.spec = spec;
  out.values.assign(static_cast<size_t>(spec.nx) * spec.ny, kNaN);
  auto xs = linspace(spec.x_min, spec.x_max, spec.nx);
  auto ys = linspace(spec.y_min, spec.y_max, spec.ny);
  parallel_for(static_cast<size_t>(spec.ny), [&](size_t iy) {
    for (int ix = 0; ix < spec.nx; ++ix) {
      double c;
      try {
        c = jacobi(p, {xs[static_cast<size_t>(ix)], ys[iy], 0.0, 0.0});
      } catch (const CollisionError&) {
        c = kNaN;
      }
      out.values[iy * static_cast<size_t>(spec.nx) +
                 static_cast<size_t>(ix)] = c;
    }
  });
  return out;
}

CurveSet c4_curves(const SystemParams& p, const std::vector<double>& a2_list,
                   const std::vector<double>& q1_grid) {
  CurveSet set;
  set.reserve(a2_list.size());
  for (double a2 : a2_list) {
    Curve cv;
    cv.label = "a2=" + short_num(a2);
    cv.columns = {"x", "y", "C"};
    cv.points.assign(q1_grid.size(), CurvePoint{});
    parallel_for(q1_grid.size(), [&](size_t i) {
      SystemParams local = p;
      local.q1 = q1_grid[i];
      local.a2 = a2;
      CurvePoint pt;
      pt.param = q1_grid[i];
      try {
        auto tri = triangular_estimates(local, TriangularForm::Perturbed);
        double c = jacobi(local, {tri[0].x, tri[0].y, 0.0, 0.0});
        pt.values = {tri[0].x, tri[0].y, c};
      } catch (const Error&) {
        pt.values = {kNaN, kNaN, kNaN};
      }
      cv.points[i] = pt;
    });
    set.push_back(std::move(cv));
  }
  return set;
}

CurveSet equilibrium_locus(const SystemParams& p,
                           const std::vector<double>& q1_grid) {
  static const char* kLabels[] = {"L1", "L2", "L3", "L4", "L5"};
  CurveSet set;
  for (const char* label : kLabels) {
    Curve cv;
    cv.label = label;
    cv.columns = {"x", "y"};
    cv.points.assign(q1_grid.size(), CurvePoint{});
    set.push_back(std::move(cv));
  }
  std::vector<std::vector<EquilibriumPoint>> rows(q1_grid.size());
  parallel_for(q1_grid.size(), [&](size_t i) {
    SystemParams local = p;
    local.q1 = q1_grid[i];
    rows[i] = find_all(local);
  });
  for (size_t i = 0; i < q1_grid.size(); ++i) {
    for (size_t k = 0; k < 5; ++k) {
      CurvePoint pt;
      pt.param = q1_grid[i];
      pt.values = {kNaN, kNaN};
      for (const auto& ep : rows[i]) {
        if (ep.label == kLabels[k] && ep.converged) {
          pt.values = {ep.x, ep.y};
          break;
        }
      }
      set[k].points[i] = pt;
    }
  }
  return set;
}

CurveSet stability_region(const SystemParams& p,
                          const std::vector<double>& q1_grid,
                          const std::vector<double>& a2_list,
                          const std::vector<int>& k_list) {
  derive(p);
  CurveSet set;
  for (int k : k_list) {
    for (double a2 : a2_list) {
      Curve cv;
      cv.label = "k=" + std::to_string(k) + " a2=" + short_num(a2);
      cv.columns = {"mu_k", "omega1", "omega2"};
      cv.points.assign(q1_grid.size(), CurvePoint{});
      parallel_for(q1_grid.size(), [&](size_t i) {
        CurvePoint pt;
        pt.param = q1_grid[i];
        try {
          auto cm = critical_mass(k, q1_grid[i], a2);
          pt.values = {cm.mu_k, cm.omega1, cm.omega2};
        } catch (const std::exception&) {
          pt.values = {kNaN, kNaN, kNaN};
        }
        cv.points[i] = pt;
      });
      set.push_back(std::move(cv));
    }
  }
  return set;
}

}  // namespace librate
