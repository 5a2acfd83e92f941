#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "librate/io.hpp"
#include "librate/sweep.hpp"

using namespace librate;

namespace {

SystemParams classical() {
  SystemParams p;
  p.mu = 3.0e-5;
  return p;
}

struct ThreadEnv {
  explicit ThreadEnv(const char* v) { ::setenv("LIBRATE_THREADS", v, 1); }
  ~ThreadEnv() { ::unsetenv("LIBRATE_THREADS"); }
};

}  // namespace

TEST_SUITE_BEGIN("sweep-io");

TEST_CASE("linspace endpoints and spacing are exact") {
  auto v = linspace(-1.5, 1.5, 7);
  REQUIRE(v.size() == 7);
  CHECK(v.front() == -1.5);
  CHECK(v.back() == 1.5);
  CHECK(v[3] == 0.0);
  CHECK(linspace(2.0, 5.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("grid values are the Jacobi constant at rest") {
  auto p = classical();
  GridSpec spec;
  spec.x_min = -1.0, spec.x_max = 1.0, spec.nx = 5;
  spec.y_min = -1.0, spec.y_max = 1.0, spec.ny = 5;
  auto grid = zvc_grid(p, spec);
  REQUIRE(grid.values.size() == 25);
  // Node (ix=3, iy=2) is (0.5, 0).
  CHECK(grid.values[2 * 5 + 3] ==
        doctest::Approx(jacobi(p, {0.5, 0.0, 0, 0})).epsilon(1e-15));
}

TEST_CASE("grid nodes on a primary carry the missing marker") {
  auto p = classical();
  GridSpec spec;
  spec.x_min = -p.mu, spec.x_max = 1.0, spec.nx = 2;
  spec.y_min = -1.0, spec.y_max = 1.0, spec.ny = 3;
  auto grid = zvc_grid(p, spec);
  CHECK(std::isnan(grid.values[1 * 2 + 0]));  // node exactly on the primary
  CHECK(std::isfinite(grid.values[1 * 2 + 1]));

  std::ostringstream csv;
  write_grid(csv, OutputFormat::Csv, grid);
  CHECK(csv.str().find("-3e-05,0,\n") != std::string::npos);

  std::ostringstream js;
  write_grid(js, OutputFormat::Json, grid);
  auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["grid"]["values"][1][0].is_null());
}

TEST_CASE("sweeps are deterministic across thread counts") {
  auto p = classical();
  p.q1 = 0.8;
  GridSpec spec;
  spec.nx = 41, spec.ny = 41;
  std::vector<double> serial, parallel;
  {
    ThreadEnv env("1");
    serial = zvc_grid(p, spec).values;
  }
  {
    ThreadEnv env("3");
    parallel = zvc_grid(p, spec).values;
  }
  REQUIRE(serial.size() == parallel.size());
  size_t mismatches = 0;
  for (size_t i = 0; i < serial.size(); ++i)
    if (serial[i] != parallel[i]) ++mismatches;
  // Bitwise equality: every slot is written by exactly one job.
  CHECK(mismatches == 0);
}

TEST_CASE("triangular Jacobi curves mark the degenerate column") {
  auto p = classical();
  auto set = c4_curves(p, {0.0, 0.02}, {0.0, 0.5, 1.0});
  REQUIRE(set.size() == 2);
  CHECK(set[0].label == "a2=0");
  CHECK(set[1].label == "a2=0.02");
  REQUIRE(set[0].points.size() == 3);
  CHECK(std::isnan(set[0].points[0].values[2]));  // q1 = 0
  CHECK(set[0].points[2].values[2] ==
        doctest::Approx(3.0 - p.mu * (1 - p.mu)).epsilon(1e-9));
}

TEST_CASE("equilibrium locus tracks all five points") {
  auto p = classical();
  auto set = equilibrium_locus(p, {1.0});
  REQUIRE(set.size() == 5);
  CHECK(set[0].label == "L1");
  CHECK(set[3].label == "L4");
  CHECK(set[3].points[0].values[1] ==
        doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-9));
}

TEST_CASE("critical mass curves across radiation pressure") {
  auto p = classical();
  auto set = stability_region(p, {1.0, 0.0}, {0.0}, {1});
  REQUIRE(set.size() == 1);
  CHECK(set[0].label == "k=1 a2=0");
  CHECK(set[0].points[0].values[0] ==
        doctest::Approx(0.0385209).epsilon(1e-5));
  CHECK(set[0].points[1].values[0] ==
        doctest::Approx(0.0285955).epsilon(1e-5));
}

TEST_CASE("twelve significant digit formatting") {
  CHECK(fmt12(0.1) == "0.1");
  CHECK(fmt12(1.0 / 3.0) == "0.333333333333");
  CHECK(fmt12(-3.0e-5) == "-3e-05");
  CHECK(fmt12(299792458.0) == "299792458");
  CHECK(round12(round12(1.0 / 3.0)) == round12(1.0 / 3.0));
  CHECK(round12(2.0) == 2.0);
}

TEST_CASE("effective parameter header") {
  SystemParams p;
  p.mu = 3.0e-5;
  CHECK(param_header(p) ==
        "# mu=3e-05 q1=1 a2=0 cd=299792458 n=1 w1=0");
}

TEST_CASE("point records round trip through CSV and JSON") {
  EquilibriumPoint pt;
  pt.label = "L4";
  pt.x = 0.5;
  pt.y = std::sqrt(3.0) / 2;
  pt.residual = 1e-13;
  pt.provenance = Provenance::Refined;
  pt.converged = true;

  std::ostringstream csv;
  write_points(csv, OutputFormat::Csv, {pt});
  CHECK(csv.str() ==
        "label,x,y,residual,provenance,converged\n"
        "L4,0.5,0.866025403784,1e-13,refined,true\n");

  std::ostringstream js;
  write_points(js, OutputFormat::Json, {pt});
  auto doc = nlohmann::json::parse(js.str());
  REQUIRE(doc["points"].size() == 1);
  CHECK(doc["points"][0]["label"] == "L4");
  CHECK(doc["points"][0]["x"].get<double>() == 0.5);
  CHECK(doc["points"][0]["converged"].get<bool>() == true);
}

TEST_CASE("unconverged points serialize their markers") {
  EquilibriumPoint pt;
  pt.label = "L3";
  pt.x = pt.y = pt.residual = std::nan("");
  pt.converged = false;

  std::ostringstream csv;
  write_points(csv, OutputFormat::Csv, {pt});
  CHECK(csv.str().find("L3,,,,estimate,false") != std::string::npos);

  std::ostringstream js;
  write_points(js, OutputFormat::Json, {pt});
  auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["points"][0]["x"].is_null());
}

TEST_CASE("curve writers refuse mixed column sets") {
  Curve a, b;
  a.label = "one", a.columns = {"x"};
  b.label = "two", b.columns = {"x", "y"};
  std::ostringstream os;
  CHECK_THROWS_AS(write_curves(os, OutputFormat::Csv, {a, b}, "q1"),
                  std::invalid_argument);
}

TEST_CASE("trajectory CSV carries the mandatory header") {
  SystemParams p;
  p.mu = 3.0e-5;
  Trajectory tr;
  tr.step = 1e-3;
  tr.params = p;
  tr.samples.push_back({0.0, {1.0, 2.0, 3.0, 4.0}, 5.0});
  std::ostringstream os;
  write_trajectory(os, OutputFormat::Csv, tr);
  CHECK(os.str() == "t,x,y,vx,vy,C\n0,1,2,3,4,5\n");
}

TEST_SUITE_END();
