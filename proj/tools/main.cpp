// Command line front end: every subcommand reads the shared system parameters,
// runs one library operation, and writes CSV or JSON to stdout or --out.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "librate/io.hpp"

namespace {

using namespace librate;

struct CommonOpts {
  SystemParams params;
  std::string format = "csv";
  std::string out_path;
};

OutputFormat format_of(const CommonOpts& c) {
  return c.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

// The effective-parameter line rides on top of CSV output; JSON documents
// stay pure, so there it goes to stderr instead.
void open_output(const CommonOpts& c, std::ofstream& file, std::ostream*& os) {
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) throw std::runtime_error("cannot open " + c.out_path);
    os = &file;
  } else {
    os = &std::cout;
  }
  std::string header = param_header(c.params);
  if (format_of(c) == OutputFormat::Csv)
    *os << header << '\n';
  else
    std::cerr << header << '\n';
}

int run_equilibria(const CommonOpts& c, bool estimates_only) {
  std::vector<EquilibriumPoint> pts;
  if (estimates_only) {
    pts = collinear_estimates(c.params);
    auto tri = triangular_estimates(c.params);
    pts.insert(pts.end(), tri.begin(), tri.end());
  } else {
    pts = find_all(c.params);
  }
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_points(*os, format_of(c), pts);
  for (const auto& pt : pts)
    if (!pt.converged) return 2;
  return 0;
}

int run_stability(const CommonOpts& c, const std::vector<std::string>& labels,
                  const std::string& method_name) {
  static const std::map<std::string, SolveMethod> kMethods = {
      {"auto", SolveMethod::Auto},
      {"nodrag", SolveMethod::NoDrag},
      {"ferrari", SolveMethod::Ferrari},
      {"oracle", SolveMethod::Oracle}};
  SolveMethod method = kMethods.at(method_name);
  auto all = find_all(c.params);
  std::vector<StabilityRow> rows;
  bool all_ok = true;
  for (const auto& pt : all) {
    if (!labels.empty() &&
        std::find(labels.begin(), labels.end(), pt.label) == labels.end())
      continue;
    if (!pt.converged) {
      all_ok = false;
      continue;
    }
    StabilityRow row;
    row.label = pt.label;
    row.coeffs = char_coeffs(c.params, pt);
    row.report = classify_point(c.params, pt, method);
    rows.push_back(std::move(row));
  }
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_stability(*os, format_of(c), rows);
  return all_ok ? 0 : 2;
}

int run_critical_mass(const CommonOpts& c, const std::vector<int>& ks) {
  std::vector<CriticalMassRow> rows;
  for (int k : ks)
    rows.push_back({c.params.q1, c.params.a2,
                    critical_mass(k, c.params.q1, c.params.a2)});
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_critical_mass(*os, format_of(c), rows);
  return 0;
}

int run_zvc(const CommonOpts& c, const GridSpec& spec) {
  auto grid = zvc_grid(c.params, spec);
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_grid(*os, format_of(c), grid);
  return 0;
}

int run_c4(const CommonOpts& c, const std::vector<double>& a2_values,
           double q1_min, double q1_max, int q1_count) {
  auto curves =
      c4_curves(c.params, a2_values, linspace(q1_min, q1_max, q1_count));
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_curves(*os, format_of(c), curves, "q1");
  return 0;
}

int run_locus(const CommonOpts& c, double q1_min, double q1_max,
              int q1_count) {
  auto curves = equilibrium_locus(c.params, linspace(q1_min, q1_max, q1_count));
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_curves(*os, format_of(c), curves, "q1");
  return 0;
}

int run_region(const CommonOpts& c, const std::vector<int>& ks,
               const std::vector<double>& a2_values, double q1_min,
               double q1_max, int q1_count) {
  auto curves = stability_region(c.params, linspace(q1_min, q1_max, q1_count),
                                 a2_values, ks);
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_curves(*os, format_of(c), curves, "q1");
  return 0;
}

int run_integrate(const CommonOpts& c, const State& s0, double t_end, double h,
                  int record_every) {
  auto tr = integrate(c.params, s0, t_end, h, record_every);
  std::ofstream file;
  std::ostream* os;
  open_output(c, file, os);
  write_trajectory(*os, format_of(c), tr);
  return tr.aborted ? 2 : 0;
}

void report_error(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json doc{
      {"error", {{"type", kind}, {"message", message}}}};
  std::cerr << doc.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria, stability and Jacobi-constant tools for the "
               "planar restricted three-body problem with a radiating "
               "primary, an oblate secondary and Poynting-Robertson drag"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts c;
  app.add_option("--mu", c.params.mu, "Mass ratio of the secondary")
      ->capture_default_str();
  app.add_option("--q1", c.params.q1, "Mass reduction factor of the primary")
      ->capture_default_str();
  app.add_option("--a2", c.params.a2, "Oblateness coefficient of the secondary")
      ->capture_default_str();
  app.add_option("--cd", c.params.cd,
                 "Dimensionless light speed; inf switches drag off")
      ->capture_default_str();
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", c.out_path, "Write to this file instead of stdout");
  app.set_config("--config", "", "Read defaults from a TOML/INI file");

  auto* eq = app.add_subcommand("equilibria", "Locate the five equilibria");
  bool estimates_only = false;
  eq->add_flag("--estimates", estimates_only,
               "Emit the analytic estimates without refinement");

  auto* st = app.add_subcommand("stability",
                                "Characteristic roots and classification");
  std::vector<std::string> labels;
  std::string method_name = "auto";
  st->add_option("--point", labels, "Restrict to these labels (L1..L5)")
      ->check(CLI::IsMember({"L1", "L2", "L3", "L4", "L5"}));
  st->add_option("--method", method_name, "Root solver")
      ->check(CLI::IsMember({"auto", "nodrag", "ferrari", "oracle"}))
      ->capture_default_str();

  auto* cm = app.add_subcommand(
      "critical-mass", "Critical mass ratio of the resonance omega1 = k omega2");
  std::vector<int> cm_ks = {1, 2, 3, 4, 5};
  cm->add_option("--k", cm_ks, "Resonance orders")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* zv = app.add_subcommand("zvc", "Jacobi constant on a zero-velocity grid");
  GridSpec spec;
  zv->add_option("--x-min", spec.x_min)->capture_default_str();
  zv->add_option("--x-max", spec.x_max)->capture_default_str();
  zv->add_option("--y-min", spec.y_min)->capture_default_str();
  zv->add_option("--y-max", spec.y_max)->capture_default_str();
  zv->add_option("--nx", spec.nx)->check(CLI::Range(2, 100000))
      ->capture_default_str();
  zv->add_option("--ny", spec.ny)->check(CLI::Range(2, 100000))
      ->capture_default_str();

  auto* c4 = app.add_subcommand(
      "c4", "Jacobi constant at the triangular point across q1");
  std::vector<double> c4_a2 = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  double q1_min = 0.05, q1_max = 1.0;
  int q1_count = 20;
  c4->add_option("--a2-values", c4_a2, "Oblateness values, one curve each")
      ->delimiter(',')
      ->capture_default_str();
  c4->add_option("--q1-min", q1_min)->capture_default_str();
  c4->add_option("--q1-max", q1_max)->capture_default_str();
  c4->add_option("--q1-count", q1_count)->check(CLI::Range(1, 1000000))
      ->capture_default_str();

  auto* lo = app.add_subcommand("locus", "Equilibrium positions across q1");
  lo->add_option("--q1-min", q1_min)->capture_default_str();
  lo->add_option("--q1-max", q1_max)->capture_default_str();
  lo->add_option("--q1-count", q1_count)->check(CLI::Range(1, 1000000))
      ->capture_default_str();

  auto* rg = app.add_subcommand("region",
                                "Critical mass ratio curves across q1");
  std::vector<int> rg_ks = {1, 2, 3};
  std::vector<double> rg_a2 = {0.0, 0.02, 0.04};
  rg->add_option("--k", rg_ks, "Resonance orders")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rg->add_option("--a2-values", rg_a2)->delimiter(',')->capture_default_str();
  double rg_q1_min = 0.0, rg_q1_max = 1.0;
  int rg_q1_count = 101;
  rg->add_option("--q1-min", rg_q1_min)->capture_default_str();
  rg->add_option("--q1-max", rg_q1_max)->capture_default_str();
  rg->add_option("--q1-count", rg_q1_count)->check(CLI::Range(1, 1000000))
      ->capture_default_str();

  auto* in = app.add_subcommand("integrate", "Propagate one state in time");
  // --h is the step size here, so this subcommand keeps only the long help
  // flag; a short -h would collide with it.
  in->set_help_flag("--help", "Print this help message and exit");
  State s0{};
  double t_end = 0, h = 1e-3;
  int record_every = 100;
  in->add_option("--x", s0[0], "Initial x")->required();
  in->add_option("--y", s0[1], "Initial y")->required();
  in->add_option("--vx", s0[2], "Initial x velocity")->capture_default_str();
  in->add_option("--vy", s0[3], "Initial y velocity")->capture_default_str();
  in->add_option("--t-end", t_end, "Final time")->required();
  in->add_option("--h", h, "Step size")->capture_default_str();
  in->add_option("--record-every", record_every, "Sample stride")
      ->check(CLI::Range(1, 1000000000))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    derive(c.params);  // validate once, before any work
    if (*eq) return run_equilibria(c, estimates_only);
    if (*st) return run_stability(c, labels, method_name);
    if (*cm) return run_critical_mass(c, cm_ks);
    if (*zv) return run_zvc(c, spec);
    if (*c4) return run_c4(c, c4_a2, q1_min, q1_max, q1_count);
    if (*lo) return run_locus(c, q1_min, q1_max, q1_count);
    if (*rg)
      return run_region(c, rg_ks, rg_a2, rg_q1_min, rg_q1_max, rg_q1_count);
    if (*in) return run_integrate(c, s0, t_end, h, record_every);
  } catch (const Error& e) {
    report_error(e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error("invalid-argument", e.what());
    return 1;
  }
  return 0;
}
