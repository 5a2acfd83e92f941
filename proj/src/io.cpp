#include "librate/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace librate {

namespace {

using nlohmann::ordered_json;

// Missing values: empty CSV field, JSON null.
std::string csv_field(double v) { return std::isfinite(v) ? fmt12(v) : ""; }

ordered_json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

ordered_json root_list(const std::array<std::complex<double>, 4>& roots) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : roots)
    arr.push_back({{"re", jnum(r.real())}, {"im", jnum(r.imag())}});
  return arr;
}

void dump(std::ostream& os, const ordered_json& doc) { os << doc.dump(2) << '\n'; }

}  // namespace

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(fmt12(v).c_str(), nullptr);
}

std::string to_string(Provenance v) {
  return v == Provenance::AnalyticEstimate ? "estimate" : "refined";
}

std::string to_string(RootMethod v) {
  switch (v) {
    case RootMethod::NoDrag: return "no-drag";
    case RootMethod::FerrariSeries: return "ferrari-series";
    default: return "oracle";
  }
}

std::string to_string(Classification v) {
  switch (v) {
    case Classification::Stable: return "stable";
    case Classification::Unstable: return "unstable";
    default: return "marginal";
  }
}

std::string param_header(const SystemParams& p) {
  auto d = derive(p);
  return "# mu=" + fmt12(p.mu) + " q1=" + fmt12(p.q1) + " a2=" + fmt12(p.a2) +
         " cd=" + fmt12(p.cd) + " n=" + fmt12(d.n) + " w1=" + fmt12(d.w1);
}

void write_points(std::ostream& os, OutputFormat f,
                  const std::vector<EquilibriumPoint>& pts) {
  if (f == OutputFormat::Csv) {
    os << "label,x,y,residual,provenance,converged\n";
    for (const auto& pt : pts)
      os << pt.label << ',' << csv_field(pt.x) << ',' << csv_field(pt.y) << ','
         << csv_field(pt.residual) << ',' << to_string(pt.provenance) << ','
         << (pt.converged ? "true" : "false") << '\n';
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& pt : pts)
    arr.push_back({{"label", pt.label},
                   {"x", jnum(pt.x)},
                   {"y", jnum(pt.y)},
                   {"residual", jnum(pt.residual)},
                   {"provenance", to_string(pt.provenance)},
                   {"converged", pt.converged}});
  dump(os, ordered_json{{"points", arr}});
}

void write_stability(std::ostream& os, OutputFormat f,
                     const std::vector<StabilityRow>& rows) {
  if (f == OutputFormat::Csv) {
    os << "label,method,classification,a,b,c,d,max_residual,"
          "re1,im1,re2,im2,re3,im3,re4,im4\n";
    for (const auto& row : rows) {
      os << row.label << ',' << to_string(row.report.method) << ','
         << to_string(row.report.classification) << ','
         << csv_field(row.coeffs.a) << ',' << csv_field(row.coeffs.b) << ','
         << csv_field(row.coeffs.c) << ',' << csv_field(row.coeffs.d) << ','
         << csv_field(row.report.max_residual);
      for (const auto& r : row.report.roots)
        os << ',' << csv_field(r.real()) << ',' << csv_field(r.imag());
      os << '\n';
    }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows)
    arr.push_back({{"label", row.label},
                   {"method", to_string(row.report.method)},
                   {"classification", to_string(row.report.classification)},
                   {"coeffs",
                    {{"a", jnum(row.coeffs.a)},
                     {"b", jnum(row.coeffs.b)},
                     {"c", jnum(row.coeffs.c)},
                     {"d", jnum(row.coeffs.d)}}},
                   {"max_residual", jnum(row.report.max_residual)},
                   {"roots", root_list(row.report.roots)}});
  dump(os, ordered_json{{"stability", arr}});
}

void write_critical_mass(std::ostream& os, OutputFormat f,
                         const std::vector<CriticalMassRow>& rows) {
  if (f == OutputFormat::Csv) {
    os << "k,q1,a2,K,mu_k,omega1,omega2\n";
    for (const auto& row : rows)
      os << row.cm.k << ',' << csv_field(row.q1) << ',' << csv_field(row.a2)
         << ',' << csv_field(row.cm.K) << ',' << csv_field(row.cm.mu_k) << ','
         << csv_field(row.cm.omega1) << ',' << csv_field(row.cm.omega2)
         << '\n';
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows)
    arr.push_back({{"k", row.cm.k},
                   {"q1", jnum(row.q1)},
                   {"a2", jnum(row.a2)},
                   {"K", jnum(row.cm.K)},
                   {"mu_k", jnum(row.cm.mu_k)},
                   {"omega1", jnum(row.cm.omega1)},
                   {"omega2", jnum(row.cm.omega2)}});
  dump(os, ordered_json{{"critical_mass", arr}});
}

void write_grid(std::ostream& os, OutputFormat f, const GridResult& grid) {
  const auto& sp = grid.spec;
  auto xs = linspace(sp.x_min, sp.x_max, sp.nx);
  auto ys = linspace(sp.y_min, sp.y_max, sp.ny);
  if (grid.values.size() != xs.size() * ys.size())
    throw std::invalid_argument("grid value count does not match its spec");
  if (f == OutputFormat::Csv) {
    os << "x,y,C\n";
    for (int iy = 0; iy < sp.ny; ++iy)
      for (int ix = 0; ix < sp.nx; ++ix)
        os << fmt12(xs[static_cast<size_t>(ix)]) << ','
           << fmt12(ys[static_cast<size_t>(iy)]) << ','
           << csv_field(
                  grid.values[static_cast<size_t>(iy) * sp.nx + ix])
           << '\n';
    return;
  }
  ordered_json vals = ordered_json::array();
  for (int iy = 0; iy < sp.ny; ++iy) {
    ordered_json row = ordered_json::array();
    for (int ix = 0; ix < sp.nx; ++ix)
      row.push_back(jnum(grid.values[static_cast<size_t>(iy) * sp.nx + ix]));
    vals.push_back(std::move(row));
  }
  dump(os, ordered_json{{"grid",
                         {{"x_min", jnum(sp.x_min)},
                          {"x_max", jnum(sp.x_max)},
                          {"y_min", jnum(sp.y_min)},
                          {"y_max", jnum(sp.y_max)},
                          {"nx", sp.nx},
                          {"ny", sp.ny},
                          {"values", std::move(vals)}}}});
}

void write_curves(std::ostream& os, OutputFormat f, const CurveSet& curves,
                  const std::string& param_name) {
  for (const auto& cv : curves)
    if (!curves.empty() && cv.columns != curves.front().columns)
      throw std::invalid_argument("curves in one set must share columns");
  if (f == OutputFormat::Csv) {
    os << "curve," << param_name;
    if (!curves.empty())
      for (const auto& col : curves.front().columns) os << ',' << col;
    os << '\n';
    for (const auto& cv : curves)
      for (const auto& pt : cv.points) {
        os << cv.label << ',' << csv_field(pt.param);
        for (double v : pt.values) os << ',' << csv_field(v);
        os << '\n';
      }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& cv : curves) {
    ordered_json rows = ordered_json::array();
    for (const auto& pt : cv.points) {
      ordered_json row = ordered_json::array();
      row.push_back(jnum(pt.param));
      for (double v : pt.values) row.push_back(jnum(v));
      rows.push_back(std::move(row));
    }
    arr.push_back({{"label", cv.label},
                   {"param", param_name},
                   {"columns", cv.columns},
                   {"rows", std::move(rows)}});
  }
  dump(os, ordered_json{{"curves", arr}});
}

void write_trajectory(std::ostream& os, OutputFormat f, const Trajectory& tr) {
  if (f == OutputFormat::Csv) {
    os << "t,x,y,vx,vy,C\n";
    for (const auto& s : tr.samples)
      os << fmt12(s.t) << ',' << csv_field(s.s[0]) << ',' << csv_field(s.s[1])
         << ',' << csv_field(s.s[2]) << ',' << csv_field(s.s[3]) << ','
         << csv_field(s.c) << '\n';
    if (tr.aborted) os << "# aborted\n";
    return;
  }
  ordered_json samples = ordered_json::array();
  for (const auto& s : tr.samples)
    samples.push_back({jnum(s.t), jnum(s.s[0]), jnum(s.s[1]), jnum(s.s[2]),
                       jnum(s.s[3]), jnum(s.c)});
  dump(os, ordered_json{{"trajectory",
                         {{"step", jnum(tr.step)},
                          {"aborted", tr.aborted},
                          {"samples", std::move(samples)}}}});
}

}  // namespace librate
