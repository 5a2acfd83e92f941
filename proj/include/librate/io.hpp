#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "librate/propagate.hpp"
#include "librate/stability.hpp"
#include "librate/sweep.hpp"

namespace librate {

enum class OutputFormat { Csv, Json };

// Fixed 12-significant-digit formatting used for every number we emit, so
// identical runs produce identical bytes.
std::string fmt12(double v);

// Value after a fmt12 round trip; JSON numbers go through this.
double round12(double v);

std::string to_string(Provenance v);
std::string to_string(RootMethod v);
std::string to_string(Classification v);

// "# mu=... q1=... a2=... cd=... n=... w1=..." effective-parameter line.
std::string param_header(const SystemParams& p);

struct StabilityRow {
  std::string label;
  CharCoeffs coeffs;
  StabilityReport report;
};

struct CriticalMassRow {
  double q1, a2;
  CriticalMass cm;
};

// CSV: header row, '.' decimal, empty field for missing values.
// JSON: array of records (or an object where noted), null for missing.
void write_points(std::ostream& os, OutputFormat f,
                  const std::vector<EquilibriumPoint>& pts);
void write_stability(std::ostream& os, OutputFormat f,
                     const std::vector<StabilityRow>& rows);
void write_critical_mass(std::ostream& os, OutputFormat f,
                         const std::vector<CriticalMassRow>& rows);
void write_grid(std::ostream& os, OutputFormat f, const GridResult& grid);
void write_curves(std::ostream& os, OutputFormat f, const CurveSet& curves,
                  const std::string& param_name);
void write_trajectory(std::ostream& os, OutputFormat f, const Trajectory& tr);

}  // namespace librate
