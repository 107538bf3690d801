#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vortexlab/analysis.hpp"
#include "vortexlab/presets.hpp"

namespace vortexlab::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Ring analysis of a resolved field configuration; r_max in meters.
VisibilityReport analyze_field(const FieldConfig& cfg);

struct ScalingRow {
  int ell = 0;
  double r_max = 0.0;       // meters
  double expected = 0.0;    // w0 sqrt(l/2)
  double rel_error = 0.0;
};

struct ScalingResult {
  std::vector<ScalingRow> rows;
  double exponent = 0.0;
};

/// r_max of single scalar LG modes at the focus and the log-log slope against l.
ScalingResult paraxial_scaling(const std::vector<int>& ells, double w0_m, double lambda_m);

}  // namespace vortexlab::cli
