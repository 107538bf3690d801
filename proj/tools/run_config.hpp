#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vortexlab/grid_io.hpp"
#include "vortexlab/presets.hpp"

namespace vortexlab::cli {

/// Usage errors map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridOptions {
  std::optional<std::string> kind;  // "cartesian" | "polar"
  std::optional<int> resolution;
  std::optional<double> extent;  // half-width (cartesian) or r_max (polar), species length units
};

struct SweepOptions {
  std::optional<std::string> param;  // w0 | b | gamma | l
  std::vector<double> values;
};

/// Flat run description shared by the command line and the JSON config file.
struct RunConfig {
  std::optional<std::string> preset;
  std::optional<std::string> species;
  std::optional<int> ell;
  std::optional<std::string> weighting;
  std::optional<int> sigma;
  std::optional<double> w0_um;
  std::optional<double> w0_m;
  std::optional<double> w0_lambda;
  std::optional<double> lambda_nm;
  std::optional<double> omega_hz;
  std::optional<double> b;
  std::optional<double> gamma;
  std::optional<std::string> contraction;
  std::optional<double> t;
  std::optional<double> z;
  GridOptions grid;
  std::optional<std::string> colormap;
  std::optional<std::string> out;
  SweepOptions sweep;

  /// Fields set in `o` replace the ones here.
  void overlay(const RunConfig& o);
  bool has_explicit_parameters() const;
};

/// Parses a JSON object with the RunConfig keys; unknown keys are rejected.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig parse_run_config(const std::string& json_text);

/// Resolves a preset or explicit parameters into a field configuration.
FieldConfig resolve_field(const RunConfig& rc);

/// Applies one sweep value to `base`: w0 in units of lambda (photon, GW), b, gamma or l.
FieldConfig apply_sweep_value(const FieldConfig& base, const std::string& param, double value);

GridSpec resolve_grid(const RunConfig& rc, const FieldConfig& field);

std::filesystem::path output_dir(const RunConfig& rc);

}  // namespace vortexlab::cli
