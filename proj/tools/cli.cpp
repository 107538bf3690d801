#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "run_config.hpp"
#include "vortexlab/grid_io.hpp"
#include "vortexlab/validation.hpp"

namespace vortexlab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
void optional_flag(CLI::App* app, const std::string& name, std::optional<T>& dst, const std::string& desc) {
  app->add_option_function<T>(name, [&dst](const T& v) { dst = v; }, desc);
}

void add_field_options(CLI::App* app, RunConfig& rc, std::string& config_path) {
  app->add_option("--config", config_path, "JSON run configuration; flags override its values");
  optional_flag(app, "--preset", rc.preset, "named parameter set (see `presets`)");
  optional_flag(app, "--species", rc.species, "photon | electron | gw");
  optional_flag(app, "--l", rc.ell, "topological charge");
  optional_flag(app, "--weighting", rc.weighting, "cos | sin | single (presets: cos, explicit: single)");
  optional_flag(app, "--sigma", rc.sigma, "circular polarisation +-1 (photon, gw)");
  optional_flag(app, "--w0-um", rc.w0_um, "beam waist in micrometers");
  optional_flag(app, "--w0-m", rc.w0_m, "beam waist in meters");
  optional_flag(app, "--w0-lambda", rc.w0_lambda, "beam waist in wavelengths");
  optional_flag(app, "--lambda-nm", rc.lambda_nm, "wavelength in nanometers");
  optional_flag(app, "--omega-hz", rc.omega_hz, "mean frequency Omega in Hz (lambda = c / Omega)");
  optional_flag(app, "--b", rc.b, "electron focusing parameter b");
  optional_flag(app, "--gamma", rc.gamma, "electron Lorentz factor");
  optional_flag(app, "--contraction", rc.contraction, "gw intensity: six_components | full_symmetric");
  optional_flag(app, "--t", rc.t, "time slice, internal units");
  optional_flag(app, "--z", rc.z, "propagation slice, internal units");
  optional_flag(app, "--out", rc.out, "output directory (default .)");
}

RunConfig merged(const RunConfig& flags, const std::string& config_path) {
  RunConfig rc;
  if (!config_path.empty()) rc = load_run_config(config_path);
  rc.overlay(flags);
  return rc;
}

Metadata field_metadata(const FieldConfig& cfg) { return cfg.describe(); }

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw GridError("cannot create directory " + dir.string() + ": " + ec.message());
}

void print_report(std::ostream& out, const std::string& name, const VisibilityReport& r) {
  out << name << ": vis=" << std::setprecision(4) << std::fixed << r.vis << std::defaultfloat << std::setprecision(6)
      << " r_max=" << r.r_max << " m (" << r.r_max_over_w0 << " w0) fringes=" << r.fringe_count;
  if (r.fringe_count_warning) out << " [fringe count differs from 2|l|]";
  if (r.r_max_fallback) out << " [intensity peaks on the axis; ring taken at w0 sqrt(l/2)]";
  out << '\n';
}

std::vector<double> parse_values(const std::vector<std::string>& items) {
  std::vector<double> values;
  for (const auto& item : items) {
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw UsageError("invalid sweep value '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

// --------------------------------------------------------------------------

int cmd_presets(std::ostream& out) {
  for (const auto& p : presets()) out << std::left << std::setw(7) << p.name << ' ' << p.description << '\n';
  return kOk;
}

int cmd_field(const RunConfig& rc, const std::string& colormap, std::ostream& out) {
  const FieldConfig cfg = resolve_field(rc);
  const GridSpec spec = resolve_grid(rc, cfg);
  const Colormap cmap = parse_colormap(colormap);
  const fs::path dir = output_dir(rc);
  ensure_dir(dir);

  FieldGrid grid = sample_grid(make_intensity(cfg), spec);
  grid.metadata = field_metadata(cfg);
  grid.metadata.emplace_back("grid_unit", cfg.species == Species::electron ? "1/q * sqrt(2/b)" : "w0");

  const VisibilityReport report = analyze_field(cfg);
  const std::string stem = cfg.name;
  write_csv(grid, dir / (stem + ".csv"));
  write_png(grid, dir / (stem + ".png"), cmap);
  write_report(report, dir / (stem + ".json"), field_metadata(cfg));
  print_report(out, stem, report);
  out << "wrote " << (dir / (stem + ".csv")).string() << ", " << (dir / (stem + ".png")).string() << ", "
      << (dir / (stem + ".json")).string() << '\n';
  return kOk;
}

int cmd_visibility(const RunConfig& rc, bool all, std::ostream& out) {
  const fs::path dir = output_dir(rc);
  if (all) {
    if (rc.preset || rc.has_explicit_parameters()) throw UsageError("--all takes no field parameters");
    ensure_dir(dir);
    ordered_json index = ordered_json::array();
    for (const auto& p : presets()) {
      RunConfig one = rc;
      one.preset = p.name;
      const FieldConfig cfg = resolve_field(one);
      const VisibilityReport report = analyze_field(cfg);
      const std::string file = p.name + ".json";
      write_report(report, dir / file, field_metadata(cfg));
      print_report(out, p.name, report);
      index.push_back({{"preset", p.name}, {"report", file}, {"vis", report.vis}, {"r_max", report.r_max},
                       {"fringe_count", report.fringe_count}});
    }
    std::ofstream f(dir / "index.json");
    if (!f) throw GridError("cannot write " + (dir / "index.json").string());
    f << ordered_json{{"reports", index}}.dump(2) << '\n';
    out << "wrote " << (dir / "index.json").string() << '\n';
    return kOk;
  }
  const FieldConfig cfg = resolve_field(rc);
  const VisibilityReport report = analyze_field(cfg);
  print_report(out, cfg.name, report);
  if (rc.out) {
    ensure_dir(dir);
    write_report(report, dir / (cfg.name + ".json"), field_metadata(cfg));
  }
  return kOk;
}

int cmd_sweep(const RunConfig& rc, std::ostream& out) {
  if (!rc.sweep.param) throw UsageError("sweep needs --param");
  if (rc.sweep.values.size() < 2) throw UsageError("sweep needs at least two --values");
  const std::string& param = *rc.sweep.param;
  const FieldConfig base = resolve_field(rc);
  const fs::path dir = output_dir(rc);
  ensure_dir(dir);

  const std::string stem = "sweep_" + param;
  std::ofstream csv(dir / (stem + ".csv"));
  if (!csv) throw GridError("cannot write " + (dir / (stem + ".csv")).string());
  for (const auto& [k, v] : field_metadata(base)) csv << "# " << k << '=' << v << '\n';
  csv << param << ",r_max_m,r_max_over_w0,vis,fringe_count\n";
  ordered_json rows = ordered_json::array();
  std::vector<std::pair<double, double>> ell_rmax;
  for (double v : rc.sweep.values) {
    const FieldConfig cfg = apply_sweep_value(base, param, v);
    const VisibilityReport r = analyze_field(cfg);
    csv << num(v) << ',' << num(r.r_max) << ',' << num(r.r_max_over_w0) << ',' << num(r.vis) << ','
        << r.fringe_count << '\n';
    rows.push_back({{param, v}, {"r_max", r.r_max}, {"r_max_over_w0", r.r_max_over_w0}, {"vis", r.vis},
                    {"fringe_count", r.fringe_count}});
    out << param << '=' << num(v) << " r_max=" << num(r.r_max) << " vis=" << num(r.vis) << '\n';
    ell_rmax.emplace_back(std::abs(v), r.r_max);
  }
  ordered_json index{{"param", param}, {"base", base.name}, {"csv", stem + ".csv"}, {"rows", rows}};
  if (param == "l" && ell_rmax.size() >= 4) {
    const double exponent = scaling_fit(ell_rmax);
    index["r_max_exponent"] = exponent;
    out << "r_max ~ l^" << num(exponent) << '\n';
  }
  std::ofstream js(dir / (stem + ".json"));
  if (!js) throw GridError("cannot write " + (dir / (stem + ".json")).string());
  js << index.dump(2) << '\n';
  out << "wrote " << (dir / (stem + ".csv")).string() << ", " << (dir / (stem + ".json")).string() << '\n';
  return kOk;
}

int cmd_scaling(const std::vector<int>& ells, double w0_um, double lambda_nm, std::ostream& out) {
  const ScalingResult res = paraxial_scaling(ells, w0_um * 1e-6, lambda_nm * 1e-9);
  bool ok = std::abs(res.exponent - 0.5) <= 0.02;
  out << "l,r_max_m,w0_sqrt_l_over_2_m,rel_error\n";
  for (const auto& row : res.rows) {
    out << row.ell << ',' << num(row.r_max) << ',' << num(row.expected) << ',' << num(row.rel_error) << '\n';
    ok = ok && row.rel_error < 5e-3;
  }
  out << "exponent=" << num(res.exponent) << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kOk : kCheckFailed;
}

int cmd_validate(bool negative_controls, const std::vector<std::string>& overrides, const std::string& json_path,
                 std::ostream& out) {
  Thresholds th;
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--threshold expects name=value, got '" + item + "'");
    double v = 0.0;
    const std::string value = item.substr(eq + 1);
    const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
    if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
      throw UsageError("--threshold: bad value '" + value + "'");
    }
    try {
      th.set(item.substr(0, eq), v);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
  }
  const std::vector<ResidualReport> reports = run_suite(th, negative_controls);
  out << std::left << std::setw(32) << "check" << std::setw(14) << "max residual" << std::setw(12) << "threshold"
      << "status\n";
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    std::string status = r.pass ? "pass" : "FAIL";
    if (r.negative_control) status = r.pass ? "UNEXPECTED PASS (control)" : "expected-fail (control)";
    std::ostringstream res, thr;
    res << std::scientific << std::setprecision(3) << r.max_residual;
    thr << std::scientific << std::setprecision(1) << r.threshold;
    out << std::left << std::setw(32) << r.name << std::setw(14) << res.str() << std::setw(12) << thr.str()
        << status << '\n';
    arr.push_back({{"name", r.name},
                   {"points", r.points},
                   {"evaluated", r.evaluated},
                   {"skipped", r.skipped},
                   {"max_residual", r.max_residual},
                   {"threshold", r.threshold},
                   {"pass", r.pass},
                   {"negative_control", r.negative_control}});
  }
  const bool ok = suite_ok(reports);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw GridError("cannot write " + json_path);
    f << ordered_json{{"ok", ok}, {"checks", arr}}.dump(2) << '\n';
  }
  out << (ok ? "all checks behaved as designed\n" : "validation FAILED\n");
  return ok ? kOk : kCheckFailed;
}

}  // namespace

VisibilityReport analyze_field(const FieldConfig& cfg) {
  RMaxOptions opt;
  opt.axis_fallback = true;
  return analyze_ring(make_intensity(cfg), cfg.ell(), cfg.waist_hint(), cfg.scales().length_m, opt);
}

ScalingResult paraxial_scaling(const std::vector<int>& ells, double w0_m, double lambda_m) {
  ScalingResult res;
  std::vector<std::pair<double, double>> pairs;
  for (int ell : ells) {
    if (ell < 1) throw UsageError("scaling: l values must be >= 1");
    const ParaxialLGParams lg{0, ell, w0_m, lambda_m};
    lg.validate();
    const RingIntensity I = [&](double r, double phi) { return std::norm(lg_paraxial({0.0, r, phi, 0.0}, lg)); };
    RMaxOptions opt;
    opt.samples_per_fringe = 1;
    const RMaxResult rm = find_r_max(I, ell, w0_m, opt);
    ScalingRow row;
    row.ell = ell;
    row.r_max = rm.r_max;
    row.expected = w0_m * std::sqrt(ell / 2.0);
    row.rel_error = std::abs(row.r_max - row.expected) / row.expected;
    res.rows.push_back(row);
    pairs.emplace_back(ell, rm.r_max);
  }
  res.exponent = scaling_fit(pairs);
  return res;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"vortexlab: focused vortex beams of photons, electrons and gravitational waves", "vortexlab"};
  app.require_subcommand(1);

  RunConfig field_flags, vis_flags, sweep_flags;
  std::string field_cfg, vis_cfg, sweep_cfg;
  std::string colormap = "hot";

  auto* presets_cmd = app.add_subcommand("presets", "list the named parameter sets");

  auto* field_cmd = app.add_subcommand("field", "sample a field on a grid and write CSV, PNG and a JSON report");
  add_field_options(field_cmd, field_flags, field_cfg);
  optional_flag(field_cmd, "--grid", field_flags.grid.kind, "cartesian | polar");
  optional_flag(field_cmd, "--resolution", field_flags.grid.resolution, "nodes per axis (default 256)");
  optional_flag(field_cmd, "--extent", field_flags.grid.extent, "half-width (or outer radius) in waist units");
  optional_flag(field_cmd, "--colormap", field_flags.colormap, "gray | hot");

  bool all = false;
  auto* vis_cmd = app.add_subcommand("visibility", "ring radius and fringe visibility");
  add_field_options(vis_cmd, vis_flags, vis_cfg);
  vis_cmd->add_flag("--all", all, "analyse every preset and write an index file");

  std::vector<std::string> sweep_values;
  auto* sweep_cmd = app.add_subcommand("sweep", "visibility along a parameter sweep");
  add_field_options(sweep_cmd, sweep_flags, sweep_cfg);
  optional_flag(sweep_cmd, "--param", sweep_flags.sweep.param, "w0 (in wavelengths) | b | gamma | l");
  sweep_cmd->add_option("--values", sweep_values, "sweep values")->delimiter(',');

  std::vector<int> ells{5, 10, 20, 40};
  double scale_w0_um = 100.0, scale_lambda_nm = 800.0;
  auto* scaling_cmd = app.add_subcommand("scaling", "paraxial r_max scaling of scalar LG modes");
  scaling_cmd->add_option("--l", ells, "topological charges")->delimiter(',');
  scaling_cmd->add_option("--w0-um", scale_w0_um, "beam waist in micrometers");
  scaling_cmd->add_option("--lambda-nm", scale_lambda_nm, "wavelength in nanometers");

  bool negative = false;
  std::vector<std::string> thresholds;
  std::string validate_json;
  auto* validate_cmd = app.add_subcommand("validate", "run the residual checks");
  validate_cmd->add_flag("--negative-controls", negative, "also run the negative controls (expected to fail)");
  validate_cmd->add_option("--threshold", thresholds, "override a threshold, name=value");
  validate_cmd->add_option("--json", validate_json, "write the reports as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (presets_cmd->parsed()) return cmd_presets(out);
    if (field_cmd->parsed()) {
      const RunConfig rc = merged(field_flags, field_cfg);
      return cmd_field(rc, rc.colormap.value_or(colormap), out);
    }
    if (vis_cmd->parsed()) return cmd_visibility(merged(vis_flags, vis_cfg), all, out);
    if (sweep_cmd->parsed()) {
      if (!sweep_values.empty()) sweep_flags.sweep.values = parse_values(sweep_values);
      return cmd_sweep(merged(sweep_flags, sweep_cfg), out);
    }
    if (scaling_cmd->parsed()) return cmd_scaling(ells, scale_w0_um, scale_lambda_nm, out);
    if (validate_cmd->parsed()) return cmd_validate(negative, thresholds, validate_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace vortexlab::cli
