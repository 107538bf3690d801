#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vortexlab::cli {
namespace {

using nlohmann::json;

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

template <typename T>
std::optional<T> read(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config: key '") + key + "' has the wrong type");
  }
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw UsageError("config: " + where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw UsageError("config: unknown key '" + key + "' in " + where);
  }
}

}  // namespace

void RunConfig::overlay(const RunConfig& o) {
  take(preset, o.preset);
  take(species, o.species);
  take(ell, o.ell);
  take(weighting, o.weighting);
  take(sigma, o.sigma);
  take(w0_um, o.w0_um);
  take(w0_m, o.w0_m);
  take(w0_lambda, o.w0_lambda);
  take(lambda_nm, o.lambda_nm);
  take(omega_hz, o.omega_hz);
  take(b, o.b);
  take(gamma, o.gamma);
  take(contraction, o.contraction);
  take(t, o.t);
  take(z, o.z);
  take(grid.kind, o.grid.kind);
  take(grid.resolution, o.grid.resolution);
  take(grid.extent, o.grid.extent);
  take(colormap, o.colormap);
  take(out, o.out);
  take(sweep.param, o.sweep.param);
  if (!o.sweep.values.empty()) sweep.values = o.sweep.values;
}

bool RunConfig::has_explicit_parameters() const {
  return species || ell || sigma || w0_um || w0_m || w0_lambda || lambda_nm || omega_hz || b || gamma;
}

RunConfig parse_run_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: invalid JSON: ") + e.what());
  }
  reject_unknown(j,
                 {"preset", "species", "l", "weighting", "sigma", "w0_um", "w0_m", "w0_lambda", "lambda_nm",
                  "omega_hz", "b", "gamma", "contraction", "t", "z", "grid", "colormap", "out", "sweep"},
                 "run config");
  RunConfig rc;
  rc.preset = read<std::string>(j, "preset");
  rc.species = read<std::string>(j, "species");
  rc.ell = read<int>(j, "l");
  rc.weighting = read<std::string>(j, "weighting");
  rc.sigma = read<int>(j, "sigma");
  rc.w0_um = read<double>(j, "w0_um");
  rc.w0_m = read<double>(j, "w0_m");
  rc.w0_lambda = read<double>(j, "w0_lambda");
  rc.lambda_nm = read<double>(j, "lambda_nm");
  rc.omega_hz = read<double>(j, "omega_hz");
  rc.b = read<double>(j, "b");
  rc.gamma = read<double>(j, "gamma");
  rc.contraction = read<std::string>(j, "contraction");
  rc.t = read<double>(j, "t");
  rc.z = read<double>(j, "z");
  rc.colormap = read<std::string>(j, "colormap");
  rc.out = read<std::string>(j, "out");
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    reject_unknown(g, {"kind", "resolution", "extent"}, "grid");
    rc.grid.kind = read<std::string>(g, "kind");
    rc.grid.resolution = read<int>(g, "resolution");
    rc.grid.extent = read<double>(g, "extent");
  }
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    reject_unknown(s, {"param", "values"}, "sweep");
    rc.sweep.param = read<std::string>(s, "param");
    if (auto v = read<std::vector<double>>(s, "values")) rc.sweep.values = *v;
  }
  return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

namespace {

int count_set(std::initializer_list<bool> flags) {
  int n = 0;
  for (bool f : flags) n += f ? 1 : 0;
  return n;
}

void reject(bool present, const char* flag, const char* species) {
  if (present) throw UsageError(std::string(flag) + " does not apply to species " + species);
}

}  // namespace

FieldConfig resolve_field(const RunConfig& rc) {
  FieldConfig cfg;
  if (rc.preset) {
    if (rc.has_explicit_parameters()) {
      throw UsageError("--preset and explicit field parameters are mutually exclusive");
    }
    try {
      cfg = find_preset(*rc.preset).config;
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
  } else {
    if (!rc.species) throw UsageError("either --preset or --species is required");
    const auto species = parse_species(*rc.species);
    if (!species) throw UsageError("unknown species '" + *rc.species + "' (valid: photon, electron, gw)");
    if (!rc.ell) throw UsageError("--l is required with explicit parameters");
    cfg.species = *species;
    cfg.name = "custom";
    cfg.weighting = Weighting::single;
    const char* sname = rc.species->c_str();

    if (cfg.species == Species::electron) {
      reject(rc.w0_um || rc.w0_m || rc.w0_lambda, "--w0-*", sname);
      reject(rc.lambda_nm.has_value(), "--lambda-nm", sname);
      reject(rc.omega_hz.has_value(), "--omega-hz", sname);
      reject(rc.sigma.has_value(), "--sigma", sname);
      if (!rc.b || !rc.gamma) throw UsageError("electron fields need --b and --gamma");
      ElectronPacketParams p;
      p.b = *rc.b;
      p.gamma = *rc.gamma;
      p.ell = *rc.ell;
      cfg.params = p;
    } else {
      reject(rc.b.has_value(), "--b", sname);
      reject(rc.gamma.has_value(), "--gamma", sname);
      if (count_set({rc.lambda_nm.has_value(), rc.omega_hz.has_value()}) != 1) {
        throw UsageError("give exactly one of --lambda-nm and --omega-hz");
      }
      if (count_set({rc.w0_um.has_value(), rc.w0_m.has_value(), rc.w0_lambda.has_value()}) != 1) {
        throw UsageError("give exactly one of --w0-um, --w0-m and --w0-lambda");
      }
      PhotonPotentialParams p;
      p.omega_hz = rc.omega_hz ? *rc.omega_hz : constants::c / (*rc.lambda_nm * 1e-9);
      if (rc.w0_um) p.w0_m = *rc.w0_um * 1e-6;
      else if (rc.w0_m) p.w0_m = *rc.w0_m;
      else p.w0_m = *rc.w0_lambda * p.wavelength();
      p.ell = *rc.ell;
      if (rc.sigma) p.sigma = *rc.sigma;
      cfg.params = p;
    }
  }

  if (rc.weighting) {
    const auto w = parse_weighting(*rc.weighting);
    if (!w) throw UsageError("unknown weighting '" + *rc.weighting + "' (valid: cos, sin, single)");
    cfg.weighting = *w;
  }
  if (rc.contraction) {
    if (*rc.contraction == "six_components") cfg.contraction = Contraction::six_components;
    else if (*rc.contraction == "full_symmetric") cfg.contraction = Contraction::full_symmetric;
    else throw UsageError("unknown contraction '" + *rc.contraction + "' (valid: six_components, full_symmetric)");
  }
  if (rc.t) cfg.t = *rc.t;
  if (rc.z) cfg.z = *rc.z;

  try {
    std::visit([](const auto& p) { p.validate(); }, cfg.params);
    make_superposition(cfg.weighting, cfg.ell()).validate();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  if (cfg.ell() == 0) throw UsageError("l must be non-zero");
  return cfg;
}

FieldConfig apply_sweep_value(const FieldConfig& base, const std::string& param, double value) {
  FieldConfig cfg = base;
  if (!std::isfinite(value)) throw UsageError("sweep values must be finite");
  if (param == "l") {
    if (value != std::round(value) || value == 0.0) throw UsageError("sweep l values must be non-zero integers");
    std::visit([&](auto& p) { p.ell = static_cast<int>(value); }, cfg.params);
  } else if (param == "w0") {
    auto* p = std::get_if<PhotonPotentialParams>(&cfg.params);
    if (!p) throw UsageError("sweep parameter w0 needs a photon or gw field");
    if (!(value > 0.0)) throw UsageError("sweep w0 values must be positive");
    p->w0_m = value * p->wavelength();
  } else if (param == "b" || param == "gamma") {
    auto* p = std::get_if<ElectronPacketParams>(&cfg.params);
    if (!p) throw UsageError("sweep parameter " + param + " needs an electron field");
    (param == "b" ? p->b : p->gamma) = value;
  } else {
    throw UsageError("unknown sweep parameter '" + param + "' (valid: w0, b, gamma, l)");
  }
  try {
    std::visit([](const auto& p) { p.validate(); }, cfg.params);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

GridSpec resolve_grid(const RunConfig& rc, const FieldConfig& field) {
  const std::string kind = rc.grid.kind.value_or("cartesian");
  const int n = rc.grid.resolution.value_or(256);
  const double extent = rc.grid.extent.value_or(2.0 * std::max(1.0, std::sqrt(std::abs(field.ell()) / 2.0)));
  if (n < 2) throw UsageError("grid resolution must be >= 2");
  if (!(extent > 0.0)) throw UsageError("grid extent must be positive");
  GridSpec spec;
  if (kind == "cartesian") spec = GridSpec::cartesian(extent, n, field.waist_hint());
  else if (kind == "polar") spec = GridSpec::polar(extent / 100.0, extent, n, n, field.waist_hint());
  else throw UsageError("unknown grid kind '" + kind + "' (valid: cartesian, polar)");
  spec.t = field.t;
  spec.z = field.z;
  try {
    spec.validate();
  } catch (const GridError& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::filesystem::path output_dir(const RunConfig& rc) { return rc.out.value_or("."); }

}  // namespace vortexlab::cli
