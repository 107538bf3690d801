#include "vortexlab/presets.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "vortexlab/electron_field.hpp"
#include "vortexlab/photon_field.hpp"

namespace vortexlab {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

FieldConfig photon_config(std::string name, double lambda_m, double w0_m, int ell) {
  FieldConfig cfg;
  cfg.species = Species::photon;
  cfg.name = std::move(name);
  cfg.params = PhotonPotentialParams::from_wavelength(lambda_m, w0_m, ell);
  return cfg;
}

FieldConfig electron_config(std::string name, double b, double gamma, int ell) {
  FieldConfig cfg;
  cfg.species = Species::electron;
  cfg.name = std::move(name);
  ElectronPacketParams p;
  p.b = b;
  p.gamma = gamma;
  p.ell = ell;
  cfg.params = p;
  return cfg;
}

FieldConfig gw_config(std::string name, double omega_hz, double w0_over_lambda, int ell) {
  FieldConfig cfg;
  cfg.species = Species::gw;
  cfg.name = std::move(name);
  PhotonPotentialParams p;
  p.omega_hz = omega_hz;
  p.w0_m = w0_over_lambda * constants::c / omega_hz;
  p.ell = ell;
  cfg.params = p;
  return cfg;
}

}  // namespace

std::string_view species_name(Species s) noexcept {
  switch (s) {
    case Species::photon: return "photon";
    case Species::electron: return "electron";
    case Species::gw: return "gw";
  }
  return "?";
}

std::optional<Species> parse_species(std::string_view name) noexcept {
  if (name == "photon") return Species::photon;
  if (name == "electron") return Species::electron;
  if (name == "gw") return Species::gw;
  return std::nullopt;
}

std::string_view weighting_name(Weighting w) noexcept {
  switch (w) {
    case Weighting::pair_cos: return "cos";
    case Weighting::pair_sin: return "sin";
    case Weighting::single: return "single";
  }
  return "?";
}

std::optional<Weighting> parse_weighting(std::string_view name) noexcept {
  if (name == "cos") return Weighting::pair_cos;
  if (name == "sin") return Weighting::pair_sin;
  if (name == "single") return Weighting::single;
  return std::nullopt;
}

SuperpositionSpec make_superposition(Weighting w, int ell) {
  switch (w) {
    case Weighting::pair_cos: return SuperpositionSpec::pair_cos(ell);
    case Weighting::pair_sin: return SuperpositionSpec::pair_sin(ell);
    case Weighting::single: return SuperpositionSpec::single(ell);
  }
  return SuperpositionSpec::single(ell);
}

int FieldConfig::ell() const {
  return std::visit([](const auto& p) { return p.ell; }, params);
}

Scales FieldConfig::scales() const {
  return std::visit([](const auto& p) { return p.scales(); }, params);
}

double FieldConfig::waist_hint() const {
  if (const auto* e = std::get_if<ElectronPacketParams>(&params)) return e->equivalent_waist();
  return std::get<PhotonPotentialParams>(params).waist();
}

std::vector<std::pair<std::string, std::string>> FieldConfig::describe() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("species", std::string(species_name(species)));
  out.emplace_back("preset", name);
  out.emplace_back("weighting", std::string(weighting_name(weighting)));
  out.emplace_back("ell", std::to_string(ell()));
  if (const auto* e = std::get_if<ElectronPacketParams>(&params)) {
    out.emplace_back("b", fmt_double(e->b));
    out.emplace_back("gamma", fmt_double(e->gamma));
    out.emplace_back("q_per_m", fmt_double(e->q()));
  } else {
    const auto& p = std::get<PhotonPotentialParams>(params);
    out.emplace_back("omega_hz", fmt_double(p.omega_hz));
    out.emplace_back("lambda_m", fmt_double(p.wavelength()));
    out.emplace_back("w0_m", fmt_double(p.w0_m));
    out.emplace_back("w0_over_lambda", fmt_double(p.waist()));
    out.emplace_back("sigma", std::to_string(p.sigma));
  }
  if (species == Species::gw) {
    out.emplace_back("contraction", contraction == Contraction::six_components ? "six_components" : "full_symmetric");
  }
  const Scales s = scales();
  out.emplace_back("length_unit_m", fmt_double(s.length_m));
  out.emplace_back("time_unit_s", fmt_double(s.time_s));
  out.emplace_back("slice_t", fmt_double(t));
  out.emplace_back("slice_z", fmt_double(z));
  return out;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> v;
    v.push_back({"fig1a", "photon, l=+-15, lambda=800 nm, w0=149 um (paraxial)",
                 photon_config("fig1a", 800e-9, 149e-6, 15)});
    v.push_back({"fig1b", "photon, l=+-15, lambda=800 nm, w0=6.2 um (focused)",
                 photon_config("fig1b", 800e-9, 6.2e-6, 15)});
    v.push_back({"fig2a", "electron, l=+-15, b=1500, gamma=1+5e-5 (nonrelativistic)",
                 electron_config("fig2a", 1500.0, 1.0 + 5e-5, 15)});
    v.push_back({"fig2b", "electron, l=+-15, b=142.1, gamma=1.9 (focused, relativistic)",
                 electron_config("fig2b", 142.1, 1.9, 15)});
    v.push_back({"fig3a", "gravitational wave, l=+-15, Omega=150 Hz, w0=63.1 lambda",
                 gw_config("fig3a", 150.0, 63.1, 15)});
    v.push_back({"fig3b", "gravitational wave, l=+-15, Omega=150 Hz, w0=7.41 lambda",
                 gw_config("fig3b", 150.0, 7.41, 15)});
    return v;
  }();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  std::ostringstream msg;
  msg << "unknown preset '" << name << "'; valid presets:";
  for (const auto& p : presets()) msg << ' ' << p.name;
  throw ParameterError(msg.str());
}

std::vector<std::string> component_names(Species s) {
  switch (s) {
    case Species::photon: return {"F_x", "F_y", "F_z"};
    case Species::electron: return {"psi1", "psi2", "psi3", "psi4"};
    case Species::gw: return {"G11", "G12", "G13", "G22", "G23", "G33"};
  }
  return {};
}

PotentialExpr make_potential(const FieldConfig& cfg) {
  const SuperpositionSpec spec = make_superposition(cfg.weighting, cfg.ell());
  return std::visit([&](const auto& p) { return superpose(p, spec); }, cfg.params);
}

FieldSample sample_field(const FieldConfig& cfg, const PotentialExpr& potential, double r, double phi) {
  const SpacetimePoint pt{cfg.t, r, phi, cfg.z};
  FieldSample out;
  switch (cfg.species) {
    case Species::photon: {
      const RSVector F = rs_vector(pt, potential);
      out.intensity = em_intensity(F);
      out.components = {F.x, F.y, F.z};
      break;
    }
    case Species::electron: {
      const auto& p = std::get<ElectronPacketParams>(cfg.params);
      const DiracSpinor s = dirac_spinor(pt, potential, p.lambda_bar_q());
      out.intensity = electron_density(s);
      out.components.assign(s.psi.begin(), s.psi.end());
      break;
    }
    case Species::gw: {
      const CurvatureTensor G = curvature(pt, potential);
      out.intensity = gw_intensity(G, cfg.contraction);
      const auto c = G.components();
      out.components.assign(c.begin(), c.end());
      break;
    }
  }
  return out;
}

IntensityFn make_intensity(const FieldConfig& cfg) {
  PotentialExpr potential = make_potential(cfg);
  return [cfg, potential = std::move(potential)](double r, double phi) {
    const SpacetimePoint pt{cfg.t, r, phi, cfg.z};
    switch (cfg.species) {
      case Species::photon:
        return em_intensity(rs_vector(pt, potential));
      case Species::electron:
        return electron_density(
            dirac_spinor(pt, potential, std::get<ElectronPacketParams>(cfg.params).lambda_bar_q()));
      case Species::gw:
        return gw_intensity(curvature(pt, potential), cfg.contraction);
    }
    return 0.0;
  };
}

}  // namespace vortexlab
