#pragma once

// Named parameter sets for the three species and the pointwise intensity
// functions built from them.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vortexlab/gw_field.hpp"
#include "vortexlab/potentials.hpp"

namespace vortexlab {

enum class Species { photon, electron, gw };

std::string_view species_name(Species s) noexcept;
std::optional<Species> parse_species(std::string_view name) noexcept;

enum class Weighting { pair_cos, pair_sin, single };

std::string_view weighting_name(Weighting w) noexcept;
std::optional<Weighting> parse_weighting(std::string_view name) noexcept;
SuperpositionSpec make_superposition(Weighting w, int ell);

/// A fully specified field configuration for one species.
struct FieldConfig {
  Species species = Species::photon;
  std::string name;  // preset name or "custom"
  Weighting weighting = Weighting::pair_cos;
  std::variant<PhotonPotentialParams, ElectronPacketParams> params;
  Contraction contraction = Contraction::six_components;
  double t = 0.0;  // evaluation slice, internal units
  double z = 0.0;

  int ell() const;
  Scales scales() const;
  /// Ring-radius hint in internal units: w0 (photon, GW) or sqrt(2/b) (electron).
  double waist_hint() const;
  /// Parameters as flat key/value pairs, physical units.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

struct Preset {
  std::string name;
  std::string description;
  FieldConfig config;
};

const std::vector<Preset>& presets();
/// Throws ParameterError listing the valid names when `name` is unknown.
const Preset& find_preset(std::string_view name);

/// I(r, phi) at the configured (t, z) slice, r and phi in internal units.
using IntensityFn = std::function<double(double r, double phi)>;

/// Intensity of the configured species plus per-component amplitudes.
struct FieldSample {
  double intensity = 0.0;
  std::vector<cplx> components;
};

std::vector<std::string> component_names(Species s);
FieldSample sample_field(const FieldConfig& cfg, const PotentialExpr& potential, double r, double phi);
PotentialExpr make_potential(const FieldConfig& cfg);
IntensityFn make_intensity(const FieldConfig& cfg);

}  // namespace vortexlab
