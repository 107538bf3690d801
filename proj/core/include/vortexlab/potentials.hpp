#pragma once

// Scalar generating potentials: the paraxial Laguerre-Gauss reference mode,
// the photon / gravitational-wave potential chi and the electron generating
// function f, plus weighted +-l superpositions of them.
//
// chi and f are evaluated in dimensionless coordinates with c = 1:
//   photon / GW: lengths in units of lambda = c / Omega, time in units of 1 / Omega;
//   electron:    lengths in units of 1 / q,               time in units of 1 / (q c).

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vortexlab/jet.hpp"
#include "vortexlab/units.hpp"

namespace vortexlab {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A jet-capable complex scalar field.
class PotentialExpr {
 public:
  using ExpandFn = std::function<Taylor(const SpacetimePoint&, int order)>;

  PotentialExpr() = default;
  PotentialExpr(std::string name, ExpandFn expand) : name_(std::move(name)), expand_(std::move(expand)) {}

  const std::string& name() const noexcept { return name_; }
  /// Taylor expansion of the field at `p` to `order` (0..4).
  Taylor expand(const SpacetimePoint& p, int order) const { return expand_(p, order); }
  cplx operator()(const SpacetimePoint& p) const { return expand_(p, 0).value(); }
  explicit operator bool() const noexcept { return static_cast<bool>(expand_); }

 private:
  std::string name_;
  ExpandFn expand_;
};

/// Linear combination sum_k w_k P_k.
PotentialExpr linear_combination(std::vector<std::pair<cplx, PotentialExpr>> terms);

/// Jet of `potential` at `point`. Order must be 1, 2 or 4 and point.r > 0.
Jet evaluate_jet(const PotentialExpr& potential, const SpacetimePoint& point, int order);

// ---------------------------------------------------------------------------
// Paraxial Laguerre-Gauss mode (physical units: meters)

struct ParaxialLGParams {
  int p = 0;
  int ell = 0;
  double w0_m = 0.0;
  double lambda_m = 0.0;

  void validate() const;
  double rayleigh_range() const;
  double beam_width(double z) const;
};

/// LG_{p,l}(r, phi, z) including Gouy and curvature phase; point in meters (t ignored).
cplx lg_paraxial(const SpacetimePoint& point, const ParaxialLGParams& params);

// ---------------------------------------------------------------------------
// Photon / GW potential

struct PhotonPotentialParams {
  double omega_hz = 0.0;  // mean frequency; lambda = c / Omega
  int sigma = 1;          // circular polarisation, +-1
  int ell = 0;
  double w0_m = 0.0;
  cplx normalization{1.0, 0.0};

  static PhotonPotentialParams from_wavelength(double lambda_m, double w0_m, int ell, int sigma = 1);

  void validate() const;
  double wavelength() const { return constants::c / omega_hz; }
  /// Beam waist in internal length units (w0 / lambda).
  double waist() const { return w0_m / wavelength(); }
  Scales scales() const { return {wavelength(), 1.0 / omega_hz}; }
  bool same_except_ell(const PhotonPotentialParams& o) const;
};

/// chi = N e^{-i sigma((t - z) - l phi)} (r/w0)^|l| (w0^2/a)^{|l|+1} e^{-r^2/a},
/// a = w0^2 + i sigma (t + z), in internal units.
Taylor photon_chi_series(const SpacetimePoint& point, const PhotonPotentialParams& params, int order);
PotentialExpr photon_chi(const PhotonPotentialParams& params);

// ---------------------------------------------------------------------------
// Electron generating function

struct ElectronPacketParams {
  double b = 0.0;
  double gamma = 1.0;
  int ell = 0;
  cplx normalization{1.0, 0.0};

  void validate() const;
  /// q = gamma / (b lambda_bar) in 1/m.
  double q() const { return gamma / (b * constants::lambda_bar_e); }
  /// p_z / (m_e c) from gamma = sqrt(1 + (p_z / m_e c)^2).
  double pz_over_mc() const;
  /// p_z / hbar in internal units (1/q): sqrt(gamma^2 - 1) b / gamma.
  double kz_internal() const;
  /// lambda_bar * q = gamma / b.
  double lambda_bar_q() const { return gamma / b; }
  /// Waist-equivalent width sqrt(2/b) in units of 1/q: paraxial ring at w sqrt(l/2).
  double equivalent_waist() const;
  Scales scales() const { return {1.0 / q(), 1.0 / (q() * constants::c)}; }
  bool same_except_ell(const ElectronPacketParams& o) const;
};

/// Argument (1 + i t)^2 + r^2 of the square root h; principal branch is continuous
/// unless this lies on the negative real axis.
cplx electron_h_argument(const SpacetimePoint& point);
bool electron_branch_safe(const SpacetimePoint& point);

/// f = N e^{i kz z} e^{i l phi} e^{-b (h - 1)} / h (r / (h + 1 + i t))^|l|, h = sqrt((1 + i t)^2 + r^2).
Taylor electron_f_series(const SpacetimePoint& point, const ElectronPacketParams& params, int order);
PotentialExpr electron_f(const ElectronPacketParams& params);

// ---------------------------------------------------------------------------
// Superpositions

struct SuperpositionTerm {
  cplx weight;
  int ell;
};

struct SuperpositionSpec {
  std::vector<SuperpositionTerm> terms;

  /// (1/sqrt2)(chi_{+l} + chi_{-l}): azimuthal factor cos(l phi).
  static SuperpositionSpec pair_cos(int ell);
  /// (-i/sqrt2) chi_{+l} + (i/sqrt2) chi_{-l}: azimuthal factor sin(l phi).
  static SuperpositionSpec pair_sin(int ell);
  static SuperpositionSpec single(int ell);

  void validate() const;
};

PotentialExpr superpose(const PhotonPotentialParams& base, const SuperpositionSpec& spec);
PotentialExpr superpose(const ElectronPacketParams& base, const SuperpositionSpec& spec);

/// Superposition of explicitly given parameter sets; all must agree except in ell.
PotentialExpr superpose(const std::vector<std::pair<cplx, PhotonPotentialParams>>& terms);
PotentialExpr superpose(const std::vector<std::pair<cplx, ElectronPacketParams>>& terms);

/// Paraxial LG superposition sum_k w_k LG_{p, l_k}.
cplx lg_superposition(const SpacetimePoint& point, const ParaxialLGParams& base, const SuperpositionSpec& spec);

}  // namespace vortexlab
