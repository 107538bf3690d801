#pragma once

// Independent residual checks of the generated fields and their negative controls.

#include <cstdint>
#include <string>
#include <vector>

#include "vortexlab/jet.hpp"
#include "vortexlab/potentials.hpp"

namespace vortexlab {

struct ResidualReport {
  std::string name;
  std::string points;  // description of the point set
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;  // max_residual < threshold
  bool negative_control = false;

  /// Positive checks pass; negative controls fail.
  bool as_designed() const noexcept { return negative_control ? !pass : pass; }
};

/// Pass thresholds by check name.
struct Thresholds {
  double dalembert = 1e-6;
  double divergence = 1e-8;
  double evolution = 1e-5;
  double gw_trace = 1e-12;
  double psi2 = 1e-15;
  double steuernagel = 1e-8;
  double paraxial = 1e-2;

  /// Throws ParameterError for an unknown name or a non-positive value.
  void set(const std::string& name, double value);
  double get(const std::string& name) const;
  static const std::vector<std::string>& names();
};

struct PointSet {
  std::string description;
  std::vector<SpacetimePoint> points;
};

struct PointBox {
  double r_min = 0.1, r_max = 1.0;
  double t_min = 0.0, t_max = 0.0;
  double z_min = 0.0, z_max = 0.0;
};

/// Uniform random points (phi in [0, 2 pi)) from a fixed-seed generator.
PointSet random_points(std::size_t n, const PointBox& box, std::uint64_t seed = 20240611);

// Test potentials (internal units).
PotentialExpr plane_wave_chi(double omega = 1.0);
/// A smooth non-solution of the wave equation.
PotentialExpr smooth_test_chi();
/// r^2 t: its evolution residual vanishes identically.
PotentialExpr r2t_chi();
/// Photon chi with a = w0^2 held fixed (no t, z dependence in the envelope).
PotentialExpr frozen_photon_chi(const PhotonPotentialParams& params);

/// max |box chi| / |d_t^2 chi|; points whose denominator is below 1e-30 of the largest are skipped.
ResidualReport dalembert_residual(const PotentialExpr& chi, const PointSet& points, double threshold);

struct MaxwellReports {
  ResidualReport divergence;
  ResidualReport evolution;
};

/// Finite-difference div F and i d_t F - curl F of the sampled Riemann-Silberstein vector,
/// normalised by the Frobenius norm of the local derivative matrix. Step h (internal length).
MaxwellReports maxwell_residual(const PotentialExpr& chi, const PointSet& points, double h,
                                double divergence_threshold, double evolution_threshold);

/// |LG(xi w(z)/sqrt2, eta w(z)/sqrt2, z)|^2 w(z)^2 over a (xi, eta) grid compared against the first z sample,
/// relative to the peak. With `scaled = false` the raw |LG(x, y, z)|^2 is compared instead.
ResidualReport steuernagel_invariance(const ParaxialLGParams& params, const std::vector<double>& z_samples,
                                      double threshold, bool scaled = true);

struct ParaxialAgreement {
  ResidualReport report;
  double r_max_over_w0 = 0.0;       // of |F|^2
  double paraxial_limit = 0.0;      // 1 / l^2
  double annulus_deviation = 0.0;   // |F_perp|^2 vs |LG|^2 over r in [0.5, 1.5] r_max (diagnostic)
};

/// Ring-profile deviation of the cos-weighted photon field against the matching LG superposition:
/// sqrt(sum (a - b)^2 / sum b^2) of the peak-normalised azimuthal profiles on the respective
/// ring maxima, aligned at the field maximum.
ParaxialAgreement paraxial_agreement(const PhotonPotentialParams& params, double threshold);

/// max |tr G| / max_i |G_ii| over the points, cos-weighted superposition.
ResidualReport gw_trace_check(const PhotonPotentialParams& params, const PointSet& points, double threshold);

/// max |psi_2| / |psi| over the points, cos-weighted superposition.
ResidualReport psi2_check(const ElectronPacketParams& params, const PointSet& points, double threshold);

/// Full positive suite, optionally followed by the negative controls.
std::vector<ResidualReport> run_suite(const Thresholds& thresholds, bool negative_controls);

/// True when every report behaves as designed.
bool suite_ok(const std::vector<ResidualReport>& reports) noexcept;

}  // namespace vortexlab
