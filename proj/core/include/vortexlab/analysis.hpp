#pragma once

// Ring-maximum search, azimuthal extrema and fringe visibility for any
// pointwise intensity I(r, phi) on the focal plane.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vortexlab {

using RingIntensity = std::function<double(double r, double phi)>;

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RMaxOptions {
  int radial_samples = 96;
  int samples_per_fringe = 32;  // coarse azimuthal scan, per expected fringe (2l fringes)
  double tolerance = 1e-6;      // |dr| < tolerance * w0_hint
  int max_iterations = 50;
  unsigned workers = 0;         // 0: worker_count()
  // analyze_ring only: when the maximum sits on the axis side of the search range,
  // analyse the ring at w0_hint sqrt(l/2) instead of failing.
  bool axis_fallback = false;
};

struct RMaxResult {
  double r_max = 0.0;
  double phi_at_max = 0.0;
  double I_at_max = 0.0;
  int radial_samples = 0;
  int azimuthal_samples = 0;
  int refinement_iterations = 0;
};

/// Global maximiser of I over the focal plane: coarse polar scan over
/// r in [w0/10, 4 w0 sqrt(l/2)], then alternating golden-section refinement in r and phi.
RMaxResult find_r_max(const RingIntensity& I, int ell, double w0_hint, const RMaxOptions& options = {});

struct AzimuthalExtrema {
  double I_max = 0.0;
  double I_min = 0.0;
  double phi_max = 0.0;
  double phi_min = 0.0;
  int fringe_count = 0;  // number of azimuthal maxima; 0 for a flat ring
  int samples = 0;
  bool fringe_count_mismatch = false;  // fringe_count != 2 l
  std::vector<double> maxima_phi;      // refined positions, ascending in [0, 2 pi)
};

/// Dense azimuthal scan at r (>= 64 samples per expected fringe) with three-point
/// parabolic refinement of every local extremum.
AzimuthalExtrema azimuthal_extrema(const RingIntensity& I, double r, int ell, int samples_per_fringe = 64,
                                   unsigned workers = 0);

/// (I_max - I_min) / (I_max + I_min).
double visibility(double I_max, double I_min);

/// Paraxial arc distance between adjacent maxima, pi w0 / sqrt(2 l).
double fringe_spacing(int ell, double w0);

/// Least-squares slope of log r_max against log l; needs >= 4 distinct l.
double scaling_fit(std::span<const std::pair<double, double>> ell_rmax);

/// lambda / (pi w0).
double numerical_aperture(double w0, double lambda);

struct VisibilityReport {
  double r_max = 0.0;       // meters
  double phi_at_max = 0.0;  // radians
  double I_max = 0.0;
  double I_min = 0.0;
  double vis = 0.0;
  int fringe_count = 0;
  // solver diagnostics
  double r_max_internal = 0.0;
  double r_max_over_w0 = 0.0;
  int radial_samples = 0;
  int azimuthal_samples = 0;
  int ring_samples = 0;
  int refinement_iterations = 0;
  bool fringe_count_warning = false;
  bool r_max_fallback = false;
};

/// find_r_max + azimuthal_extrema + visibility. `length_unit_m` converts r_max to meters.
VisibilityReport analyze_ring(const RingIntensity& I, int ell, double w0_hint, double length_unit_m = 1.0,
                              const RMaxOptions& options = {});

}  // namespace vortexlab
