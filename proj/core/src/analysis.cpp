#include "vortexlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vortexlab/parallel.hpp"
#include "vortexlab/units.hpp"

namespace vortexlab {
namespace {

constexpr double kTwoPi = 2.0 * constants::pi;

// Maximiser of f on [lo, hi] by golden-section search.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

struct Refined {
  double phi;
  double value;
};

// Two rounds of three-point parabolic interpolation around a sampled extremum.
Refined refine_extremum(const RingIntensity& I, double r, double phi0, double v0, double vm, double vp, double h,
                        bool maximum) {
  Refined best{phi0, v0};
  auto better = [&](double v) { return maximum ? v > best.value : v < best.value; };
  double center = phi0;
  double step = h;
  double fm = vm, f0 = v0, fp = vp;
  for (int round = 0; round < 2; ++round) {
    const double denom = fm - 2.0 * f0 + fp;
    if (denom == 0.0) break;
    double offset = 0.5 * (fm - fp) / denom;
    offset = std::clamp(offset, -1.0, 1.0);
    const double phi = center + offset * step;
    const double v = I(r, phi);
    if (better(v)) best = {phi, v};
    center = phi;
    step *= 0.125;
    fm = I(r, center - step);
    f0 = v;
    fp = I(r, center + step);
    if (better(fm)) best = {center - step, fm};
    if (better(fp)) best = {center + step, fp};
  }
  best.phi = wrap_angle(best.phi);
  return best;
}

}  // namespace

RMaxResult find_r_max(const RingIntensity& I, int ell, double w0_hint, const RMaxOptions& options) {
  if (ell < 1) throw AnalysisError("find_r_max: ell must be >= 1");
  if (!(w0_hint > 0.0)) throw AnalysisError("find_r_max: w0_hint must be > 0");
  const int nr = std::max(options.radial_samples, 3);
  const int nphi = std::max(options.samples_per_fringe * 2 * ell, 8);
  const double r_lo = w0_hint / 10.0;
  const double r_hi = 4.0 * w0_hint * std::sqrt(ell / 2.0);
  const double dr = (r_hi - r_lo) / (nr - 1);
  const double dphi = kTwoPi / nphi;

  std::vector<double> values(static_cast<std::size_t>(nr) * static_cast<std::size_t>(nphi));
  parallel_for(
      values.size(),
      [&](std::size_t k) {
        const auto ir = static_cast<int>(k / static_cast<std::size_t>(nphi));
        const auto ip = static_cast<int>(k % static_cast<std::size_t>(nphi));
        values[k] = I(r_lo + ir * dr, ip * dphi);
      },
      options.workers);

  const auto best_it = std::max_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(best_it - values.begin());
  const int ir = static_cast<int>(best / static_cast<std::size_t>(nphi));
  const int ip = static_cast<int>(best % static_cast<std::size_t>(nphi));
  if (!(*best_it > 0.0) || ir == 0 || ir == nr - 1) {
    throw AnalysisError(ir == 0 ? "find_r_max: no interior maximum (intensity peaks towards the axis)"
                                : "find_r_max: no interior maximum in the radial search range");
  }

  RMaxResult res;
  res.radial_samples = nr;
  res.azimuthal_samples = nphi;
  double r = r_lo + ir * dr;
  double phi = ip * dphi;
  const double tol_r = 1e-3 * options.tolerance * w0_hint;
  const double tol_phi = 1e-9;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const double r_new = golden_max([&](double x) { return I(x, phi); }, r - dr, r + dr, tol_r);
    phi = golden_max([&](double a) { return I(r_new, a); }, phi - dphi, phi + dphi, tol_phi);
    const double delta = std::abs(r_new - r);
    r = r_new;
    res.refinement_iterations = iter + 1;
    if (delta < options.tolerance * w0_hint) break;
  }
  res.r_max = r;
  res.phi_at_max = wrap_angle(phi);
  res.I_at_max = I(r, phi);
  return res;
}

AzimuthalExtrema azimuthal_extrema(const RingIntensity& I, double r, int ell, int samples_per_fringe,
                                   unsigned workers) {
  if (!(r > 0.0)) throw AnalysisError("azimuthal_extrema: r must be > 0");
  const int fringes = std::max(2 * std::abs(ell), 1);
  const int n = std::max(samples_per_fringe, 64) * fringes;
  const double h = kTwoPi / n;
  std::vector<double> v(static_cast<std::size_t>(n));
  parallel_for(v.size(), [&](std::size_t k) { v[k] = I(r, static_cast<double>(k) * h); }, workers);

  AzimuthalExtrema out;
  out.samples = n;
  const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  out.I_max = *mx;
  out.I_min = *mn;
  out.phi_max = static_cast<double>(mx - v.begin()) * h;
  out.phi_min = static_cast<double>(mn - v.begin()) * h;
  if (*mx - *mn <= 1e-12 * std::abs(*mx)) {
    // flat ring
    out.fringe_count = 0;
    out.fringe_count_mismatch = ell != 0;
    return out;
  }

  auto at = [&](int k) { return v[static_cast<std::size_t>((k % n + n) % n)]; };
  for (int k = 0; k < n; ++k) {
    const double vm = at(k - 1), v0 = at(k), vp = at(k + 1);
    const double phi = k * h;
    if (v0 > vm && v0 >= vp) {
      const Refined ref = refine_extremum(I, r, phi, v0, vm, vp, h, true);
      out.maxima_phi.push_back(ref.phi);
      if (ref.value > out.I_max) {
        out.I_max = ref.value;
        out.phi_max = ref.phi;
      }
    } else if (v0 < vm && v0 <= vp) {
      const Refined ref = refine_extremum(I, r, phi, v0, vm, vp, h, false);
      if (ref.value < out.I_min) {
        out.I_min = ref.value;
        out.phi_min = ref.phi;
      }
    }
  }
  std::sort(out.maxima_phi.begin(), out.maxima_phi.end());
  out.fringe_count = static_cast<int>(out.maxima_phi.size());
  out.fringe_count_mismatch = out.fringe_count != 2 * std::abs(ell);
  out.I_min = std::max(out.I_min, 0.0);
  return out;
}

double visibility(double I_max, double I_min) {
  if (!(I_max >= I_min) || I_min < 0.0) {
    throw AnalysisError("visibility: requires I_max >= I_min >= 0");
  }
  if (I_max + I_min == 0.0) throw AnalysisError("visibility: both intensities are zero");
  return (I_max - I_min) / (I_max + I_min);
}

double fringe_spacing(int ell, double w0) {
  if (ell < 1 || !(w0 > 0.0)) throw AnalysisError("fringe_spacing: need ell >= 1 and w0 > 0");
  return constants::pi * w0 / std::sqrt(2.0 * ell);
}

double scaling_fit(std::span<const std::pair<double, double>> pairs) {
  std::set<double> distinct;
  for (const auto& [l, r] : pairs) {
    if (!(l > 0.0) || !(r > 0.0)) throw AnalysisError("scaling_fit: l and r_max must be positive");
    distinct.insert(l);
  }
  if (pairs.size() < 4 || distinct.size() < 4) {
    throw AnalysisError("scaling_fit: need at least 4 pairs with distinct l");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [l, r] : pairs) {
    const double x = std::log(l), y = std::log(r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pairs.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double numerical_aperture(double w0, double lambda) {
  if (!(w0 > 0.0) || !(lambda > 0.0)) throw AnalysisError("numerical_aperture: w0 and lambda must be > 0");
  return lambda / (constants::pi * w0);
}

VisibilityReport analyze_ring(const RingIntensity& I, int ell, double w0_hint, double length_unit_m,
                              const RMaxOptions& options) {
  const int l = std::max(std::abs(ell), 1);
  RMaxResult rm;
  bool fallback = false;
  try {
    rm = find_r_max(I, l, w0_hint, options);
  } catch (const AnalysisError&) {
    if (!options.axis_fallback) throw;
    const double r_lo = w0_hint / 10.0;
    const double r_next = r_lo + (4.0 * w0_hint * std::sqrt(l / 2.0) - r_lo) / (options.radial_samples - 1);
    // only an axis-side maximum qualifies
    if (!(I(r_lo, 0.0) > I(r_next, 0.0))) throw;
    fallback = true;
    rm.r_max = w0_hint * std::sqrt(l / 2.0);
    rm.I_at_max = I(rm.r_max, 0.0);
  }
  const AzimuthalExtrema ex = azimuthal_extrema(I, rm.r_max, ell, 64, options.workers);
  VisibilityReport rep;
  rep.r_max_internal = rm.r_max;
  rep.r_max = rm.r_max * length_unit_m;
  rep.r_max_over_w0 = rm.r_max / w0_hint;
  rep.phi_at_max = rm.phi_at_max;
  rep.I_max = ex.I_max;
  rep.I_min = ex.I_min;
  rep.vis = visibility(ex.I_max, ex.I_min);
  rep.fringe_count = ex.fringe_count;
  rep.radial_samples = rm.radial_samples;
  rep.azimuthal_samples = rm.azimuthal_samples;
  rep.ring_samples = ex.samples;
  rep.refinement_iterations = rm.refinement_iterations;
  rep.fringe_count_warning = ex.fringe_count_mismatch;
  rep.r_max_fallback = fallback;
  return rep;
}

}  // namespace vortexlab
