#include "vortexlab/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "vortexlab/analysis.hpp"
#include "vortexlab/electron_field.hpp"
#include "vortexlab/gw_field.hpp"
#include "vortexlab/parallel.hpp"
#include "vortexlab/photon_field.hpp"

namespace vortexlab {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * constants::pi;

struct Sample {
  double residual = 0.0;
  double denominator = 0.0;
};

// Deterministic reduction of per-point residuals; points whose denominator is
// negligible relative to the largest are skipped.
ResidualReport reduce(std::string name, const PointSet& points, const std::vector<Sample>& samples, double threshold,
                      bool negative_control) {
  ResidualReport rep;
  rep.name = std::move(name);
  rep.points = points.description;
  rep.threshold = threshold;
  rep.negative_control = negative_control;
  double scale = 0.0;
  for (const auto& s : samples) scale = std::max(scale, s.denominator);
  for (const auto& s : samples) {
    if (!(s.denominator > 1e-30 * scale) || !std::isfinite(s.residual)) {
      ++rep.skipped;
      continue;
    }
    ++rep.evaluated;
    rep.max_residual = std::max(rep.max_residual, s.residual / s.denominator);
  }
  rep.pass = rep.evaluated > 0 && rep.max_residual < threshold;
  return rep;
}

using Vec3 = std::array<cplx, 3>;

Vec3 to_vec(const RSVector& F) { return {F.x, F.y, F.z}; }

// Central difference of a vector-valued function with two Richardson levels.
template <typename F>
Vec3 central_vec(F&& f, double x, double h) {
  constexpr int kLevels = 3;
  std::array<Vec3, kLevels> table{};
  double step = h;
  for (auto& row : table) {
    const Vec3 p = f(x + step), m = f(x - step);
    for (int c = 0; c < 3; ++c) row[c] = (p[c] - m[c]) / (2.0 * step);
    step *= 0.5;
  }
  double factor = 4.0;
  for (int level = 1; level < kLevels; ++level) {
    for (int i = kLevels - 1; i >= level; --i) {
      for (int c = 0; c < 3; ++c) table[i][c] = (factor * table[i][c] - table[i - 1][c]) / (factor - 1.0);
    }
    factor *= 4.0;
  }
  return table.back();
}

double vec_norm(const Vec3& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2])); }

PhotonPotentialParams internal_photon(double w0_over_lambda, int ell) {
  PhotonPotentialParams p;
  p.omega_hz = 1.0;
  p.w0_m = w0_over_lambda * constants::c;
  p.ell = ell;
  return p;
}

}  // namespace

void Thresholds::set(const std::string& name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw ParameterError("threshold '" + name + "' must be positive");
  if (name == "dalembert") dalembert = value;
  else if (name == "divergence") divergence = value;
  else if (name == "evolution") evolution = value;
  else if (name == "gw_trace") gw_trace = value;
  else if (name == "psi2") psi2 = value;
  else if (name == "steuernagel") steuernagel = value;
  else if (name == "paraxial") paraxial = value;
  else {
    std::string msg = "unknown threshold '" + name + "'; valid:";
    for (const auto& n : names()) msg += " " + n;
    throw ParameterError(msg);
  }
}

double Thresholds::get(const std::string& name) const {
  if (name == "dalembert") return dalembert;
  if (name == "divergence") return divergence;
  if (name == "evolution") return evolution;
  if (name == "gw_trace") return gw_trace;
  if (name == "psi2") return psi2;
  if (name == "steuernagel") return steuernagel;
  if (name == "paraxial") return paraxial;
  throw ParameterError("unknown threshold '" + name + "'");
}

const std::vector<std::string>& Thresholds::names() {
  static const std::vector<std::string> all{"dalembert", "divergence", "evolution", "gw_trace",
                                            "psi2",      "steuernagel", "paraxial"};
  return all;
}

PointSet random_points(std::size_t n, const PointBox& box, std::uint64_t seed) {
  if (!(box.r_min > 0.0) || box.r_max < box.r_min) throw ParameterError("random_points: need 0 < r_min <= r_max");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointSet set;
  std::ostringstream desc;
  desc << n << " random points, r in [" << box.r_min << ", " << box.r_max << "], t in [" << box.t_min << ", "
       << box.t_max << "], z in [" << box.z_min << ", " << box.z_max << "]";
  set.description = desc.str();
  set.points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    SpacetimePoint p;
    p.r = box.r_min + (box.r_max - box.r_min) * u(rng);
    p.phi = kTwoPi * u(rng);
    p.t = box.t_min + (box.t_max - box.t_min) * u(rng);
    p.z = box.z_min + (box.z_max - box.z_min) * u(rng);
    set.points.push_back(p);
  }
  return set;
}

PotentialExpr plane_wave_chi(double omega) {
  return PotentialExpr("plane_wave", [omega](const SpacetimePoint& p, int order) {
    const Taylor t = Taylor::variable(Axis::t, p.t, order);
    const Taylor z = Taylor::variable(Axis::z, p.z, order);
    return exp((-kI * omega) * (t - z));
  });
}

PotentialExpr smooth_test_chi() {
  return PotentialExpr("smooth_test", [](const SpacetimePoint& p, int order) {
    const Taylor t = Taylor::variable(Axis::t, p.t, order);
    const Taylor r = Taylor::variable(Axis::r, p.r, order);
    const Taylor phi = Taylor::variable(Axis::phi, p.phi, order);
    const Taylor z = Taylor::variable(Axis::z, p.z, order);
    const Taylor envelope = exp(cplx(0.0, 0.3) * t - 0.2 * z + cplx(-0.1, 0.05) * r * r);
    return envelope * (1.0 + 0.5 * r * cos(phi) + cplx(0.0, 0.25) * r * r * sin(2.0 * phi) + 0.1 * t * z);
  });
}

PotentialExpr r2t_chi() {
  return PotentialExpr("r2t", [](const SpacetimePoint& p, int order) {
    const Taylor t = Taylor::variable(Axis::t, p.t, order);
    const Taylor r = Taylor::variable(Axis::r, p.r, order);
    return r * r * t;
  });
}

PotentialExpr frozen_photon_chi(const PhotonPotentialParams& params) {
  params.validate();
  return PotentialExpr("frozen_photon_chi", [params](const SpacetimePoint& p, int order) {
    const double w = params.waist();
    const double s = params.sigma;
    const Taylor t = Taylor::variable(Axis::t, p.t, order);
    const Taylor rho = Taylor::variable(Axis::r, p.r, order) * (1.0 / w);
    const Taylor phi = Taylor::variable(Axis::phi, p.phi, order);
    const Taylor z = Taylor::variable(Axis::z, p.z, order);
    const Taylor exponent = (-kI * s) * (t - z) + (kI * (s * params.ell)) * phi - rho * rho;
    return exp(exponent) * pow(rho, std::abs(params.ell)) * params.normalization;
  });
}

ResidualReport dalembert_residual(const PotentialExpr& chi, const PointSet& points, double threshold) {
  std::vector<Sample> samples(points.points.size());
  parallel_for(samples.size(), [&](std::size_t k) {
    const SpacetimePoint& p = points.points[k];
    if (!(p.r > 0.0)) throw ParameterError("dalembert_residual: points need r > 0");
    const Taylor s = chi.expand(p, 2);
    const cplx tt = s.derivative(MultiIndex::along(Axis::t, 2));
    const cplx rr = s.derivative(MultiIndex::along(Axis::r, 2));
    const cplx r1 = s.derivative(MultiIndex::along(Axis::r));
    const cplx pp = s.derivative(MultiIndex::along(Axis::phi, 2));
    const cplx zz = s.derivative(MultiIndex::along(Axis::z, 2));
    const cplx box = tt - rr - r1 / p.r - pp / (p.r * p.r) - zz;
    samples[k] = {std::abs(box), std::abs(tt)};
  });
  return reduce("dalembert " + chi.name(), points, samples, threshold, false);
}

MaxwellReports maxwell_residual(const PotentialExpr& chi, const PointSet& points, double h,
                                double divergence_threshold, double evolution_threshold) {
  if (!(h > 0.0)) throw ParameterError("maxwell_residual: step must be > 0");
  std::vector<Sample> div(points.points.size()), evo(points.points.size());
  parallel_for(div.size(), [&](std::size_t k) {
    const SpacetimePoint& p = points.points[k];
    if (!(p.r > 2.0 * h)) throw ParameterError("maxwell_residual: points need r > 2h");
    auto along = [&](Axis axis, double step) {
      return central_vec([&](double x) { return to_vec(rs_vector(p.with_coordinate(axis, x), chi)); },
                         p.coordinate(axis), step);
    };
    const Vec3 dt = along(Axis::t, h);
    const Vec3 dr = along(Axis::r, h);
    const Vec3 dphi = along(Axis::phi, h / p.r);
    const Vec3 dz = along(Axis::z, h);
    const double c = std::cos(p.phi), s = std::sin(p.phi);
    Vec3 dx{}, dy{};
    for (int i = 0; i < 3; ++i) {
      dx[i] = c * dr[i] - s / p.r * dphi[i];
      dy[i] = s * dr[i] + c / p.r * dphi[i];
    }
    const double scale =
        std::sqrt(std::pow(vec_norm(dx), 2) + std::pow(vec_norm(dy), 2) + std::pow(vec_norm(dz), 2) +
                  std::pow(vec_norm(dt), 2));
    const cplx divergence = dx[0] + dy[1] + dz[2];
    const Vec3 curl{dy[2] - dz[1], dz[0] - dx[2], dx[1] - dy[0]};
    Vec3 residual{};
    for (int i = 0; i < 3; ++i) residual[i] = kI * dt[i] - curl[i];
    div[k] = {std::abs(divergence), scale};
    evo[k] = {vec_norm(residual), scale};
  });
  return {reduce("divergence " + chi.name(), points, div, divergence_threshold, false),
          reduce("evolution " + chi.name(), points, evo, evolution_threshold, false)};
}

ResidualReport steuernagel_invariance(const ParaxialLGParams& params, const std::vector<double>& z_samples,
                                      double threshold, bool scaled) {
  params.validate();
  if (z_samples.empty()) throw ParameterError("steuernagel_invariance: need at least one z sample");
  const double zr = params.rayleigh_range();
  for (double z : z_samples) {
    if (std::abs(z) > 3.0 * zr * (1.0 + 1e-12)) throw ParameterError("steuernagel_invariance: |z| must be <= 3 z_R");
  }
  constexpr int kGrid = 41;
  constexpr double kExtent = 3.0;
  auto profile = [&](double z) {
    std::vector<double> v;
    v.reserve(kGrid * kGrid);
    const double w = scaled ? params.beam_width(z) : params.w0_m;
    for (int j = 0; j < kGrid; ++j) {
      for (int i = 0; i < kGrid; ++i) {
        const double xi = -kExtent + 2.0 * kExtent * i / (kGrid - 1);
        const double eta = -kExtent + 2.0 * kExtent * j / (kGrid - 1);
        const double x = xi * w / std::sqrt(2.0), y = eta * w / std::sqrt(2.0);
        const double I = std::norm(lg_paraxial({0.0, std::hypot(x, y), std::atan2(y, x), z}, params));
        v.push_back(scaled ? I * w * w : I);
      }
    }
    return v;
  };
  const std::vector<double> ref = profile(z_samples.front());
  const double peak = *std::max_element(ref.begin(), ref.end());
  ResidualReport rep;
  rep.name = scaled ? "steuernagel scaled intensity" : "steuernagel unscaled intensity";
  std::ostringstream desc;
  desc << kGrid << "x" << kGrid << " scaled grid, " << z_samples.size() << " z samples, l=" << params.ell;
  rep.points = desc.str();
  rep.threshold = threshold;
  rep.negative_control = !scaled;
  for (double z : z_samples) {
    const std::vector<double> cur = profile(z);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      rep.max_residual = std::max(rep.max_residual, std::abs(cur[k] - ref[k]) / peak);
    }
    rep.evaluated += cur.size();
  }
  rep.pass = rep.max_residual < threshold;
  return rep;
}

ParaxialAgreement paraxial_agreement(const PhotonPotentialParams& params, double threshold) {
  params.validate();
  const int ell = std::abs(params.ell);
  if (ell < 1) throw ParameterError("paraxial_agreement: needs |l| >= 1");
  const double w = params.waist();
  const PotentialExpr chi = superpose(params, SuperpositionSpec::pair_cos(ell));
  const RingIntensity field = [&](double r, double phi) {
    return em_intensity(rs_vector({0.0, r, phi, 0.0}, chi));
  };
  const ParaxialLGParams lg{0, ell, w, 1.0};
  const SuperpositionSpec lg_spec = SuperpositionSpec::pair_cos(ell);
  const auto lg_intensity = [&](double r, double phi) {
    return std::norm(lg_superposition({0.0, r, phi, 0.0}, lg, lg_spec));
  };

  const RMaxResult rm = find_r_max(field, ell, w);
  const double r_lg = w * std::sqrt(ell / 2.0);
  const int n = 64 * 2 * ell;
  std::vector<double> a(static_cast<std::size_t>(n)), b(a.size());
  parallel_for(a.size(), [&](std::size_t k) {
    const double phi = kTwoPi * static_cast<double>(k) / n;
    a[k] = field(rm.r_max, phi);
    b[k] = lg_intensity(r_lg, phi - rm.phi_at_max);
  });
  const double amax = *std::max_element(a.begin(), a.end());
  const double bmax = *std::max_element(b.begin(), b.end());
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double da = a[k] / amax, db = b[k] / bmax;
    num += (da - db) * (da - db);
    den += db * db;
  }

  // Annulus diagnostic on the transverse intensity.
  constexpr int kRadial = 41;
  const int n_phi = 16 * 2 * ell;
  std::vector<double> fa(static_cast<std::size_t>(kRadial * n_phi)), fb(fa.size()), wt(fa.size());
  parallel_for(fa.size(), [&](std::size_t k) {
    const int i = static_cast<int>(k) / n_phi, j = static_cast<int>(k) % n_phi;
    const double s = 0.5 + static_cast<double>(i) / (kRadial - 1);
    const double phi = kTwoPi * j / n_phi;
    fa[k] = rs_vector({0.0, s * rm.r_max, phi, 0.0}, chi).transverse_intensity();
    fb[k] = lg_intensity(s * r_lg, phi - rm.phi_at_max);
    wt[k] = s;
  });
  const double fa_max = *std::max_element(fa.begin(), fa.end());
  const double fb_max = *std::max_element(fb.begin(), fb.end());
  double an = 0.0, ad = 0.0;
  for (std::size_t k = 0; k < fa.size(); ++k) {
    const double da = fa[k] / fa_max, db = fb[k] / fb_max;
    an += wt[k] * (da - db) * (da - db);
    ad += wt[k] * db * db;
  }

  ParaxialAgreement out;
  out.report.name = "paraxial agreement";
  std::ostringstream desc;
  desc << "ring profile, l=" << ell << ", w0/lambda=" << w << ", " << n << " azimuthal samples";
  out.report.points = desc.str();
  out.report.evaluated = a.size();
  out.report.max_residual = std::sqrt(num / den);
  out.report.threshold = threshold;
  out.report.pass = out.report.max_residual < threshold;
  out.r_max_over_w0 = rm.r_max / w;
  out.paraxial_limit = 1.0 / (static_cast<double>(ell) * ell);
  out.annulus_deviation = std::sqrt(an / ad);
  return out;
}

ResidualReport gw_trace_check(const PhotonPotentialParams& params, const PointSet& points, double threshold) {
  const PotentialExpr chi = superpose(params, SuperpositionSpec::pair_cos(params.ell));
  std::vector<Sample> samples(points.points.size());
  parallel_for(samples.size(), [&](std::size_t k) {
    const CurvatureTensor G = curvature(points.points[k], chi);
    const double diag = std::max({std::abs(G.g11), std::abs(G.g22), std::abs(G.g33)});
    samples[k] = {std::abs(G.trace()), diag};
  });
  return reduce("gw trace", points, samples, threshold, false);
}

ResidualReport psi2_check(const ElectronPacketParams& params, const PointSet& points, double threshold) {
  const PotentialExpr f = superpose(params, SuperpositionSpec::pair_cos(params.ell));
  std::vector<Sample> samples(points.points.size());
  parallel_for(samples.size(), [&](std::size_t k) {
    const DiracSpinor s = dirac_spinor(points.points[k], f, params.lambda_bar_q());
    samples[k] = {std::abs(s.psi[1]), std::sqrt(electron_density(s))};
  });
  return reduce("psi2 zero", points, samples, threshold, false);
}

std::vector<ResidualReport> run_suite(const Thresholds& th, bool negative_controls) {
  std::vector<ResidualReport> out;

  // focused photon beam (w0 = 7.75 lambda), pair l = +-15
  const PhotonPotentialParams photon = internal_photon(7.75, 15);
  const PotentialExpr chi = superpose(photon, SuperpositionSpec::pair_cos(15));
  const double ring = photon.waist() * std::sqrt(7.5);
  const PointSet photon_pts = random_points(200, {0.3 * ring, 1.5 * ring, -5.0, 5.0, -5.0, 5.0});
  const double h = photon.waist() * 1e-4;

  out.push_back(dalembert_residual(chi, photon_pts, th.dalembert));
  out.back().name = "dalembert photon";
  const PointSet plane_pts = random_points(50, {0.5, 5.0, -5.0, 5.0, -5.0, 5.0}, 7);
  out.push_back(dalembert_residual(plane_wave_chi(), plane_pts, th.dalembert));
  out.back().name = "dalembert plane wave";

  const PointSet smooth_pts = random_points(100, {0.5, 2.0, -1.0, 1.0, -1.0, 1.0}, 11);
  out.push_back(maxwell_residual(smooth_test_chi(), smooth_pts, 1e-4, th.divergence, th.evolution).divergence);
  out.back().name = "divergence smooth test";
  const PointSet maxwell_pts = random_points(60, {0.3 * ring, 1.5 * ring, -5.0, 5.0, -5.0, 5.0}, 13);
  const MaxwellReports photon_maxwell = maxwell_residual(chi, maxwell_pts, h, th.divergence, th.evolution);
  out.push_back(photon_maxwell.divergence);
  out.back().name = "divergence photon";
  out.push_back(photon_maxwell.evolution);
  out.back().name = "evolution photon";

  // GW, w0 = 7.41 lambda
  const PhotonPotentialParams gw = internal_photon(7.41, 15);
  const double gw_ring = gw.waist() * std::sqrt(7.5);
  out.push_back(gw_trace_check(gw, random_points(1000, {0.3 * gw_ring, 1.5 * gw_ring, -3.0, 3.0, -3.0, 3.0}, 17),
                               th.gw_trace));

  ElectronPacketParams electron;
  electron.b = 142.1;
  electron.gamma = 1.9;
  electron.ell = 15;
  const double e_ring = std::sqrt(15.0 / electron.b);
  out.push_back(psi2_check(electron, random_points(200, {0.3 * e_ring, 2.0 * e_ring, -0.5, 0.5, -0.5, 0.5}, 19),
                           th.psi2));

  const ParaxialLGParams lg{0, 3, 100e-6, 800e-9};
  const double zr = lg.rayleigh_range();
  const std::vector<double> zs{0.0, 0.5 * zr, zr, -zr, 2.0 * zr, 3.0 * zr};
  out.push_back(steuernagel_invariance(lg, zs, th.steuernagel, true));

  out.push_back(paraxial_agreement(internal_photon(100.0, 15), th.paraxial).report);
  out.back().name = "paraxial agreement w0=100";

  if (negative_controls) {
    const PotentialExpr frozen = frozen_photon_chi(photon);
    ResidualReport d = dalembert_residual(frozen, photon_pts, th.dalembert);
    d.name = "dalembert frozen envelope";
    d.negative_control = true;
    out.push_back(d);
    ResidualReport e = maxwell_residual(frozen, maxwell_pts, h, th.divergence, th.evolution).evolution;
    e.name = "evolution frozen envelope";
    e.negative_control = true;
    out.push_back(e);
    out.push_back(steuernagel_invariance(lg, {0.0, zr}, th.steuernagel, false));
    ResidualReport p = paraxial_agreement(internal_photon(3.0, 15), th.paraxial).report;
    p.name = "paraxial agreement w0=3";
    p.negative_control = true;
    out.push_back(p);
  }
  return out;
}

bool suite_ok(const std::vector<ResidualReport>& reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const ResidualReport& r) { return r.as_designed(); });
}

}  // namespace vortexlab
