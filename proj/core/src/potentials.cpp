#include "vortexlab/potentials.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace vortexlab {
namespace {

constexpr cplx kI{0.0, 1.0};

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

PotentialExpr linear_combination(std::vector<std::pair<cplx, PotentialExpr>> terms) {
  require(!terms.empty(), "linear_combination: at least one term required");
  std::string name;
  for (const auto& [w, p] : terms) {
    if (!name.empty()) name += " + ";
    std::ostringstream os;
    os << w << "*" << p.name();
    name += os.str();
  }
  return PotentialExpr(std::move(name), [terms = std::move(terms)](const SpacetimePoint& pt, int order) {
    Taylor sum = terms.front().second.expand(pt, order) * terms.front().first;
    for (std::size_t k = 1; k < terms.size(); ++k) sum += terms[k].second.expand(pt, order) * terms[k].first;
    return sum;
  });
}

Jet evaluate_jet(const PotentialExpr& potential, const SpacetimePoint& point, int order) {
  if (order != 1 && order != 2 && order != 4) {
    throw JetError("evaluate_jet: order must be 1, 2 or 4, got " + std::to_string(order));
  }
  if (!(point.r > 0.0)) throw JetError("evaluate_jet: point.r must be > 0");
  Jet jet{point, potential.expand(point, order)};
  if (!jet.series.all_finite()) throw JetError("evaluate_jet: non-finite derivative at r > 0");
  return jet;
}

// ---------------------------------------------------------------------------

void ParaxialLGParams::validate() const {
  require(p >= 0, "ParaxialLGParams: p must be >= 0");
  require(w0_m > 0.0, "ParaxialLGParams: w0 must be > 0");
  require(lambda_m > 0.0, "ParaxialLGParams: lambda must be > 0");
}

double ParaxialLGParams::rayleigh_range() const { return constants::pi * w0_m * w0_m / lambda_m; }

double ParaxialLGParams::beam_width(double z) const {
  const double zr = rayleigh_range();
  return w0_m * std::sqrt(1.0 + (z / zr) * (z / zr));
}

cplx lg_paraxial(const SpacetimePoint& point, const ParaxialLGParams& params) {
  params.validate();
  const int l = std::abs(params.ell);
  const double zr = params.rayleigh_range();
  const double w = params.beam_width(point.z);
  const double k = 2.0 * constants::pi / params.lambda_m;
  const double inv_radius = point.z / (point.z * point.z + zr * zr);  // 1 / R(z), 0 at focus
  const double gouy = std::atan2(point.z, zr);
  const double s = std::sqrt(2.0) * point.r / w;

  double norm = 2.0 * std::tgamma(params.p + 1.0) / (constants::pi * std::tgamma(params.p + l + 1.0));
  norm = std::sqrt(norm);
  const double laguerre = std::assoc_laguerre(static_cast<unsigned>(params.p), static_cast<unsigned>(l), s * s);
  const double amplitude = norm / w * std::pow(s, l) * laguerre * std::exp(-point.r * point.r / (w * w));
  const double phase =
      k * point.r * point.r * inv_radius / 2.0 + params.ell * point.phi - (2 * params.p + l + 1) * gouy;
  return amplitude * std::exp(-kI * phase);
}

// ---------------------------------------------------------------------------

PhotonPotentialParams PhotonPotentialParams::from_wavelength(double lambda_m, double w0_m, int ell, int sigma) {
  require(lambda_m > 0.0, "PhotonPotentialParams: lambda must be > 0");
  PhotonPotentialParams p;
  p.omega_hz = constants::c / lambda_m;
  p.w0_m = w0_m;
  p.ell = ell;
  p.sigma = sigma;
  return p;
}

void PhotonPotentialParams::validate() const {
  require(omega_hz > 0.0, "PhotonPotentialParams: Omega must be > 0");
  require(sigma == 1 || sigma == -1, "PhotonPotentialParams: sigma must be +1 or -1");
  require(w0_m > 0.0, "PhotonPotentialParams: w0 must be > 0");
}

bool PhotonPotentialParams::same_except_ell(const PhotonPotentialParams& o) const {
  return omega_hz == o.omega_hz && sigma == o.sigma && w0_m == o.w0_m && normalization == o.normalization;
}

Taylor photon_chi_series(const SpacetimePoint& pt, const PhotonPotentialParams& params, int order) {
  const double w = params.waist();
  const double s = params.sigma;
  const int l = std::abs(params.ell);
  const Taylor t = Taylor::variable(Axis::t, pt.t, order);
  const Taylor r = Taylor::variable(Axis::r, pt.r, order);
  const Taylor phi = Taylor::variable(Axis::phi, pt.phi, order);
  const Taylor z = Taylor::variable(Axis::z, pt.z, order);

  // a / w0^2
  const Taylor a_rel = 1.0 + (kI * (s / (w * w))) * (t + z);
  const Taylor rho = r * (1.0 / w);
  const Taylor inv_a_rel = reciprocal(a_rel);
  Taylor exponent = (-kI * s) * (t - z) + (kI * (s * params.ell)) * phi - rho * rho * inv_a_rel;
  Taylor chi = exp(exponent) * pow(rho, l) * pow(inv_a_rel, l + 1);
  chi *= params.normalization;
  return chi;
}

PotentialExpr photon_chi(const PhotonPotentialParams& params) {
  params.validate();
  std::ostringstream name;
  name << "photon_chi(l=" << params.ell << ",w0/lambda=" << params.waist() << ",sigma=" << params.sigma << ")";
  return PotentialExpr(name.str(), [params](const SpacetimePoint& p, int order) {
    return photon_chi_series(p, params, order);
  });
}

// ---------------------------------------------------------------------------

void ElectronPacketParams::validate() const {
  require(b > 0.0, "ElectronPacketParams: b must be > 0");
  require(gamma >= 1.0, "ElectronPacketParams: gamma must be >= 1");
}

double ElectronPacketParams::pz_over_mc() const { return std::sqrt(gamma * gamma - 1.0); }

double ElectronPacketParams::kz_internal() const { return pz_over_mc() * b / gamma; }

double ElectronPacketParams::equivalent_waist() const { return std::sqrt(2.0 / b); }

bool ElectronPacketParams::same_except_ell(const ElectronPacketParams& o) const {
  return b == o.b && gamma == o.gamma && normalization == o.normalization;
}

cplx electron_h_argument(const SpacetimePoint& pt) {
  const cplx base = 1.0 + kI * pt.t;
  return base * base + pt.r * pt.r;
}

bool electron_branch_safe(const SpacetimePoint& pt) {
  const cplx u = electron_h_argument(pt);
  return !(u.imag() == 0.0 && u.real() <= 0.0);
}

Taylor electron_f_series(const SpacetimePoint& pt, const ElectronPacketParams& params, int order) {
  if (!electron_branch_safe(pt)) {
    throw JetError("electron_f: square-root argument on the branch cut");
  }
  const int l = std::abs(params.ell);
  const Taylor t = Taylor::variable(Axis::t, pt.t, order);
  const Taylor r = Taylor::variable(Axis::r, pt.r, order);
  const Taylor phi = Taylor::variable(Axis::phi, pt.phi, order);
  const Taylor z = Taylor::variable(Axis::z, pt.z, order);

  const Taylor base = 1.0 + kI * t;
  const Taylor h = sqrt(base * base + r * r);
  Taylor exponent = (kI * params.kz_internal()) * z + (kI * static_cast<double>(params.ell)) * phi - params.b * (h - 1.0);
  Taylor f = exp(exponent) * reciprocal(h) * pow(r / (h + base), l);
  f *= params.normalization;
  return f;
}

PotentialExpr electron_f(const ElectronPacketParams& params) {
  params.validate();
  std::ostringstream name;
  name << "electron_f(l=" << params.ell << ",b=" << params.b << ",gamma=" << params.gamma << ")";
  return PotentialExpr(name.str(), [params](const SpacetimePoint& p, int order) {
    return electron_f_series(p, params, order);
  });
}

// ---------------------------------------------------------------------------

SuperpositionSpec SuperpositionSpec::pair_cos(int ell) {
  const double w = 1.0 / std::sqrt(2.0);
  return {{{w, ell}, {w, -ell}}};
}

SuperpositionSpec SuperpositionSpec::pair_sin(int ell) {
  const double w = 1.0 / std::sqrt(2.0);
  return {{{-kI * w, ell}, {kI * w, -ell}}};
}

SuperpositionSpec SuperpositionSpec::single(int ell) { return {{{1.0, ell}}}; }

void SuperpositionSpec::validate() const {
  require(!terms.empty(), "SuperpositionSpec: at least one term required");
}

namespace {

template <typename Params, typename Make>
PotentialExpr superpose_impl(const std::vector<std::pair<cplx, Params>>& terms, Make make) {
  require(!terms.empty(), "superpose: at least one term required");
  std::vector<std::pair<cplx, PotentialExpr>> parts;
  parts.reserve(terms.size());
  for (const auto& [w, p] : terms) {
    if (!p.same_except_ell(terms.front().second)) {
      throw ParameterError("superpose: terms differ in parameters other than ell");
    }
    parts.emplace_back(w, make(p));
  }
  if (parts.size() == 1 && parts.front().first == cplx{1.0, 0.0}) return parts.front().second;
  return linear_combination(std::move(parts));
}

template <typename Params>
std::vector<std::pair<cplx, Params>> expand_terms(const Params& base, const SuperpositionSpec& spec) {
  spec.validate();
  std::vector<std::pair<cplx, Params>> out;
  for (const auto& term : spec.terms) {
    Params p = base;
    p.ell = term.ell;
    out.emplace_back(term.weight, p);
  }
  return out;
}

}  // namespace

PotentialExpr superpose(const std::vector<std::pair<cplx, PhotonPotentialParams>>& terms) {
  return superpose_impl(terms, [](const PhotonPotentialParams& p) { return photon_chi(p); });
}

PotentialExpr superpose(const std::vector<std::pair<cplx, ElectronPacketParams>>& terms) {
  return superpose_impl(terms, [](const ElectronPacketParams& p) { return electron_f(p); });
}

PotentialExpr superpose(const PhotonPotentialParams& base, const SuperpositionSpec& spec) {
  return superpose(expand_terms(base, spec));
}

PotentialExpr superpose(const ElectronPacketParams& base, const SuperpositionSpec& spec) {
  return superpose(expand_terms(base, spec));
}

cplx lg_superposition(const SpacetimePoint& point, const ParaxialLGParams& base, const SuperpositionSpec& spec) {
  spec.validate();
  cplx sum{};
  for (const auto& term : spec.terms) {
    ParaxialLGParams p = base;
    p.ell = term.ell;
    sum += term.weight * lg_paraxial(point, p);
  }
  return sum;
}

}  // namespace vortexlab
