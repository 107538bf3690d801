#include "vortexlab/photon_field.hpp"

#include <cmath>

#include "vortexlab/operators.hpp"

namespace vortexlab {
namespace {
constexpr cplx kI{0.0, 1.0};
}

RSVector rs_vector(const Taylor& chi, const SpacetimePoint& point) {
  if (!(point.r > 0.0)) throw JetError("rs_vector: r must be > 0");
  if (chi.order() < 2) throw JetError("rs_vector: needs a second-order expansion of chi");
  const Taylor chi_z = chi.differentiate(Axis::z);
  const Taylor chi_t = chi.differentiate(Axis::t);
  const cplx dxdz = partial_x(chi_z, point).value();
  const cplx dydz = partial_y(chi_z, point).value();
  const cplx dxdt = partial_x(chi_t, point).value();
  const cplx dydt = partial_y(chi_t, point).value();
  const cplx lap = apply_atom({AtomKind::transverse_laplacian}, chi, point).value();
  return {dxdz + kI * dydt, dydz - kI * dxdt, -lap};
}

RSVector rs_vector(const SpacetimePoint& point, const PotentialExpr& potential) {
  if (!(point.r > 0.0)) throw JetError("rs_vector: r must be > 0");
  return rs_vector(potential.expand(point, 2), point);
}

RSVector rs_vector_cartesian(const Jet& jet) {
  const double r = jet.point.r;
  if (!(r > 0.0)) throw JetError("rs_vector_cartesian: r must be > 0");
  const double c = std::cos(jet.point.phi);
  const double s = std::sin(jet.point.phi);
  auto d = [&](int nt, int nr, int nphi, int nz) { return jet.entry(MultiIndex(nt, nr, nphi, nz)); };

  const cplx chi_r = d(0, 1, 0, 0), chi_phi = d(0, 0, 1, 0);
  const cplx chi_rr = d(0, 2, 0, 0), chi_pp = d(0, 0, 2, 0), chi_rp = d(0, 1, 1, 0);
  const cplx dxdz = c * d(0, 1, 0, 1) - s / r * d(0, 0, 1, 1);
  const cplx dydz = s * d(0, 1, 0, 1) + c / r * d(0, 0, 1, 1);
  const cplx dxdt = c * d(1, 1, 0, 0) - s / r * d(1, 0, 1, 0);
  const cplx dydt = s * d(1, 1, 0, 0) + c / r * d(1, 0, 1, 0);
  const cplx dxx = c * c * chi_rr + s * s / r * chi_r + s * s / (r * r) * chi_pp - 2.0 * s * c / r * chi_rp +
                   2.0 * s * c / (r * r) * chi_phi;
  const cplx dyy = s * s * chi_rr + c * c / r * chi_r + c * c / (r * r) * chi_pp + 2.0 * s * c / r * chi_rp -
                   2.0 * s * c / (r * r) * chi_phi;
  return {dxdz + kI * dydt, dydz - kI * dxdt, -(dxx + dyy)};
}

double em_intensity(const RSVector& F) noexcept { return std::norm(F.x) + std::norm(F.y) + std::norm(F.z); }

ElectromagneticField extract_EB(const RSVector& F) noexcept {
  const double e = std::sqrt(2.0 * constants::epsilon0);
  const double b = std::sqrt(2.0 * constants::mu0);
  return {{e * F.x.real(), e * F.y.real(), e * F.z.real()}, {b * F.x.imag(), b * F.y.imag(), b * F.z.imag()}};
}

}  // namespace vortexlab
