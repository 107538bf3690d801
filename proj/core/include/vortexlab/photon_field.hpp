#pragma once

#include <array>

#include "vortexlab/jet.hpp"
#include "vortexlab/potentials.hpp"

namespace vortexlab {

/// Riemann-Silberstein vector F = E / sqrt(2 eps0) + i B / sqrt(2 mu0).
struct RSVector {
  cplx x, y, z;

  double transverse_intensity() const noexcept { return std::norm(x) + std::norm(y); }
  double longitudinal_intensity() const noexcept { return std::norm(z); }
};

struct ElectromagneticField {
  std::array<double, 3> E{};
  std::array<double, 3> B{};
};

/// F from the second-order expansion of chi:
///   F_x = (d_- d_z + i d_+ d_t) chi, F_y = (d_+ d_z - i d_- d_t) chi,
///   F_z = -(d_r^2 + d_r / r + d_phi^2 / r^2) chi,
/// with d_+ = d_y and d_- = d_x in cylindrical form. Requires r > 0.
RSVector rs_vector(const Taylor& chi, const SpacetimePoint& point);
RSVector rs_vector(const SpacetimePoint& point, const PotentialExpr& potential);

/// Same components computed from Cartesian chain-rule derivatives of the jet
/// (d_x d_z + i d_y d_t, ...); an independent route used for cross-checks.
RSVector rs_vector_cartesian(const Jet& chi_jet);

/// |F_x|^2 + |F_y|^2 + |F_z|^2.
double em_intensity(const RSVector& F) noexcept;

/// E = sqrt(2 eps0) Re F, B = sqrt(2 mu0) Im F.
ElectromagneticField extract_EB(const RSVector& F) noexcept;

}  // namespace vortexlab
