#pragma once

// Self-dual curvature G_ij = G_{0i0j} of a linearised gravitational wave built
// from the scalar potential chi by fourth-order operators.

#include <array>

#include "vortexlab/jet.hpp"
#include "vortexlab/potentials.hpp"

namespace vortexlab {

/// Six independent entries of the symmetric trace-free 3x3 tensor.
struct CurvatureTensor {
  cplx g11, g12, g13, g22, g23, g33;

  cplx trace() const noexcept { return g11 + g22 + g33; }
  std::array<cplx, 6> components() const noexcept { return {g11, g12, g13, g22, g23, g33}; }
};

/// phi_ABCD with l zeros and n ones: (d_t - d_z)^l (-e^{i phi}(d_r + (i/r) d_phi))^n chi, l + n = 4.
cplx phi_abcd(const SpacetimePoint& point, const PotentialExpr& chi, int l, int n);

/// All five phi_ABCD for n = 0..4 from one fourth-order expansion of chi.
std::array<cplx, 5> phi_abcd_all(const Taylor& chi, const SpacetimePoint& point);

CurvatureTensor curvature_from_phi(const std::array<cplx, 5>& phi) noexcept;
CurvatureTensor curvature(const Taylor& chi, const SpacetimePoint& point);
CurvatureTensor curvature(const SpacetimePoint& point, const PotentialExpr& chi);

enum class Contraction {
  /// (1/2) sum of |G_ij|^2 over the six listed components (reproduces the published visibilities).
  six_components,
  /// (1/2) G^{ij} G*_{ij} over the full symmetric matrix: off-diagonals counted twice.
  full_symmetric,
};

double gw_intensity(const CurvatureTensor& G, Contraction contraction = Contraction::six_components) noexcept;

}  // namespace vortexlab
