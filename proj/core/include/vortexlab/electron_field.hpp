#pragma once

#include <array>

#include "vortexlab/jet.hpp"
#include "vortexlab/potentials.hpp"

namespace vortexlab {

struct DiracSpinor {
  std::array<cplx, 4> psi{};

  DiracSpinor& operator+=(const DiracSpinor& o) noexcept;
  friend DiracSpinor operator*(cplx w, DiracSpinor s) noexcept;
};

/// psi1 = f, psi2 = 0, psi3 = i lambda_bar (d_t / c + d_z) f,
/// psi4 = i lambda_bar e^{i phi} (d_r + (i/r) d_phi) f.
/// `lambda_bar_q` is lambda_bar in internal length units (gamma / b).
DiracSpinor dirac_spinor(const Taylor& f, const SpacetimePoint& point, double lambda_bar_q);
DiracSpinor dirac_spinor(const SpacetimePoint& point, const PotentialExpr& f, double lambda_bar_q);
DiracSpinor dirac_spinor(const SpacetimePoint& point, const ElectronPacketParams& params);

/// psi^dagger psi.
double electron_density(const DiracSpinor& spinor) noexcept;

/// w_plus Psi_{+l} + w_minus Psi_{-l}; the parameter sets must differ only in the sign of ell.
DiracSpinor superposed_spinor(const SpacetimePoint& point, const ElectronPacketParams& plus,
                              const ElectronPacketParams& minus, std::array<cplx, 2> weights);

}  // namespace vortexlab
