#include "vortexlab/electron_field.hpp"

#include "vortexlab/operators.hpp"

namespace vortexlab {
namespace {
constexpr cplx kI{0.0, 1.0};
}

DiracSpinor& DiracSpinor::operator+=(const DiracSpinor& o) noexcept {
  for (std::size_t k = 0; k < psi.size(); ++k) psi[k] += o.psi[k];
  return *this;
}

DiracSpinor operator*(cplx w, DiracSpinor s) noexcept {
  for (auto& v : s.psi) v *= w;
  return s;
}

DiracSpinor dirac_spinor(const Taylor& f, const SpacetimePoint& point, double lambda_bar_q) {
  if (!(point.r > 0.0)) throw JetError("dirac_spinor: r must be > 0");
  if (f.order() < 1) throw JetError("dirac_spinor: needs a first-order expansion of f");
  DiracSpinor s;
  s.psi[0] = f.value();
  s.psi[1] = 0.0;
  s.psi[2] = kI * lambda_bar_q * apply_atom({AtomKind::dt_plus_dz}, f, point).value();
  s.psi[3] = kI * lambda_bar_q * apply_atom({AtomKind::ladder}, f, point).value();
  return s;
}

DiracSpinor dirac_spinor(const SpacetimePoint& point, const PotentialExpr& f, double lambda_bar_q) {
  if (!(point.r > 0.0)) throw JetError("dirac_spinor: r must be > 0");
  return dirac_spinor(f.expand(point, 1), point, lambda_bar_q);
}

DiracSpinor dirac_spinor(const SpacetimePoint& point, const ElectronPacketParams& params) {
  return dirac_spinor(point, electron_f(params), params.lambda_bar_q());
}

double electron_density(const DiracSpinor& spinor) noexcept {
  double sum = 0.0;
  for (const auto& v : spinor.psi) sum += std::norm(v);
  return sum;
}

DiracSpinor superposed_spinor(const SpacetimePoint& point, const ElectronPacketParams& plus,
                              const ElectronPacketParams& minus, std::array<cplx, 2> weights) {
  if (!plus.same_except_ell(minus) || plus.ell != -minus.ell) {
    throw ParameterError("superposed_spinor: parameter sets must differ only in the sign of ell");
  }
  DiracSpinor out = weights[0] * dirac_spinor(point, plus);
  out += weights[1] * dirac_spinor(point, minus);
  return out;
}

}  // namespace vortexlab
