#include "vortexlab/gw_field.hpp"

#include "vortexlab/operators.hpp"

namespace vortexlab {
namespace {
constexpr cplx kI{0.0, 1.0};
}

cplx phi_abcd(const SpacetimePoint& point, const PotentialExpr& chi, int l, int n) {
  if (l < 0 || n < 0 || l + n != 4) throw JetError("phi_abcd: need l, n >= 0 with l + n = 4");
  if (!(point.r > 0.0)) throw JetError("phi_abcd: r must be > 0");
  std::vector<DiffAtom> atoms;
  for (int k = 0; k < l; ++k) atoms.push_back({AtomKind::dt_minus_dz});
  for (int k = 0; k < n; ++k) atoms.push_back({AtomKind::neg_ladder});
  return apply_operator(DiffOpSpec(std::move(atoms)), chi, point);
}

std::array<cplx, 5> phi_abcd_all(const Taylor& chi, const SpacetimePoint& point) {
  if (!(point.r > 0.0)) throw JetError("phi_abcd: r must be > 0");
  if (chi.order() < 4) throw JetError("phi_abcd: needs a fourth-order expansion of chi");
  std::array<cplx, 5> out{};
  Taylor ladder_n = chi;  // (-L)^n chi
  for (int n = 0; n <= 4; ++n) {
    if (n > 0) ladder_n = apply_atom({AtomKind::neg_ladder}, ladder_n, point);
    Taylor acc = ladder_n;
    for (int l = 0; l < 4 - n; ++l) acc = apply_atom({AtomKind::dt_minus_dz}, acc, point);
    out[static_cast<std::size_t>(n)] = acc.value();
  }
  return out;
}

CurvatureTensor curvature_from_phi(const std::array<cplx, 5>& phi) noexcept {
  const cplx p0000 = phi[0], p0001 = phi[1], p0011 = phi[2], p0111 = phi[3], p1111 = phi[4];
  return {
      p0000 - 2.0 * p0011 + p1111,
      kI * p0000 - kI * p1111,
      2.0 * p0111 - 2.0 * p0001,
      -p0000 - 2.0 * p0011 - p1111,
      -2.0 * kI * p0001 - 2.0 * kI * p0111,
      4.0 * p0011,
  };
}

CurvatureTensor curvature(const Taylor& chi, const SpacetimePoint& point) {
  return curvature_from_phi(phi_abcd_all(chi, point));
}

CurvatureTensor curvature(const SpacetimePoint& point, const PotentialExpr& chi) {
  if (!(point.r > 0.0)) throw JetError("curvature: r must be > 0");
  return curvature(chi.expand(point, 4), point);
}

double gw_intensity(const CurvatureTensor& G, Contraction contraction) noexcept {
  const double off = contraction == Contraction::full_symmetric ? 2.0 : 1.0;
  return 0.5 * (std::norm(G.g11) + std::norm(G.g22) + std::norm(G.g33) +
                off * (std::norm(G.g12) + std::norm(G.g13) + std::norm(G.g23)));
}

}  // namespace vortexlab
