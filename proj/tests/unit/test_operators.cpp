#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "vortexlab/finite_difference.hpp"
#include "vortexlab/operators.hpp"

using namespace vortexlab;
using testing::rel_err;

namespace {

constexpr cplx I{0.0, 1.0};

PotentialExpr r_emiphi() {
  return PotentialExpr("r e^{-i phi}", [](const SpacetimePoint& p, int order) {
    return Taylor::variable(Axis::r, p.r, order) * exp(-I * Taylor::variable(Axis::phi, p.phi, order));
  });
}

PotentialExpr pure_vortex(int ell) {
  return PotentialExpr("r^l e^{i l phi}", [ell](const SpacetimePoint& p, int order) {
    return pow(Taylor::variable(Axis::r, p.r, order), std::abs(ell)) *
           exp(cplx(0.0, ell) * Taylor::variable(Axis::phi, p.phi, order));
  });
}

// Atom applied to a pointwise function by central differences.
PointFunction fd_atom(AtomKind kind, PointFunction f, StepSizes s) {
  return [kind, f, s](const SpacetimePoint& p) -> cplx {
    auto d = [&](Axis a) { return finite_difference_partial(f, p, MultiIndex::along(a), s, 2); };
    switch (kind) {
      case AtomKind::dt_minus_dz:
        return d(Axis::t) - d(Axis::z);
      case AtomKind::neg_ladder:
        return -std::exp(I * p.phi) * (d(Axis::r) + (I / p.r) * d(Axis::phi));
      default:
        throw std::logic_error("fd_atom: unsupported");
    }
  };
}

}  // namespace

TEST_CASE("ladder on r e^{-i phi} is the constant 2") {
  const DiffOpSpec op{{AtomKind::ladder}};
  for (double r : {0.3, 1.0, 7.5}) {
    for (double phi : {0.0, 1.2, -2.9}) {
      CHECK(rel_err(apply_operator(op, r_emiphi(), {0.0, r, phi, 0.0}), 2.0) < 1e-14);
    }
  }
}

TEST_CASE("transverse Laplacian annihilates the pure vortex factor") {
  const DiffOpSpec op{{AtomKind::transverse_laplacian}};
  for (int ell : {1, 3, 15}) {
    for (double r : {0.2, 1.0, 1.7}) {
      const SpacetimePoint p{0.0, r, 0.4, 0.0};
      const cplx v = apply_operator(op, pure_vortex(ell), p);
      const double scale = std::abs(pure_vortex(ell)(p)) / (r * r);
      CHECK(std::abs(v) < 1e-12 * ell * ell * scale);
    }
  }
}

TEST_CASE("Cartesian Laplacian from partial_x and partial_y") {
  const SpacetimePoint p{0.0, 1.3, 0.8, 0.0};
  const Taylor f = pure_vortex(4).expand(p, 4);
  const Taylor lap = partial_x(partial_x(f, p), p) + partial_y(partial_y(f, p), p);
  CHECK(std::abs(lap.value()) < 1e-12 * std::abs(f.derivative({0, 2, 0, 0})));
}

TEST_CASE("fourth-order composition against nested finite differences") {
  const PhotonPotentialParams params = PhotonPotentialParams::from_wavelength(800e-9, 10 * 800e-9, 2);
  const PotentialExpr chi = photon_chi(params);
  const SpacetimePoint p{0.0, params.waist() / 2.0, constants::pi / 5.0, 0.0};
  const DiffOpSpec op{{AtomKind::dt_minus_dz}, {AtomKind::dt_minus_dz}, {AtomKind::neg_ladder}, {AtomKind::neg_ladder}};
  CHECK(op.derivative_order() == 4);
  CHECK(op.uses_inverse_r());
  const cplx jet = apply_operator(op, chi, p);

  PointFunction f = [&](const SpacetimePoint& q) { return chi(q); };
  const StepSizes steps{0.1, 0.1, 0.02, 0.1};
  f = fd_atom(AtomKind::neg_ladder, f, steps);
  f = fd_atom(AtomKind::neg_ladder, f, steps);
  f = fd_atom(AtomKind::dt_minus_dz, f, steps);
  f = fd_atom(AtomKind::dt_minus_dz, f, steps);
  CHECK(rel_err(jet, f(p)) < 1e-5);
}

TEST_CASE("scalar atoms and depth limit") {
  const SpacetimePoint p{0.0, 1.0, 0.0, 0.0};
  const DiffOpSpec op{DiffAtom::scale(3.0), {AtomKind::ladder}};
  CHECK(rel_err(apply_operator(op, r_emiphi(), p), 6.0) < 1e-14);
  CHECK_THROWS_AS((DiffOpSpec{{AtomKind::ladder}, {AtomKind::ladder}, {AtomKind::ladder}, {AtomKind::ladder},
                              {AtomKind::ladder}}),
                  JetError);
}

TEST_CASE("operator order exceeding the expansion is rejected") {
  const SpacetimePoint p{0.0, 1.0, 0.0, 0.0};
  const Taylor f = r_emiphi().expand(p, 1);
  CHECK_THROWS(apply_operator(DiffOpSpec{{AtomKind::ladder}, {AtomKind::ladder}}, f, p));
}
