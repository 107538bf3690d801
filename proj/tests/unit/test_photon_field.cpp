#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "vortexlab/analysis.hpp"
#include "vortexlab/photon_field.hpp"
#include "vortexlab/presets.hpp"

using namespace vortexlab;
using testing::rel_err;

namespace {

double rel_vec(const RSVector& a, const RSVector& b) {
  const double d = std::sqrt(std::norm(a.x - b.x) + std::norm(a.y - b.y) + std::norm(a.z - b.z));
  return d / std::sqrt(em_intensity(b));
}

}  // namespace

TEST_CASE("cylindrical and Cartesian routes agree") {
  const PhotonPotentialParams p = PhotonPotentialParams::from_wavelength(800e-9, 7.75 * 800e-9, 15);
  const PotentialExpr chi = superpose(p, SuperpositionSpec::pair_cos(15));
  for (const SpacetimePoint& pt : {SpacetimePoint{0.0, 20.0, 0.1, 0.0}, SpacetimePoint{0.4, 15.0, 2.0, -0.3},
                                   SpacetimePoint{-1.0, 25.0, 4.0, 1.0}}) {
    const RSVector a = rs_vector(pt, chi);
    const RSVector b = rs_vector_cartesian(evaluate_jet(chi, pt, 2));
    CHECK(rel_vec(a, b) < 1e-12);
  }
}

TEST_CASE("field vanishes towards the axis for l = 15") {
  const PhotonPotentialParams p = PhotonPotentialParams::from_wavelength(800e-9, 7.75 * 800e-9, 15);
  const PotentialExpr chi = superpose(p, SuperpositionSpec::pair_cos(15));
  const double ring = em_intensity(rs_vector({0.0, 20.0, 0.0, 0.0}, chi));
  const double a = em_intensity(rs_vector({0.0, 0.2, 0.0, 0.0}, chi));
  const double b = em_intensity(rs_vector({0.0, 0.1, 0.0, 0.0}, chi));
  CHECK(a < 1e-40 * ring);
  // one transverse derivative survives: |F|^2 ~ r^{2(l-1)}
  CHECK(std::log(a / b) / std::log(2.0) == doctest::Approx(28.0).epsilon(0.01));
  CHECK_THROWS_AS(rs_vector({0.0, 0.0, 0.0, 0.0}, chi), JetError);
}

TEST_CASE("intensity and E/B extraction") {
  CHECK(em_intensity({0.0, 0.0, 0.0}) == 0.0);
  const RSVector real{1.0, -2.0, 0.5};
  const ElectromagneticField f1 = extract_EB(real);
  for (double v : f1.B) CHECK(v == 0.0);
  CHECK(f1.E[1] == doctest::Approx(-2.0 * std::sqrt(2.0 * constants::epsilon0)));
  const RSVector imag{cplx(0, 1), cplx(0, 3), cplx(0, -1)};
  const ElectromagneticField f2 = extract_EB(imag);
  for (double v : f2.E) CHECK(v == 0.0);
  CHECK(f2.B[1] == doctest::Approx(3.0 * std::sqrt(2.0 * constants::mu0)));
  CHECK(em_intensity(RSVector{cplx(1, 1), 2.0, cplx(0, 3)}) == doctest::Approx(15.0));
}

TEST_CASE("fig1b: longitudinal component fills the transverse minima") {
  const FieldConfig cfg = find_preset("fig1b").config;
  const PotentialExpr chi = make_potential(cfg);
  const IntensityFn I = make_intensity(cfg);
  const VisibilityReport rep = analyze_ring(I, cfg.ell(), cfg.waist_hint());
  const RingIntensity transverse = [&](double r, double phi) {
    return rs_vector({0.0, r, phi, 0.0}, chi).transverse_intensity();
  };
  const AzimuthalExtrema ex = azimuthal_extrema(transverse, rep.r_max_internal, 15);
  const RSVector at_min = rs_vector({0.0, rep.r_max_internal, ex.phi_min, 0.0}, chi);
  CHECK(at_min.longitudinal_intensity() > 0.1 * rep.I_max);
  CHECK(rep.fringe_count == 30);
  CHECK(rep.I_min / rep.I_max == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}
