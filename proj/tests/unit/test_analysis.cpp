#include <doctest.h>

#include <cmath>
#include <vector>

#include "vortexlab/analysis.hpp"
#include "vortexlab/potentials.hpp"
#include "vortexlab/presets.hpp"

using namespace vortexlab;

namespace {

RingIntensity lg_pair(int ell, double w0) {
  const ParaxialLGParams lg{0, ell, w0, 1.0};
  return [lg, ell](double r, double phi) {
    return std::norm(lg_superposition({0.0, r, phi, 0.0}, lg, SuperpositionSpec::pair_cos(ell)));
  };
}

RingIntensity lg_single(int ell, double w0) {
  const ParaxialLGParams lg{0, ell, w0, 1.0};
  return [lg](double r, double phi) { return std::norm(lg_paraxial({0.0, r, phi, 0.0}, lg)); };
}

}  // namespace

TEST_CASE("visibility arithmetic") {
  CHECK(visibility(1.0, 0.0) == 1.0);
  CHECK(visibility(1.0, 1.0) == 0.0);
  CHECK(visibility(3.0, 1.0) == 0.5);
  CHECK_THROWS_AS(visibility(0.0, 0.0), AnalysisError);
  CHECK_THROWS_AS(visibility(1.0, 2.0), AnalysisError);
  CHECK_THROWS_AS(visibility(1.0, -0.1), AnalysisError);
}

TEST_CASE("fringe spacing") {
  CHECK(fringe_spacing(15, 149e-6) == doctest::Approx(85.45e-6).epsilon(1e-3));
  CHECK(fringe_spacing(2, 2.0 / constants::pi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(fringe_spacing(0, 1.0), AnalysisError);
}

TEST_CASE("scaling fit on synthetic data") {
  std::vector<std::pair<double, double>> pairs;
  for (double l : {5.0, 10.0, 20.0, 40.0}) pairs.emplace_back(l, std::sqrt(l / 2.0));
  CHECK(scaling_fit(pairs) == doctest::Approx(0.5).epsilon(1e-6));
  pairs.pop_back();
  CHECK_THROWS_AS(scaling_fit(pairs), AnalysisError);
  pairs.emplace_back(5.0, 1.0);
  CHECK_THROWS_AS(scaling_fit(pairs), AnalysisError);
}

TEST_CASE("numerical aperture") {
  CHECK(numerical_aperture(6.2e-6, 800e-9) == doctest::Approx(0.0411).epsilon(1e-3));
  CHECK(numerical_aperture(149e-6, 800e-9) == doctest::Approx(1.71e-3).epsilon(1e-3));
  CHECK(numerical_aperture(1.0 / constants::pi, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("r_max of scalar LG modes") {
  const RMaxResult one = find_r_max(lg_single(1, 1.0), 1, 1.0);
  CHECK(std::abs(one.r_max - 1.0 / std::sqrt(2.0)) < 1e-3);
  std::vector<std::pair<double, double>> pairs;
  for (int l : {5, 10, 20, 40}) {
    const RMaxResult res = find_r_max(lg_single(l, 100.0), l, 100.0);
    CHECK(res.r_max == doctest::Approx(100.0 * std::sqrt(l / 2.0)).epsilon(5e-3));
    pairs.emplace_back(l, res.r_max);
  }
  CHECK(scaling_fit(pairs) == doctest::Approx(0.5).epsilon(0.04));
  CHECK_THROWS_AS(find_r_max(lg_single(1, 1.0), 0, 1.0), AnalysisError);
}

TEST_CASE("find_r_max reports an axis maximum") {
  const RingIntensity gauss = [](double r, double) { return std::exp(-r * r); };
  CHECK_THROWS_WITH_AS(find_r_max(gauss, 3, 1.0), doctest::Contains("axis"), AnalysisError);
  RMaxOptions opt;
  opt.axis_fallback = true;
  const VisibilityReport rep = analyze_ring(gauss, 3, 1.0, 1.0, opt);
  CHECK(rep.r_max_fallback);
  CHECK(rep.vis == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("paraxial pair: perfect zeros and fringe positions") {
  for (int l : {5, 15}) {
    const double w0 = 100.0;
    const VisibilityReport rep = analyze_ring(lg_pair(l, w0), l, w0);
    CHECK(rep.I_min <= 1e-10 * rep.I_max);
    CHECK(rep.vis > 1.0 - 1e-9);
    CHECK(rep.fringe_count == 2 * l);
    const AzimuthalExtrema ex = azimuthal_extrema(lg_pair(l, w0), rep.r_max_internal, l);
    REQUIRE(ex.maxima_phi.size() == static_cast<std::size_t>(2 * l));
    const double arc = rep.r_max_internal * (ex.maxima_phi[1] - ex.maxima_phi[0]);
    CHECK(arc == doctest::Approx(fringe_spacing(l, w0)).epsilon(0.01));
  }
}

TEST_CASE("flat ring of a single mode") {
  const AzimuthalExtrema ex = azimuthal_extrema(lg_single(4, 1.0), std::sqrt(2.0), 4);
  CHECK(ex.fringe_count == 0);
  CHECK(ex.fringe_count_mismatch);
  CHECK(visibility(ex.I_max, ex.I_min) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(ex.samples >= 64 * 4);
}

TEST_CASE("fig1b ring") {
  const FieldConfig cfg = find_preset("fig1b").config;
  const VisibilityReport rep = analyze_ring(make_intensity(cfg), cfg.ell(), cfg.waist_hint());
  CHECK(rep.fringe_count == 30);
  CHECK_FALSE(rep.fringe_count_warning);
  CHECK(rep.I_min / rep.I_max == doctest::Approx(1.0 / 3.0).epsilon(0.05));
  CHECK(rep.vis == doctest::Approx(0.5).epsilon(0.06));
  CHECK(rep.r_max_internal > 0.0);
}
