#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "vortexlab/finite_difference.hpp"
#include "vortexlab/potentials.hpp"

using namespace vortexlab;
using testing::rel_err;

namespace {

constexpr cplx I{0.0, 1.0};

PotentialExpr r2_eiphi() {
  return PotentialExpr("r^2 e^{i phi}", [](const SpacetimePoint& p, int order) {
    const Taylor r = Taylor::variable(Axis::r, p.r, order);
    const Taylor phi = Taylor::variable(Axis::phi, p.phi, order);
    return r * r * exp(I * phi);
  });
}

PotentialExpr eikz() {
  return PotentialExpr("e^{ikz}", [](const SpacetimePoint& p, int order) {
    return exp(I * Taylor::variable(Axis::z, p.z, order));
  });
}

}  // namespace

TEST_CASE("multi-index bookkeeping") {
  CHECK(term_count(0) == 1);
  CHECK(term_count(4) == 70);
  CHECK_THROWS_AS(MultiIndex(2, 2, 1, 0), JetError);
  CHECK_THROWS_AS(MultiIndex(-1, 0, 0, 0), JetError);
  CHECK(MultiIndex(1, 2, 0, 1).factorial() == doctest::Approx(2.0));
  for (std::size_t k = 0; k < term_count(4); ++k) CHECK(term_index(term_multi_index(k)) == k);
  // graded ordering
  for (std::size_t k = 1; k < term_count(4); ++k) {
    CHECK(term_multi_index(k - 1).total() <= term_multi_index(k).total());
  }
}

TEST_CASE("r^2 e^{i phi}: mixed r-phi entry") {
  const Jet j = evaluate_jet(r2_eiphi(), {0.0, 2.0, 0.0, 0.0}, 2);
  CHECK(rel_err(j.entry({0, 1, 1, 0}), 4.0 * I) < 1e-15);
  CHECK(rel_err(j.value(), 4.0) < 1e-15);
  CHECK(rel_err(j.entry({0, 2, 0, 0}), 2.0) < 1e-15);
  CHECK(rel_err(j.entry({0, 0, 2, 0}), -4.0) < 1e-15);
}

TEST_CASE("plane wave e^{iz}") {
  const Jet j = evaluate_jet(eikz(), {0.0, 1.0, 0.0, 0.0}, 4);
  CHECK(rel_err(j.entry(MultiIndex::along(Axis::z)), I) < 1e-15);
  CHECK(rel_err(j.entry(MultiIndex::along(Axis::z, 2)), -1.0) < 1e-15);
  CHECK(rel_err(j.entry(MultiIndex::along(Axis::z, 4)), 1.0) < 1e-15);
  CHECK(std::abs(j.entry(MultiIndex::along(Axis::t))) == 0.0);
}

TEST_CASE("evaluate_jet preconditions") {
  CHECK_THROWS_AS(evaluate_jet(eikz(), {0.0, 1.0, 0.0, 0.0}, 3), JetError);
  CHECK_THROWS_AS(evaluate_jet(eikz(), {0.0, 0.0, 0.0, 0.0}, 2), JetError);
  CHECK_THROWS_AS(evaluate_jet(eikz(), {0.0, 1.0, 0.0, 0.0}, 5), JetError);
}

TEST_CASE("univariate series against closed forms") {
  const double x0 = 0.7;
  const Taylor x = Taylor::variable(Axis::r, x0, 4);
  const Taylor e = exp(x), s = sin(x), c = cos(x), l = log(x), q = sqrt(x), rec = reciprocal(x);
  for (int k = 0; k <= 4; ++k) {
    const MultiIndex m = MultiIndex::along(Axis::r, k);
    CHECK(rel_err(e.derivative(m), std::exp(x0)) < 1e-14);
    const double sk[4] = {std::sin(x0), std::cos(x0), -std::sin(x0), -std::cos(x0)};
    CHECK(rel_err(s.derivative(m), sk[k % 4]) < 1e-14);
    CHECK(rel_err(c.derivative(m), sk[(k + 1) % 4]) < 1e-14);
    double fall = 1.0;  // d^k x^{1/2}
    for (int i = 0; i < k; ++i) fall *= 0.5 - i;
    CHECK(rel_err(q.derivative(m), fall * std::pow(x0, 0.5 - k)) < 1e-13);
    double rf = 1.0;
    for (int i = 0; i < k; ++i) rf *= -1.0 - i;
    CHECK(rel_err(rec.derivative(m), rf * std::pow(x0, -1.0 - k)) < 1e-13);
    if (k > 0) {
      double lf = 1.0;
      for (int i = 1; i < k; ++i) lf *= -static_cast<double>(i);
      CHECK(rel_err(l.derivative(m), lf * std::pow(x0, -k)) < 1e-13);
    }
  }
}

TEST_CASE("integer power is exact at zero base") {
  const Taylor x = Taylor::variable(Axis::r, 0.0, 4);
  const Taylor p = pow(x, 3);
  CHECK(std::abs(p.value()) == 0.0);
  CHECK(rel_err(p.derivative(MultiIndex::along(Axis::r, 3)), 6.0) < 1e-15);
  CHECK(std::abs(p.derivative(MultiIndex::along(Axis::r, 4))) == 0.0);
}

TEST_CASE("differentiate lowers the order") {
  const Taylor x = Taylor::variable(Axis::t, 0.3, 4);
  const Taylor y = Taylor::variable(Axis::z, -0.2, 4);
  const Taylor f = exp(x * y);
  const Taylor fx = f.differentiate(Axis::t);
  CHECK(fx.order() == 3);
  CHECK(rel_err(fx.value(), f.derivative(MultiIndex::along(Axis::t))) < 1e-15);
  CHECK(rel_err(fx.derivative({0, 0, 0, 2}), f.derivative({1, 0, 0, 2})) < 1e-14);
}

TEST_CASE("photon chi: every entry against finite differences") {
  PhotonPotentialParams p = PhotonPotentialParams::from_wavelength(800e-9, 10 * 800e-9, 3);
  const PotentialExpr chi = photon_chi(p);
  const SpacetimePoint pt{0.0, p.waist(), constants::pi / 7.0, 0.0};
  const Jet j = evaluate_jet(chi, pt, 4);
  const PointFunction f = [&](const SpacetimePoint& q) { return chi(q); };
  // t, z vary on the unit scale, r on w0 = 10, phi on 1/l
  const StepSizes steps{0.05, 0.3, 0.02, 0.05};
  for (std::size_t k = 1; k < term_count(2); ++k) {
    const MultiIndex& m = term_multi_index(k);
    const cplx fd = finite_difference_partial(f, pt, m, steps, 3);
    CAPTURE(m);
    CHECK(rel_err(j.entry(m), fd) < 1e-6);
  }
}

TEST_CASE("derivatives up to order 4 agree with the FD oracle at random points") {
  PhotonPotentialParams p = PhotonPotentialParams::from_wavelength(800e-9, 10 * 800e-9, 3);
  const PotentialExpr chi = photon_chi(p);
  const PointFunction f = [&](const SpacetimePoint& q) { return chi(q); };
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double w = p.waist();
  const StepSizes steps{0.08, 0.4, 0.03, 0.08};
  for (int trial = 0; trial < 3; ++trial) {
    const SpacetimePoint pt{u(rng) - 0.5, w * (0.5 + u(rng)), 6.0 * u(rng), u(rng) - 0.5};
    const Jet j = evaluate_jet(chi, pt, 4);
    double scale[5] = {0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < term_count(4); ++k) {
      const int o = term_multi_index(k).total();
      scale[o] = std::max(scale[o], std::abs(j.entry(term_multi_index(k))));
    }
    for (const MultiIndex m : {MultiIndex(2, 0, 0, 2), MultiIndex(1, 1, 1, 1), MultiIndex(0, 2, 2, 0),
                               MultiIndex(4, 0, 0, 0), MultiIndex(0, 1, 3, 0), MultiIndex(2, 1, 0, 0)}) {
      const cplx fd = finite_difference_partial(f, pt, m, steps, 3);
      CAPTURE(m);
      CHECK(std::abs(j.entry(m) - fd) / scale[m.total()] < 1e-5);
    }
  }
}

TEST_CASE("mixed partials are symmetric and superposition is linear") {
  PhotonPotentialParams p = PhotonPotentialParams::from_wavelength(800e-9, 20 * 800e-9, 5);
  const SpacetimePoint pt{0.2, 30.0, 1.1, -0.4};
  const PotentialExpr chi = photon_chi(p);
  const Taylor s = chi.expand(pt, 4);
  // d_r d_phi via two different differentiation orders
  const cplx a = s.differentiate(Axis::r).differentiate(Axis::phi).value();
  const cplx b = s.differentiate(Axis::phi).differentiate(Axis::r).value();
  CHECK(a == b);

  PhotonPotentialParams q = p;
  q.ell = -5;
  const cplx w1{0.3, 0.2}, w2{-0.7, 0.1};
  const PotentialExpr sum = superpose({{w1, p}, {w2, q}});
  const Taylor lhs = sum.expand(pt, 4);
  const Taylor rhs = w1 * photon_chi(p).expand(pt, 4) + w2 * photon_chi(q).expand(pt, 4);
  for (std::size_t k = 0; k < term_count(4); ++k) {
    CHECK(rel_err(lhs.coefficients()[k], rhs.coefficients()[k]) < 1e-13);
  }
}

TEST_CASE("rotation covariance of a pure-l potential") {
  PhotonPotentialParams p = PhotonPotentialParams::from_wavelength(800e-9, 20 * 800e-9, 4);
  const PotentialExpr chi = photon_chi(p);
  const double delta = 0.37;
  const Jet a = evaluate_jet(chi, {0.1, 25.0, 0.5, 0.2}, 4);
  const Jet b = evaluate_jet(chi, {0.1, 25.0, 0.5 + delta, 0.2}, 4);
  const cplx phase = std::exp(I * (4.0 * delta));
  for (std::size_t k = 0; k < term_count(4); ++k) {
    CHECK(rel_err(b.entry(term_multi_index(k)), phase * a.entry(term_multi_index(k))) < 1e-12);
  }
}

TEST_CASE("jet entries are finite for r > 0") {
  ElectronPacketParams e;
  e.b = 1500;
  e.gamma = 1.0 + 5e-5;
  e.ell = 15;
  const Jet j = evaluate_jet(electron_f(e), {0.0, 0.1, 0.3, 0.0}, 4);
  CHECK(j.series.all_finite());
}
