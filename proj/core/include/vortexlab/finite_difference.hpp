#pragma once

// Central-difference oracle for mixed partials. Used to cross-check the
// Taylor engine and inside the Maxwell residual checks; never on the
// production evaluation path.

#include <functional>

#include "vortexlab/jet.hpp"

namespace vortexlab {

using PointFunction = std::function<cplx(const SpacetimePoint&)>;

struct StepSizes {
  double t = 1e-3;
  double r = 1e-3;
  double phi = 1e-3;
  double z = 1e-3;

  double along(Axis axis) const noexcept;
  static StepSizes uniform(double h) { return {h, h, h, h}; }
};

/// Nested central differences, one axis at a time, each refined by
/// `richardson_levels` rounds of Richardson extrapolation (error O(h^(2 + 2 levels))).
cplx finite_difference_partial(const PointFunction& field, const SpacetimePoint& point, const MultiIndex& index,
                               const StepSizes& steps, int richardson_levels = 1);

/// First derivative of a real-line function by Richardson-refined central differences.
cplx central_derivative(const std::function<cplx(double)>& f, double x, double h, int richardson_levels = 1);

}  // namespace vortexlab
