#include "vortexlab/finite_difference.hpp"

#include <cmath>
#include <vector>

namespace vortexlab {

double StepSizes::along(Axis axis) const noexcept {
  switch (axis) {
    case Axis::t: return t;
    case Axis::r: return r;
    case Axis::phi: return phi;
    case Axis::z: return z;
  }
  return 0.0;
}

cplx central_derivative(const std::function<cplx(double)>& f, double x, double h, int richardson_levels) {
  // Neville-style table over h, h/2, h/4, ...
  std::vector<cplx> table(static_cast<std::size_t>(richardson_levels) + 1);
  double step = h;
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = (f(x + step) - f(x - step)) / (2.0 * step);
    step *= 0.5;
  }
  double factor = 4.0;
  for (std::size_t level = 1; level < table.size(); ++level) {
    for (std::size_t i = table.size() - 1; i >= level; --i) {
      table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0);
    }
    factor *= 4.0;
  }
  return table.back();
}

cplx finite_difference_partial(const PointFunction& field, const SpacetimePoint& point, const MultiIndex& index,
                               const StepSizes& steps, int richardson_levels) {
  int axis = 0;
  while (axis < kAxes && index.n[static_cast<std::size_t>(axis)] == 0) ++axis;
  if (axis == kAxes) return field(point);

  MultiIndex rest = index;
  --rest.n[static_cast<std::size_t>(axis)];
  const Axis ax = static_cast<Axis>(axis);
  auto inner = [&](double x) {
    return finite_difference_partial(field, point.with_coordinate(ax, x), rest, steps, richardson_levels);
  };
  return central_derivative(inner, point.coordinate(ax), steps.along(ax), richardson_levels);
}

}  // namespace vortexlab
