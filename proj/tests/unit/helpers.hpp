#pragma once

#include <cmath>
#include <complex>

#include "vortexlab/jet.hpp"

namespace testing {

inline double rel_err(vortexlab::cplx a, vortexlab::cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace testing
