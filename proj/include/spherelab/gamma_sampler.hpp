// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>

#include "spherelab/rng.hpp"

namespace spherelab {

/// One draw from Gamma(shape, 1) for shape >= 1.
///
/// Marsaglia & Tsang (2000) squeeze-rejection: expected cost is O(1) and flat
/// in the shape, which matters here because shapes run from 1 up to the matrix
/// dimension.
inline double gamma_variate(double shape, PhiloxStream& rng) {
  if (!(shape >= 1.0) || !std::isfinite(shape)) {
    throw std::domain_error("gamma_variate: shape must be finite and >= 1");
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace spherelab
