// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

// Empirical distributions and Kolmogorov-Smirnov statistics. The KS distances
// are evaluated exactly at the jump points; the experiment tolerances sit
// close to the asymptotic critical values, so grid approximations would bias
// pass/fail outcomes.

namespace spherelab {

/// Empirical CDF: a sorted sample.
struct Ecdf {
  std::vector<double> sorted_values;

  std::size_t size() const { return sorted_values.size(); }
};

inline Ecdf build_ecdf(std::vector<double> values) {
  if (values.empty()) throw std::domain_error("build_ecdf: empty sample");
  for (double v : values) {
    if (!std::isfinite(v)) throw std::domain_error("build_ecdf: non-finite sample value");
  }
  std::sort(values.begin(), values.end());
  return Ecdf{std::move(values)};
}

/// Right-continuous evaluation: (#values <= x) / size.
inline double ecdf_eval(const Ecdf& e, double x) {
  const auto it = std::upper_bound(e.sorted_values.begin(), e.sorted_values.end(), x);
  return static_cast<double>(it - e.sorted_values.begin()) / static_cast<double>(e.size());
}

/// One-sample KS distance when the reference CDF has already been evaluated
/// at the sorted sample points (cdf_at_points[k] = F(x_(k+1))).
inline double ks_one_sample_precomputed(const Ecdf& e, const std::vector<double>& cdf_at_points) {
  if (cdf_at_points.size() != e.size()) {
    throw std::domain_error("ks_one_sample_precomputed: size mismatch");
  }
  const double n = static_cast<double>(e.size());
  double d = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const double f = cdf_at_points[k];
    d = std::max(d, (static_cast<double>(k) + 1.0) / n - f);
    d = std::max(d, f - static_cast<double>(k) / n);
  }
  return d;
}

/// Exact one-sample KS distance sup_x |F_n(x) - F(x)| against a monotone CDF,
/// taking both one-sided limits at every jump.
template <class Cdf>
double ks_one_sample(const Ecdf& e, Cdf&& cdf) {
  std::vector<double> f(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) f[k] = cdf(e.sorted_values[k]);
  return ks_one_sample_precomputed(e, f);
}

/// Exact two-sample KS distance via a linear merge of the supports.
inline double ks_two_sample(const Ecdf& a, const Ecdf& b) {
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < a.size() || ib < b.size()) {
    const double va = ia < a.size() ? a.sorted_values[ia] : std::numeric_limits<double>::infinity();
    const double vb = ib < b.size() ? b.sorted_values[ib] : std::numeric_limits<double>::infinity();
    const double v = std::min(va, vb);
    while (ia < a.size() && a.sorted_values[ia] == v) ++ia;
    while (ib < b.size() && b.sorted_values[ib] == v) ++ib;
    d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
  }
  return d;
}

/// Asymptotic two-sample critical value c(alpha) * sqrt((Na+Nb)/(Na*Nb)).
/// Supported levels: 0.05, 0.01, 0.001. The Kolmogorov constants are the
/// standard large-sample approximation, not exact finite-sample values.
inline double ks_two_sample_critical(std::size_t na, std::size_t nb, double alpha) {
  double c;
  if (alpha == 0.05) {
    c = 1.36;
  } else if (alpha == 0.01) {
    c = 1.63;
  } else if (alpha == 0.001) {
    c = 1.95;
  } else {
    throw std::domain_error("ks_two_sample_critical: alpha must be one of 0.05, 0.01, 0.001");
  }
  const double fa = static_cast<double>(na), fb = static_cast<double>(nb);
  return c * std::sqrt((fa + fb) / (fa * fb));
}

}  // namespace spherelab
