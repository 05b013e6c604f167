// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spherelab/parallel.hpp"
#include "spherelab/rep_sampler.hpp"
#include "spherelab/specfun.hpp"
#include "spherelab/stats.hpp"

// The three reference laws the experiments compare against:
//   * the exact finite-n CDF of M_n at m = 1 (a product of binomial tails),
//   * the m = 1 limit law H(x) = prod_i H_i(x^-2) with a certified truncation,
//   * the divergent-m normal law with centering mu_n and scale sigma_n,
// plus a Monte Carlo reference ECDF for the fixed-m limit when m >= 2, where
// no closed form exists.

namespace spherelab {

/// Centering and scale of the divergent-m normal limit:
/// mu_n = (m/2) sum_{k<n} 1/k, sigma_n = sqrt(m pi^2 / 24).
struct NormalLimitParams {
  double mu_n = 0.0;
  double sigma_n = 0.0;
  std::int64_t n = 1;
  std::int64_t m = 1;
};

inline double limit_cdf_m1(double x, double eps);

/// The m = 1 limit law H with its certified truncation budget.
struct TruncatedProductLaw {
  double eps = 1e-10;
  std::string i_cutoff_rule =
      "stop at the smallest I with sum_{i>I} y^i/i! <= eps, y = x^-2 (Poisson tail bound)";

  double cdf(double x) const { return limit_cdf_m1(x, eps); }
};

/// Monte Carlo reference for the fixed-m limit variable, m >= 2.
struct McReferenceLaw {
  std::int64_t m = 2;
  std::int64_t i_max = 3;
  std::int64_t ref_count = 0;
  std::uint64_t seed = 0;
  Ecdf ecdf;
  double truncation_bound_at_low_quantile = 0.0;  ///< bound evaluated at t = exp(0.1% quantile)
};

/// H(x) = P(limit variable <= x) for m = 1: the infinite product
/// prod_{i>=1} H_i(x^-2), truncated once the Poisson tail bound certifies the
/// remaining factors change the value by less than eps.
inline double limit_cdf_m1(double x, double eps = 1e-10) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("limit_cdf_m1: x must be > 0");
  if (!(eps > 0.0)) throw std::domain_error("limit_cdf_m1: eps must be > 0");
  const double y = 1.0 / (x * x);
  const double ly = std::log(y);
  double log_h = 0.0;
  double log_fact = 0.0;  // log i!
  for (std::int64_t i = 1;; ++i) {
    const double hi = h_i(i, y);
    if (hi <= 0.0) return 0.0;
    log_h += std::log(hi);
    // tail bound: sum_{k>i} y^k/k! <= t_{i+1} / (1 - y/(i+2)) once i+2 > 2y
    log_fact += std::log(static_cast<double>(i));
    if (static_cast<double>(i + 2) > 2.0 * y) {
      const double log_t_next = static_cast<double>(i + 1) * ly - log_fact -
                                std::log(static_cast<double>(i + 1));
      const double tail =
          std::exp(log_t_next) / (1.0 - y / static_cast<double>(i + 2));
      if (tail <= eps) break;
    }
  }
  return std::exp(log_h);
}

/// Exact finite-n law of M_n at m = 1. Each per-index factor is a beta-prime
/// variable: P(V_i <= x) = P(Beta(n+1-i, i) <= p) = P(Bin(n, p) >= n+1-i)
/// with p = x^2/(1+x^2), so the CDF is prod_{k=1}^n P(Bin(n,p) >= k).
inline double finite_n_cdf_m1(std::int64_t n, double x) {
  if (n < 1) throw std::domain_error("finite_n_cdf_m1: n must be >= 1");
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("finite_n_cdf_m1: x must be > 0");
  const double x2 = x * x;
  const double p = x2 / (1.0 + x2);
  double log_cdf = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double tail = binomial_tail(n, k, p);
    if (tail <= 0.0) return 0.0;
    log_cdf += std::log(tail);
  }
  return std::exp(log_cdf);
}

/// mu_n and sigma_n of the divergent-m normal limit.
inline NormalLimitParams normal_params(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::domain_error("normal_params: n and m must be >= 1");
  NormalLimitParams p;
  p.n = n;
  p.m = m;
  p.mu_n = 0.5 * static_cast<double>(m) * harmonic_prefix(n);
  p.sigma_n = std::sqrt(static_cast<double>(m)) * std::numbers::pi / std::sqrt(24.0);
  return p;
}

/// (log M_n - mu_n) / sigma_n.
inline double theorem2_normalize(double log_mn, const NormalLimitParams& params) {
  if (!(params.sigma_n > 0.0)) throw std::domain_error("theorem2_normalize: sigma_n must be > 0");
  return (log_mn - params.mu_n) / params.sigma_n;
}

/// Monte Carlo reference ECDF of the fixed-m limit variable (log scale),
/// m >= 2. Records the truncation bound at t = exp(0.1% quantile of the
/// drawn values) as certification metadata.
inline McReferenceLaw build_mc_reference(std::int64_t m, std::int64_t i_max,
                                         std::int64_t ref_count, std::uint64_t seed,
                                         int workers = 1) {
  if (m < 2) throw std::domain_error("build_mc_reference: m must be >= 2");
  if (ref_count < 1) throw std::domain_error("build_mc_reference: ref_count must be >= 1");
  McReferenceLaw law;
  law.m = m;
  law.i_max = i_max;
  law.ref_count = ref_count;
  law.seed = seed;
  law.ecdf = build_ecdf(generate_by_stream(ref_count, seed, workers, [m, i_max](PhiloxStream& rng) {
    return sample_limit_variable(m, i_max, rng);
  }));
  const std::size_t q_index =
      static_cast<std::size_t>(static_cast<double>(ref_count) * 0.001);
  const double low_q = law.ecdf.sorted_values[std::min(q_index, law.ecdf.size() - 1)];
  law.truncation_bound_at_low_quantile = truncation_bound(m, i_max, std::exp(low_q));
  return law;
}

}  // namespace spherelab
