// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#include "spherelab/rep_sampler.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "spherelab/limit_laws.hpp"
#include "spherelab/specfun.hpp"
#include "spherelab/stats.hpp"

using namespace spherelab;

TEST(SampleLogRadius, ScalarCaseIsSymmetric) {
  // n = m = 1: the radius is a ratio of two i.i.d. exponentials, so
  // P(log M <= 0) = 1/2.
  const std::int64_t count = 100000;
  const SampleBatch batch = sample_batch({1, 1}, count, 404, 2);
  std::int64_t below = 0;
  for (double v : batch.values) {
    if (v <= 0.0) ++below;
  }
  const double frac = static_cast<double>(below) / static_cast<double>(count);
  EXPECT_NEAR(frac, 0.5, 3.0 * std::sqrt(0.25 / static_cast<double>(count)));
}

TEST(SampleLogRadius, NTwoMatchesClosedForm) {
  // P(M_2 <= 1) = 3/16
  const std::int64_t count = 100000;
  std::int64_t below = 0;
  for (std::int64_t k = 0; k < count; ++k) {
    PhiloxStream rng(405, static_cast<std::uint64_t>(k));
    if (sample_log_radius({2, 1}, rng).log_mn <= 0.0) ++below;
  }
  const double frac = static_cast<double>(below) / static_cast<double>(count);
  EXPECT_NEAR(frac, 3.0 / 16.0, 4.0 * std::sqrt(0.1875 * 0.8125 / static_cast<double>(count)));
}

TEST(SampleLogRadius, TraceMaxEqualsValue) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    PhiloxStream rng(7, k);
    const LogRadiusSample s = sample_log_radius({17, 3}, rng, /*with_trace=*/true);
    ASSERT_TRUE(s.trace.has_value());
    ASSERT_EQ(s.trace->size(), 17u);
    EXPECT_EQ(s.log_mn, *std::max_element(s.trace->begin(), s.trace->end()));
  }
}

TEST(SampleLogRadius, TraceDoesNotPerturbDraws) {
  PhiloxStream a(19, 2), b(19, 2);
  const LogRadiusSample with = sample_log_radius({9, 2}, a, true);
  const LogRadiusSample without = sample_log_radius({9, 2}, b, false);
  EXPECT_EQ(with.log_mn, without.log_mn);
  EXPECT_FALSE(without.trace.has_value());
}

TEST(SampleBatch, IndependentOfWorkerCount) {
  const EnsembleSpec spec{5, 2};
  const SampleBatch w1 = sample_batch(spec, 600, 7, 1);
  const SampleBatch w8 = sample_batch(spec, 600, 7, 8);
  EXPECT_EQ(w1.values, w8.values);
  EXPECT_EQ(w1.count, 600);
  EXPECT_THROW(sample_batch(spec, 0, 7, 1), std::domain_error);
}

TEST(SampleBatch, ExactLawKs) {
  // the representation must match the exact finite-n CDF; checked at two n
  // (the acceptance suite pins n = 10)
  for (std::int64_t n : {3, 17}) {
    const SampleBatch batch = sample_batch({n, 1}, 100000, 1234 + static_cast<std::uint64_t>(n), 2);
    const Ecdf ecdf = build_ecdf(batch.values);
    const double d = ks_one_sample(ecdf, [n](double s) {
      return s <= -700.0 ? 0.0 : finite_n_cdf_m1(n, std::exp(s));
    });
    EXPECT_LE(d, 0.008) << "n=" << n;
  }
}

TEST(SampleBatch, MeanOfLogV1MatchesMuN) {
  // E log V_1 = (m/2)(psi(n) - psi(1)) = mu_n
  const std::int64_t n = 40, m = 6, count = 100000;
  const Ecdf probe = per_index_cdf_ordering_probe({n, m}, 1, count, 505);
  double mean = 0.0, var = 0.0;
  for (double v : probe.sorted_values) mean += v;
  mean /= static_cast<double>(count);
  for (double v : probe.sorted_values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(count - 1);
  const double mu = 0.5 * static_cast<double>(m) * harmonic_prefix(n);
  EXPECT_NEAR(mean, mu, 4.0 * std::sqrt(var / static_cast<double>(count)));
}

TEST(PerIndexProbe, ScalarMedianNearZero) {
  const Ecdf e = per_index_cdf_ordering_probe({1, 1}, 1, 10000, 99);
  const double median = e.sorted_values[e.size() / 2];
  EXPECT_NEAR(median, 0.0, 0.05);
  EXPECT_THROW(per_index_cdf_ordering_probe({1, 1}, 2, 10, 99), std::domain_error);
}

TEST(PerIndexProbe, StochasticOrdering) {
  // P(V_i <= x) non-decreasing in i: the ECDF of V_{i+1} dominates that of
  // V_i up to MC noise, for i = 1..4 at n = 50, m = 2.
  const EnsembleSpec spec{50, 2};
  const std::int64_t count = 20000;
  for (std::int64_t i = 1; i <= 4; ++i) {
    const Ecdf lo = per_index_cdf_ordering_probe(spec, i, count, 600 + static_cast<std::uint64_t>(i));
    const Ecdf hi = per_index_cdf_ordering_probe(spec, i + 1, count,
                                                 700 + static_cast<std::uint64_t>(i));
    const double min_v = lo.sorted_values.front();
    const double max_v = lo.sorted_values.back();
    for (int g = 0; g <= 200; ++g) {
      const double x = min_v + (max_v - min_v) * static_cast<double>(g) / 200.0;
      EXPECT_GE(ecdf_eval(hi, x), ecdf_eval(lo, x) - 0.02) << "i=" << i << " x=" << x;
    }
  }
}

TEST(SampleLimitVariable, DominatesFirstIndexTerm) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    PhiloxStream value_rng(88, k), replay_rng(88, k);
    const double value = sample_limit_variable(4, 3, value_rng);
    // replay the i = 1 draws from the same stream
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += std::log(gamma_variate(1.0, replay_rng));
    EXPECT_GE(value, -0.5 * s);
  }
}

TEST(SampleLimitVariable, TruncationInsensitiveAboveBoundLevel) {
  // at m = 1 the i_max = 101 truncation changes values above log(1) = 0 with
  // probability <= 0.01; empirically the deeper truncation never moves them
  const std::int64_t count = 20000;
  std::int64_t moved = 0;
  for (std::int64_t k = 0; k < count; ++k) {
    PhiloxStream shallow(3131, static_cast<std::uint64_t>(k));
    PhiloxStream deep(3131, static_cast<std::uint64_t>(k));
    const double v_shallow = sample_limit_variable(1, 101, shallow);
    const double v_deep = sample_limit_variable(1, 301, deep);
    if (v_shallow > 0.0 && v_deep != v_shallow) ++moved;
  }
  EXPECT_LE(static_cast<double>(moved) / static_cast<double>(count), 0.01);
}

TEST(TruncationBound, TelescopingAndScaling) {
  EXPECT_NEAR(truncation_bound(1, 101, 1.0), 0.01, 1e-15);
  EXPECT_NEAR(truncation_bound(1, 101, 2.0), 6.25e-4, 1e-18);
  // m = 2: bounded by the comparison integral int_10^inf (x(x-1))^-2 dx < 4e-4
  const double b = truncation_bound(2, 11, 1.0);
  EXPECT_GT(b, 0.0);
  EXPECT_LT(b, 4e-4);
  EXPECT_THROW(truncation_bound(1, 2, 1.0), std::domain_error);
  EXPECT_THROW(truncation_bound(0, 10, 1.0), std::domain_error);
  EXPECT_THROW(truncation_bound(1, 10, 0.0), std::domain_error);
}

TEST(TruncationBound, DominatesBruteForceTailSum) {
  // direct partial sums of the defining series stay below the returned bound
  for (std::int64_t m : {2, 3}) {
    const std::int64_t i_max = 12;
    double direct = 0.0;
    for (std::int64_t i = i_max + 1; i <= i_max + 2000000; ++i) {
      direct += std::pow(static_cast<double>(i - 1) * static_cast<double>(i - 2),
                         -static_cast<double>(m));
    }
    EXPECT_LE(direct, truncation_bound(m, i_max, 1.0)) << "m=" << m;
    EXPECT_NEAR(direct, truncation_bound(m, i_max, 1.0), direct * 1e-3) << "m=" << m;
  }
}

TEST(DefaultIMax, RuleValues) {
  // smallest i_max with bound(m, i_max, 0.1) <= 1e-3
  for (std::int64_t m : {2, 3, 4}) {
    const std::int64_t im = default_i_max(m);
    EXPECT_LE(truncation_bound(m, im, 0.1), 1e-3);
    EXPECT_GT(truncation_bound(m, im - 1, 0.1), 1e-3);
  }
  EXPECT_THROW(default_i_max(1), std::domain_error);
}

TEST(SllnProbe, GammaTotalsConcentrate) {
  // max over n*m independent Gamma(n)/n draws at n = 1e4, m = 3 stays within
  // 0.1 of 1 (expected max deviation ~ sqrt(2 log(nm)/n) ~ 0.045)
  const std::int64_t n = 10000, m = 3;
  double worst = 0.0;
  PhiloxStream rng(2718, 0);
  for (std::int64_t k = 0; k < n * m; ++k) {
    const double dev = std::abs(gamma_variate(static_cast<double>(n), rng) /
                                    static_cast<double>(n) - 1.0);
    worst = std::max(worst, dev);
  }
  EXPECT_LE(worst, 0.1);
  EXPECT_GT(worst, 0.01);
}
