// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spherelab/rng.hpp"

// Direct small-scale sampler of X = A^-1 B products and their eigenvalue
// moduli. This is the independent route used to validate the Gamma-ratio
// sampler: it never touches the representation, only dense linear algebra.
//
// Entry convention: Re and Im of each Ginibre entry are independent
// Normal(0, 1/2), so E|z|^2 = 1. The law of A^-1 B is invariant under any
// common rescaling of A and B, so the convention cannot matter; that
// invariance is tested rather than assumed.

namespace spherelab {

/// Dense square complex matrix, row-major storage.
struct ComplexMatrix {
  std::int64_t n = 0;
  std::vector<std::complex<double>> entries;  // n*n, row-major

  std::complex<double>& at(std::int64_t r, std::int64_t c) {
    return entries[static_cast<std::size_t>(r * n + c)];
  }
  const std::complex<double>& at(std::int64_t r, std::int64_t c) const {
    return entries[static_cast<std::size_t>(r * n + c)];
  }
};

/// Eigenvalue moduli plus a backward-error estimate for the solve.
struct EigenModuli {
  std::vector<double> values;  // |z_1|..|z_n|, unsorted
  double residual = 0.0;       // max_j ||M v_j - lambda_j v_j|| / (||M||_F ||v_j||)
};

namespace detail {

using EigenCMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                Eigen::RowMajor>;

inline EigenCMat to_eigen(const ComplexMatrix& m) {
  return Eigen::Map<const EigenCMat>(m.entries.data(), m.n, m.n);
}

inline ComplexMatrix from_eigen(const EigenCMat& e) {
  ComplexMatrix m;
  m.n = e.rows();
  m.entries.assign(e.data(), e.data() + e.size());
  return m;
}

}  // namespace detail

/// n x n matrix of i.i.d. standard complex normal entries.
inline ComplexMatrix sample_complex_ginibre(std::int64_t n, PhiloxStream& rng) {
  if (n < 1) throw std::domain_error("sample_complex_ginibre: n must be >= 1");
  constexpr double half_sqrt2 = 0.70710678118654752440084436210485;  // sd of each part
  ComplexMatrix m;
  m.n = n;
  m.entries.resize(static_cast<std::size_t>(n * n));
  for (auto& z : m.entries) {
    z = std::complex<double>(half_sqrt2 * rng.next_normal(), half_sqrt2 * rng.next_normal());
  }
  return m;
}

/// One spherical-ensemble draw X = A^-1 B, computed by an LU solve of
/// A X = B with partial pivoting (A is never inverted). A numerically
/// singular A triggers one resample; a second failure is a hard error.
inline ComplexMatrix sample_spherical(std::int64_t n, PhiloxStream& rng) {
  if (n < 1) throw std::domain_error("sample_spherical: n must be >= 1");
  for (int attempt = 0; attempt < 2; ++attempt) {
    const detail::EigenCMat a = detail::to_eigen(sample_complex_ginibre(n, rng));
    const detail::EigenCMat b = detail::to_eigen(sample_complex_ginibre(n, rng));
    Eigen::PartialPivLU<detail::EigenCMat> lu(a);
    const detail::EigenCMat x = lu.solve(b);
    const double rel_residual = (a * x - b).cwiseAbs().maxCoeff() /
                                (b.cwiseAbs().maxCoeff() + 1e-300);
    if (std::isfinite(rel_residual) && rel_residual <= 1e-8) {
      return detail::from_eigen(x);
    }
  }
  throw std::runtime_error(
      "sample_spherical: LU solve failed twice (residual > 1e-8); "
      "a numerically singular Ginibre draw twice in a row indicates a bug, n=" +
      std::to_string(n));
}

/// Product over a factor list, multiplied left to right.
inline ComplexMatrix product_of(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw std::domain_error("product_of: empty factor list");
  detail::EigenCMat acc = detail::to_eigen(factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) {
    if (factors[k].n != factors.front().n) {
      throw std::domain_error("product_of: mismatched dimensions");
    }
    acc = acc * detail::to_eigen(factors[k]);
  }
  return detail::from_eigen(acc);
}

/// X_1 X_2 ... X_m for m independent spherical draws.
inline ComplexMatrix product_chain(std::int64_t n, std::int64_t m, PhiloxStream& rng) {
  if (n < 1 || m < 1) throw std::domain_error("product_chain: n and m must be >= 1");
  std::vector<ComplexMatrix> factors;
  factors.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) factors.push_back(sample_spherical(n, rng));
  return product_of(factors);
}

/// Moduli of all n eigenvalues of a general complex matrix. Uses a
/// backward-stable Schur-based solver (Hessenberg reduction plus shifted QR,
/// capped at 30 sweeps per row); non-convergence is surfaced as an error.
inline EigenModuli eigen_moduli(const ComplexMatrix& m) {
  if (m.n < 1 || m.entries.size() != static_cast<std::size_t>(m.n * m.n)) {
    throw std::domain_error("eigen_moduli: malformed matrix");
  }
  for (const auto& z : m.entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::domain_error("eigen_moduli: non-finite entry");
    }
  }
  const detail::EigenCMat a = detail::to_eigen(m);
  Eigen::ComplexEigenSolver<detail::EigenCMat> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_moduli: QR iteration did not converge within 30n sweeps, n=" +
                             std::to_string(m.n));
  }
  EigenModuli out;
  out.values.reserve(static_cast<std::size_t>(m.n));
  const double norm_a = a.norm();  // Frobenius
  for (std::int64_t j = 0; j < m.n; ++j) {
    const auto lambda = solver.eigenvalues()(j);
    out.values.push_back(std::abs(lambda));
    const auto v = solver.eigenvectors().col(j);
    const double res = (a * v - lambda * v).norm() / (norm_a * v.norm() + 1e-300);
    out.residual = std::max(out.residual, res);
  }
  return out;
}

/// log spectral radius of one product draw.
inline double oracle_spectral_radius(std::int64_t n, std::int64_t m, PhiloxStream& rng) {
  const EigenModuli em = eigen_moduli(product_chain(n, m, rng));
  double best = 0.0;
  for (double v : em.values) best = std::max(best, v);
  return std::log(best);
}

}  // namespace spherelab
