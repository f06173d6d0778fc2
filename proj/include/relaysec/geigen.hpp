// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_GEIGEN_HPP
#define RELAYSEC_GEIGEN_HPP

#include <complex>

#include <Eigen/Dense>

namespace relaysec
{

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

//
// Complex Hermitian matrix. Construction rejects inputs whose deviation from
// their conjugate transpose exceeds 1e-12 relative to the largest entry, and
// stores the exact Hermitian part so downstream factorizations see a
// bit-symmetric operand.
//
class HermitianMatrix
{
public:
  static constexpr double kTolerance = 1e-12;

  explicit HermitianMatrix(const CMatrix &entries);

  static HermitianMatrix identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix &entries() const { return entries_; }

  // Hermitian matrices from real-valued code paths are common in tests.
  static HermitianMatrix from_real(const Eigen::MatrixXd &entries);

private:
  CMatrix entries_;
};

// Lower-triangular Cholesky factor L with m = L L^H. Throws
// NotPositiveDefinite naming the first failing leading minor.
CMatrix cholesky_lower(const HermitianMatrix &m);

// Hermitian pencil (A, B) with B positive definite. B's factor is kept so
// repeated solves against the same pencil do not refactor.
class Pencil
{
public:
  Pencil(HermitianMatrix a, HermitianMatrix b);

  const HermitianMatrix &a() const { return a_; }
  const HermitianMatrix &b() const { return b_; }
  const CMatrix &b_factor() const { return b_factor_; }
  int dim() const { return a_.dim(); }

private:
  HermitianMatrix a_;
  HermitianMatrix b_;
  CMatrix b_factor_;
};

struct GeigenPair
{
  double value = 0.0;
  CVector vector;
};

// Rotates v so its first component with magnitude > 1e-10 is real positive.
void normalize_phase(CVector &v);

// Dominant generalized eigenpair of the pencil, i.e. the maximizer of the
// Rayleigh quotient v^H A v / v^H B v. The vector is unit-norm and
// phase-normalized. Computed through the Cholesky reduction
// C = L^-1 A L^-H, so only the standard Hermitian problem is solved.
GeigenPair largest_generalized_eig(const Pencil &p);

double rayleigh_quotient(const Pencil &p, const CVector &v);

// ||A psi - lambda B psi|| and the bound 1e-8 (||A|| + |lambda| ||B||) it
// must respect.
double eigen_residual(const Pencil &p, const GeigenPair &pair);
double eigen_residual_bound(const Pencil &p, const GeigenPair &pair);

// log2 |m| from the Cholesky diagonal; the determinant is never formed.
double logdet_pd(const HermitianMatrix &m);

}  // namespace relaysec

#endif  // RELAYSEC_GEIGEN_HPP
