// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/geigen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaysec/errors.hpp"

namespace relaysec
{

HermitianMatrix::HermitianMatrix(const CMatrix &entries)
{
  if (entries.rows() < 1 || entries.rows() != entries.cols())
  {
    throw InvalidDimension("Hermitian matrix must be square with dim >= 1, got " +
                           std::to_string(entries.rows()) + "x" +
                           std::to_string(entries.cols()));
  }
  if (!entries.allFinite())
  {
    throw NumericalError("Hermitian matrix has non-finite entries");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const double skew = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (!(skew <= kTolerance * scale))
  {
    throw NotHermitian("matrix deviates from its conjugate transpose by " +
                       std::to_string(skew));
  }
  entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianMatrix HermitianMatrix::identity(int dim)
{
  return HermitianMatrix(CMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::from_real(const Eigen::MatrixXd &entries)
{
  return HermitianMatrix(CMatrix(entries.cast<Complex>()));
}

CMatrix cholesky_lower(const HermitianMatrix &m)
{
  const CMatrix &a = m.entries();
  const Eigen::Index n = a.rows();
  CMatrix l = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
  {
    double d = a(j, j).real();
    for (Eigen::Index k = 0; k < j; ++k)
    {
      d -= std::norm(l(j, k));
    }
    if (!(d > 0.0) || !std::isfinite(d))
    {
      throw NotPositiveDefinite(static_cast<int>(j) + 1);
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i)
    {
      Complex s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k)
      {
        s -= l(i, k) * std::conj(l(j, k));
      }
      l(i, j) = s / ljj;
    }
  }
  return l;
}

Pencil::Pencil(HermitianMatrix a, HermitianMatrix b)
  : a_(std::move(a)), b_(std::move(b))
{
  if (a_.dim() != b_.dim())
  {
    throw DimensionMismatch("pencil dimensions differ: " + std::to_string(a_.dim()) +
                            " vs " + std::to_string(b_.dim()));
  }
  b_factor_ = cholesky_lower(b_);
}

void normalize_phase(CVector &v)
{
  for (Eigen::Index i = 0; i < v.size(); ++i)
  {
    const double mag = std::abs(v(i));
    if (mag > 1e-10)
    {
      v *= std::conj(v(i)) / mag;
      v(i) = Complex(std::abs(v(i)), 0.0);
      return;
    }
  }
}

GeigenPair largest_generalized_eig(const Pencil &p)
{
  const auto l = p.b_factor().triangularView<Eigen::Lower>();
  // C = L^-1 A L^-H
  CMatrix y = l.solve(p.a().entries());
  CMatrix c = l.solve(y.adjoint()).adjoint();
  c = 0.5 * (c + c.adjoint()).eval();

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(c);
  if (eig.info() != Eigen::Success)
  {
    throw NumericalError("Hermitian eigensolver failed to converge");
  }
  const Eigen::Index top = c.rows() - 1;
  GeigenPair pair;
  pair.value = eig.eigenvalues()(top);
  // psi = L^-H y
  pair.vector = l.adjoint().solve(eig.eigenvectors().col(top));
  pair.vector.normalize();
  normalize_phase(pair.vector);
  return pair;
}

double rayleigh_quotient(const Pencil &p, const CVector &v)
{
  if (v.size() != p.dim())
  {
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match pencil dim " + std::to_string(p.dim()));
  }
  if (v.norm() == 0.0)
  {
    throw ZeroVector();
  }
  const Complex num = v.dot(p.a().entries() * v);
  const Complex den = v.dot(p.b().entries() * v);
  return num.real() / den.real();
}

double eigen_residual(const Pencil &p, const GeigenPair &pair)
{
  return (p.a().entries() * pair.vector - pair.value * (p.b().entries() * pair.vector))
    .norm();
}

double eigen_residual_bound(const Pencil &p, const GeigenPair &pair)
{
  return 1e-8 * (p.a().entries().norm() + std::abs(pair.value) * p.b().entries().norm());
}

double logdet_pd(const HermitianMatrix &m)
{
  const CMatrix l = cholesky_lower(m);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i)
  {
    sum += std::log2(l(i, i).real());
  }
  return 2.0 * sum;
}

}  // namespace relaysec
