// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/rate.hpp"

#include <cmath>
#include <string>

#include "relaysec/errors.hpp"

namespace relaysec
{

DesignCandidate::DesignCandidate(HermitianMatrix q, CMatrix g)
  : q_(std::move(q)), g_(std::move(g))
{
  if (g_.rows() != q_.dim() || g_.cols() != q_.dim())
  {
    throw DimensionMismatch("relay gain is " + std::to_string(g_.rows()) + "x" +
                            std::to_string(g_.cols()) + ", expected " +
                            std::to_string(q_.dim()) + "x" + std::to_string(q_.dim()));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(q_.entries(), Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10)
  {
    throw InvalidArgument("source covariance is not PSD (min eigenvalue " +
                          std::to_string(eig.eigenvalues().minCoeff()) + ")");
  }
}

namespace
{

void require_match(const MimoChannel &ch, const DesignCandidate &cand)
{
  if (ch.n() != cand.n())
  {
    throw DimensionMismatch("candidate dimension " + std::to_string(cand.n()) +
                            " does not match channel n = " + std::to_string(ch.n()));
  }
}

CMatrix plus_identity(const CMatrix &m)
{
  return m + CMatrix::Identity(m.rows(), m.cols());
}

// log|H G S G^H H^H + I| - log|H G G^H H^H + I|
double link_term(const CMatrix &h, const CMatrix &g, const CMatrix &s)
{
  const CMatrix hg = h * g;
  const double with_signal = logdet_pd(HermitianMatrix(plus_identity(hg * s * hg.adjoint())));
  const double noise_only = logdet_pd(HermitianMatrix(plus_identity(hg * hg.adjoint())));
  return with_signal - noise_only;
}

}  // namespace

double secrecy_rate_mimo(const MimoChannel &ch, const DesignCandidate &cand)
{
  require_match(ch, cand);
  const CMatrix s = plus_identity(ch.h1() * cand.q().entries() * ch.h1().adjoint());
  return link_term(ch.receiver_matrix(), cand.g(), s) - link_term(ch.he(), cand.g(), s);
}

double secrecy_rate_scalar(const ScalarChannel &ch, double g, double p)
{
  const double s = p * ch.h1() * ch.h1() + 1.0;
  const double g2 = g * g;
  const double r2 = ch.hr() * ch.hr();
  const double e2 = ch.he() * ch.he();
  return std::log2((g2 * r2 * s + 1.0) / (g2 * r2 + 1.0)) -
         std::log2((g2 * e2 * s + 1.0) / (g2 * e2 + 1.0));
}

double relay_power(const MimoChannel &ch, const DesignCandidate &cand)
{
  require_match(ch, cand);
  const CMatrix s = plus_identity(ch.h1() * cand.q().entries() * ch.h1().adjoint());
  return (cand.g() * s * cand.g().adjoint()).trace().real();
}

double relay_power_scalar(const ScalarChannel &ch, double g, double p)
{
  return g * g * (p * ch.h1() * ch.h1() + 1.0);
}

}  // namespace relaysec
