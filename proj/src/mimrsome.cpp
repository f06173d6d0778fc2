// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/mimrsome.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "relaysec/errors.hpp"

namespace relaysec
{

namespace
{

constexpr int kGridPoints = 1000;

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

const CVector &require_hr_vec(const MimoChannel &ch)
{
  if (!ch.hr_vec())
  {
    throw InvalidArgument("operation requires a single-antenna receiver (mimrsome channel)");
  }
  return *ch.hr_vec();
}

void require_split(double p, double x)
{
  if (!(x >= 0.0 && x <= p))
  {
    throw InvalidSplit("power split x = " + std::to_string(x) + " outside [0, " +
                       std::to_string(p) + "]");
  }
}

bool improves(double candidate, double best)
{
  return candidate > best + 1e-12 * std::max(1.0, std::abs(best));
}

CMatrix pseudo_inverse(const CMatrix &m)
{
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto &sv = svd.singularValues();
  const double cutoff = 1e-12 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
  {
    if (sv(i) > cutoff)
    {
      inv(i) = 1.0 / sv(i);
    }
  }
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

}  // namespace

Pencil misome_pencil(const CVector &hr_vec, const CMatrix &he, double p)
{
  const Eigen::Index n = hr_vec.size();
  if (he.rows() != n || he.cols() != n)
  {
    throw DimensionMismatch("eavesdropper matrix does not match receiver vector length " +
                            std::to_string(n));
  }
  return Pencil(HermitianMatrix(identity(n) + p * hr_vec * hr_vec.adjoint()),
                HermitianMatrix(identity(n) + p * he.adjoint() * he));
}

MisomeResult misome_capacity(const CVector &hr_vec, const CMatrix &he, double p)
{
  if (!(p > 0.0))
  {
    throw InvalidArgument("power budget P must be > 0");
  }
  GeigenPair pair = largest_generalized_eig(misome_pencil(hr_vec, he, p));
  HermitianMatrix q(p * pair.vector * pair.vector.adjoint());
  return {0.5 * std::log2(pair.value), std::move(q), std::move(pair)};
}

double misome_rate(const CVector &hr_vec, const CMatrix &he, const HermitianMatrix &q)
{
  const Eigen::Index n = hr_vec.size();
  if (q.dim() != n || he.cols() != n)
  {
    throw DimensionMismatch("covariance dimension does not match channel");
  }
  const double signal = 1.0 + hr_vec.dot(q.entries() * hr_vec).real();
  const double leak = logdet_pd(
    HermitianMatrix(identity(he.rows()) + he * q.entries() * he.adjoint()));
  return 0.5 * (std::log2(signal) - leak);
}

Pencil gamma_pencil(const MimoChannel &ch, double p, double x)
{
  const CVector &hr = require_hr_vec(ch);
  require_split(p, x);
  const double t = p - x;
  const Eigen::Index n = ch.n();
  return Pencil(HermitianMatrix(identity(n) + t * ch.he().adjoint() * ch.he()),
                HermitianMatrix(identity(n) + t * hr * hr.adjoint()));
}

GeigenPair gamma_max(const MimoChannel &ch, double p, double x)
{
  return largest_generalized_eig(gamma_pencil(ch, p, x));
}

SplitBound x_upper_bound(const CMatrix &h1, const CVector &psi_max, double p)
{
  const double c = (h1.adjoint() * psi_max).squaredNorm();
  return {p * p * c / (1.0 + p * c), p * p / (1.0 + p * c)};
}

CMatrix build_relay_matrix(const CVector &phi_max, double p, double x)
{
  require_split(p, x);
  const Eigen::Index n = phi_max.size();
  CMatrix g = CMatrix::Zero(n, n);
  g.col(0) = std::sqrt(p - x) * phi_max;
  return g;
}

RecoveredCovariance recover_source_covariance(const CMatrix &g_mat, const CMatrix &h1,
                                              const CVector &psi_max, const CVector &phi_max,
                                              double p, double x)
{
  require_split(p, x);
  const Eigen::Index n = h1.rows();
  if (h1.cols() != n || g_mat.rows() != n || g_mat.cols() != n || psi_max.size() != n ||
      phi_max.size() != n)
  {
    throw DimensionMismatch("covariance recovery operands have inconsistent dimensions");
  }
  Eigen::JacobiSVD<CMatrix> h1_svd(h1);
  const double sigma_min = h1_svd.singularValues()(n - 1);
  if (!(sigma_min > 1e-10))
  {
    throw SingularH1("source-relay matrix is singular (smallest singular value " +
                     std::to_string(sigma_min) + ")");
  }

  const CMatrix target = p * psi_max * psi_max.adjoint();
  const CMatrix diff = target - (p - x) * phi_max * phi_max.adjoint();
  const CMatrix m_pinv = pseudo_inverse(g_mat * h1);
  HermitianMatrix q(m_pinv * diff * m_pinv.adjoint());

  RecoveryReport report;
  const CMatrix q1 = g_mat * (h1 * q.entries() * h1.adjoint() + identity(n)) * g_mat.adjoint();
  report.residual = (q1 - target).norm();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(q.entries(), Eigen::EigenvaluesOnly);
  report.min_eigenvalue = eig.eigenvalues()(0);
  report.trace = q.entries().trace().real();
  report.feasible =
    report.residual < 1e-6 && report.min_eigenvalue >= -1e-10 && report.trace <= p + 1e-9;
  return {std::move(q), report};
}

double split_objective(const MimoChannel &ch, double p, double lambda_max, double x)
{
  return 0.5 * std::log2(lambda_max * gamma_max(ch, p, x).value);
}

double golden_section_maximize(const std::function<double(double)> &f, double lo, double hi,
                               double tol)
{
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  double best_x = fc >= fd ? c : d;
  double best_f = std::max(fc, fd);
  while (b - a > tol)
  {
    if (fc >= fd)
    {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best_f)
      {
        best_f = fc;
        best_x = c;
      }
    }
    else
    {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best_f)
      {
        best_f = fd;
        best_x = d;
      }
    }
  }
  return best_x;
}

MimrsomeSolution optimize_split(const MimoChannel &ch, double p)
{
  const CVector &hr = require_hr_vec(ch);
  if (!(p > 0.0) || !std::isfinite(p))
  {
    throw InvalidArgument("power budget P must be finite and > 0");
  }

  MimrsomeSolution sol;
  const GeigenPair lambda = largest_generalized_eig(misome_pencil(hr, ch.he(), p));
  sol.lambda_max = lambda.value;
  sol.psi_max = lambda.vector;
  sol.x_bound = x_upper_bound(ch.h1(), sol.psi_max, p);
  sol.x_search_max = std::min(sol.x_bound.derived, p);

  auto f = [&](double x)
  {
    ++sol.evaluations;
    return split_objective(ch, p, sol.lambda_max, x);
  };

  // Grid pass. Index order fixes the tie-break towards smaller x.
  const double xmax = sol.x_search_max;
  const int points = xmax > 0.0 ? kGridPoints : 1;
  std::vector<double> xs(points);
  std::vector<double> fs(points);
  int best = 0;
  for (int i = 0; i < points; ++i)
  {
    xs[i] = points > 1 ? xmax * static_cast<double>(i) / (points - 1) : 0.0;
    fs[i] = f(xs[i]);
    if (i > 0)
    {
      sol.max_grid_slope =
        std::max(sol.max_grid_slope, std::abs(fs[i] - fs[i - 1]) / (xs[i] - xs[i - 1]));
      if (improves(fs[i], fs[best]))
      {
        best = i;
      }
    }
  }

  double x_star = xs[best];
  double f_star = fs[best];
  if (points > 1)
  {
    const double lo = xs[std::max(best - 1, 0)];
    const double hi = xs[std::min(best + 1, points - 1)];
    const double x_ref = golden_section_maximize(f, lo, hi, 1e-8 * p);
    const double f_ref = f(x_ref);
    if (improves(f_ref, f_star))
    {
      x_star = x_ref;
      f_star = f_ref;
    }
  }

  const GeigenPair gamma = gamma_max(ch, p, x_star);
  sol.x_star = x_star;
  sol.gamma_max = gamma.value;
  sol.phi_max = gamma.vector;
  sol.capacity = 0.5 * std::log2(sol.lambda_max * sol.gamma_max);
  sol.g_mat = build_relay_matrix(sol.phi_max, p, x_star);

  sol.q1 = p * sol.psi_max * sol.psi_max.adjoint();
  sol.q2 = sol.g_mat * sol.g_mat.adjoint();
  sol.q1_trace = sol.q1.trace().real();
  sol.q2_trace = sol.q2.trace().real();
  sol.q2_residual = (sol.q2 - (p - x_star) * sol.phi_max * sol.phi_max.adjoint()).norm();

  try
  {
    sol.source = recover_source_covariance(sol.g_mat, ch.h1(), sol.psi_max, sol.phi_max, p,
                                           x_star);
  }
  catch (const SingularH1 &)
  {
    sol.h1_singular = true;
  }
  return sol;
}

}  // namespace relaysec
