// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_MIMRSOME_HPP
#define RELAYSEC_MIMRSOME_HPP

#include <functional>
#include <optional>

#include "relaysec/channel.hpp"
#include "relaysec/geigen.hpp"

namespace relaysec
{

struct MisomeResult
{
  double capacity = 0.0;  // 1/2 log2 lambda_max
  HermitianMatrix q;      // P psi psi^H
  GeigenPair pair;
};

// Pencil (I + P hr hr^H, I + P He^H He).
Pencil misome_pencil(const CVector &hr_vec, const CMatrix &he, double p);

MisomeResult misome_capacity(const CVector &hr_vec, const CMatrix &he, double p);

// 1/2 log2 [(1 + hr^H Q hr) / |I + He Q He^H|].
double misome_rate(const CVector &hr_vec, const CMatrix &he, const HermitianMatrix &q);

// Pencil (I + (P - x) He^H He, I + (P - x) hr hr^H) and its dominant pair.
// Requires a single-antenna receiver and 0 <= x <= P.
Pencil gamma_pencil(const MimoChannel &ch, double p, double x);
GeigenPair gamma_max(const MimoChannel &ch, double p, double x);

struct SplitBound
{
  // P^2 c / (1 + P c), c = ||H1^H psi||^2; follows from x <= (P - x) P c.
  double derived = 0.0;
  // P^2 / (1 + P c), the form as commonly printed. Diagnostics only.
  double printed = 0.0;
};

SplitBound x_upper_bound(const CMatrix &h1, const CVector &psi_max, double p);

// G = sqrt(P - x) [phi | 0 ... 0].
CMatrix build_relay_matrix(const CVector &phi_max, double p, double x);

struct RecoveryReport
{
  // ||G (H1 Q H1^H + I) G^H - P psi psi^H||_F
  double residual = 0.0;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  bool feasible = false;
};

struct RecoveredCovariance
{
  HermitianMatrix q;
  RecoveryReport report;
};

//
// Q = (G H1)^+ [P psi psi^H - (P - x) phi phi^H] ((G H1)^+)^H.
//
// G H1 has rank one whenever G has the single-column structure above, so the
// Moore-Penrose pseudo-inverse stands in for the inverse. The report states
// whether the result actually reproduces the intended Q1 and respects the
// source constraints; an infeasible report is a result, not an error.
// Throws SingularH1 when the smallest singular value of H1 is <= 1e-10.
//
RecoveredCovariance recover_source_covariance(const CMatrix &g_mat, const CMatrix &h1,
                                              const CVector &psi_max, const CVector &phi_max,
                                              double p, double x);

struct MimrsomeSolution
{
  double x_star = 0.0;
  double lambda_max = 0.0;
  double gamma_max = 0.0;
  CVector psi_max;
  CVector phi_max;
  CMatrix g_mat;
  double capacity = 0.0;  // 1/2 log2 (lambda_max gamma_max)

  SplitBound x_bound;
  double x_search_max = 0.0;

  // Constructed Q1 = P psi psi^H and Q2 = G G^H.
  CMatrix q1;
  CMatrix q2;
  double q1_trace = 0.0;
  double q2_trace = 0.0;
  double q2_residual = 0.0;  // ||G G^H - (P - x) phi phi^H||_F

  // Empty when H1 is singular; see recover_source_covariance.
  std::optional<RecoveredCovariance> source;
  bool h1_singular = false;

  // Largest |f(x_i) - f(x_{i-1})| / dx over the search grid.
  double max_grid_slope = 0.0;
  int evaluations = 0;
};

// f(x) = 1/2 log2 (lambda_max gamma_max(x)), lambda_max fixed by (hr, He, P).
double split_objective(const MimoChannel &ch, double p, double lambda_max, double x);

//
// Maximizes f over x in [0, min(derived bound, P)]: a 1000-point grid over
// the interval, then golden-section refinement inside the bracketing grid
// cell until the bracket is below 1e-8 P. Ties resolve to the smallest x.
//
MimrsomeSolution optimize_split(const MimoChannel &ch, double p);

// Golden-section maximization on [lo, hi] to a bracket width of tol. Returns
// the abscissa of the best point evaluated.
double golden_section_maximize(const std::function<double(double)> &f, double lo, double hi,
                               double tol);

}  // namespace relaysec

#endif  // RELAYSEC_MIMRSOME_HPP
