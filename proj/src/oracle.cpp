// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "relaysec/errors.hpp"
#include "relaysec/mimrsome.hpp"
#include "relaysec/rng.hpp"
#include "relaysec/single_antenna.hpp"

namespace relaysec
{

std::string_view to_string(Verdict v)
{
  switch (v)
  {
    case Verdict::confirmed:
      return "confirmed";
    case Verdict::analytic_optimistic:
      return "analytic-optimistic";
    case Verdict::analytic_pessimistic:
      return "analytic-pessimistic";
  }
  return "unknown";
}

Verdict classify_gap(double gap)
{
  if (gap > 1e-6)
  {
    return Verdict::analytic_optimistic;
  }
  if (gap < -1e-6)
  {
    return Verdict::analytic_pessimistic;
  }
  return Verdict::confirmed;
}

OracleReport grid_search_scalar(const ScalarChannel &ch, double p, long long points)
{
  if (points < 2)
  {
    throw InvalidArgument("grid search needs at least 2 points");
  }
  const double u_max = p / (p * ch.h1() * ch.h1() + 1.0);
  OracleReport report;
  report.best_g = 0.0;
  report.best_rate = -INFINITY;
  for (long long i = 0; i < points; ++i)
  {
    const double u = u_max * static_cast<double>(i) / static_cast<double>(points - 1);
    const double g = std::sqrt(u);
    const double r = secrecy_rate_scalar(ch, g, p);
    if (r > report.best_rate)
    {
      report.best_rate = r;
      report.best_g = g;
    }
  }
  report.evaluations = points;
  report.sampled_best_rate = report.best_rate;
  report.best_source_trace = p;
  report.best_relay_power = relay_power_scalar(ch, *report.best_g, p);
  report.analytic_rate = optimal_gain(ch, p).capacity;
  report.gap = report.analytic_rate - report.best_rate;
  report.verdict = classify_gap(report.gap);
  return report;
}

namespace
{

// Search point: source covariance, relay gain direction, relay power fraction.
struct SearchState
{
  CMatrix q;
  CMatrix g_dir;
  double rho = 1.0;
};

class MimoSearch
{
public:
  MimoSearch(const MimoChannel &ch, double p) : ch_(ch), p_(p) {}

  CMatrix relay_gain(const SearchState &s) const
  {
    const double power = raw_relay_power(s.q, s.g_dir);
    if (!(power > 0.0))
    {
      return CMatrix::Zero(ch_.n(), ch_.n());
    }
    return s.g_dir * std::sqrt(s.rho * p_ / power);
  }

  double evaluate(const SearchState &s)
  {
    ++evaluations_;
    return secrecy_rate_mimo(ch_, DesignCandidate(HermitianMatrix(s.q), relay_gain(s)));
  }

  long long evaluations() const { return evaluations_; }

private:
  double raw_relay_power(const CMatrix &q, const CMatrix &g) const
  {
    const CMatrix s = ch_.h1() * q * ch_.h1().adjoint() + CMatrix::Identity(ch_.n(), ch_.n());
    return (g * s * g.adjoint()).trace().real();
  }

  const MimoChannel &ch_;
  double p_;
  long long evaluations_ = 0;
};

// Trace-P rank-one targets for convex mixing of Q.
std::vector<CMatrix> mixing_targets(int n, double p)
{
  std::vector<CVector> dirs;
  for (int i = 0; i < n; ++i)
  {
    dirs.push_back(CVector::Unit(n, i));
  }
  const Complex j(0.0, 1.0);
  for (int a = 0; a < n; ++a)
  {
    for (int b = a + 1; b < n; ++b)
    {
      dirs.push_back((CVector::Unit(n, a) + CVector::Unit(n, b)) * (1.0 / std::numbers::sqrt2));
      dirs.push_back((CVector::Unit(n, a) + j * CVector::Unit(n, b)) * (1.0 / std::numbers::sqrt2));
    }
  }
  std::vector<CMatrix> out;
  for (const auto &d : dirs)
  {
    out.push_back(p * d * d.adjoint());
  }
  return out;
}

}  // namespace

OracleReport random_search_mimo(const MimoChannel &ch, double p, long long iters,
                                std::uint64_t seed)
{
  const int n = ch.n();
  if (n > kMaxOracleDim)
  {
    throw DimensionTooLarge("random search is limited to n <= " +
                            std::to_string(kMaxOracleDim) + ", got " + std::to_string(n));
  }
  if (!ch.hr_vec())
  {
    throw InvalidArgument("random search verifies the single-antenna-receiver solver only");
  }
  if (iters < 0)
  {
    throw InvalidArgument("iteration count must be >= 0");
  }

  MimoSearch search(ch, p);
  SearchState best{CMatrix::Identity(n, n) * (p / n), CMatrix::Zero(n, n), 1.0};
  double best_rate = search.evaluate(best);

  Rng rng(seed);
  for (long long k = 0; k < iters; ++k)
  {
    const CMatrix a = rng.complex_normal_matrix(n, n);
    CMatrix w = a * a.adjoint();
    w *= p / w.trace().real();
    SearchState s{std::move(w), rng.complex_normal_matrix(n, n), rng.uniform_open_low()};
    const double r = search.evaluate(s);
    if (r > best_rate)
    {
      best_rate = r;
      best = std::move(s);
    }
  }
  const double sampled_best = best_rate;

  // Compass search around the best sample.
  const std::vector<CMatrix> targets = mixing_targets(n, p);
  double step = 0.25;
  auto try_move = [&](SearchState s)
  {
    const double r = search.evaluate(s);
    if (r > best_rate)
    {
      best_rate = r;
      best = std::move(s);
      return true;
    }
    return false;
  };
  for (int round = 0; round < kRefineRounds; ++round)
  {
    bool improved = false;
    for (const double sign : {1.0, -1.0})
    {
      SearchState s = best;
      s.rho = std::clamp(best.rho + sign * step, 0.0, 1.0);
      improved |= try_move(std::move(s));
    }
    for (int i = 0; i < n; ++i)
    {
      for (int jj = 0; jj < n; ++jj)
      {
        for (const double sign : {1.0, -1.0})
        {
          SearchState s = best;
          s.g_dir(i, jj) *= 1.0 + sign * step;
          improved |= try_move(std::move(s));

          SearchState t = best;
          t.g_dir(i, jj) *= std::polar(1.0, sign * step * std::numbers::pi);
          improved |= try_move(std::move(t));
        }
      }
    }
    for (const auto &target : targets)
    {
      SearchState s = best;
      s.q = (1.0 - step) * best.q + step * target;
      improved |= try_move(std::move(s));
    }
    if (!improved)
    {
      step *= 0.5;
    }
  }

  OracleReport report;
  report.best_rate = best_rate;
  report.sampled_best_rate = sampled_best;
  report.evaluations = search.evaluations();
  report.best_candidate.emplace(HermitianMatrix(best.q), search.relay_gain(best));
  report.best_source_trace = best.q.trace().real();
  report.best_relay_power = relay_power(ch, *report.best_candidate);

  const MimrsomeSolution analytic = optimize_split(ch, p);
  report.analytic_rate = 2.0 * analytic.capacity;
  report.gap = report.analytic_rate - report.best_rate;
  report.verdict = classify_gap(report.gap);
  return report;
}

}  // namespace relaysec
