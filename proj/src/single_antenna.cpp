// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/single_antenna.hpp"

#include <cmath>
#include <string>

#include "relaysec/errors.hpp"
#include "relaysec/rate.hpp"

namespace relaysec
{

std::string_view to_string(Regime r)
{
  return r == Regime::saturated ? "saturated" : "power-limited";
}

double threshold_power(const ScalarChannel &ch)
{
  const double h1_sq = ch.h1() * ch.h1();
  const double re_sq = ch.hr() * ch.hr() * ch.he() * ch.he();
  return (h1_sq + std::sqrt(h1_sq * h1_sq + 4.0 * re_sq)) / (2.0 * re_sq);
}

ScalarSolution optimal_gain(const ScalarChannel &ch, double p)
{
  if (!(p > 0.0) || !std::isfinite(p))
  {
    throw InvalidArgument("power budget P must be finite and > 0, got " + std::to_string(p));
  }
  ScalarSolution sol;
  sol.threshold = threshold_power(ch);
  const double s = p * ch.h1() * ch.h1() + 1.0;

  if (p > sol.threshold)
  {
    sol.regime = Regime::saturated;
    sol.g_sq = 1.0 / (ch.hr() * ch.he() * std::sqrt(s));
  }
  else
  {
    sol.regime = Regime::power_limited;
    sol.g_sq = p / s;
  }
  sol.stationary_rate = secrecy_rate_scalar(ch, std::sqrt(sol.g_sq), p);

  if (std::abs(ch.hr() - ch.he()) < 1e-12)
  {
    // Rate is identically zero; no gain is preferable to another.
    sol.degenerate = true;
    sol.stationary_rate = 0.0;
    return sol;
  }

  if (sol.stationary_rate > 0.0)
  {
    sol.operating_g_sq = sol.g_sq;
    sol.capacity = sol.stationary_rate;
    sol.relay_power_used = sol.g_sq * s;
  }
  else
  {
    sol.clamped = true;
  }
  return sol;
}

double stationarity_residual(const ScalarChannel &ch, double p, double g)
{
  const double h1_sq = ch.h1() * ch.h1();
  const double s = p * h1_sq + 1.0;
  const double g2 = g * g;
  const double r2 = ch.hr() * ch.hr();
  const double e2 = ch.he() * ch.he();
  const double m = (g2 * r2 * s + 1.0) * (g2 * e2 * s + 1.0) * (g2 * r2 + 1.0) * (g2 * e2 + 1.0);
  return p * h1_sq * (1.0 - g2 * g2 * r2 * e2 * s) / m;
}

}  // namespace relaysec
