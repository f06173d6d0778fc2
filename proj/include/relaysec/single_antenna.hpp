// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_SINGLE_ANTENNA_HPP
#define RELAYSEC_SINGLE_ANTENNA_HPP

#include <string_view>

#include "relaysec/channel.hpp"

namespace relaysec
{

enum class Regime
{
  power_limited,
  saturated
};

std::string_view to_string(Regime r);

//
// Optimal AF gain for the single-antenna relay.
//
// g_sq is the closed-form stationary gain: P / (P h1^2 + 1) when the relay
// budget binds (P <= threshold), 1 / (hr he sqrt(P h1^2 + 1)) otherwise.
// The operating point is the gain actually recommended: it equals g_sq when
// that yields a positive rate and falls back to g = 0 (rate 0) when the
// eavesdropper link is at least as strong (clamped), or when hr == he
// (degenerate, capacity identically zero).
//
struct ScalarSolution
{
  double g_sq = 0.0;
  Regime regime = Regime::power_limited;
  double threshold = 0.0;
  double stationary_rate = 0.0;

  double operating_g_sq = 0.0;
  double capacity = 0.0;
  double relay_power_used = 0.0;

  bool degenerate = false;
  bool clamped = false;
};

// Budget above which the relay stops using its full power:
// (h1^2 + sqrt(h1^4 + 4 hr^2 he^2)) / (2 hr^2 he^2).
double threshold_power(const ScalarChannel &ch);

ScalarSolution optimal_gain(const ScalarChannel &ch, double p);

// Derivative of the unconstrained objective with the multiplier set to zero:
//   P h1^2 (1 - g^4 hr^2 he^2 (P h1^2 + 1)) / M,
// M = (g^2 hr^2 S + 1)(g^2 he^2 S + 1)(g^2 hr^2 + 1)(g^2 he^2 + 1).
double stationarity_residual(const ScalarChannel &ch, double p, double g);

}  // namespace relaysec

#endif  // RELAYSEC_SINGLE_ANTENNA_HPP
