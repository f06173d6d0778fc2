// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_ORACLE_HPP
#define RELAYSEC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "relaysec/channel.hpp"
#include "relaysec/rate.hpp"

namespace relaysec
{

enum class Verdict
{
  confirmed,
  analytic_optimistic,
  analytic_pessimistic
};

std::string_view to_string(Verdict v);

// gap > 1e-6 -> optimistic, gap < -1e-6 -> pessimistic.
Verdict classify_gap(double gap);

//
// Outcome of a brute-force search. Rates are two-hop rates (no 1/2 factor),
// i.e. the same convention as secrecy_rate_*. For MIMRSOME channels the
// analytic rate is log2(lambda_max gamma_max), twice the closed-form
// capacity, so both sides of the gap use one convention.
//
struct OracleReport
{
  double best_rate = 0.0;
  // Scalar searches record g; MIMO searches record the full candidate.
  std::optional<double> best_g;
  std::optional<DesignCandidate> best_candidate;
  long long evaluations = 0;
  double analytic_rate = 0.0;
  double gap = 0.0;
  Verdict verdict = Verdict::confirmed;

  // Best over the random samples alone, before local refinement. This is
  // the quantity with the prefix property across iteration counts.
  double sampled_best_rate = 0.0;
  double best_source_trace = 0.0;
  double best_relay_power = 0.0;
};

// Uniform grid over g^2 in [0, P / (P h1^2 + 1)]; points >= 2.
OracleReport grid_search_scalar(const ScalarChannel &ch, double p, long long points);

//
// Random feasible (Q, G) pairs followed by 100 rounds of compass-search
// refinement. Each sample draws Q = P W / Tr W with W = A A^H, a random
// relay direction, and a relay power fraction rho in (0, 1]; G is the
// direction scaled so Tr[G (H1 Q H1^H + I) G^H] = rho P. Refinement
// perturbs rho additively, G entries multiplicatively (modulus and phase),
// and Q by convex mixing towards fixed trace-P rank-one directions; the step
// halves after a round without improvement. n <= 4.
//
OracleReport random_search_mimo(const MimoChannel &ch, double p, long long iters,
                                std::uint64_t seed);

inline constexpr int kMaxOracleDim = 4;
inline constexpr int kRefineRounds = 100;

}  // namespace relaysec

#endif  // RELAYSEC_ORACLE_HPP
