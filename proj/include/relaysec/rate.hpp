// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_RATE_HPP
#define RELAYSEC_RATE_HPP

#include "relaysec/channel.hpp"
#include "relaysec/geigen.hpp"

namespace relaysec
{

// Whether reported capacities carry the 1/2 pre-factor. The two-hop objective
// is evaluated without it; the MISOME-derived closed forms carry it.
enum class RateConvention
{
  full,
  half
};

inline double apply_convention(double two_hop_rate, RateConvention c)
{
  return c == RateConvention::half ? 0.5 * two_hop_rate : two_hop_rate;
}

// Source covariance Q and relay gain G. Q must be PSD (min eigenvalue
// >= -1e-10); G must be square with Q's dimension.
class DesignCandidate
{
public:
  DesignCandidate(HermitianMatrix q, CMatrix g);

  const HermitianMatrix &q() const { return q_; }
  const CMatrix &g() const { return g_; }
  int n() const { return q_.dim(); }

private:
  HermitianMatrix q_;
  CMatrix g_;
};

// Two-hop AF secrecy rate in bits per channel use:
//   [log|Hr G S G^H Hr^H + I| - log|Hr G G^H Hr^H + I|]
//   - [same with He],  S = H1 Q H1^H + I.
// Hr is hr_vec^H for single-antenna receivers. May be negative.
double secrecy_rate_mimo(const MimoChannel &ch, const DesignCandidate &cand);

// Scalar specialization with Q = P and relay gain g.
double secrecy_rate_scalar(const ScalarChannel &ch, double g, double p);

// Tr[G (H1 Q H1^H + I) G^H].
double relay_power(const MimoChannel &ch, const DesignCandidate &cand);

// g^2 (P h1^2 + 1).
double relay_power_scalar(const ScalarChannel &ch, double g, double p);

}  // namespace relaysec

#endif  // RELAYSEC_RATE_HPP
