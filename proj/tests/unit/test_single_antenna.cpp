// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "relaysec/errors.hpp"
#include "relaysec/oracle.hpp"
#include "relaysec/rate.hpp"
#include "relaysec/single_antenna.hpp"

using namespace relaysec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

// Draws with hr > he, so the secrecy rate is positive.
std::vector<ScalarChannel> favourable_channels(int count, std::uint64_t seed0)
{
  std::vector<ScalarChannel> out;
  for (std::uint64_t s = seed0; static_cast<int>(out.size()) < count; ++s)
  {
    const auto ch = std::get<ScalarChannel>(random_channel(1, s, ChannelKind::scalar));
    if (ch.hr() > ch.he() * (1.0 + 1e-6))
    {
      out.push_back(ch);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("threshold_power closed form")
{
  // (1 + sqrt(5)) / 2
  CHECK_THAT(threshold_power(ScalarChannel(1.0, 1.0, 1.0)), WithinAbs(1.6180339887498949, 1e-15));

  double prev = threshold_power(ScalarChannel(1.0, 1.0, 1.0));
  for (const double k : {10.0, 100.0, 1e4})
  {
    const double t = threshold_power(ScalarChannel(1.0, k, k));
    CHECK(t < prev);
    prev = t;
  }
  CHECK(prev < 1e-7);
}

TEST_CASE("threshold is the positive root of P^2 hr^2 he^2 - P h1^2 - 1")
{
  for (std::uint64_t s = 0; s < 50; ++s)
  {
    const auto ch = std::get<ScalarChannel>(random_channel(1, s, ChannelKind::scalar));
    const double t = threshold_power(ch);
    const double k = ch.hr() * ch.hr() * ch.he() * ch.he();
    const double residual = t * t * k - t * ch.h1() * ch.h1() - 1.0;
    const double scale = t * t * k + t * ch.h1() * ch.h1() + 1.0;
    CHECK(t > 0.0);
    CHECK(std::abs(residual) <= 1e-12 * scale);
  }
}

TEST_CASE("optimal_gain branches")
{
  const ScalarChannel unit(1.0, 1.0, 1.0);
  const ScalarSolution low = optimal_gain(unit, 1.0);
  CHECK_THAT(low.g_sq, WithinAbs(0.5, 1e-15));
  CHECK(low.regime == Regime::power_limited);

  const ScalarSolution high = optimal_gain(unit, 10.0);
  CHECK_THAT(high.g_sq, WithinAbs(1.0 / std::sqrt(11.0), 1e-15));
  CHECK(high.regime == Regime::saturated);

  // hr == he: the rate is identically zero, operating gain 0.
  CHECK(low.degenerate);
  CHECK(low.capacity == 0.0);
  CHECK(low.operating_g_sq == 0.0);

  CHECK_THROWS_AS(optimal_gain(unit, 0.0), InvalidArgument);
}

TEST_CASE("branches agree at the threshold")
{
  for (const auto &ch : favourable_channels(40, 1000))
  {
    const double t = threshold_power(ch);
    const double s = t * ch.h1() * ch.h1() + 1.0;
    const double limited = t / s;
    const double saturated = 1.0 / (ch.hr() * ch.he() * std::sqrt(s));
    CHECK_THAT(limited, WithinAbs(saturated, 1e-10));

    const ScalarSolution at = optimal_gain(ch, t);
    CHECK(at.regime == Regime::power_limited);
    CHECK_THAT(at.g_sq, WithinAbs(saturated, 1e-10));
  }
}

TEST_CASE("relay constraint and regime invariants")
{
  for (const auto &ch : favourable_channels(40, 2000))
  {
    const double t = threshold_power(ch);
    for (const double f : {0.01, 0.5, 0.999, 1.001, 3.0, 100.0})
    {
      const double p = f * t;
      const ScalarSolution sol = optimal_gain(ch, p);
      CHECK(sol.g_sq * (p * ch.h1() * ch.h1() + 1.0) <= p + 1e-12 * std::max(1.0, p));
      CHECK((sol.regime == Regime::saturated) == (p > t));
      if (p < t)
      {
        CHECK_THAT(sol.relay_power_used, WithinAbs(p, 1e-10 * std::max(1.0, p)));
      }
      else
      {
        CHECK(sol.relay_power_used < p);
      }
      CHECK(sol.capacity > 0.0);
    }
  }
}

TEST_CASE("stationarity residual")
{
  for (const auto &ch : favourable_channels(30, 3000))
  {
    const double p = 5.0 * threshold_power(ch);
    const ScalarSolution sol = optimal_gain(ch, p);
    REQUIRE(sol.regime == Regime::saturated);
    const double g = std::sqrt(sol.g_sq);
    CHECK(std::abs(stationarity_residual(ch, p, g)) <= 1e-10);

    // g -> 0+: M -> 1 so the residual tends to P h1^2.
    CHECK_THAT(stationarity_residual(ch, p, 1e-9),
               WithinRel(p * ch.h1() * ch.h1(), 1e-9));

    // The residual changes sign across g*; bisection on it recovers g*.
    CHECK(stationarity_residual(ch, p, 0.9 * g) > 0.0);
    CHECK(stationarity_residual(ch, p, 1.1 * g) < 0.0);
    double lo = 0.5 * g;
    double hi = 2.0 * g;
    for (int i = 0; i < 200; ++i)
    {
      const double mid = 0.5 * (lo + hi);
      (stationarity_residual(ch, p, mid) > 0.0 ? lo : hi) = mid;
    }
    CHECK_THAT(0.5 * (lo + hi), WithinRel(g, 1e-10));
  }
}

TEST_CASE("closed form beats a grid over the feasible gains")
{
  for (const auto &ch : favourable_channels(10, 4000))
  {
    for (const double p : {0.1, 1.0, 10.0, 100.0})
    {
      const OracleReport r = grid_search_scalar(ch, p, 100000);
      CHECK(r.best_rate <= optimal_gain(ch, p).capacity + 1e-7);
      CHECK(std::abs(r.gap) <= 1e-6);
    }
  }
}

TEST_CASE("capacity saturates with the budget")
{
  for (const auto &ch : favourable_channels(30, 5000))
  {
    const double t = threshold_power(ch);
    const double limit = 2.0 * std::log2(ch.hr() / ch.he());
    double prev = 0.0;
    for (int i = 0; i <= 60; ++i)
    {
      const double p = t * std::pow(10.0, -3.0 + 0.1 * i);
      const ScalarSolution sol = optimal_gain(ch, p);
      CHECK(sol.capacity >= prev - 1e-12);
      CHECK(sol.capacity < limit);
      prev = sol.capacity;
    }
    const double at = optimal_gain(ch, t).capacity;
    const double far = optimal_gain(ch, 100.0 * t).capacity;
    CHECK(far >= at);
    CHECK(far < limit);
  }
}

TEST_CASE("weaker legitimate link falls back to the zero-rate design")
{
  const ScalarChannel ch(1.2, 0.5, 1.5);
  for (const double p : {0.1, 1.0, 100.0})
  {
    const ScalarSolution sol = optimal_gain(ch, p);
    CHECK(sol.clamped);
    CHECK(sol.stationary_rate <= 0.0);
    CHECK(sol.g_sq > 0.0);
    CHECK(sol.operating_g_sq == 0.0);
    CHECK(sol.capacity == 0.0);
    CHECK(sol.relay_power_used == 0.0);
  }
}
