// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>

#include "relaysec/errors.hpp"
#include "relaysec/oracle.hpp"
#include "relaysec/single_antenna.hpp"

using namespace relaysec;
using Catch::Matchers::WithinAbs;

TEST_CASE("verdict thresholds")
{
  CHECK(classify_gap(0.0) == Verdict::confirmed);
  CHECK(classify_gap(1e-6) == Verdict::confirmed);
  CHECK(classify_gap(2e-6) == Verdict::analytic_optimistic);
  CHECK(classify_gap(-2e-6) == Verdict::analytic_pessimistic);
}

TEST_CASE("grid_search_scalar")
{
  SECTION("equal links")
  {
    const OracleReport r = grid_search_scalar(ScalarChannel(0.7, 1.2, 1.2), 3.0, 1000);
    CHECK(r.best_rate == 0.0);
    CHECK(r.verdict == Verdict::confirmed);
    CHECK(r.gap == r.analytic_rate - r.best_rate);
  }
  SECTION("fine grid agrees with the closed form")
  {
    const auto ch = std::get<ScalarChannel>(random_channel(1, 17, ChannelKind::scalar));
    const OracleReport r = grid_search_scalar(ch, 10.0, 1000000);
    CHECK(std::abs(r.gap) < 1e-7);
    CHECK(r.evaluations == 1000000);
  }
  SECTION("two points evaluate the endpoints only")
  {
    const ScalarChannel ch(1.0, 2.0, 0.5);
    const double p = 4.0;
    const OracleReport r = grid_search_scalar(ch, p, 2);
    const double g_max = std::sqrt(p / (p + 1.0));
    CHECK(r.evaluations == 2);
    CHECK_THAT(r.best_rate, WithinAbs(secrecy_rate_scalar(ch, g_max, p), 1e-15));
    CHECK_THAT(*r.best_g, WithinAbs(g_max, 1e-15));
  }
  CHECK_THROWS_AS(grid_search_scalar(ScalarChannel(1, 1, 1), 1.0, 1), InvalidArgument);
}

TEST_CASE("random_search_mimo baseline and limits")
{
  const auto ch = std::get<MimoChannel>(random_channel(2, 3, ChannelKind::mimrsome));
  const OracleReport r = random_search_mimo(ch, 1.0, 0, 1);
  CHECK(r.best_rate == 0.0);
  CHECK(r.sampled_best_rate == 0.0);

  const auto big = std::get<MimoChannel>(random_channel(5, 3, ChannelKind::mimrsome));
  CHECK_THROWS_AS(random_search_mimo(big, 1.0, 10, 1), DimensionTooLarge);
  const auto full = std::get<MimoChannel>(random_channel(2, 3, ChannelKind::full));
  CHECK_THROWS_AS(random_search_mimo(full, 1.0, 10, 1), InvalidArgument);
}

TEST_CASE("random search agrees with the grid at n = 1")
{
  for (std::uint64_t seed = 0; seed < 12; ++seed)
  {
    const auto sc = std::get<ScalarChannel>(random_channel(1, seed, ChannelKind::scalar));
    for (const double p : {0.5, 20.0})
    {
      const OracleReport grid = grid_search_scalar(sc, p, 1000000);
      const OracleReport rnd = random_search_mimo(MimoChannel::from_scalar(sc), p, 500, seed);
      CHECK_THAT(rnd.best_rate, WithinAbs(grid.best_rate, 1e-6));
    }
  }
}

TEST_CASE("random search candidates are feasible and deterministic")
{
  for (std::uint64_t seed = 0; seed < 6; ++seed)
  {
    const int n = 2 + seed % 3;
    const auto ch = std::get<MimoChannel>(random_channel(n, 700 + seed, ChannelKind::mimrsome));
    const double p = 2.0;
    const OracleReport a = random_search_mimo(ch, p, 300, seed);
    const OracleReport b = random_search_mimo(ch, p, 300, seed);
    CHECK(a.best_rate == b.best_rate);
    CHECK(a.evaluations == b.evaluations);
    REQUIRE(a.best_candidate);
    CHECK(a.best_candidate->g() == b.best_candidate->g());
    CHECK(a.best_source_trace <= p + 1e-9);
    CHECK(a.best_relay_power <= p + 1e-9);
    CHECK(a.best_rate >= a.sampled_best_rate);
    CHECK(a.gap == a.analytic_rate - a.best_rate);
  }
}

TEST_CASE("sampled best is non-decreasing in the iteration count")
{
  const auto ch = std::get<MimoChannel>(random_channel(2, 12, ChannelKind::mimrsome));
  double prev = -INFINITY;
  for (const long long iters : {0LL, 1LL, 10LL, 50LL, 200LL, 1000LL})
  {
    const double s = random_search_mimo(ch, 3.0, iters, 99).sampled_best_rate;
    CHECK(s >= prev);
    prev = s;
  }
}
