// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relaysec/cli.hpp"
#include "relaysec/single_antenna.hpp"
#include "test_support.hpp"

using namespace relaysec;
using Catch::Matchers::WithinAbs;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "relaysec");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text)
{
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
  {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ','))
    {
      cells.push_back(cell);
    }
    rows.push_back(cells);
  }
  return rows;
}

std::string tmp(const std::string &name) { return std::string(RELAYSEC_TEST_TMPDIR) + "/" + name; }

std::string write_scenario(const std::string &name, const Scenario &s)
{
  const std::string path = tmp(name);
  save_scenario(s, path);
  return path;
}

}  // namespace

TEST_CASE("single with a fixed power emits one row")
{
  const std::string path =
    write_scenario("single_fixed.json", {ScalarChannel(1.0, 2.0, 0.5), PowerBudget(1.0)});
  const Run r = run({"single", "--scenario", path});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(r.out.substr(0, r.out.find('\n')) == cli::kSingleHeader);
  CHECK(rows[1][0] == "1");
  CHECK(rows[1][2] == "power-limited");
  CHECK_THAT(std::stod(rows[1][1]), WithinAbs(0.5, 1e-12));
}

TEST_CASE("single log sweep is sorted and non-decreasing")
{
  const Run r = run({"single", "--random", "1", "--seed", "3", "--sweep", "0.1", "100", "50",
                     "--log"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 51);
  CHECK_THAT(std::stod(rows[1][0]), WithinAbs(0.1, 1e-12));
  CHECK_THAT(std::stod(rows[50][0]), WithinAbs(100.0, 1e-9));
  for (std::size_t i = 2; i < rows.size(); ++i)
  {
    CHECK(std::stod(rows[i][0]) > std::stod(rows[i - 1][0]));
    CHECK(std::stod(rows[i][3]) >= std::stod(rows[i - 1][3]));
  }
}

TEST_CASE("single on equal links reports zero capacity")
{
  const std::string path =
    write_scenario("single_equal.json", {ScalarChannel(0.8, 1.3, 1.3), PowerBudget(1.0)});
  const Run r = run({"single", "--scenario", path, "--sweep", "0.1", "10", "5"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i)
  {
    CHECK(rows[i][3] == "0");
    CHECK(rows[i][2] == "degenerate");
  }
}

TEST_CASE("mimrsome without an eavesdropper reports 1/2 log2 lambda_max")
{
  const auto base = std::get<MimoChannel>(random_channel(2, 5, ChannelKind::mimrsome));
  const MimoChannel ch = MimoChannel::mimrsome(base.h1(), *base.hr_vec(), CMatrix::Zero(2, 2));
  const std::string path = write_scenario("mimrsome_noeve.json", {ch, PowerBudget(2.0)});
  const std::string out = tmp("mimrsome_noeve.csv");
  const Run r = run({"mimrsome", "--scenario", path, "--out", out});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(testing::read_file(out));
  REQUIRE(rows.size() == 2);
  const double lambda = std::stod(rows[1][2]);
  CHECK_THAT(std::stod(rows[1][4]), WithinAbs(0.5 * std::log2(lambda), 1e-10));
  CHECK_THAT(std::stod(rows[1][3]), WithinAbs(1.0, 1e-10));

  const auto diag = nlohmann::json::parse(testing::read_file(out + ".diagnostics.json"));
  CHECK(diag["command"] == "mimrsome");
  CHECK(diag["rows"].size() == 1);
  CHECK(diag["rows"][0].contains("recovery"));
}

TEST_CASE("mimrsome at n = 1 matches single under the half-rate flag")
{
  const ScalarChannel sc(0.9, 1.7, 0.6);
  const double p = 0.5 * threshold_power(sc);
  const std::string single_path =
    write_scenario("cross_single.json", {sc, PowerBudget(p)});
  const std::string mimo_path =
    write_scenario("cross_mimo.json", {MimoChannel::from_scalar(sc), PowerBudget(p)});
  const auto single = parse_csv(run({"single", "--scenario", single_path, "--half-rate"}).out);
  const auto mimo = parse_csv(run({"mimrsome", "--scenario", mimo_path}).out);
  REQUIRE(single.size() == 2);
  REQUIRE(mimo.size() == 2);
  CHECK_THAT(std::stod(mimo[1][4]), WithinAbs(std::stod(single[1][3]), 1e-8));
}

TEST_CASE("commands are byte-deterministic")
{
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"mimrsome", "--random", "2", "--seed", "8", "--sweep", "0.5", "5",
                                 "4"},
        std::vector<std::string>{"single", "--random", "1", "--seed", "8", "--power", "3"},
        std::vector<std::string>{"verify", "--random", "2", "--seed", "8", "--power", "2",
                                 "--oracle-iters", "200"}})
  {
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify dispatches on the scenario kind")
{
  const Run scalar = run({"verify", "--random", "1", "--seed", "4", "--power", "2",
                          "--oracle-iters", "10000"});
  REQUIRE(scalar.code == 0);
  const auto js = nlohmann::json::parse(scalar.out);
  CHECK(js["kind"] == "scalar");
  CHECK(js["best_candidate"].contains("g"));
  CHECK(js["verdict"] == "confirmed");

  const Run mimo = run({"verify", "--random", "2", "--seed", "4", "--power", "2",
                        "--oracle-iters", "100"});
  REQUIRE(mimo.code == 0);
  const auto jm = nlohmann::json::parse(mimo.out);
  CHECK(jm["kind"] == "mimrsome");
  CHECK(jm["best_candidate"].contains("q"));
  CHECK(jm["best_relay_power"].get<double>() <= 2.0 + 1e-9);

  const Run half = run({"verify", "--random", "2", "--seed", "4", "--power", "2",
                        "--oracle-iters", "100", "--half-rate"});
  const auto jh = nlohmann::json::parse(half.out);
  CHECK_THAT(jh["best_rate"].get<double>(), WithinAbs(0.5 * jm["best_rate"].get<double>(), 1e-15));
}

TEST_CASE("sweep_powers")
{
  const auto lin = cli::sweep_powers(1.0, 3.0, 3, false);
  CHECK(lin == std::vector<double>{1.0, 2.0, 3.0});
  const auto single = cli::sweep_powers(2.0, 5.0, 1, true);
  CHECK(single == std::vector<double>{2.0});
  CHECK_THROWS(cli::sweep_powers(0.0, 1.0, 3, true));
}

TEST_CASE("exit codes")
{
  CHECK(run({}).code == cli::kExitInput);
  CHECK(run({"single"}).code == cli::kExitInput);
  CHECK(run({"single", "--random", "1"}).code == cli::kExitInput);
  CHECK(run({"single", "--scenario", tmp("does_not_exist.json")}).code == cli::kExitInput);
  CHECK(run({"mimrsome", "--random", "2", "--power", "-1"}).code == cli::kExitInput);
  CHECK(run({"single", "--random", "2", "--power", "1"}).code == cli::kExitInput);
  CHECK(run({"verify", "--random", "5", "--power", "1"}).code == cli::kExitInput);

  const std::string bad = tmp("malformed.json");
  {
    std::ofstream f(bad);
    f << "{\"P\": 1, \"kind\": \"mimrsome\", \"n\": 2, \"h1\": [";
  }
  const Run malformed = run({"mimrsome", "--scenario", bad});
  CHECK(malformed.code == cli::kExitInput);
  CHECK(malformed.err.find("line") != std::string::npos);

  // Overflowing channel gains surface as a numerical failure.
  const CMatrix huge = CMatrix::Constant(2, 2, 1e200);
  const std::string overflow = write_scenario(
    "overflow.json", {MimoChannel::mimrsome(huge, CVector::Constant(2, 1e200), huge),
                      PowerBudget(1e200)});
  CHECK(run({"mimrsome", "--scenario", overflow}).code == cli::kExitNumerical);

  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("the installed binary honours exit codes")
{
  const std::string bin = RELAYSEC_CLI_PATH;
  CHECK(testing::run_command(bin + " single --random 1 --power 2 > /dev/null") == 0);
  CHECK(testing::run_command(bin + " single > /dev/null 2>&1") == 2);
}

TEST_CASE("generate writes a loadable scenario")
{
  const std::string out = tmp("generated.json");
  REQUIRE(run({"generate", "--random", "3", "--seed", "12", "--power", "4", "--out", out}).code ==
          0);
  const Scenario s = load_scenario(out);
  CHECK(kind_of(s.channel) == ChannelKind::mimrsome);
  CHECK(s.power.p == 4.0);
  CHECK(std::get<MimoChannel>(s.channel) ==
        std::get<MimoChannel>(random_channel(3, 12, ChannelKind::mimrsome)));
}
