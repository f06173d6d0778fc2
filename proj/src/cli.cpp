// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "relaysec/channel.hpp"
#include "relaysec/errors.hpp"

namespace relaysec::cli
{

namespace
{

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const CVector &v)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
  {
    out.push_back(complex_json(v(i)));
  }
  return out;
}

json matrix_json(const CMatrix &m)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
  {
    out.push_back(vector_json(m.row(i).transpose()));
  }
  return out;
}

struct Options
{
  std::string scenario;
  std::optional<int> random_n;
  unsigned long long seed = 0;
  std::string kind;
  std::optional<double> power;
  std::vector<double> sweep;
  bool log_sweep = false;
  bool half_rate = false;
  std::string out;
  std::string diagnostics;
  std::optional<long long> oracle_iters;
};

void add_common(CLI::App &cmd, Options &o, bool sweep)
{
  auto *scen = cmd.add_option("--scenario", o.scenario, "Scenario JSON file");
  auto *rnd = cmd.add_option("--random", o.random_n, "Random channel with N antennas");
  scen->excludes(rnd);
  cmd.add_option("--seed", o.seed, "Seed for --random and the oracle")->default_val(0);
  auto *pow = cmd.add_option("--power", o.power, "Power budget P (linear units)");
  if (sweep)
  {
    auto *sw = cmd.add_option("--sweep", o.sweep, "Power sweep: MIN MAX STEPS")
                 ->expected(3);
    sw->excludes(pow);
    cmd.add_flag("--log", o.log_sweep, "Log-spaced sweep");
  }
  cmd.add_option("--out", o.out, "Output file (default stdout)");
}

Scenario resolve_scenario(const Options &o, ChannelKind random_kind)
{
  if (!o.scenario.empty())
  {
    Scenario s = load_scenario(o.scenario);
    if (o.power)
    {
      s.power = PowerBudget(*o.power);
    }
    return s;
  }
  if (!o.random_n)
  {
    throw InvalidArgument("one of --scenario or --random is required");
  }
  // A placeholder budget is replaced by --power or --sweep below.
  const double p = o.power ? *o.power : 1.0;
  return {random_channel(*o.random_n, o.seed, random_kind), PowerBudget(p)};
}

std::vector<double> resolve_powers(const Options &o, const Scenario &s)
{
  if (!o.sweep.empty())
  {
    if (o.sweep[2] != std::floor(o.sweep[2]) || o.sweep[2] < 1 || o.sweep[2] > 1e7)
    {
      throw InvalidArgument("--sweep STEPS must be a positive integer");
    }
    return sweep_powers(o.sweep[0], o.sweep[1], static_cast<int>(o.sweep[2]), o.log_sweep);
  }
  if (!o.power && o.scenario.empty())
  {
    throw InvalidArgument("--power or --sweep is required with --random");
  }
  return {s.power.p};
}

void emit(const Options &o, const std::string &text, std::ostream &out)
{
  if (o.out.empty())
  {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f)
  {
    throw InputError("cannot write output file " + o.out);
  }
  f << text;
}

void emit_diagnostics(const Options &o, const json &doc)
{
  std::string path = o.diagnostics;
  if (path.empty() && !o.out.empty())
  {
    path = o.out + ".diagnostics.json";
  }
  if (path.empty())
  {
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
  {
    throw InputError("cannot write diagnostics file " + path);
  }
  f << doc.dump(2) << "\n";
}

int cmd_single(const Options &o, std::ostream &out)
{
  const Scenario s = resolve_scenario(o, ChannelKind::scalar);
  const auto *ch = std::get_if<ScalarChannel>(&s.channel);
  if (!ch)
  {
    throw InvalidArgument("single requires a scalar scenario");
  }
  const RateConvention conv = o.half_rate ? RateConvention::half : RateConvention::full;
  std::string csv = std::string(kSingleHeader) + "\n";
  json diag = json::array();
  for (const double p : resolve_powers(o, s))
  {
    const ScalarSolution sol = optimal_gain(*ch, p);
    csv += single_csv_row(p, sol, conv);
    diag.push_back({{"P", p},
                    {"stationary_g_sq", sol.g_sq},
                    {"stationary_rate", apply_convention(sol.stationary_rate, conv)},
                    {"regime", std::string(to_string(sol.regime))},
                    {"clamped", sol.clamped},
                    {"degenerate", sol.degenerate}});
  }
  emit(o, csv, out);
  emit_diagnostics(o, json{{"command", "single"}, {"rows", diag}});
  return kExitOk;
}

json mimrsome_diagnostics(double p, const MimrsomeSolution &sol)
{
  json rec = nullptr;
  if (sol.source)
  {
    const auto &r = sol.source->report;
    rec = {{"feasible", r.feasible},
           {"residual", r.residual},
           {"min_eigenvalue", r.min_eigenvalue},
           {"trace", r.trace},
           {"q", matrix_json(sol.source->q.entries())}};
  }
  return {{"P", p},
          {"x_star", sol.x_star},
          {"x_search_max", sol.x_search_max},
          {"x_bound_derived", sol.x_bound.derived},
          {"x_bound_printed", sol.x_bound.printed},
          {"lambda_max", sol.lambda_max},
          {"gamma_max", sol.gamma_max},
          {"psi_max", vector_json(sol.psi_max)},
          {"phi_max", vector_json(sol.phi_max)},
          {"g_mat", matrix_json(sol.g_mat)},
          {"q1_trace", sol.q1_trace},
          {"q2_trace", sol.q2_trace},
          {"q2_residual", sol.q2_residual},
          {"max_grid_slope", sol.max_grid_slope},
          {"evaluations", sol.evaluations},
          {"h1_singular", sol.h1_singular},
          {"recovery", rec}};
}

int cmd_mimrsome(const Options &o, std::ostream &out)
{
  const Scenario s = resolve_scenario(o, ChannelKind::mimrsome);
  if (kind_of(s.channel) != ChannelKind::mimrsome)
  {
    throw InvalidArgument("mimrsome requires a mimrsome scenario (receiver vector hr)");
  }
  const auto &ch = std::get<MimoChannel>(s.channel);
  std::string csv = std::string(kMimrsomeHeader) + "\n";
  json diag = json::array();
  for (const double p : resolve_powers(o, s))
  {
    const MimrsomeSolution sol = optimize_split(ch, p);
    csv += mimrsome_csv_row(p, sol);
    diag.push_back(mimrsome_diagnostics(p, sol));
  }
  emit(o, csv, out);
  emit_diagnostics(o, json{{"command", "mimrsome"}, {"rows", diag}});
  return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out)
{
  ChannelKind kind = ChannelKind::mimrsome;
  if (!o.kind.empty())
  {
    kind = parse_channel_kind(o.kind);
  }
  else if (o.random_n && *o.random_n == 1)
  {
    kind = ChannelKind::scalar;
  }
  const Scenario s = resolve_scenario(o, kind);
  if (o.scenario.empty() && !o.power)
  {
    throw InvalidArgument("--power is required with --random");
  }
  const RateConvention conv = o.half_rate ? RateConvention::half : RateConvention::full;
  const double p = s.power.p;

  OracleReport report;
  long long iters = 0;
  if (const auto *sc = std::get_if<ScalarChannel>(&s.channel))
  {
    iters = o.oracle_iters.value_or(1'000'000);
    report = grid_search_scalar(*sc, p, iters);
  }
  else
  {
    const auto &mc = std::get<MimoChannel>(s.channel);
    if (mc.kind() != ChannelKind::mimrsome)
    {
      throw InvalidArgument("verify supports scalar and mimrsome scenarios only");
    }
    iters = o.oracle_iters.value_or(2000);
    report = random_search_mimo(mc, p, iters, o.seed);
  }
  emit(o, oracle_report_json(s, report, conv, iters, o.seed), out);
  return kExitOk;
}

int cmd_generate(const Options &o, std::ostream &out)
{
  if (!o.random_n || !o.power)
  {
    throw InvalidArgument("generate requires --random N and --power P");
  }
  ChannelKind kind = *o.random_n == 1 ? ChannelKind::scalar : ChannelKind::mimrsome;
  if (!o.kind.empty())
  {
    kind = parse_channel_kind(o.kind);
  }
  const Scenario s{random_channel(*o.random_n, o.seed, kind), PowerBudget(*o.power)};
  emit(o, scenario_to_json(s), out);
  return kExitOk;
}

}  // namespace

std::string format_number(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string single_csv_row(double p, const ScalarSolution &sol, RateConvention conv)
{
  std::string regime(to_string(sol.regime));
  if (sol.degenerate)
  {
    regime = "degenerate";
  }
  else if (sol.clamped)
  {
    regime = "clamped";
  }
  return format_number(p) + "," + format_number(sol.operating_g_sq) + "," + regime + "," +
         format_number(apply_convention(sol.capacity, conv)) + "," +
         format_number(sol.relay_power_used) + "," + format_number(sol.threshold) + "\n";
}

std::string mimrsome_csv_row(double p, const MimrsomeSolution &sol)
{
  const bool feasible = sol.source && sol.source->report.feasible;
  return format_number(p) + "," + format_number(sol.x_star) + "," +
         format_number(sol.lambda_max) + "," + format_number(sol.gamma_max) + "," +
         format_number(sol.capacity) + "," + format_number(sol.x_bound.derived) + "," +
         format_number(sol.x_bound.printed) + "," + (feasible ? "yes" : "no") + "\n";
}

std::vector<double> sweep_powers(double lo, double hi, int steps, bool log_spaced)
{
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
  {
    throw InvalidArgument("--sweep needs 0 < MIN <= MAX");
  }
  if (steps < 1)
  {
    throw InvalidArgument("--sweep STEPS must be >= 1");
  }
  std::vector<double> ps(steps);
  for (int i = 0; i < steps; ++i)
  {
    const double t = steps > 1 ? static_cast<double>(i) / (steps - 1) : 0.0;
    ps[i] = log_spaced ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                       : lo + t * (hi - lo);
  }
  ps.back() = steps > 1 ? hi : lo;
  return ps;
}

std::string oracle_report_json(const Scenario &s, const OracleReport &r, RateConvention conv,
                               long long iters, unsigned long long seed)
{
  const double analytic = apply_convention(r.analytic_rate, conv);
  const double best = apply_convention(r.best_rate, conv);
  const double gap = analytic - best;
  json cand;
  if (r.best_g)
  {
    cand = {{"g", *r.best_g}};
  }
  else if (r.best_candidate)
  {
    cand = {{"q", matrix_json(r.best_candidate->q().entries())},
            {"g", matrix_json(r.best_candidate->g())}};
  }
  const int n = std::holds_alternative<ScalarChannel>(s.channel)
                  ? 1
                  : std::get<MimoChannel>(s.channel).n();
  const json doc = {
    {"kind", std::string(to_string(kind_of(s.channel)))},
    {"n", n},
    {"P", s.power.p},
    {"iters", iters},
    {"seed", seed},
    {"convention", conv == RateConvention::half ? "half" : "full"},
    {"analytic_rate", analytic},
    {"best_rate", best},
    {"sampled_best_rate", apply_convention(r.sampled_best_rate, conv)},
    {"gap", gap},
    {"verdict", std::string(to_string(classify_gap(gap)))},
    {"evaluations", r.evaluations},
    {"best_source_trace", r.best_source_trace},
    {"best_relay_power", r.best_relay_power},
    {"best_candidate", cand},
  };
  return doc.dump(2) + "\n";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Optimal amplify-and-forward relay design for two-hop wiretap links"};
  app.require_subcommand(1);

  Options o;
  auto *single = app.add_subcommand("single", "Closed-form single-antenna relay gain (CSV)");
  add_common(*single, o, true);
  single->add_flag("--half-rate", o.half_rate, "Report capacities with the 1/2 pre-factor");
  single->add_option("--diagnostics", o.diagnostics, "Diagnostics JSON sidecar path");

  auto *mimr = app.add_subcommand("mimrsome", "Multi-antenna relay with single-antenna receiver");
  add_common(*mimr, o, true);
  mimr->add_option("--diagnostics", o.diagnostics, "Diagnostics JSON sidecar path");

  auto *verify = app.add_subcommand("verify", "Brute-force oracle against the analytic design");
  add_common(*verify, o, false);
  verify->add_flag("--half-rate", o.half_rate, "Report rates with the 1/2 pre-factor");
  verify->add_option("--oracle-iters", o.oracle_iters,
                     "Grid points (scalar) or random samples (mimrsome)");
  verify->add_option("--kind", o.kind, "Channel kind for --random: scalar|mimrsome");

  auto *generate = app.add_subcommand("generate", "Write a random scenario file");
  add_common(*generate, o, false);
  generate->add_option("--kind", o.kind, "scalar|mimrsome|full");

  std::vector<const char *> argv;
  for (const auto &a : args)
  {
    argv.push_back(a.c_str());
  }
  try
  {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try
  {
    if (single->parsed())
    {
      return cmd_single(o, out);
    }
    if (mimr->parsed())
    {
      return cmd_mimrsome(o, out);
    }
    if (verify->parsed())
    {
      return cmd_verify(o, out);
    }
    return cmd_generate(o, out);
  }
  catch (const InputError &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  catch (const std::exception &e)
  {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace relaysec::cli
