// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_CLI_HPP
#define RELAYSEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "relaysec/mimrsome.hpp"
#include "relaysec/oracle.hpp"
#include "relaysec/single_antenna.hpp"

namespace relaysec::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

// Column sets of the emitted CSV files.
inline constexpr const char *kSingleHeader = "P,g_sq,regime,capacity_bits,relay_power,threshold";
inline constexpr const char *kMimrsomeHeader =
  "P,x_star,lambda_max,gamma_max,capacity_bits,x_bound_derived,x_bound_printed,"
  "q_recovery_feasible";

// 12 significant digits, %g style.
std::string format_number(double v);

std::string single_csv_row(double p, const ScalarSolution &sol, RateConvention conv);
std::string mimrsome_csv_row(double p, const MimrsomeSolution &sol);

// Power grid for --sweep: `steps` points from lo to hi, log-spaced on request.
std::vector<double> sweep_powers(double lo, double hi, int steps, bool log_spaced);

// JSON text of an oracle report; rates converted to the given convention.
std::string oracle_report_json(const Scenario &s, const OracleReport &r, RateConvention conv,
                               long long iters, unsigned long long seed);

// Runs the command line; CSV/JSON go to `out`, human messages to `err`.
// Returns the process exit code (0 ok, 2 input error, 3 numerical failure).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace relaysec::cli

#endif  // RELAYSEC_CLI_HPP
