// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_CHANNEL_HPP
#define RELAYSEC_CHANNEL_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "relaysec/geigen.hpp"

namespace relaysec
{

enum class ChannelKind
{
  scalar,
  mimrsome,
  full
};

std::string_view to_string(ChannelKind kind);
ChannelKind parse_channel_kind(std::string_view text);

// Real amplitude gains of the all-single-antenna link: source->relay (h1),
// relay->destination (hr), relay->eavesdropper (he). All strictly positive.
class ScalarChannel
{
public:
  ScalarChannel(double h1, double hr, double he);

  double h1() const { return h1_; }
  double hr() const { return hr_; }
  double he() const { return he_; }

  bool operator==(const ScalarChannel &) const = default;

private:
  double h1_;
  double hr_;
  double he_;
};

//
// Multi-antenna channel with n antennas at source, relay and eavesdropper.
// The legitimate receiver is either single-antenna (hr_vec, received signal
// hr_vec^H v) or carries a full n x n matrix for evaluation only.
//
class MimoChannel
{
public:
  static MimoChannel mimrsome(CMatrix h1, CVector hr_vec, CMatrix he);
  static MimoChannel full(CMatrix h1, CMatrix hr_mat, CMatrix he);

  // n = 1 embedding of a scalar channel (hr_vec = [hr]).
  static MimoChannel from_scalar(const ScalarChannel &ch);

  int n() const { return static_cast<int>(h1_.rows()); }
  ChannelKind kind() const { return hr_mat_ ? ChannelKind::full : ChannelKind::mimrsome; }

  const CMatrix &h1() const { return h1_; }
  const CMatrix &he() const { return he_; }
  const std::optional<CVector> &hr_vec() const { return hr_vec_; }
  const std::optional<CMatrix> &hr_mat() const { return hr_mat_; }

  // Receiver-side matrix used by the rate evaluator: hr_vec^H (1 x n) or hr_mat.
  CMatrix receiver_matrix() const;

  // Copy with the legitimate and eavesdropper links exchanged (full kind only).
  MimoChannel swapped() const;

  bool operator==(const MimoChannel &other) const;

private:
  MimoChannel(CMatrix h1, std::optional<CVector> hr_vec, std::optional<CMatrix> hr_mat,
              CMatrix he);

  CMatrix h1_;
  std::optional<CVector> hr_vec_;
  std::optional<CMatrix> hr_mat_;
  CMatrix he_;
};

using Channel = std::variant<ScalarChannel, MimoChannel>;

ChannelKind kind_of(const Channel &ch);

struct PowerBudget
{
  explicit PowerBudget(double p);
  double p;

  bool operator==(const PowerBudget &) const = default;
};

struct Scenario
{
  Channel channel;
  PowerBudget power;

  bool operator==(const Scenario &other) const;
};

// Entries i.i.d. unit-variance circularly-symmetric complex Gaussian; scalar
// gains are |N(0,1)| (redrawn on an exact zero). Draw order is h1, hr, he,
// each matrix row-major.
Channel random_channel(int n, std::uint64_t seed, ChannelKind kind);

// Canonical JSON text: sorted keys, 17 significant digits, fixed layout.
std::string scenario_to_json(const Scenario &s);
Scenario scenario_from_json(std::string_view text);

Scenario load_scenario(const std::filesystem::path &path);
std::filesystem::path save_scenario(const Scenario &s, const std::filesystem::path &path);

}  // namespace relaysec

#endif  // RELAYSEC_CHANNEL_HPP
