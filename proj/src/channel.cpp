// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/channel.hpp"

#include <cmath>
#include <string>

#include "relaysec/errors.hpp"
#include "relaysec/rng.hpp"

namespace relaysec
{

std::string_view to_string(ChannelKind kind)
{
  switch (kind)
  {
    case ChannelKind::scalar:
      return "scalar";
    case ChannelKind::mimrsome:
      return "mimrsome";
    case ChannelKind::full:
      return "full";
  }
  return "unknown";
}

ChannelKind parse_channel_kind(std::string_view text)
{
  if (text == "scalar")
  {
    return ChannelKind::scalar;
  }
  if (text == "mimrsome")
  {
    return ChannelKind::mimrsome;
  }
  if (text == "full")
  {
    return ChannelKind::full;
  }
  throw InvalidArgument("unknown channel kind '" + std::string(text) + "'");
}

ScalarChannel::ScalarChannel(double h1, double hr, double he) : h1_(h1), hr_(hr), he_(he)
{
  auto check = [](double v, const char *name)
  {
    if (!(v > 0.0) || !std::isfinite(v))
    {
      throw InvalidArgument(std::string("scalar gain ") + name +
                            " must be finite and > 0, got " + std::to_string(v));
    }
  };
  check(h1, "h1");
  check(hr, "hr");
  check(he, "he");
}

namespace
{

void require_square(const CMatrix &m, Eigen::Index n, const char *name)
{
  if (m.rows() != n || m.cols() != n)
  {
    throw DimensionMismatch(std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(n) +
                            "x" + std::to_string(n));
  }
}

}  // namespace

MimoChannel::MimoChannel(CMatrix h1, std::optional<CVector> hr_vec,
                         std::optional<CMatrix> hr_mat, CMatrix he)
  : h1_(std::move(h1)), hr_vec_(std::move(hr_vec)), hr_mat_(std::move(hr_mat)),
    he_(std::move(he))
{
  const Eigen::Index n = h1_.rows();
  if (n < 1)
  {
    throw InvalidDimension("antenna count must be >= 1");
  }
  require_square(h1_, n, "h1");
  require_square(he_, n, "he");
  if (hr_vec_.has_value() == hr_mat_.has_value())
  {
    throw InvalidArgument("exactly one of hr_vec / hr_mat must be present");
  }
  if (hr_vec_ && hr_vec_->size() != n)
  {
    throw DimensionMismatch("hr has length " + std::to_string(hr_vec_->size()) +
                            ", expected " + std::to_string(n));
  }
  if (hr_mat_)
  {
    require_square(*hr_mat_, n, "hr");
  }
}

MimoChannel MimoChannel::mimrsome(CMatrix h1, CVector hr_vec, CMatrix he)
{
  return MimoChannel(std::move(h1), std::move(hr_vec), std::nullopt, std::move(he));
}

MimoChannel MimoChannel::full(CMatrix h1, CMatrix hr_mat, CMatrix he)
{
  return MimoChannel(std::move(h1), std::nullopt, std::move(hr_mat), std::move(he));
}

MimoChannel MimoChannel::from_scalar(const ScalarChannel &ch)
{
  return mimrsome(CMatrix::Constant(1, 1, ch.h1()), CVector::Constant(1, ch.hr()),
                  CMatrix::Constant(1, 1, ch.he()));
}

CMatrix MimoChannel::receiver_matrix() const
{
  if (hr_mat_)
  {
    return *hr_mat_;
  }
  return hr_vec_->adjoint();
}

MimoChannel MimoChannel::swapped() const
{
  if (!hr_mat_)
  {
    throw InvalidArgument("link swap requires a full-kind channel");
  }
  return full(h1_, he_, *hr_mat_);
}

bool MimoChannel::operator==(const MimoChannel &other) const
{
  if (n() != other.n() || kind() != other.kind())
  {
    return false;
  }
  if (h1_ != other.h1_ || he_ != other.he_)
  {
    return false;
  }
  return hr_vec_ ? *hr_vec_ == *other.hr_vec_ : *hr_mat_ == *other.hr_mat_;
}

ChannelKind kind_of(const Channel &ch)
{
  if (std::holds_alternative<ScalarChannel>(ch))
  {
    return ChannelKind::scalar;
  }
  return std::get<MimoChannel>(ch).kind();
}

PowerBudget::PowerBudget(double p_) : p(p_)
{
  if (!(p > 0.0) || !std::isfinite(p))
  {
    throw InvalidArgument("power budget P must be finite and > 0, got " + std::to_string(p));
  }
}

bool Scenario::operator==(const Scenario &other) const
{
  return channel == other.channel && power == other.power;
}

Channel random_channel(int n, std::uint64_t seed, ChannelKind kind)
{
  if (n < 1)
  {
    throw InvalidDimension("antenna count must be >= 1, got " + std::to_string(n));
  }
  Rng rng(seed);
  switch (kind)
  {
    case ChannelKind::scalar:
    {
      if (n != 1)
      {
        throw InvalidDimension("scalar channels require n = 1, got " + std::to_string(n));
      }
      auto gain = [&rng]
      {
        double g = 0.0;
        while (g == 0.0)
        {
          g = std::abs(rng.normal());
        }
        return g;
      };
      const double h1 = gain();
      const double hr = gain();
      const double he = gain();
      return ScalarChannel(h1, hr, he);
    }
    case ChannelKind::mimrsome:
    {
      CMatrix h1 = rng.complex_normal_matrix(n, n);
      CVector hr = rng.complex_normal_vector(n);
      CMatrix he = rng.complex_normal_matrix(n, n);
      return MimoChannel::mimrsome(std::move(h1), std::move(hr), std::move(he));
    }
    case ChannelKind::full:
    {
      CMatrix h1 = rng.complex_normal_matrix(n, n);
      CMatrix hr = rng.complex_normal_matrix(n, n);
      CMatrix he = rng.complex_normal_matrix(n, n);
      return MimoChannel::full(std::move(h1), std::move(hr), std::move(he));
    }
  }
  throw InvalidArgument("unknown channel kind");
}

}  // namespace relaysec
