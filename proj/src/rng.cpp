// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include "relaysec/rng.hpp"

#include <cmath>
#include <numbers>

namespace relaysec
{

double Rng::uniform()
{
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
  if (has_spare_)
  {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open_low()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal()
{
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * (1.0 / std::numbers::sqrt2);
}

CMatrix Rng::complex_normal_matrix(int rows, int cols)
{
  CMatrix m(rows, cols);
  // Row-major fill so the stream order matches the scenario file layout.
  for (int i = 0; i < rows; ++i)
  {
    for (int j = 0; j < cols; ++j)
    {
      m(i, j) = complex_normal();
    }
  }
  return m;
}

CVector Rng::complex_normal_vector(int n)
{
  CVector v(n);
  for (int i = 0; i < n; ++i)
  {
    v(i) = complex_normal();
  }
  return v;
}

CVector Rng::unit_vector(int n)
{
  CVector v = complex_normal_vector(n);
  while (v.norm() == 0.0)
  {
    v = complex_normal_vector(n);
  }
  return v / v.norm();
}

}  // namespace relaysec
