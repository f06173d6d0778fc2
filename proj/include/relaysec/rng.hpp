// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_RNG_HPP
#define RELAYSEC_RNG_HPP

#include <cstdint>
#include <random>

#include "relaysec/geigen.hpp"

namespace relaysec
{

//
// Seeded generator with a fully specified output stream: std::mt19937_64
// for raw bits, uniforms from the top 53 bits, standard normals by the
// Box-Muller transform. None of the implementation-defined <random>
// distributions are used, so a seed reproduces the same draws with any
// conforming standard library.
//
class Rng
{
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform();

  // Uniform on (0, 1].
  double uniform_open_low() { return 1.0 - uniform(); }

  double normal();

  // Circularly-symmetric complex Gaussian with E|z|^2 = 1.
  Complex complex_normal();

  CMatrix complex_normal_matrix(int rows, int cols);
  CVector complex_normal_vector(int n);

  // Uniform on the complex unit sphere in C^n.
  CVector unit_vector(int n);

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace relaysec

#endif  // RELAYSEC_RNG_HPP
