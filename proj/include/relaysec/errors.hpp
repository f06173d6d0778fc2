// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef RELAYSEC_ERRORS_HPP
#define RELAYSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relaysec
{

// Base of every error raised by the library. Input errors and numerical
// failures are split so front ends can map them to distinct exit codes.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error
{
public:
  using Error::Error;
};

class NumericalError : public Error
{
public:
  using Error::Error;
};

class NotPositiveDefinite : public NumericalError
{
public:
  explicit NotPositiveDefinite(int leading_minor)
    : NumericalError("matrix is not positive definite (leading minor " +
                     std::to_string(leading_minor) + " is not positive)"),
      leading_minor_(leading_minor)
  {
  }

  // 1-based order of the first leading principal minor that failed.
  int leading_minor() const { return leading_minor_; }

private:
  int leading_minor_;
};

class NotHermitian : public InputError
{
public:
  using InputError::InputError;
};

class ZeroVector : public InputError
{
public:
  ZeroVector() : InputError("vector has zero norm") {}
};

class DimensionMismatch : public InputError
{
public:
  using InputError::InputError;
};

class InvalidDimension : public InputError
{
public:
  using InputError::InputError;
};

class DimensionTooLarge : public InputError
{
public:
  using InputError::InputError;
};

class InvalidSplit : public InputError
{
public:
  using InputError::InputError;
};

class InvalidArgument : public InputError
{
public:
  using InputError::InputError;
};

class SingularH1 : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

class ParseError : public InputError
{
public:
  using InputError::InputError;
};

}  // namespace relaysec

#endif  // RELAYSEC_ERRORS_HPP
