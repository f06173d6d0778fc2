// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

// Scenario file I/O. Files are written by hand so the layout is canonical
// (sorted keys, one matrix row per line, %.17g numbers) and parsed with
// nlohmann/json.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "relaysec/channel.hpp"
#include "relaysec/errors.hpp"

namespace relaysec
{

namespace
{

using nlohmann::json;

std::string number(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string complex_pair(Complex z)
{
  return "[" + number(z.real()) + ", " + number(z.imag()) + "]";
}

std::string vector_text(const CVector &v)
{
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i)
  {
    out += (i ? ", " : "") + complex_pair(v(i));
  }
  return out + "]";
}

std::string matrix_text(const CMatrix &m)
{
  std::string out = "[\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
  {
    out += "    [";
    for (Eigen::Index j = 0; j < m.cols(); ++j)
    {
      out += (j ? ", " : "") + complex_pair(m(i, j));
    }
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  return out + "  ]";
}

[[noreturn]] void field_error(const std::string &field, const std::string &what)
{
  throw ParseError("scenario field \"" + field + "\": " + what);
}

double read_number(const json &j, const std::string &field)
{
  if (!j.is_number())
  {
    field_error(field, "expected a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v))
  {
    field_error(field, "number is not finite");
  }
  return v;
}

double read_positive(const json &j, const std::string &field)
{
  const double v = read_number(j, field);
  if (!(v > 0.0))
  {
    field_error(field, "must be > 0, got " + number(v));
  }
  return v;
}

Complex read_complex(const json &j, const std::string &field)
{
  if (!j.is_array() || j.size() != 2)
  {
    field_error(field, "expected an [re, im] pair");
  }
  return {read_number(j[0], field + "[0]"), read_number(j[1], field + "[1]")};
}

CVector read_vector(const json &j, const std::string &field, int n)
{
  if (!j.is_array())
  {
    field_error(field, "expected an array of [re, im] pairs");
  }
  if (static_cast<int>(j.size()) != n)
  {
    throw DimensionMismatch("scenario field \"" + field + "\": length " +
                            std::to_string(j.size()) + " does not match n = " +
                            std::to_string(n));
  }
  CVector v(n);
  for (int i = 0; i < n; ++i)
  {
    v(i) = read_complex(j[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

CMatrix read_matrix(const json &j, const std::string &field, int n)
{
  if (!j.is_array())
  {
    field_error(field, "expected an array of rows");
  }
  if (static_cast<int>(j.size()) != n)
  {
    throw DimensionMismatch("scenario field \"" + field + "\": " + std::to_string(j.size()) +
                            " rows, expected n = " + std::to_string(n));
  }
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
  {
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    const CVector row = read_vector(j[i], row_field, n);
    m.row(i) = row.transpose();
  }
  return m;
}

// 1-based line of a byte offset, for parser diagnostics.
std::size_t line_of(std::string_view text, std::size_t byte)
{
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
  {
    line += text[i] == '\n';
  }
  return line;
}

}  // namespace

std::string scenario_to_json(const Scenario &s)
{
  std::ostringstream out;
  out << "{\n";
  out << "  \"P\": " << number(s.power.p) << ",\n";
  if (const auto *sc = std::get_if<ScalarChannel>(&s.channel))
  {
    out << "  \"h1\": " << number(sc->h1()) << ",\n";
    out << "  \"he\": " << number(sc->he()) << ",\n";
    out << "  \"hr\": " << number(sc->hr()) << ",\n";
    out << "  \"kind\": \"scalar\",\n";
    out << "  \"n\": 1\n";
  }
  else
  {
    const auto &mc = std::get<MimoChannel>(s.channel);
    out << "  \"h1\": " << matrix_text(mc.h1()) << ",\n";
    out << "  \"he\": " << matrix_text(mc.he()) << ",\n";
    out << "  \"hr\": " << (mc.hr_vec() ? vector_text(*mc.hr_vec()) : matrix_text(*mc.hr_mat()))
        << ",\n";
    out << "  \"kind\": \"" << to_string(mc.kind()) << "\",\n";
    out << "  \"n\": " << mc.n() << "\n";
  }
  out << "}\n";
  return out.str();
}

Scenario scenario_from_json(std::string_view text)
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    throw ParseError("scenario line " + std::to_string(line_of(text, e.byte)) + ": " +
                     e.what());
  }
  if (!doc.is_object())
  {
    throw ParseError("scenario line 1: top level must be a JSON object");
  }

  static const std::set<std::string> known = {"P", "h1", "he", "hr", "kind", "n"};
  for (const auto &[key, value] : doc.items())
  {
    if (!known.count(key))
    {
      field_error(key, "unknown key");
    }
  }
  for (const auto &key : known)
  {
    if (!doc.contains(key))
    {
      field_error(key, "missing");
    }
  }

  if (!doc["kind"].is_string())
  {
    field_error("kind", "expected a string");
  }
  ChannelKind kind;
  try
  {
    kind = parse_channel_kind(doc["kind"].get<std::string>());
  }
  catch (const InvalidArgument &e)
  {
    field_error("kind", e.what());
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
  {
    field_error("n", "expected a positive integer");
  }
  const long long n_raw = doc["n"].get<long long>();
  if (n_raw > 4096)
  {
    field_error("n", "antenna count too large");
  }
  const int n = static_cast<int>(n_raw);
  const PowerBudget power(read_positive(doc["P"], "P"));

  switch (kind)
  {
    case ChannelKind::scalar:
    {
      if (n != 1)
      {
        throw DimensionMismatch("scenario field \"n\": scalar kind requires n = 1, got " +
                                std::to_string(n));
      }
      const double h1 = read_positive(doc["h1"], "h1");
      const double hr = read_positive(doc["hr"], "hr");
      const double he = read_positive(doc["he"], "he");
      return {ScalarChannel(h1, hr, he), power};
    }
    case ChannelKind::mimrsome:
    {
      CMatrix h1 = read_matrix(doc["h1"], "h1", n);
      CVector hr = read_vector(doc["hr"], "hr", n);
      CMatrix he = read_matrix(doc["he"], "he", n);
      return {MimoChannel::mimrsome(std::move(h1), std::move(hr), std::move(he)), power};
    }
    case ChannelKind::full:
    {
      CMatrix h1 = read_matrix(doc["h1"], "h1", n);
      CMatrix hr = read_matrix(doc["hr"], "hr", n);
      CMatrix he = read_matrix(doc["he"], "he", n);
      return {MimoChannel::full(std::move(h1), std::move(hr), std::move(he)), power};
    }
  }
  throw ParseError("scenario field \"kind\": unsupported");
}

Scenario load_scenario(const std::filesystem::path &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot open scenario file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try
  {
    return scenario_from_json(buf.str());
  }
  catch (const ParseError &e)
  {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::filesystem::path save_scenario(const Scenario &s, const std::filesystem::path &path)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
  {
    throw InputError("cannot write scenario file " + path.string());
  }
  out << scenario_to_json(s);
  if (!out)
  {
    throw InputError("failed writing scenario file " + path.string());
  }
  return path;
}

}  // namespace relaysec
