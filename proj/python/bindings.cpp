// Copyright 2026 The relaysec Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relaysec/channel.hpp"
#include "relaysec/errors.hpp"
#include "relaysec/geigen.hpp"
#include "relaysec/mimrsome.hpp"
#include "relaysec/oracle.hpp"
#include "relaysec/rate.hpp"
#include "relaysec/single_antenna.hpp"

namespace py = pybind11;
using namespace relaysec;

namespace
{

Pencil make_pencil(const CMatrix &a, const CMatrix &b)
{
  return Pencil(HermitianMatrix(a), HermitianMatrix(b));
}

py::dict report_dict(const OracleReport &r)
{
  py::dict d;
  d["best_rate"] = r.best_rate;
  d["analytic_rate"] = r.analytic_rate;
  d["gap"] = r.gap;
  d["verdict"] = std::string(to_string(r.verdict));
  d["evaluations"] = r.evaluations;
  d["sampled_best_rate"] = r.sampled_best_rate;
  d["best_source_trace"] = r.best_source_trace;
  d["best_relay_power"] = r.best_relay_power;
  if (r.best_g)
  {
    d["best_g"] = *r.best_g;
  }
  if (r.best_candidate)
  {
    d["best_q"] = r.best_candidate->q().entries();
    d["best_g_mat"] = r.best_candidate->g();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Secrecy-rate design for amplify-and-forward relay channels";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto numerical_error =
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  (void)input_error;
  (void)numerical_error;

  py::class_<ScalarChannel>(m, "ScalarChannel")
    .def(py::init<double, double, double>(), py::arg("h1"), py::arg("hr"), py::arg("he"))
    .def_property_readonly("h1", &ScalarChannel::h1)
    .def_property_readonly("hr", &ScalarChannel::hr)
    .def_property_readonly("he", &ScalarChannel::he)
    .def("__repr__", [](const ScalarChannel &c) {
      return "ScalarChannel(h1=" + std::to_string(c.h1()) + ", hr=" + std::to_string(c.hr()) +
             ", he=" + std::to_string(c.he()) + ")";
    });

  py::class_<MimoChannel>(m, "MimoChannel")
    .def_static("mimrsome", &MimoChannel::mimrsome, py::arg("h1"), py::arg("hr"), py::arg("he"))
    .def_static("full", &MimoChannel::full, py::arg("h1"), py::arg("hr"), py::arg("he"))
    .def_static("from_scalar", &MimoChannel::from_scalar)
    .def_property_readonly("n", &MimoChannel::n)
    .def_property_readonly("kind",
                           [](const MimoChannel &c) { return std::string(to_string(c.kind())); })
    .def_property_readonly("h1", &MimoChannel::h1)
    .def_property_readonly("he", &MimoChannel::he)
    .def_property_readonly("hr", [](const MimoChannel &c) -> py::object {
      if (c.hr_vec())
      {
        return py::cast(*c.hr_vec());
      }
      return py::cast(*c.hr_mat());
    });

  m.def(
    "random_channel",
    [](int n, std::uint64_t seed, const std::string &kind) -> py::object {
      const Channel ch = random_channel(n, seed, parse_channel_kind(kind));
      return std::visit([](const auto &c) { return py::cast(c); }, ch);
    },
    py::arg("n"), py::arg("seed"), py::arg("kind") = "mimrsome");

  m.def(
    "largest_generalized_eig",
    [](const CMatrix &a, const CMatrix &b) {
      const GeigenPair pair = largest_generalized_eig(make_pencil(a, b));
      return py::make_tuple(pair.value, pair.vector);
    },
    py::arg("a"), py::arg("b"));
  m.def(
    "rayleigh_quotient",
    [](const CMatrix &a, const CMatrix &b, const CVector &v) {
      return rayleigh_quotient(make_pencil(a, b), v);
    },
    py::arg("a"), py::arg("b"), py::arg("v"));
  m.def(
    "logdet_pd", [](const CMatrix &m) { return logdet_pd(HermitianMatrix(m)); }, py::arg("m"));

  m.def("secrecy_rate_scalar", &secrecy_rate_scalar, py::arg("channel"), py::arg("g"),
        py::arg("p"));
  m.def(
    "secrecy_rate_mimo",
    [](const MimoChannel &ch, const CMatrix &q, const CMatrix &g) {
      return secrecy_rate_mimo(ch, DesignCandidate(HermitianMatrix(q), g));
    },
    py::arg("channel"), py::arg("q"), py::arg("g"));
  m.def(
    "relay_power",
    [](const MimoChannel &ch, const CMatrix &q, const CMatrix &g) {
      return relay_power(ch, DesignCandidate(HermitianMatrix(q), g));
    },
    py::arg("channel"), py::arg("q"), py::arg("g"));

  m.def("threshold_power", &threshold_power, py::arg("channel"));
  m.def(
    "optimal_gain",
    [](const ScalarChannel &ch, double p) {
      const ScalarSolution s = optimal_gain(ch, p);
      py::dict d;
      d["g_sq"] = s.g_sq;
      d["regime"] = std::string(to_string(s.regime));
      d["threshold"] = s.threshold;
      d["stationary_rate"] = s.stationary_rate;
      d["operating_g_sq"] = s.operating_g_sq;
      d["capacity"] = s.capacity;
      d["relay_power_used"] = s.relay_power_used;
      d["degenerate"] = s.degenerate;
      d["clamped"] = s.clamped;
      return d;
    },
    py::arg("channel"), py::arg("p"));

  m.def(
    "misome_capacity",
    [](const CVector &hr, const CMatrix &he, double p) {
      const MisomeResult r = misome_capacity(hr, he, p);
      py::dict d;
      d["capacity"] = r.capacity;
      d["q"] = r.q.entries();
      d["lambda_max"] = r.pair.value;
      d["psi_max"] = r.pair.vector;
      return d;
    },
    py::arg("hr"), py::arg("he"), py::arg("p"));

  m.def(
    "optimize_split",
    [](const MimoChannel &ch, double p) {
      const MimrsomeSolution s = optimize_split(ch, p);
      py::dict d;
      d["x_star"] = s.x_star;
      d["lambda_max"] = s.lambda_max;
      d["gamma_max"] = s.gamma_max;
      d["capacity"] = s.capacity;
      d["psi_max"] = s.psi_max;
      d["phi_max"] = s.phi_max;
      d["g_mat"] = s.g_mat;
      d["q1"] = s.q1;
      d["q2"] = s.q2;
      d["x_bound_derived"] = s.x_bound.derived;
      d["x_bound_printed"] = s.x_bound.printed;
      d["x_search_max"] = s.x_search_max;
      d["h1_singular"] = s.h1_singular;
      if (s.source)
      {
        d["q_source"] = s.source->q.entries();
        d["q_source_feasible"] = s.source->report.feasible;
      }
      return d;
    },
    py::arg("channel"), py::arg("p"));

  m.def(
    "grid_search_scalar",
    [](const ScalarChannel &ch, double p, long long points) {
      return report_dict(grid_search_scalar(ch, p, points));
    },
    py::arg("channel"), py::arg("p"), py::arg("points") = 1000000);
  m.def(
    "random_search_mimo",
    [](const MimoChannel &ch, double p, long long iters, std::uint64_t seed) {
      return report_dict(random_search_mimo(ch, p, iters, seed));
    },
    py::arg("channel"), py::arg("p"), py::arg("iters") = 2000, py::arg("seed") = 0);
}
