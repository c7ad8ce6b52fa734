// Copyright 2026 The steercoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steercoh/channels.hpp"
#include "steercoh/coherence.hpp"
#include "steercoh/families.hpp"
#include "steercoh/msc.hpp"
#include "steercoh/state_io.hpp"
#include "steercoh/steering.hpp"
#include "steercoh/verify.hpp"

namespace py = pybind11;
using namespace steercoh;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix from_numpy(const CArray& a) {
  if (a.ndim() != 2) throw Error(ErrorCode::kWrongDimension, "expected a 2-d array");
  const auto r = std::size_t(a.shape(0));
  const auto c = std::size_t(a.shape(1));
  return ComplexMatrix(r, c, std::vector<Complex>(a.data(), a.data() + r * c));
}

CArray to_numpy(const ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

py::tuple vec(const BlochVector& v) { return py::make_tuple(v.x, v.y, v.z); }

BlochVector to_vec(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

py::dict msc_dict(const MscResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["optimal_m"] = vec(r.optimal_m);
  d["steered_state"] = to_numpy(r.steered_state.matrix());
  d["degenerate_path"] = r.degenerate_path;
  d["ill_conditioned"] = r.ill_conditioned;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_steercoh, m) {
  m.doc() = "Maximal steered coherence of bipartite states";

  static py::exception<Error> error(m, "SteercohError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      exc.attr("code") = to_string(e.code());
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<DensityMatrix>(m, "State")
      .def(py::init([](const CArray& a, std::vector<std::size_t> dims) {
             return validate_density(from_numpy(a), std::move(dims));
           }),
           py::arg("matrix"), py::arg("dims"))
      .def_property_readonly("dims", &DensityMatrix::dims)
      .def_property_readonly("matrix", [](const DensityMatrix& s) { return to_numpy(s.matrix()); })
      .def("to_json", &to_state_json)
      .def_static("from_json", &from_state_json, py::arg("text"))
      .def("__repr__", [](const DensityMatrix& s) {
        return "<State dims=" + py::repr(py::cast(s.dims())).cast<std::string>() + ">";
      });

  m.def("family", [](const std::string& name, const py::kwargs& params) {
    FamilySpec spec{name, {}};
    for (const auto& [k, v] : params) spec.params[k.cast<std::string>()] = v.cast<double>();
    const auto f = make_family(spec);
    py::dict d;
    d["state"] = f.state;
    d["analytic_msc"] = f.analytic_msc ? py::cast(*f.analytic_msc) : py::none();
    return d;
  }, py::arg("name"), "Build a named state family, e.g. family('werner', p=0.7).");
  m.def("family_names", &family_names);

  m.def("msc", [](const DensityMatrix& s, std::uint64_t seed) {
    MscOptions opts;
    opts.seed = seed;
    return msc_dict(msc(s, opts));
  }, py::arg("state"), py::arg("seed") = MscOptions{}.seed);
  m.def("msc_oracle", &msc_oracle, py::arg("state"), py::arg("resolution"));

  m.def("qse", [](const DensityMatrix& s) {
    const auto e = qse(s);
    py::dict d;
    d["center"] = vec(e.center);
    d["semiaxes"] = py::make_tuple(e.semiaxes[0], e.semiaxes[1], e.semiaxes[2]);
    d["frame"] = py::make_tuple(vec(e.frame[0]), vec(e.frame[1]), vec(e.frame[2]));
    return d;
  }, py::arg("state"));
  m.def("canonical", &canonical_transform, py::arg("state"));

  m.def("coherence_bloch", [](const std::array<double, 3>& b, const std::array<double, 3>& n) {
    return coherence_bloch(to_vec(b), to_vec(n));
  }, py::arg("b"), py::arg("n"));
  m.def("coherence_l1", [](const CArray& rho, const CArray& basis_columns) {
    const auto cols = from_numpy(basis_columns);
    Basis basis;
    for (std::size_t k = 0; k < cols.cols(); ++k) {
      Ket v(cols.rows());
      for (std::size_t i = 0; i < cols.rows(); ++i) v[i] = cols(i, k);
      basis.vectors.push_back(std::move(v));
    }
    return coherence_l1(from_numpy(rho), basis);
  }, py::arg("rho"), py::arg("basis_columns"));

  m.def("apply_channel", [](const DensityMatrix& s, const std::string& channel, double gamma) {
    return apply_on_b(s, make_channel(channel, gamma));
  }, py::arg("state"), py::arg("channel"), py::arg("gamma"));
  m.def("channel_names", &channel_names);

  m.def("sweep", [](const DensityMatrix& s, const std::string& channel,
                    const std::vector<double>& gammas) {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : sweep(s, channel, gammas)) out.emplace_back(p.gamma, p.msc);
    return out;
  }, py::arg("state"), py::arg("channel"), py::arg("gammas"));
  m.def("sweep_csv", [](const std::vector<std::pair<double, double>>& points) {
    std::vector<SweepPoint> pts;
    for (const auto& [g, v] : points) pts.push_back({g, v, true});
    return sweep_csv(pts);
  }, py::arg("points"));

  m.def("check_names", &verify::check_names);
  m.def("run_check", [](const std::string& name, std::uint64_t seed) {
    const auto r = verify::run_check(name, {seed});
    py::dict d;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["measured"] = r.measured;
    d["tolerance"] = r.tolerance;
    d["detail"] = r.detail;
    return d;
  }, py::arg("name"), py::arg("seed") = verify::VerifyOptions{}.seed);
}
