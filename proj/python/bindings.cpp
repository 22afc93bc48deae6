// Copyright 2026 The schmidt-bounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schmidt/bounds.hpp"
#include "schmidt/cli.hpp"
#include "schmidt/constructions.hpp"
#include "schmidt/serialization.hpp"
#include "schmidt/statespace.hpp"
#include "schmidt/sweep.hpp"

namespace py = pybind11;
using namespace schmidt;

namespace {

py::object to_python(const Json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Side parse_side(const std::string& side) {
  if (side == "left") return Side::Left;
  if (side == "right") return Side::Right;
  throw Error(ErrorCode::InvalidArgument, "side must be 'left' or 'right'");
}

Sign parse_sign(int sign) {
  if (sign == 1) return Sign::Plus;
  if (sign == -1) return Sign::Minus;
  throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
}

FamilyParams family_params(Index k, Index n, std::optional<std::uint64_t> seed,
                           std::optional<double> epsilon,
                           const ToleranceConfig& cfg) {
  FamilyParams p = seed ? FamilyParams::random(k, n, *seed)
                        : FamilyParams::canonical(k, n);
  p.epsilon = epsilon ? *epsilon : auto_epsilon(family_vector(p, cfg), cfg);
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schmidt-number bounds and entanglement detectors for bipartite states";

  static py::exception<Error> error_type(m, "SchmidtError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(error_type.ptr());
      py::object exc = type(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<ToleranceConfig>(m, "ToleranceConfig")
      .def(py::init([](double rank, double psd, double recon) {
             ToleranceConfig cfg{rank, psd, recon};
             cfg.validate();
             return cfg;
           }),
           py::arg("rel_rank_tol") = 1e-10, py::arg("psd_tol") = 1e-10,
           py::arg("recon_tol") = 1e-10)
      .def_readonly("rel_rank_tol", &ToleranceConfig::rel_rank_tol)
      .def_readonly("psd_tol", &ToleranceConfig::psd_tol)
      .def_readonly("recon_tol", &ToleranceConfig::recon_tol);

  py::class_<PureVector>(m, "PureVector")
      .def(py::init([](const Vector& entries, Index k, Index m_) {
             return PureVector({k, m_}, entries);
           }),
           py::arg("entries"), py::arg("dim_left"), py::arg("dim_right"))
      .def_property_readonly("entries", &PureVector::entries)
      .def_property_readonly("dims", [](const PureVector& v) {
        return py::make_tuple(v.dims().left, v.dims().right);
      })
      .def("reshaped", &PureVector::reshaped);

  py::class_<BipartiteState>(m, "BipartiteState")
      .def(py::init([](const Matrix& matrix, Index k, Index m_,
                       const ToleranceConfig& cfg) {
             return BipartiteState({k, m_}, matrix, cfg);
           }),
           py::arg("matrix"), py::arg("dim_left"), py::arg("dim_right"),
           py::arg("tol") = ToleranceConfig{})
      .def_static("pure", &BipartiteState::pure)
      .def_property_readonly("matrix", &BipartiteState::matrix)
      .def_property_readonly("dims", [](const BipartiteState& g) {
        return py::make_tuple(g.dims().left, g.dims().right);
      });

  m.def("kron", &kron);
  m.def("flip_operator", &flip_operator, py::arg("k"));
  m.def("symmetrize",
        [](const BipartiteState& g, int sign) { return symmetrize(g, parse_sign(sign)); },
        py::arg("state"), py::arg("sign"));
  m.def("partial_transpose",
        [](const BipartiteState& g) { return partial_transpose(g); });
  m.def("marginal",
        [](const BipartiteState& g, const std::string& side) {
          return marginal(g, parse_side(side));
        },
        py::arg("state"), py::arg("side"));
  m.def("numerical_rank", &numerical_rank, py::arg("matrix"),
        py::arg("tol") = ToleranceConfig{});
  m.def("schmidt_rank", &schmidt_rank, py::arg("vector"),
        py::arg("tol") = ToleranceConfig{});
  m.def("schmidt_decompose",
        [](const PureVector& w, const ToleranceConfig& cfg) {
          const SchmidtDecomposition d = schmidt_decompose(w, cfg);
          py::dict out;
          out["coefficients"] = d.coefficients;
          out["left_vectors"] = d.left_vectors;
          out["right_vectors"] = d.right_vectors;
          out["numerical_rank"] = d.numerical_rank;
          return out;
        },
        py::arg("vector"), py::arg("tol") = ToleranceConfig{});
  m.def("check_state",
        [](const Matrix& x, Index k, Index m_, const ToleranceConfig& cfg) {
          return to_python(to_json(check_state(x, {k, m_}, cfg)));
        },
        py::arg("matrix"), py::arg("dim_left"), py::arg("dim_right"),
        py::arg("tol") = ToleranceConfig{});
  m.def("analyze",
        [](const BipartiteState& g, const ToleranceConfig& cfg) {
          return to_python(to_json(analyze(g, cfg)));
        },
        py::arg("state"), py::arg("tol") = ToleranceConfig{});

  m.def("family_state",
        [](Index k, Index n, std::optional<double> epsilon,
           std::optional<std::uint64_t> seed, const ToleranceConfig& cfg) {
          const FamilyParams p = family_params(k, n, seed, epsilon, cfg);
          return py::make_tuple(family_state(p, cfg), p.epsilon);
        },
        py::arg("k"), py::arg("n"), py::arg("epsilon") = py::none(),
        py::arg("seed") = py::none(), py::arg("tol") = ToleranceConfig{},
        "Returns (state, epsilon); epsilon defaults to the certified automatic value.");
  m.def("antisym_vector",
        [](Index k, Index n, std::optional<std::uint64_t> seed,
           const ToleranceConfig& cfg) {
          return antisym_vector(family_params(k, n, seed, 1.0, cfg), cfg);
        },
        py::arg("k"), py::arg("n"), py::arg("seed") = py::none(),
        py::arg("tol") = ToleranceConfig{});
  m.def("auto_epsilon", &auto_epsilon, py::arg("vector"),
        py::arg("tol") = ToleranceConfig{});
  m.def("sn_upper_certificate",
        [](Index k, Index n, std::optional<double> epsilon,
           std::optional<std::uint64_t> seed, const ToleranceConfig& cfg) {
          const FamilyParams p = family_params(k, n, seed, epsilon, cfg);
          return to_python(to_json(sn_upper_certificate(p, cfg), cfg));
        },
        py::arg("k"), py::arg("n"), py::arg("epsilon") = py::none(),
        py::arg("seed") = py::none(), py::arg("tol") = ToleranceConfig{});
  m.def("sym_separable_decomposition",
        [](Index k) {
          const ProductDecomposition d = sym_separable_decomposition(k);
          py::list terms;
          for (const auto& t : d.terms)
            terms.append(py::make_tuple(t.weight, t.left, t.right));
          return terms;
        },
        py::arg("k"), "List of (weight, left, right) product terms summing to Id + F.");

  m.def("random_pure", &random_pure, py::arg("k"), py::arg("m"),
        py::arg("target_sr"), py::arg("seed"));
  m.def("random_separable", &random_separable, py::arg("k"), py::arg("m"),
        py::arg("num_terms"), py::arg("seed"));
  m.def("random_density", &random_density, py::arg("k"), py::arg("m"),
        py::arg("rank"), py::arg("seed"));

  m.def("run_sweep",
        [](const std::string& ensemble, Index k, Index m_, std::int64_t trials,
           std::uint64_t seed, int jobs, const ToleranceConfig& cfg) {
          SweepConfig c;
          c.ensemble = parse_ensemble(ensemble);
          c.k = k;
          c.m = m_;
          c.trials = trials;
          c.seed = seed;
          c.jobs = jobs;
          c.tol = cfg;
          SweepResult result;
          {
            py::gil_scoped_release release;
            result = run_sweep(c);
          }
          return to_python(to_json(result));
        },
        py::arg("ensemble"), py::arg("k"), py::arg("m"), py::arg("trials"),
        py::arg("seed"), py::arg("jobs") = 1, py::arg("tol") = ToleranceConfig{});

  m.def("cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, {out, err, false});
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");

  m.attr("__version__") = std::string(kToolVersion);
}
