// Copyright 2026 The posmap authors
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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posmap/decomp.hpp"
#include "posmap/engine.hpp"
#include "posmap/extremal.hpp"
#include "posmap/positivity.hpp"
#include "posmap/ppt.hpp"
#include "posmap/scaling.hpp"
#include "posmap/slemma.hpp"
#include "posmap/version.hpp"

namespace py = pybind11;
using namespace posmap;

namespace {

using PyRMat = std::vector<std::vector<double>>;
using PyCMat = std::vector<std::vector<std::complex<double>>>;

RMat rmat_in(const PyRMat& rows) {
  if (rows.empty()) throw InvalidInput("matrix must be non-empty");
  RMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) {
      throw InvalidInput("ragged matrix");
    }
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PyRMat rmat_out(const RMat& m) {
  PyRMat rows(m.rows(), std::vector<double>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

CMat cmat_in(const PyCMat& rows) {
  if (rows.empty()) throw InvalidInput("matrix must be non-empty");
  CMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) {
      throw InvalidInput("ragged matrix");
    }
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PyCMat cmat_out(const CMat& m) {
  PyCMat rows(m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "positivity, scaling and Kraus decomposition of qubit maps";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "PosmapError");

  // Map constructors (all maps travel as 4x4 PTM row lists).
  m.def("identity_map", [] { return rmat_out(identity_map().ptm()); });
  m.def("transpose_map", [] { return rmat_out(transpose_map().ptm()); });
  m.def("depolarizing_map", [] { return rmat_out(depolarizing_map().ptm()); });
  m.def(
      "conjugation_map",
      [](const PyCMat& v) { return rmat_out(conjugation_map(cmat_in(v)).ptm()); },
      py::arg("v"), "PTM of rho -> V rho V^dagger");
  m.def(
      "from_kraus",
      [](const std::vector<PyCMat>& kraus, const std::vector<PyCMat>& co_kraus) {
        std::vector<CMat> a, b;
        for (const auto& k : kraus) a.push_back(cmat_in(k));
        for (const auto& k : co_kraus) b.push_back(cmat_in(k));
        return rmat_out(from_kraus(a, b).ptm());
      },
      py::arg("kraus"), py::arg("co_kraus") = std::vector<PyCMat>{});
  m.def(
      "random_map",
      [](std::uint64_t seed, const std::string& kind, double t) {
        RandomSpec spec;
        spec.t = t;
        if (kind == "interior") spec.kind = RandomSpec::Kind::Interior;
        else if (kind == "cp") spec.kind = RandomSpec::Kind::Cp;
        else if (kind == "ccp") spec.kind = RandomSpec::Kind::Ccp;
        else if (kind == "boundary") spec.kind = RandomSpec::Kind::Boundary;
        else if (kind == "nonpositive") spec.kind = RandomSpec::Kind::Nonpositive;
        else throw InvalidInput("unknown kind: " + kind);
        return rmat_out(random_map(seed, spec).ptm());
      },
      py::arg("seed"), py::arg("kind") = "interior", py::arg("t") = 0.3);

  m.def(
      "apply_map",
      [](const PyRMat& ptm, const PyCMat& rho) {
        return cmat_out(
            apply(QubitMap(rmat_in(ptm)), HermMat(cmat_in(rho))).mat());
      },
      py::arg("ptm"), py::arg("rho"));
  m.def("adjoint_map", [](const PyRMat& ptm) {
    return rmat_out(adjoint(QubitMap(rmat_in(ptm))).ptm());
  });
  m.def("compose_maps", [](const PyRMat& outer, const PyRMat& inner) {
    return rmat_out(
        compose(QubitMap(rmat_in(outer)), QubitMap(rmat_in(inner))).ptm());
  });
  m.def("choi_matrix", [](const PyRMat& ptm) {
    return cmat_out(choi(QubitMap(rmat_in(ptm))).mat());
  });

  m.def(
      "check_map",
      [](const PyRMat& ptm) {
        const PropertyReport r = property_report(QubitMap(rmat_in(ptm)));
        py::dict d;
        d["positive"] = r.positive.positive;
        d["negative_positive"] = r.positive.negative_positive;
        d["interior"] = r.interior.interior;
        d["boundary_band"] = r.interior.boundary_band;
        d["cp"] = r.cp;
        d["ccp"] = r.ccp;
        d["unital"] = r.unital;
        d["trace_preserving"] = r.trace_preserving;
        d["bistochastic"] = r.bistochastic;
        d["g_margin"] = r.positive.g_margin;
        d["mu"] = r.positive.mu;
        if (r.positive.violating_state) {
          const auto& x = *r.positive.violating_state;
          d["violating_state_bloch"] = std::vector<double>{x[0], x[1], x[2], x[3]};
          d["violation_lambda"] = r.positive.violation_lambda;
        }
        return d;
      },
      py::arg("ptm"), "positivity, interiority and sub-cone membership report");

  m.def(
      "scale_map",
      [](const PyRMat& ptm, double tol, int max_iter) {
        ScaleOptions o;
        o.tol = tol;
        o.max_iter = max_iter;
        const ScalingResult r = scale_to_bistochastic(QubitMap(rmat_in(ptm)), o);
        py::dict d;
        d["a"] = cmat_out(r.a.mat());
        d["b"] = cmat_out(r.b.mat());
        d["sigma0"] = cmat_out(r.sigma0.mat());
        d["scaled_ptm"] = rmat_out(r.scaled.ptm());
        d["iterations"] = r.iterations;
        d["residual_unital"] = r.residual_unital;
        d["residual_tp"] = r.residual_tp;
        d["alpha"] = r.alpha;
        d["scheme"] = r.scheme;
        return d;
      },
      py::arg("ptm"), py::arg("tol") = 1e-10, py::arg("max_iter") = 10000);

  m.def(
      "decompose_map",
      [](const PyRMat& ptm, const std::vector<double>& eps_schedule) {
        const GeneralDecomposition g =
            decompose_general(QubitMap(rmat_in(ptm)), eps_schedule);
        py::dict d;
        std::vector<PyCMat> kraus, co_kraus;
        for (const auto& k : g.decomposition.kraus) kraus.push_back(cmat_out(k));
        for (const auto& k : g.decomposition.co_kraus)
          co_kraus.push_back(cmat_out(k));
        d["kraus"] = kraus;
        d["co_kraus"] = co_kraus;
        d["residual"] = g.residual;
        d["path"] = g.path;
        d["eps"] = g.eps_used;
        return d;
      },
      py::arg("ptm"),
      py::arg("eps_schedule") = std::vector<double>{1e-2, 1e-4, 1e-6},
      "Kraus/co-Kraus decomposition with at most 4 terms");

  m.def(
      "slemma_decide",
      [](const PyRMat& f, const PyRMat& g, const std::vector<double>& xbar) {
        const SLemmaOutcome out = decide(SymMat(rmat_in(f)), SymMat(rmat_in(g)), xbar);
        py::dict d;
        d["feasible"] = out.feasible;
        d["g_star"] = out.g_star;
        d["mu_star"] = out.mu_star;
        if (out.feasible) {
          d["mu"] = out.mu;
          d["q"] = rmat_out(out.q.mat());
        } else {
          d["witness"] = out.witness;
          d["witness_f"] = out.witness_f;
          d["witness_g"] = out.witness_g;
        }
        return d;
      },
      py::arg("f"), py::arg("g"), py::arg("xbar"));

  m.def(
      "classify_lorentz",
      [](const PyRMat& mat) {
        const ExtremalVerdict v = classify(LorentzMap::of(rmat_in(mat)));
        py::dict d;
        switch (v.kind) {
          case ExtremalVerdict::Kind::Automorphism:
            d["kind"] = "Automorphism";
            d["mu"] = v.mu;
            break;
          case ExtremalVerdict::Kind::RankOneExtreme:
            d["kind"] = "RankOneExtreme";
            d["u"] = v.u.x;
            d["v"] = v.v.x;
            break;
          case ExtremalVerdict::Kind::NotExtreme:
            d["kind"] = "NotExtreme";
            d["delta"] = rmat_out(v.delta);
            d["eps"] = v.eps;
            break;
          case ExtremalVerdict::Kind::NotInCone:
            d["kind"] = "NotInCone";
            break;
        }
        return d;
      },
      py::arg("matrix"));

  m.def(
      "ppt_verdict",
      [](const PyCMat& rho) {
        const SeparabilityVerdict v = separability_verdict(HermMat(cmat_in(rho)));
        py::dict d;
        d["separable"] = v.separable;
        d["boundary_band"] = v.boundary_band;
        d["min_pt_eigenvalue"] = v.min_pt_eigenvalue;
        d["pt_eigenvalues"] = v.pt_eigenvalues;
        return d;
      },
      py::arg("rho"), "PPT separability verdict for a two-qubit state");

  m.def(
      "run_request",
      [](const std::string& request_json) {
        const EngineResult r = run_request(json::parse(request_json));
        return py::make_tuple(r.response.dump(), r.exit_code);
      },
      py::arg("request_json"),
      "execute one CLI-style request, returns (response_json, exit_code)");
}
