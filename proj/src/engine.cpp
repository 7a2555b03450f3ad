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

#include "posmap/engine.hpp"

#include <cmath>
#include <optional>

#include "posmap/decomp.hpp"
#include "posmap/extremal.hpp"
#include "posmap/positivity.hpp"
#include "posmap/ppt.hpp"
#include "posmap/scaling.hpp"
#include "posmap/slemma.hpp"
#include "posmap/version.hpp"

namespace posmap {

namespace {

struct Options {
  std::optional<double> tol;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  std::vector<double> eps = {1e-2, 1e-4, 1e-6};
};

Options parse_options(const json& request) {
  Options o;
  if (!request.contains("options")) return o;
  const json& j = request["options"];
  require_known_keys(j, {"tol", "max_iter", "seed", "eps"}, "options");
  if (j.contains("tol")) {
    const double t = number_at(j["tol"], "options.tol");
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw InvalidInput("options.tol: must be a positive finite number");
    }
    o.tol = t;
  }
  if (j.contains("max_iter")) {
    if (!j["max_iter"].is_number_integer() || j["max_iter"].get<long long>() < 1) {
      throw InvalidInput("options.max_iter: must be a positive integer");
    }
    o.max_iter = static_cast<int>(j["max_iter"].get<long long>());
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw InvalidInput("options.seed: must be an integer");
    }
    o.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("eps")) {
    if (!j["eps"].is_array() || j["eps"].empty()) {
      throw InvalidInput("options.eps: must be a non-empty array");
    }
    o.eps.clear();
    int idx = 0;
    for (const auto& item : j["eps"]) {
      const double e = number_at(item, "options.eps[" + std::to_string(idx++) + "]");
      if (!(e > 0.0) || e >= 1.0) {
        throw InvalidInput("options.eps: entries must lie in (0, 1)");
      }
      o.eps.push_back(e);
    }
  }
  return o;
}

const json& input_of(const json& request) {
  if (!request.contains("input")) throw InvalidInput("input: missing");
  return request["input"];
}

json base_response(const std::string& command) {
  json r;
  r["command"] = command;
  r["version"] = kVersion;
  return r;
}

//--------------------------------------------------------------------------
// check
//--------------------------------------------------------------------------

json run_check(const json& request, const Options& opts) {
  const QubitMap m = qubit_map_from_json(input_of(request), "input");
  const double tol = opts.tol.value_or(1e-9);
  const PropertyReport rep = property_report(m, tol);

  json r = base_response("check");
  r["positive"] = rep.positive.positive;
  r["negative_positive"] = rep.positive.negative_positive;
  r["zero_map"] = rep.positive.zero_map;
  r["degenerate"] = rep.positive.degenerate;
  r["interior"] = rep.interior.interior;
  r["boundary_band"] = rep.interior.boundary_band;
  r["cp"] = rep.cp;
  r["ccp"] = rep.ccp;
  r["unital"] = rep.unital;
  r["trace_preserving"] = rep.trace_preserving;
  r["bistochastic"] = rep.bistochastic;
  r["margins"] = {
      {"g_star", rep.positive.g_star},
      {"g_margin", rep.positive.g_margin},
      {"interior_margin", rep.interior.margin},
      {"sample_min", rep.interior.sample_min},
      {"cp", rep.cp_margin},
      {"ccp", rep.ccp_margin},
      {"unital_residual", rep.unital_residual},
      {"tp_residual", rep.tp_residual},
  };
  if (rep.positive.positive || rep.positive.negative_positive) {
    r["certificate"] = {{"mu", rep.positive.mu},
                        {"q", rmat_to_json(rep.positive.q.mat())}};
  }
  if (rep.positive.violating_state) {
    const auto& x = *rep.positive.violating_state;
    r["violating_state"] = {{"bloch", json::array({x[0], x[1], x[2], x[3]})},
                            {"lambda_min", rep.positive.violation_lambda}};
  }
  return r;
}

//--------------------------------------------------------------------------
// scale
//--------------------------------------------------------------------------

json run_scale(const json& request, const Options& opts) {
  const QubitMap m = qubit_map_from_json(input_of(request), "input");
  ScaleOptions so;
  so.tol = opts.tol.value_or(1e-10);
  so.max_iter = opts.max_iter;
  const ScalingResult res = scale_to_bistochastic(m, so);

  json r = base_response("scale");
  r["a"] = cmat_to_json(res.a.mat());
  r["b"] = cmat_to_json(res.b.mat());
  r["sigma0"] = cmat_to_json(res.sigma0.mat());
  r["scaled_ptm"] = rmat_to_json(res.scaled.ptm());
  r["iterations"] = res.iterations;
  r["residual_unital"] = res.residual_unital;
  r["residual_tp"] = res.residual_tp;
  r["alpha"] = res.alpha;
  r["scheme"] = res.scheme;
  r["near_boundary_warning"] = res.near_boundary_warning;
  return r;
}

//--------------------------------------------------------------------------
// decompose
//--------------------------------------------------------------------------

json run_decompose(const json& request, const Options& opts) {
  const QubitMap m = qubit_map_from_json(input_of(request), "input");
  DecompOptions d_opts;
  d_opts.tol = opts.tol.value_or(1e-8);
  d_opts.scale.max_iter = opts.max_iter;
  const GeneralDecomposition g = decompose_general(m, opts.eps, d_opts);

  json r = base_response("decompose");
  r.update(decomposition_to_json(g.decomposition));
  r["term_count"] = g.decomposition.total_terms();
  r["residual"] = g.residual;
  r["path"] = g.path;
  if (g.path == "regularized") r["eps"] = g.eps_used;
  return r;
}

//--------------------------------------------------------------------------
// slemma
//--------------------------------------------------------------------------

json run_slemma(const json& request, const Options& opts) {
  const json& in = input_of(request);
  require_known_keys(in, {"F", "G", "xbar"}, "input");
  if (!in.contains("F") || !in.contains("G") || !in.contains("xbar")) {
    throw InvalidInput("input: slemma requires F, G and xbar");
  }
  const SymMat f(rmat_from_json(in["F"], "input.F"));
  const SymMat g(rmat_from_json(in["G"], "input.G", f.dim(), f.dim()));
  if (!in["xbar"].is_array() || static_cast<int>(in["xbar"].size()) != f.dim()) {
    throw InvalidInput("input.xbar: expected an array of dimension " +
                       std::to_string(f.dim()));
  }
  std::vector<double> xbar;
  int idx = 0;
  for (const auto& item : in["xbar"]) {
    xbar.push_back(number_at(item, "input.xbar[" + std::to_string(idx++) + "]"));
  }

  SLemmaOptions so;
  so.tol = opts.tol.value_or(1e-9);
  if (opts.seed != 0) so.seed = opts.seed;
  const SLemmaOutcome out = decide(f, g, xbar, so);

  json r = base_response("slemma");
  r["feasible"] = out.feasible;
  r["g_star"] = out.g_star;
  r["mu_star"] = out.mu_star;
  if (out.feasible) {
    r["mu"] = out.mu;
    r["q"] = rmat_to_json(out.q.mat());
    r["q_lambda_min"] = lambda_min(out.q);
  } else {
    r["witness"] = out.witness;
    r["witness_f"] = out.witness_f;
    r["witness_g"] = out.witness_g;
  }
  return r;
}

//--------------------------------------------------------------------------
// extreme
//--------------------------------------------------------------------------

json run_extreme(const json& request, const Options& opts) {
  const json& in = input_of(request);
  LorentzMap l;
  if (in.is_object() && in.contains("matrix")) {
    require_known_keys(in, {"matrix"}, "input");
    l = LorentzMap::of(rmat_from_json(in["matrix"], "input.matrix"));
  } else {
    l = lorentz_from_qubit(qubit_map_from_json(in, "input"));
  }
  const double tol = opts.tol.value_or(1e-9);
  const ExtremalVerdict v = classify(l, tol);

  json r = base_response("extreme");
  r["g_star"] = v.g_star;
  r["mu_star"] = v.mu_star;
  r["q_residual"] = v.q_residual;
  switch (v.kind) {
    case ExtremalVerdict::Kind::Automorphism:
      r["kind"] = "Automorphism";
      r["mu"] = v.mu;
      break;
    case ExtremalVerdict::Kind::RankOneExtreme:
      r["kind"] = "RankOneExtreme";
      r["u"] = v.u.x;
      r["v"] = v.v.x;
      break;
    case ExtremalVerdict::Kind::NotExtreme:
      r["kind"] = "NotExtreme";
      r["delta"] = rmat_to_json(v.delta);
      r["eps"] = v.eps;
      break;
    case ExtremalVerdict::Kind::NotInCone:
      r["kind"] = "NotInCone";
      break;
  }
  return r;
}

//--------------------------------------------------------------------------
// ppt
//--------------------------------------------------------------------------

json run_ppt(const json& request, const Options& opts) {
  const json& in = input_of(request);
  HermMat rho;
  if (in.is_object()) {
    require_known_keys(in, {"rho"}, "input");
    if (!in.contains("rho")) throw InvalidInput("input.rho: missing");
    rho = herm_from_json(in["rho"], "input.rho", 4);
  } else {
    rho = herm_from_json(in, "input", 4);
  }
  const SeparabilityVerdict v = separability_verdict(rho, opts.tol.value_or(1e-10));

  json r = base_response("ppt");
  r["verdict"] = v.separable ? "Separable" : "Entangled";
  r["boundary_band"] = v.boundary_band;
  r["min_pt_eigenvalue"] = v.min_pt_eigenvalue;
  r["pt_eigenvalues"] = v.pt_eigenvalues;
  return r;
}

//--------------------------------------------------------------------------
// random
//--------------------------------------------------------------------------

json run_random(const json& request, const Options& opts) {
  const json& in = input_of(request);
  require_known_keys(in, {"kind", "t"}, "input");
  if (!in.contains("kind") || !in["kind"].is_string()) {
    throw InvalidInput("input.kind: expected a string");
  }
  const std::string kind = in["kind"].get<std::string>();
  RandomSpec spec;
  if (kind == "interior") {
    spec.kind = RandomSpec::Kind::Interior;
    if (in.contains("t")) spec.t = number_at(in["t"], "input.t");
  } else if (kind == "cp") {
    spec.kind = RandomSpec::Kind::Cp;
  } else if (kind == "ccp") {
    spec.kind = RandomSpec::Kind::Ccp;
  } else if (kind == "boundary") {
    spec.kind = RandomSpec::Kind::Boundary;
  } else if (kind == "nonpositive") {
    spec.kind = RandomSpec::Kind::Nonpositive;
  } else {
    throw InvalidInput("input.kind: unknown kind '" + kind + "'");
  }
  if (kind != "interior" && in.contains("t")) {
    throw InvalidInput("input.t: only valid for kind 'interior'");
  }
  const QubitMap m = random_map(opts.seed, spec);

  json r = base_response("random");
  r["seed"] = opts.seed;
  r["kind"] = kind;
  if (kind == "interior") r["t"] = spec.t;
  r["ptm"] = rmat_to_json(m.ptm());
  return r;
}

//--------------------------------------------------------------------------
// verify
//--------------------------------------------------------------------------

json run_verify(const json& request, const Options&) {
  const json& in = input_of(request);
  require_known_keys(in, {"request", "response"}, "input");
  if (!in.contains("request") || !in.contains("response")) {
    throw InvalidInput("input: verify requires request and response");
  }
  const json& req = in["request"];
  const json& resp = in["response"];
  if (!req.contains("command") || !req["command"].is_string()) {
    throw InvalidInput("input.request.command: missing");
  }
  const std::string cmd = req["command"].get<std::string>();

  json checks = json::array();
  auto add_check = [&](const std::string& name, bool pass, double value) {
    checks.push_back({{"name", name}, {"pass", pass}, {"value", value}});
  };

  if (cmd == "decompose") {
    const QubitMap m = qubit_map_from_json(req["input"], "input.request.input");
    json dj;
    dj["kraus"] = resp.at("kraus");
    dj["co_kraus"] = resp.at("co_kraus");
    const Decomposition d = decomposition_from_json(dj, "input.response");
    const double residual = verify_decomposition(m, d);
    const double claimed = number_at(resp.at("residual"), "input.response.residual");
    add_check("residual_matches_claim", residual <= claimed * 1.01 + 1e-12, residual);
    add_check("term_bound", d.total_terms() <= 4, d.total_terms());
  } else if (cmd == "check") {
    const QubitMap m = qubit_map_from_json(req["input"], "input.request.input");
    const bool claimed_positive = resp.at("positive").get<bool>();
    if (claimed_positive) {
      const double mu = number_at(resp.at("certificate").at("mu"),
                                  "input.response.certificate.mu");
      const SymMat q(rmat_from_json(resp.at("certificate").at("q"),
                                    "input.response.certificate.q", 4, 4));
      const RMat j4 = lorentz_j(4);
      const RMat f = transpose(m.ptm()) * j4 * m.ptm();
      const double recon = frob(f - mu * j4 - q.mat());
      add_check("certificate_reconstructs", recon <= 1e-8 * (1.0 + frob(f)), recon);
      const double qmin = lambda_min(q);
      add_check("q_psd", qmin >= -1e-8 * (1.0 + frob(q.mat())), qmin);
      add_check("mu_nonnegative", mu >= 0.0, mu);
    } else {
      const auto& vs = resp.at("violating_state").at("bloch");
      const Herm2 state = herm2_from_bloch(
          {vs[0].get<double>(), vs[1].get<double>(), vs[2].get<double>(),
           vs[3].get<double>()});
      const double lmin = lambda_min(HermMat(apply(m, state)));
      add_check("violation_negative", lmin < 0.0, lmin);
    }
  } else if (cmd == "scale") {
    const QubitMap m = qubit_map_from_json(req["input"], "input.request.input");
    const CMat a = cmat_from_json(resp.at("a"), "input.response.a", 2, 2);
    const CMat b = cmat_from_json(resp.at("b"), "input.response.b", 2, 2);
    const QubitMap scaled =
        compose(conjugation_map(a), compose(m, conjugation_map(b)));
    const Herm2 id = HermMat::identity(2);
    const double ru = frob(HermMat(apply(scaled, id)) - id);
    const double rt = frob(HermMat(apply(adjoint(scaled), id)) - id);
    const double cu = number_at(resp.at("residual_unital"), "residual_unital");
    const double ct = number_at(resp.at("residual_tp"), "residual_tp");
    add_check("residual_unital_matches", ru <= cu * 1.01 + 1e-12, ru);
    add_check("residual_tp_matches", rt <= ct * 1.01 + 1e-12, rt);
  } else if (cmd == "slemma") {
    const json& rin = req["input"];
    const SymMat f(rmat_from_json(rin.at("F"), "input.request.input.F"));
    const SymMat g(rmat_from_json(rin.at("G"), "input.request.input.G"));
    if (resp.at("feasible").get<bool>()) {
      const double mu = number_at(resp.at("mu"), "input.response.mu");
      const SymMat q(rmat_from_json(resp.at("q"), "input.response.q"));
      const double recon = frob(f.mat() - mu * g.mat() - q.mat());
      add_check("q_reconstructs", recon <= 1e-9 * (1.0 + frob(f.mat())), recon);
      const double qmin = lambda_min(q);
      add_check("q_psd",
                qmin >= -1e-9 * (1.0 + frob(f.mat()) + mu * frob(g.mat())), qmin);
      add_check("mu_nonnegative", mu >= 0.0, mu);
    } else {
      std::vector<double> w;
      for (const auto& item : resp.at("witness")) w.push_back(item.get<double>());
      const double wf = dot(w, mat_vec(f.mat(), w));
      const double wg = dot(w, mat_vec(g.mat(), w));
      add_check("witness_f_negative", wf < 0.0, wf);
      add_check("witness_g_positive", wg > 0.0, wg);
    }
  } else if (cmd == "extreme") {
    const json& rin = req["input"];
    LorentzMap l;
    if (rin.is_object() && rin.contains("matrix")) {
      l = LorentzMap::of(rmat_from_json(rin["matrix"], "input.request.input.matrix"));
    } else {
      l = lorentz_from_qubit(qubit_map_from_json(rin, "input.request.input"));
    }
    const std::string kind = resp.at("kind").get<std::string>();
    if (kind == "Automorphism") {
      const double mu = number_at(resp.at("mu"), "input.response.mu");
      const RMat j = lorentz_j(l.m);
      const double res = frob(transpose(l.mat) * j * l.mat - mu * j);
      add_check("automorphism_identity",
                res <= 1e-7 * (1.0 + frob(l.mat) * frob(l.mat)), res);
    } else if (kind == "RankOneExtreme") {
      std::vector<double> u, v;
      for (const auto& c : resp.at("u")) u.push_back(c.get<double>());
      for (const auto& c : resp.at("v")) v.push_back(c.get<double>());
      const double res = frob(l.mat - outer(u, v));
      add_check("rank_one_factors", res <= 1e-7 * (1.0 + frob(l.mat)), res);
      add_check("u_boundary",
                std::abs(q_form(LorentzVec::of(u))) <= 1e-6 * dot(u, u),
                q_form(LorentzVec::of(u)));
      add_check("v_boundary",
                std::abs(q_form(LorentzVec::of(v))) <= 1e-6 * dot(v, v),
                q_form(LorentzVec::of(v)));
    } else if (kind == "NotExtreme") {
      const RMat delta = rmat_from_json(resp.at("delta"), "input.response.delta",
                                        l.m, l.m);
      const bool plus = preserves_cone(LorentzMap::of(l.mat + delta)).preserves;
      const bool minus = preserves_cone(LorentzMap::of(l.mat - delta)).preserves;
      add_check("plus_delta_in_cone", plus, plus ? 1.0 : 0.0);
      add_check("minus_delta_in_cone", minus, minus ? 1.0 : 0.0);
    } else {
      const ConeCheck check = preserves_cone(l);
      add_check("not_in_cone_confirmed", !check.preserves, check.g_margin);
    }
  } else if (cmd == "ppt") {
    const json& rin = req["input"];
    const HermMat rho = rin.is_object()
                            ? herm_from_json(rin.at("rho"), "input.request.input.rho", 4)
                            : herm_from_json(rin, "input.request.input", 4);
    const SeparabilityVerdict v = separability_verdict(rho);
    const double claimed =
        number_at(resp.at("min_pt_eigenvalue"), "min_pt_eigenvalue");
    add_check("min_pt_eigenvalue_matches",
              std::abs(v.min_pt_eigenvalue - claimed) <= 1e-10, v.min_pt_eigenvalue);
    add_check("verdict_matches",
              (v.separable ? "Separable" : "Entangled") ==
                  resp.at("verdict").get<std::string>(),
              v.separable ? 1.0 : 0.0);
  } else if (cmd == "random") {
    json rerun = req;
    const EngineResult res = run_request(rerun);
    const double diff = frob(rmat_from_json(res.response.at("ptm"), "ptm", 4, 4) -
                             rmat_from_json(resp.at("ptm"), "ptm", 4, 4));
    add_check("regenerates_identically", diff == 0.0, diff);
  } else {
    throw InvalidInput("input.request.command: cannot verify '" + cmd + "'");
  }

  bool all = true;
  for (const auto& c : checks) {
    if (!c.at("pass").get<bool>()) all = false;
  }
  json r = base_response("verify");
  r["verified"] = all;
  r["checks"] = checks;
  return r;
}

}  // namespace

EngineResult run_request(const json& request) {
  EngineResult out;
  std::string command = "unknown";
  try {
    if (!request.is_object()) throw InvalidInput("request: expected an object");
    require_known_keys(request, {"command", "input", "options"}, "request");
    if (!request.contains("command") || !request["command"].is_string()) {
      throw InvalidInput("command: missing or not a string");
    }
    command = request["command"].get<std::string>();
    const Options opts = parse_options(request);

    if (command == "check") {
      out.response = run_check(request, opts);
    } else if (command == "scale") {
      out.response = run_scale(request, opts);
    } else if (command == "decompose") {
      out.response = run_decompose(request, opts);
    } else if (command == "slemma") {
      out.response = run_slemma(request, opts);
    } else if (command == "extreme") {
      out.response = run_extreme(request, opts);
    } else if (command == "ppt") {
      out.response = run_ppt(request, opts);
    } else if (command == "random") {
      out.response = run_random(request, opts);
    } else if (command == "verify") {
      out.response = run_verify(request, opts);
    } else {
      throw InvalidInput("command: unknown command '" + command + "'");
    }
    out.exit_code = 0;
    out.response["exit_code"] = 0;
    return out;
  } catch (const NoConvergence& e) {
    out.response = base_response(command);
    out.response["error"] = e.what();
    out.response["iterations"] = e.iterations;
    out.response["best_residual"] = e.best_residual;
    out.exit_code = 3;
  } catch (const InternalDefect& e) {
    out.response = base_response(command);
    out.response["error"] = e.what();
    out.exit_code = 3;
  } catch (const InvalidInput& e) {
    out.response = base_response(command);
    out.response["error"] = e.what();
    out.exit_code = 2;
  } catch (const Error& e) {
    // Domain precondition failures (not positive, not interior, ...).
    out.response = base_response(command);
    out.response["error"] = e.what();
    out.exit_code = 2;
  } catch (const json::exception& e) {
    out.response = base_response(command);
    out.response["error"] = std::string("json: ") + e.what();
    out.exit_code = 2;
  }
  out.response["exit_code"] = out.exit_code;
  return out;
}

EngineResult run_batch(const json& requests) {
  EngineResult out;
  if (!requests.is_array()) {
    out.response = base_response("batch");
    out.response["error"] = "batch input must be an array of requests";
    out.exit_code = 2;
    return out;
  }
  json responses = json::array();
  for (const auto& req : requests) {
    EngineResult item = run_request(req);
    item.response["exit_code"] = item.exit_code;
    responses.push_back(std::move(item.response));
  }
  out.response = std::move(responses);
  out.exit_code = 0;
  return out;
}

}  // namespace posmap
