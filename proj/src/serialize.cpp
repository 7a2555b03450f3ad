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

#include "posmap/serialize.hpp"

namespace posmap {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InvalidInput(path + ": " + what);
}

}  // namespace

void require_known_keys(const json& j, std::initializer_list<const char*> allowed,
                        const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(path + "." + item.key(), "unknown field");
  }
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

json rmat_to_json(const RMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m(i, jj));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMat rmat_from_json(const json& j, const std::string& path, int rows, int cols) {
  if (!j.is_array() || j.empty()) fail(path, "expected a matrix (array of rows)");
  const int r = static_cast<int>(j.size());
  if (rows >= 0 && r != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
  }
  if (!j[0].is_array() || j[0].empty()) fail(path + "[0]", "expected a row array");
  const int c = static_cast<int>(j[0].size());
  if (cols >= 0 && c != cols) {
    fail(path, "expected " + std::to_string(cols) + " columns, got " + std::to_string(c));
  }
  if (r > kMaxDim || c > kMaxDim) fail(path, "matrix too large");
  RMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) {
      fail(path + "[" + std::to_string(i) + "]", "ragged row");
    }
    for (int jj = 0; jj < c; ++jj) {
      m(i, jj) = number_at(j[i][jj],
                           path + "[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
    }
  }
  return m;
}

namespace {

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
  return {number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]")};
}

}  // namespace

json cmat_to_json(const CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(cplx_to_json(m(i, jj)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat cmat_from_json(const json& j, const std::string& path, int rows, int cols) {
  if (!j.is_array() || j.empty()) fail(path, "expected a complex matrix");
  const int r = static_cast<int>(j.size());
  if (rows >= 0 && r != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
  }
  if (!j[0].is_array() || j[0].empty()) fail(path + "[0]", "expected a row array");
  const int c = static_cast<int>(j[0].size());
  if (cols >= 0 && c != cols) {
    fail(path, "expected " + std::to_string(cols) + " columns, got " + std::to_string(c));
  }
  if (r > kMaxDimC || c > kMaxDimC) fail(path, "matrix too large");
  CMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) {
      fail(path + "[" + std::to_string(i) + "]", "ragged row");
    }
    for (int jj = 0; jj < c; ++jj) {
      m(i, jj) = cplx_from_json(
          j[i][jj], path + "[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
    }
  }
  return m;
}

json herm_to_json(const HermMat& m) { return cmat_to_json(m.mat()); }

HermMat herm_from_json(const json& j, const std::string& path, int dim) {
  const CMat m = cmat_from_json(j, path, dim, dim);
  if (m.rows() != m.cols()) fail(path, "expected a square matrix");
  // Enforce Hermiticity of the payload before the constructor symmetrizes.
  const double defect = frob(m - dagger(m));
  if (defect > 1e-9 * (1.0 + frob(m))) {
    fail(path, "matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  return HermMat(m);
}

json qubit_map_to_json(const QubitMap& m) {
  json j;
  j["ptm"] = rmat_to_json(m.ptm());
  return j;
}

QubitMap qubit_map_from_json(const json& j, const std::string& path) {
  require_known_keys(j, {"ptm", "kraus", "co_kraus"}, path);
  if (j.contains("ptm")) {
    if (j.contains("kraus") || j.contains("co_kraus")) {
      fail(path, "provide either ptm or kraus/co_kraus, not both");
    }
    return QubitMap(rmat_from_json(j["ptm"], path + ".ptm", 4, 4));
  }
  if (!j.contains("kraus") && !j.contains("co_kraus")) {
    fail(path, "map requires ptm or kraus/co_kraus");
  }
  std::vector<CMat> kraus, co_kraus;
  if (j.contains("kraus")) {
    if (!j["kraus"].is_array()) fail(path + ".kraus", "expected an array");
    int idx = 0;
    for (const auto& item : j["kraus"]) {
      kraus.push_back(
          cmat_from_json(item, path + ".kraus[" + std::to_string(idx++) + "]", 2, 2));
    }
  }
  if (j.contains("co_kraus")) {
    if (!j["co_kraus"].is_array()) fail(path + ".co_kraus", "expected an array");
    int idx = 0;
    for (const auto& item : j["co_kraus"]) {
      co_kraus.push_back(cmat_from_json(
          item, path + ".co_kraus[" + std::to_string(idx++) + "]", 2, 2));
    }
  }
  if (kraus.empty() && co_kraus.empty()) fail(path, "empty Kraus lists");
  return from_kraus(kraus, co_kraus);
}

json decomposition_to_json(const Decomposition& d) {
  json j;
  j["kraus"] = json::array();
  j["co_kraus"] = json::array();
  for (const CMat& a : d.kraus) j["kraus"].push_back(cmat_to_json(a));
  for (const CMat& b : d.co_kraus) j["co_kraus"].push_back(cmat_to_json(b));
  return j;
}

Decomposition decomposition_from_json(const json& j, const std::string& path) {
  require_known_keys(j, {"kraus", "co_kraus"}, path);
  Decomposition d;
  if (j.contains("kraus")) {
    int idx = 0;
    for (const auto& item : j["kraus"]) {
      d.kraus.push_back(
          cmat_from_json(item, path + ".kraus[" + std::to_string(idx++) + "]", 2, 2));
    }
  }
  if (j.contains("co_kraus")) {
    int idx = 0;
    for (const auto& item : j["co_kraus"]) {
      d.co_kraus.push_back(cmat_from_json(
          item, path + ".co_kraus[" + std::to_string(idx++) + "]", 2, 2));
    }
  }
  return d;
}

}  // namespace posmap
