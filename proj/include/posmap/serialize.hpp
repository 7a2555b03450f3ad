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

#pragma once

#include <string>

#include <json.hpp>

#include "posmap/numkit.hpp"
#include "posmap/qmap.hpp"

namespace posmap {

using json = nlohmann::json;

// Wire formats: real matrices as nested arrays of numbers, complex scalars
// as [re, im] pairs, so a 2x2 complex matrix is [[[re,im],[re,im]], ...].

json rmat_to_json(const RMat& m);
RMat rmat_from_json(const json& j, const std::string& path, int rows = -1,
                    int cols = -1);

json cmat_to_json(const CMat& m);
CMat cmat_from_json(const json& j, const std::string& path, int rows = -1,
                    int cols = -1);

json herm_to_json(const HermMat& m);
HermMat herm_from_json(const json& j, const std::string& path, int dim = -1);

// Map objects: {"ptm": [[4x4]]} or {"kraus": [...], "co_kraus": [...]}.
json qubit_map_to_json(const QubitMap& m);
QubitMap qubit_map_from_json(const json& j, const std::string& path);

json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j, const std::string& path);

// Rejects any key outside `allowed`; diagnostics carry the field path.
void require_known_keys(const json& j, std::initializer_list<const char*> allowed,
                        const std::string& path);

double number_at(const json& j, const std::string& path);

}  // namespace posmap
