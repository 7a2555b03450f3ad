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

#include "posmap/serialize.hpp"

namespace posmap {

// Exit codes: 0 ran to a verdict, 2 invalid input or failed precondition,
// 3 non-convergence / budget exhausted / numerical defect.
struct EngineResult {
  json response;
  int exit_code = 0;
};

// Executes one CommandRequest object:
//   {"command": "check|scale|decompose|slemma|extreme|ppt|random|verify",
//    "input": {...}, "options": {"tol":, "max_iter":, "seed":, "eps": [...]}}
// Unknown fields are rejected with a field-path diagnostic. Never throws;
// failures are encoded in the response and exit code.
EngineResult run_request(const json& request);

// Batch: an array of requests yields an array of responses (order
// preserved); a failing item does not abort the batch. Returns exit code 0
// when the batch itself is well-formed.
EngineResult run_batch(const json& requests);

}  // namespace posmap
