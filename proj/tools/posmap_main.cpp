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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posmap/engine.hpp"
#include "posmap/version.hpp"

namespace {

struct CommonFlags {
  double tol = 0.0;
  bool tol_set = false;
  int max_iter = 10000;
  bool max_iter_set = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string eps_list;
  bool batch = false;
  bool quiet = false;
  std::string input_path;  // empty or "-" reads stdin
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) {
    throw std::runtime_error("cannot open input file: " + path);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

posmap::json options_json(const CommonFlags& flags) {
  posmap::json o = posmap::json::object();
  if (flags.tol_set) o["tol"] = flags.tol;
  if (flags.max_iter_set) o["max_iter"] = flags.max_iter;
  if (flags.seed_set) o["seed"] = flags.seed;
  if (!flags.eps_list.empty()) {
    posmap::json eps = posmap::json::array();
    std::stringstream ss(flags.eps_list);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      try {
        eps.push_back(std::stod(piece));
      } catch (const std::exception&) {
        throw posmap::InvalidInput("--eps: cannot parse '" + piece + "'");
      }
    }
    o["eps"] = eps;
  }
  return o;
}

int emit(const posmap::EngineResult& result, bool quiet) {
  if (!quiet) {
    std::cout << result.response.dump(2) << "\n";
  }
  return result.exit_code;
}

// Exit code 2 covers malformed JSON and unreadable files as well.
int run_command(const std::string& command, const CommonFlags& flags) {
  posmap::json parsed;
  try {
    const std::string text = read_input(flags.input_path);
    parsed = posmap::json::parse(text);
  } catch (const std::exception& e) {
    posmap::json err;
    err["command"] = command;
    err["version"] = posmap::kVersion;
    err["error"] = e.what();
    err["exit_code"] = 2;
    if (!flags.quiet) std::cout << err.dump(2) << "\n";
    return 2;
  }

  if (flags.batch) {
    return emit(posmap::run_batch(parsed), flags.quiet);
  }
  posmap::json request;
  request["command"] = command;
  request["input"] = parsed;
  const posmap::json opts = options_json(flags);
  if (!opts.empty()) request["options"] = opts;
  return emit(posmap::run_request(request), flags.quiet);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positivity, scaling, decomposition and extremal analysis of "
               "linear maps on 2x2 Hermitian matrices"};
  app.set_version_flag("--version", posmap::kVersion);
  app.require_subcommand(1);

  CommonFlags flags;
  std::string random_kind;
  double random_t = 0.3;
  bool random_t_set = false;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_flag("--quiet", flags.quiet, "suppress JSON output");
    sub->add_option("--tol", flags.tol, "tolerance override")
        ->each([&](const std::string&) { flags.tol_set = true; });
    sub->add_option("--max-iter", flags.max_iter, "iteration budget")
        ->each([&](const std::string&) { flags.max_iter_set = true; });
    sub->add_option("--seed", flags.seed, "PRNG seed")
        ->each([&](const std::string&) { flags.seed_set = true; });
    sub->add_option("--eps", flags.eps_list,
                    "comma-separated epsilon schedule for boundary maps");
    if (with_input) {
      sub->add_flag("--batch", flags.batch,
                    "input is an array of full request objects");
      sub->add_option("input", flags.input_path,
                      "input JSON file ('-' or absent reads stdin)");
    }
  };

  std::vector<std::string> file_commands = {"check",  "scale", "decompose",
                                            "slemma", "extreme", "ppt", "verify"};
  for (const std::string& name : file_commands) {
    add_common(app.add_subcommand(name), true);
  }
  CLI::App* random_cmd = app.add_subcommand("random", "generate a seeded map");
  add_common(random_cmd, false);
  random_cmd->add_option("kind", random_kind, "interior|cp|ccp|boundary|nonpositive")
      ->required();
  random_cmd->add_option("--t", random_t, "interior mixing weight in (0, 1]")
      ->each([&](const std::string&) { random_t_set = true; });

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "random") {
      posmap::json request;
      request["command"] = "random";
      request["input"] = {{"kind", random_kind}};
      if (random_t_set) request["input"]["t"] = random_t;
      const posmap::json opts = options_json(flags);
      if (!opts.empty()) request["options"] = opts;
      return emit(posmap::run_request(request), flags.quiet);
    }
    return run_command(command, flags);
  } catch (const std::exception& e) {
    posmap::json err;
    err["command"] = command;
    err["version"] = posmap::kVersion;
    err["error"] = e.what();
    err["exit_code"] = 2;
    if (!flags.quiet) std::cout << err.dump(2) << "\n";
    return 2;
  }
}
