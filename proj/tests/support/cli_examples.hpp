// Copyright 2026 The pkr Authors.
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

#ifndef PKR_TESTS_SUPPORT_CLI_EXAMPLES_HPP_
#define PKR_TESTS_SUPPORT_CLI_EXAMPLES_HPP_

// Drives the in-process CLI over tests/data/examples.json.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace pkr::testing {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"pkr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct CliExample {
  std::string name;
  int exit = 0;
  std::vector<std::string> args;
};

inline std::vector<CliExample> load_cli_examples(const std::string& data_dir) {
  std::ifstream in(data_dir + "/examples.json");
  const auto doc = nlohmann::json::parse(in);
  std::vector<CliExample> out;
  for (const auto& ex : doc.at("examples")) {
    CliExample e{ex.at("name").get<std::string>(), ex.at("exit").get<int>(), {}};
    for (const auto& a : ex.at("args")) {
      std::string s = a.get<std::string>();
      if (const auto pos = s.find("{data}"); pos != std::string::npos) {
        s.replace(pos, 6, data_dir);
      }
      e.args.push_back(std::move(s));
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pkr::testing

#endif  // PKR_TESTS_SUPPORT_CLI_EXAMPLES_HPP_
