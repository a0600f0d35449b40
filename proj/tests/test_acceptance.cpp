// Copyright 2026 The dirp Authors
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

// Runs criteria 1 to 13 in process, then criterion 14 by running the CLI
// report twice into separate directories and comparing the artifacts.
// Usage: test_acceptance <path to dirp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "dirp/acceptance.hpp"
#include "dirp/config.hpp"

namespace fs = std::filesystem;

namespace {

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    files[e.path().filename().string()] = s.str();
  }
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_acceptance <dirp>" << std::endl;
    return 2;
  }
  const dirp::RunConfig config = dirp::default_config();
  size_t passed = 0, total = 0;
  auto count = [&](const dirp::CriterionResult& r) {
    std::cout << dirp::format_line(r) << std::endl;
    passed += r.passed;
    ++total;
  };
  dirp::run_acceptance(config, count);

  const fs::path work = fs::temp_directory_path() / "dirp_acceptance";
  fs::remove_all(work);
  std::map<std::string, std::string> runs[2];
  bool ran = true;
  for (int i = 0; i < 2; ++i) {
    const fs::path out = work / ("run" + std::to_string(i));
    fs::create_directories(out);
    const std::string cmd = std::string("\"") + argv[1] + "\" report --no-repeat --out \"" + out.string() + "\" > \"" +
                            (work / ("log" + std::to_string(i))).string() + "\" 2>&1";
    ran &= std::system(cmd.c_str()) == 0;
    runs[i] = read_dir(out);
  }
  dirp::CriterionResult det = dirp::determinism_result(runs[0], runs[1]);
  if (!ran) {
    det.passed = false;
    det.detail = "report run failed; " + det.detail;
  }
  count(det);
  fs::remove_all(work);

  std::cout << passed << "/" << total << " criteria passed" << std::endl;
  return passed == total ? 0 : 1;
}
