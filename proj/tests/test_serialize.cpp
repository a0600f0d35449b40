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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dirp/config.hpp"
#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"
#include "dirp/serialize.hpp"

using namespace dirp;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("polynomial JSON round trip") {
  TrigPoly f(2);
  f.add_term(FreqVector{1, -1}, {mpq_class(1, 3), mpq_class(-2, 7)});
  f.add_term(FreqVector(std::vector<mpz_class>{mpz_class("123456789012345678901234567890"), 5}), {1, 0});
  const Json j = to_json(f);
  CHECK(j["dim"] == 2);
  // Entries past 64 bits travel as strings.
  bool saw_string = false;
  for (const auto& t : j["terms"]) saw_string |= t["k"][0].is_string();
  CHECK(saw_string);
  const TrigPoly g = parse_trig_poly(j.dump());
  CHECK(g.terms() == f.terms());
  CHECK(to_json(g).dump() == j.dump());
}

TEST_CASE("polynomial JSON errors") {
  try {
    parse_trig_poly("{\"dim\": 2,\n  \"terms\": [\n   {\"k\": [1,]}]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_trig_poly("{\"terms\": []}"), ParseError);
  CHECK_THROWS_AS(parse_trig_poly("{\"dim\": 2, \"terms\": [{\"k\": [1.5, 0], \"re\": \"1\"}]}"), ParseError);
  CHECK_THROWS_AS(parse_trig_poly("{\"dim\": 2, \"terms\": [{\"k\": [1], \"re\": \"1\"}]}"), DimensionMismatch);
  CHECK_THROWS_AS(parse_trig_poly("{\"dim\": 1, \"terms\": [{\"k\": [1], \"re\": \"1/0\"}]}"), Error);
  // Integer coefficients are accepted as numbers.
  const TrigPoly h = parse_trig_poly("{\"dim\": 1, \"terms\": [{\"k\": [3], \"re\": 2}]}");
  CHECK(h.terms().begin()->second.re == 2);
}

TEST_CASE("certified values in JSON") {
  const CertifiedReal third = CertifiedReal::exact(mpq_class(1, 3), 256);
  const Json j = to_json(third, 20);
  CHECK(j["digits"] == 20);
  CHECK(j["value"].get<std::string>().rfind("0.33333333333333333333", 0) == 0);
  CHECK(j["radius"].is_string());
  CHECK(double_text(0.1) == "0.1");
  CHECK(double_text(1e-300) == "1e-300");
}

TEST_CASE("configuration text") {
  const RunConfig base;
  const RunConfig c = parse_config("# comment\ndigits = 120\n\nseed = 7  # trailing\nformat = both\n", base);
  CHECK(c.digits == 120);
  CHECK(c.seed == 7);
  CHECK(c.format == "both");
  CHECK(c.radius == base.radius);
  const RunConfig back = parse_config(c.to_text(), RunConfig{});
  CHECK(back.to_text() == c.to_text());

  try {
    parse_config("digits = 90\nradius 5\n", base);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_config("\n\ncolour = red\n", base);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("digits = -4\n", base), ParseError);

  RunConfig low = base;
  low.digits = 10;
  CHECK_THROWS_AS(low.validate(), Error);
  RunConfig fmt = base;
  fmt.format = "xml";
  CHECK_THROWS_AS(fmt.validate(), InvalidArgument);
}

TEST_CASE("environment precision") {
  setenv("DIRP_DIGITS", "95", 1);
  CHECK(default_config().digits == 95);
  setenv("DIRP_DIGITS", "lots", 1);
  CHECK_THROWS_AS(default_config(), InvalidArgument);
  unsetenv("DIRP_DIGITS");
  CHECK(default_config().digits == 80);
}

TEST_CASE("files") {
  const fs::path dir = fs::temp_directory_path() / "dirp_serialize_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path target = dir / "out.txt";
  write_file_atomic(target.string(), "first\n");
  write_file_atomic(target.string(), "second\n");
  CHECK(slurp(target) == "second\n");
  size_t count = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++count;
  CHECK(count == 1);

  std::ofstream(dir / "run.conf") << "radius = 33\nout = results\n";
  const RunConfig c = load_config((dir / "run.conf").string(), RunConfig{});
  CHECK(c.radius == 33);
  CHECK(c.out == "results");
  CHECK_THROWS_AS(load_config((dir / "missing.conf").string(), RunConfig{}), InvalidArgument);
  fs::remove_all(dir);
}

TEST_CASE("run header") {
  RunConfig c;
  c.seed = 18446744073709551615ULL;
  const Json h = run_header(c);
  std::vector<std::string> keys;
  for (const auto& [k, v] : h.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool", "version", "config", "seed", "precision_digits"});
  CHECK(h["seed"] == "18446744073709551615");
  CHECK(h["precision_digits"] == 80);
  CHECK_FALSE(h["config"].contains("out"));
  // Headers do not depend on the output directory.
  RunConfig d = c;
  d.out = "/elsewhere";
  CHECK(run_header(d).dump() == h.dump());
}
