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

#include "dirp/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

namespace {

long positive_long(const std::string& key, const std::string& value) {
  const mpz_class v = parse_integer(value);
  if (v <= 0 || !v.fits_slong_p()) throw InvalidArgument(key + " must be a positive integer");
  return v.get_si();
}

}  // namespace

void RunConfig::validate() const {
  precision().validate();
  if (radius < 1) throw InvalidArgument("radius must be positive");
  if (grid < 64) throw InvalidArgument("grid must be at least 64");
  if (out.empty()) throw InvalidArgument("output directory must not be empty");
  if (format != "json" && format != "csv" && format != "both") {
    throw InvalidArgument("format must be json, csv or both");
  }
}

PrecisionContext RunConfig::precision() const {
  PrecisionContext ctx;
  ctx.working_digits = digits;
  ctx.max_digits = max_digits;
  return ctx;
}

std::string RunConfig::to_text() const {
  std::ostringstream s;
  s << "digits = " << digits << "\n"
    << "max_digits = " << max_digits << "\n"
    << "radius = " << radius << "\n"
    << "grid = " << grid << "\n"
    << "seed = " << seed << "\n"
    << "out = " << out << "\n"
    << "format = " << format << "\n";
  return s.str();
}

RunConfig default_config() {
  RunConfig c;
  if (const char* env = std::getenv("DIRP_DIGITS")) {
    try {
      c.digits = positive_long("DIRP_DIGITS", env);
    } catch (const Error& e) {
      throw InvalidArgument(std::string("DIRP_DIGITS: ") + e.what());
    }
  }
  return c;
}

RunConfig parse_config(const std::string& text, RunConfig c) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(number) + ": ";
    if (eq == std::string::npos) throw ParseError(where + "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "digits") {
        c.digits = positive_long(key, value);
      } else if (key == "max_digits") {
        c.max_digits = positive_long(key, value);
      } else if (key == "radius") {
        c.radius = positive_long(key, value);
      } else if (key == "grid") {
        c.grid = positive_long(key, value);
      } else if (key == "seed") {
        const mpz_class v = parse_integer(value);
        if (v < 0 || !v.fits_ulong_p()) throw InvalidArgument("seed must be a nonnegative 64-bit integer");
        c.seed = v.get_ui();
      } else if (key == "out") {
        c.out = value;
      } else if (key == "format") {
        c.format = value;
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      throw ParseError(where + e.what());
    }
  }
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
    out << content;
    if (!out) throw InvalidArgument("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace dirp
