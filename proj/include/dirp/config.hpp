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

#pragma once

// Run configuration. The file format is one "key = value" pair per line;
// '#' starts a comment. Keys: digits, max_digits, radius, grid, seed, out,
// format.

#include <cstdint>
#include <string>

#include "dirp/certified.hpp"

namespace dirp {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  long digits = 80;
  long max_digits = 100000;
  long radius = 100;
  long grid = 4096;
  uint64_t seed = 20240101;
  std::string out = ".";
  /// json, csv or both.
  std::string format = "json";

  void validate() const;
  PrecisionContext precision() const;
  /// The same key = value text the loader reads.
  std::string to_text() const;
};

/// Defaults, with DIRP_DIGITS (if set) replacing the default precision.
RunConfig default_config();
/// Applies the pairs in `text` on top of `base`. Errors carry the line number.
RunConfig parse_config(const std::string& text, RunConfig base);
RunConfig load_config(const std::string& path, RunConfig base);

/// Writes through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace dirp
