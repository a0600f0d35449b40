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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dirp {

/// Exact value of a decimal literal ("-12.5e-3", "0.1"). Throws ParseError.
mpq_class parse_decimal_exact(std::string_view text);
/// num/den in lowest terms, den != 0.
mpq_class make_rational(const mpz_class& num, const mpz_class& den);
/// "p/q", an integer, or a decimal literal, exactly.
mpq_class parse_rational(std::string_view text);
mpz_class parse_integer(std::string_view text);
/// Terminating decimal expansion when one exists ("0.5", "-3"), otherwise "p/q".
std::string rational_to_string(const mpq_class& q);

std::string trim(std::string_view s);
/// Splits on `sep` at bracket depth zero; (), [] and {} nest.
std::vector<std::string> split_top_level(std::string_view s, char sep);

}  // namespace dirp
