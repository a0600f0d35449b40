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

// The named single-wave families: Fibonacci waves, Liouville waves and
// continued-fraction convergent waves, plus tables of their ratios.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dirp/continued_fraction.hpp"
#include "dirp/diophantine.hpp"
#include "dirp/direction.hpp"
#include "dirp/spectral.hpp"

namespace dirp {

enum class Family { kFibonacci, kLiouville, kConvergentWave };

std::string to_string(Family family);
Family parse_family(const std::string& text);

struct FamilyMember {
  Family family = Family::kFibonacci;
  long index = 0;
  FreqVector frequency;
  TrigPoly poly{2};
  /// Human-readable expected behaviour.
  std::string expected;
  /// Liouville: the upper bound 6 b^(N!) for ||grad f_N||.
  std::optional<mpz_class> grad_bound;
  /// Convergent wave: p_n / q_n of the slope.
  std::optional<Convergent> convergent;
};

/// sin(F_(n+1) x - F_n y), n >= 1.
FamilyMember fibonacci_family(long n);
/// Closed form sqrt(F_(n+1)^2/F_n^2 + 1) |F_(n+1)/F_n - phi| F_n^2.
Interval fibonacci_closed_form_ratio(long n, mpfr_prec bits);

/// sin(k.x) with k = (sum_{n<=N} b^(N!-n!), -b^(N!)), 1 <= N <= 4.
FamilyMember liouville_family(long N, long base = 10);

/// sin(k_n.x) with k_n = (p_n, -q_n), p_n/q_n the n-th convergent of
/// beta = alpha_2/alpha_1.
FamilyMember convergent_wave(const Direction& alpha, long n, const PrecisionContext& ctx = {});

/// "fib:10", "liouville:3", "liouville:3:7", "cwave:12" (the last needs a direction).
FamilyMember family_member_from_text(const std::string& text, const Direction* alpha = nullptr,
                                     const PrecisionContext& ctx = {});

struct SharpnessRow {
  Family family = Family::kFibonacci;
  long index = 0;
  FreqVector k;
  CertifiedReal abs_k;
  /// Signed <k, alpha>.
  CertifiedReal inner;
  CertifiedReal ratio;
  std::optional<CertifiedReal> limit;
};

struct SharpnessTable {
  std::vector<SharpnessRow> rows;
  ExponentPair exponents;
  /// "not bounded below" when the minimum over each third of the rows falls
  /// by at least 20% from the third before.
  std::string verdict;
  /// Fibonacci only: consecutive |k| ratios stay below 2 after the first rows.
  std::optional<bool> dyadic_cover;
};

SharpnessTable sharpness_table(const Direction& alpha, Family family, long n_max, const ExponentPair& exponents,
                               const PrecisionContext& ctx = {});

/// CSV with header family,index,k,abs_k,inner,ratio,limit.
std::string to_csv(const SharpnessTable& table, int digits);

}  // namespace dirp
