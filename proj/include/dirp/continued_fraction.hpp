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

#include <optional>
#include <string>
#include <vector>

#include "dirp/certified.hpp"
#include "dirp/direction.hpp"
#include "dirp/quadratic.hpp"

namespace dirp {

struct Convergent {
  mpz_class p;
  mpz_class q;
};

struct CFExpansion {
  /// a_0, a_1, ... (a_0 any integer, the rest positive).
  std::vector<mpz_class> quotients;
  /// p_n / q_n for every emitted quotient.
  std::vector<Convergent> convergents;
  /// Number of quotients rigorously determined by the input.
  size_t certified_depth = 0;
  /// Exact input: any depth can be certified.
  bool unlimited = false;
  /// Rational input whose expansion ended.
  bool terminated = false;
  /// For quadratic irrationals: index where the period starts and the period.
  std::optional<size_t> period_start;
  std::vector<mpz_class> period;
  /// Why fewer quotients than requested were returned.
  std::string note;

  size_t size() const { return quotients.size(); }
};

/// First `depth` quotients of x. Rationals and quadratic irrationals are
/// expanded exactly; other forms run the interval algorithm on rigorous
/// enclosures, refining the precision while it helps.
CFExpansion cf_expand(const RealForm& x, size_t depth, const PrecisionContext& ctx = {});
CFExpansion cf_expand_rational(const mpq_class& x, size_t depth);
CFExpansion cf_expand_quadratic(const QuadraticNumber& x, size_t depth);
/// Quotients shared by every real in [lo, hi].
CFExpansion cf_expand_interval(const mpq_class& lo, const mpq_class& hi, size_t depth);

/// Throws DepthNotCertified unless cf certifies at least `depth` quotients.
void require_certified_depth(const CFExpansion& cf, size_t depth);

struct BoundedQuotientReport {
  mpz_class max_quotient;
  /// Index of the first occurrence (a_0 excluded from the search).
  size_t max_index = 0;
  size_t depth_examined = 0;
  mpz_class threshold;
  bool exceeds_threshold = false;
  std::string verdict;
};

/// Largest certified quotient a_n, n >= 1, compared against the threshold B.
BoundedQuotientReport bounded_quotient_report(const CFExpansion& cf, const mpz_class& bound_window);

}  // namespace dirp
