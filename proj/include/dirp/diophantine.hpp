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
#include <vector>

#include "dirp/certified.hpp"
#include "dirp/continued_fraction.hpp"
#include "dirp/direction.hpp"
#include "dirp/freq_vector.hpp"

namespace dirp {

struct ExponentPair {
  mpq_class grad;
  mpq_class dir;
};

/// delta = 1/(sigma+1) and the exponents (1 - delta, delta) for a direction
/// with |<k, alpha>| >= c |k|^-sigma.
ExponentPair delta_from_sigma(const mpq_class& sigma);
/// (1/2 + eps, 1/2 - eps) for algebraic slopes, 0 < eps < 1/2.
ExponentPair roth_exponents(const mpq_class& eps);

/// Named exponent choices for d dimensions and l directions:
///   thm1 -> (d-1, 1), thm2 -> (d-1, l), improved -> (d-l, l),
///   delta:sigma -> delta_from_sigma(sigma), roth:eps -> roth_exponents(eps).
ExponentPair exponent_preset(const std::string& name, int d, int ell);

struct HurwitzWitness {
  FreqVector k;
  Convergent convergent;
  /// |k| |<k, alpha>|.
  CertifiedReal product;
  /// Decided in exact arithmetic (single quadratic field) or by enclosures.
  bool exact = false;
};

struct HurwitzReport {
  std::vector<HurwitzWitness> witnesses;
  /// Convergents tried, including those failing the test.
  size_t convergents_tested = 0;
  /// |alpha| / sqrt 5.
  CertifiedReal envelope;
};

/// Convergents p/q of alpha_1/alpha_2 with |alpha_1/alpha_2 - p/q| <= 1/(sqrt5 q^2),
/// reported as k = (q, -p).
HurwitzReport hurwitz_witnesses(const Direction& alpha, size_t count, const PrecisionContext& ctx = {});

struct MarkovConstant {
  int level = 0;
  RealForm exact;
  CertifiedReal value;
};
/// sqrt 5, sqrt 8, sqrt 221 / 5 for levels 1, 2, 3.
MarkovConstant markov_bounds(int level, const PrecisionContext& ctx = {});
/// |alpha| / L(level), an upper bound for the optimal constant for
/// directions outside the corresponding equivalence classes.
CertifiedReal markov_envelope(const Direction& alpha, int level, const PrecisionContext& ctx = {});

}  // namespace dirp
