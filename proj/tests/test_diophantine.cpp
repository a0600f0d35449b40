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

#include <cmath>

#include "dirp/diophantine.hpp"
#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

using namespace dirp;

namespace {

const PrecisionContext kCtx{};
const mpfr_prec kBits = kCtx.working_bits();

}  // namespace

TEST_CASE("delta exponents") {
  const ExponentPair one = delta_from_sigma(1);
  CHECK(one.grad == mpq_class(1, 2));
  CHECK(one.dir == mpq_class(1, 2));
  const ExponentPair pi = delta_from_sigma(7);
  CHECK(pi.grad == mpq_class(7, 8));
  CHECK(pi.dir == mpq_class(1, 8));
  const ExponentPair log2 = delta_from_sigma(mpq_class(13, 5));
  CHECK(log2.grad == mpq_class(13, 18));
  CHECK(log2.dir == mpq_class(5, 18));
  CHECK_THROWS_AS(delta_from_sigma(0), NonpositiveSigma);
  CHECK_THROWS_AS(delta_from_sigma(-1), NonpositiveSigma);

  // grad + dir = 1 and dir = 1/(sigma + 1) for any sigma.
  for (long p = 1; p <= 20; ++p) {
    for (long q = 1; q <= 7; ++q) {
      const mpq_class sigma = make_rational(p, q);
      const ExponentPair e = delta_from_sigma(sigma);
      CHECK(e.grad + e.dir == 1);
      CHECK(e.dir * (sigma + 1) == 1);
    }
  }
}

TEST_CASE("Roth exponents and presets") {
  const ExponentPair r = roth_exponents(mpq_class(1, 10));
  CHECK(r.grad == mpq_class(3, 5));
  CHECK(r.dir == mpq_class(2, 5));
  CHECK_THROWS_AS(roth_exponents(mpq_class(1, 2)), InvalidArgument);

  CHECK(exponent_preset("thm1", 3, 1).grad == 2);
  CHECK(exponent_preset("thm1", 3, 1).dir == 1);
  CHECK(exponent_preset("thm2", 4, 2).grad == 3);
  CHECK(exponent_preset("thm2", 4, 2).dir == 2);
  CHECK(exponent_preset("improved", 4, 2).grad == 2);
  CHECK(exponent_preset("improved", 4, 2).dir == 2);
  CHECK(exponent_preset("delta:7", 2, 1).dir == mpq_class(1, 8));
  CHECK(exponent_preset("roth:1/10", 2, 1).dir == mpq_class(2, 5));
  CHECK_THROWS_AS(exponent_preset("thm9", 2, 1), ParseError);
  CHECK_THROWS_AS(exponent_preset("thm1", 3, 2), InvalidArgument);
}

TEST_CASE("Hurwitz witnesses for the golden direction are Fibonacci vectors") {
  const Direction alpha = Direction::parse("dir:[1, quad:(1+sqrt5)/2]");
  const HurwitzReport r = hurwitz_witnesses(alpha, 15, kCtx);
  REQUIRE(r.witnesses.size() == 15);
  const Interval limit = alpha.norm(kBits) / Interval::sqrt_of(5, kBits);
  CHECK(r.envelope.enclosure().overlaps(limit));
  double previous = 1;
  for (const auto& w : r.witnesses) {
    CHECK(w.exact);
    // Consecutive Fibonacci numbers: |F_(n+1)^2 - F_(n+1) F_n - F_n^2| = 1.
    const mpz_class f = w.k[0], g = -w.k[1];
    CHECK(abs(f * f - f * g - g * g) == 1);
    const double err = std::abs((w.product.enclosure() - limit).to_double());
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("Hurwitz witnesses for sqrt2") {
  const Direction alpha = Direction::parse("dir:[quad:sqrt2, 1]");
  const HurwitzReport r = hurwitz_witnesses(alpha, 10, kCtx);
  // Exact test over the convergents: at least every second one passes.
  CHECK(r.convergents_tested <= 20);
  CHECK(r.witnesses.size() == 10);
  CHECK(r.witnesses.front().k == FreqVector{1, -1});
  for (const auto& w : r.witnesses) {
    const mpz_class q = w.k[0], p = -w.k[1];
    CHECK(abs(p * p - 2 * q * q) == 1);
    CHECK(w.product.enclosure().hi_rational() <= r.envelope.enclosure().hi_rational() * 2);
  }
}

TEST_CASE("Hurwitz errors") {
  CHECK_THROWS_AS(hurwitz_witnesses(Direction::parse("dir:[1, 2]"), 3, kCtx), RationalRatio);
  CHECK_THROWS_AS(hurwitz_witnesses(Direction::parse("dir:[1, 2, 3]"), 3, kCtx), DimensionMismatch);
  CHECK_THROWS_AS(hurwitz_witnesses(Direction::parse("dir:[0, quad:sqrt2]"), 3, kCtx), InvalidArgument);
}

TEST_CASE("Markov constants") {
  const mpz_class squares[] = {5, 8};
  for (int level = 1; level <= 2; ++level) {
    const MarkovConstant m = markov_bounds(level, kCtx);
    CHECK(m.level == level);
    CHECK(m.value.enclosure().overlaps(Interval::sqrt_of(squares[level - 1], kBits)));
  }
  const MarkovConstant m3 = markov_bounds(3, kCtx);
  CHECK(format_real(m3.exact) == "quad:sqrt221/5");
  CHECK(m3.value.enclosure().overlaps(Interval::sqrt_of(221, kBits) / Interval::from_integer(5, kBits)));
  CHECK(m3.value.to_decimal(30).value == "2.97321374946370110452240164279");
  CHECK_THROWS_AS(markov_bounds(0, kCtx), UnsupportedLevel);
  CHECK_THROWS_AS(markov_bounds(4, kCtx), UnsupportedLevel);

  const Direction alpha = Direction::parse("dir:[1, quad:sqrt2]");
  const Interval env = markov_envelope(alpha, 2, kCtx).enclosure();
  CHECK(env.overlaps(Interval::sqrt_of(3, kBits) / Interval::sqrt_of(8, kBits)));
}
