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

#include "dirp/direction.hpp"
#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

using namespace dirp;

namespace {

// An MPFR constant at `bits`, rounded down and up.
Interval mpfr_constant(int (*fn)(mpfr_ptr, mpfr_rnd_t), mpfr_prec bits) {
  Mpfr lo(bits), hi(bits);
  fn(lo.get(), MPFR_RNDD);
  fn(hi.get(), MPFR_RNDU);
  mpq_class a, b;
  mpfr_get_q(a.get_mpq_t(), lo.get());
  mpfr_get_q(b.get_mpq_t(), hi.get());
  return Interval::hull(a, b, bits);
}

int mpfr_e(mpfr_ptr x, mpfr_rnd_t rnd) {
  mpfr_set_ui(x, 1, rnd);
  return mpfr_exp(x, x, rnd);
}

}  // namespace

TEST_CASE("real forms parse and format canonically") {
  for (const char* text : {"rat:3/2", "quad:(1+sqrt5)/2", "quad:sqrt2", "quad:-3sqrt7/5", "dec:1.41421356",
                           "liouville:10", "const:e", "const:pi", "const:log2"}) {
    CAPTURE(text);
    CHECK(format_real(parse_real(text)) == text);
  }
  CHECK(format_real(parse_real("0.25")) == "rat:1/4");
  CHECK(format_real(parse_real("cf:[1,2,2,2]")) == "rat:17/12");
  CHECK(format_real(parse_real("cf:[1,(2)]")) == "quad:sqrt2");
  CHECK(format_real(parse_real("cf:[1,(1)]")) == "quad:(1+sqrt5)/2");
  CHECK(format_real(parse_real("quad:sqrt8")) == "quad:2sqrt2");
  CHECK(format_real(parse_real("quad:sqrt9")) == "rat:3");
}

TEST_CASE("malformed real forms raise ParseError") {
  for (const char* text : {"", "quad:(1+sqrt)/2", "rat:1/0", "cf:[]", "const:tau", "liouville:1", "dec:abc", "foo:1"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_real(text), Error);
  }
}

TEST_CASE("named constants agree with MPFR") {
  const mpfr_prec bits = 3000;
  CHECK(enclose(parse_real("const:pi"), bits).overlaps(mpfr_constant(mpfr_const_pi, bits)));
  CHECK(enclose(parse_real("const:log2"), bits).overlaps(mpfr_constant(mpfr_const_log2, bits)));
  CHECK(enclose(parse_real("const:e"), bits).overlaps(mpfr_constant(mpfr_e, bits)));
  // The stored digits are finite, so the enclosure saturates.
  CHECK_FALSE(refinable_without_limit(parse_real("const:e")));
  CHECK(refinable_without_limit(parse_real("liouville:10")));
  CHECK(is_transcendental(parse_real("const:pi")));
  CHECK_FALSE(is_transcendental(parse_real("quad:sqrt2")));
}

TEST_CASE("Liouville constant enclosure") {
  // sum_{n<=3} 10^-n! = 0.110001, next term 10^-24.
  const Interval x = enclose(parse_real("liouville:10"), 256);
  const mpq_class head = parse_rational("0.110001");
  CHECK(x.lo_rational() >= head);
  CHECK(x.hi_rational() <= head + parse_rational("2e-24"));
}

TEST_CASE("ratio stays exact inside one quadratic field") {
  const RealForm r = ratio(parse_real("quad:(1+sqrt5)/2"), parse_real("quad:sqrt5"));
  const auto q = as_quadratic(r);
  REQUIRE(q);
  CHECK(*q == QuadraticNumber(mpq_class(1, 2), mpq_class(1, 10), 5));
  CHECK(as_rational(ratio(parse_real("3/4"), parse_real("1/2"))) == mpq_class(3, 2));
  CHECK(std::holds_alternative<EnclosureForm>(ratio(parse_real("const:e"), parse_real("quad:sqrt2"))));
}

TEST_CASE("directions") {
  const DirectionSpec s = parse_direction("dir:[1, quad:(1+sqrt5)/2]");
  CHECK(s.dim() == 2);
  CHECK(s.to_string() == "dir:[1, quad:(1+sqrt5)/2]");
  const DirectionSpec t = parse_direction("slope:[quad:sqrt2, quad:sqrt3]");
  CHECK(t.dim() == 3);
  CHECK(t.normalized_first_one);
  CHECK_THROWS_AS(parse_direction("dir:[1"), ParseError);

  const Direction golden(s);
  const Interval n = golden.norm(256);
  // |alpha|^2 = (5 + sqrt5)/2.
  CHECK(n.square().overlaps(QuadraticNumber(mpq_class(5, 2), mpq_class(1, 2), 5).enclose(256)));
}

TEST_CASE("normalization to (1, beta)") {
  const NormalizedDirection n = normalize_first_one(parse_direction("dir:[2, quad:2sqrt2]"));
  CHECK_FALSE(n.permuted);
  CHECK(format_real(n.spec.entries[1].form) == "quad:sqrt2");
  const NormalizedDirection p = normalize_first_one(parse_direction("dir:[0, quad:sqrt3]"));
  CHECK(p.permuted);
  CHECK(p.leading_index == 1);
}

TEST_CASE("exact zero decisions") {
  const DirectionSpec rational = parse_direction("dir:[1, 0]");
  CHECK(proven_zero_inner_product(FreqVector{0, 5}, rational));
  const DirectionSpec radicals = parse_direction("dir:[quad:sqrt8, quad:sqrt2]");
  CHECK(proven_zero_inner_product(FreqVector{1, -2}, radicals));
  CHECK_FALSE(proven_zero_inner_product(FreqVector{1, -1}, radicals));
  const DirectionSpec same = parse_direction("dir:[const:e, const:e]");
  CHECK(proven_zero_inner_product(FreqVector{3, -3}, same));
}

TEST_CASE("inner products refine through cancellation") {
  const Direction sqrt2 = Direction::parse("dir:[quad:sqrt2, 1]");
  const InnerProduct ip = inner_product(FreqVector{470832, -665857}, sqrt2, PrecisionContext{});
  CHECK(ip.value.negative());
  CHECK(resolved(ip.value));
  const InnerProduct zero = inner_product(FreqVector{0, 0}, sqrt2, PrecisionContext{});
  CHECK(zero.exact_zero);

  // A decimal literal cannot separate k1 + k2 x from zero when the literal
  // itself is a good approximation of -k1/k2.
  PrecisionContext ctx;
  ctx.max_digits = 200;
  const Direction coarse = Direction::parse("dir:[1, dec:0.5]");
  CHECK_THROWS_AS(inner_product(FreqVector{1, -2}, coarse, ctx), PrecisionExhausted);
}
