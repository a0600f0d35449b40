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

#include <random>

#include "dirp/certified.hpp"
#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

using namespace dirp;

namespace {

bool encloses(const Interval& x, const mpq_class& v) { return x.lo_rational() <= v && v <= x.hi_rational(); }

mpq_class random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 2000001) - 1000000;
  const long den = static_cast<long>(rng() % 999) + 1;
  return mpq_class(num, den);
}

}  // namespace

TEST_CASE("digits and bits") {
  CHECK(digits_to_bits(80) == 274);
  CHECK(bits_to_digits(digits_to_bits(80)) == 80);
}

TEST_CASE("exact inputs give tight enclosures") {
  const Interval third = Interval::from_mpq(mpq_class(1, 3), 128);
  CHECK(encloses(third, mpq_class(1, 3)));
  CHECK_FALSE(third.is_point());
  CHECK(Interval::from_integer(7, 64).is_point());
  const Interval lit = Interval::from_decimal("0.1", 64);
  CHECK(encloses(lit, mpq_class(1, 10)));
  CHECK(Interval::from_decimal("-1e-5", 64).negative());
}

TEST_CASE("arithmetic encloses the exact rational result") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const mpq_class a = random_rational(rng), b = random_rational(rng);
    const Interval x = Interval::from_mpq(a, 60), y = Interval::from_mpq(b, 60);
    CHECK(encloses(x + y, a + b));
    CHECK(encloses(x - y, a - b));
    CHECK(encloses(x * y, a * b));
    if (b != 0) CHECK(encloses(x / y, a / b));
    CHECK(encloses(x.square(), a * a));
    CHECK(encloses(x.abs(), abs(a)));
    CHECK(encloses(x.mul_int(-3), -3 * a));
    CHECK(encloses(Interval::min(x, y), std::min(a, b)));
  }
}

TEST_CASE("pi and square roots against stored digits") {
  const Interval pi = Interval::pi(300);
  const Interval lit = Interval::hull(parse_rational("3.14159265358979323846264338327950288419716939937510"),
                                      parse_rational("3.14159265358979323846264338327950288419716939937511"), 300);
  CHECK(lit.contains(pi));
  const Interval s2 = Interval::sqrt_of(2, 200);
  CHECK(encloses(s2.square(), 2));
  CHECK(encloses(Interval::from_integer(9, 64).sqrt(), 3));
  CHECK(encloses(Interval::from_integer(8, 64).pow(mpq_class(2, 3)), 4));
}

TEST_CASE("division by an interval containing zero is rejected") {
  const Interval z = Interval::hull(-1, 1, 64);
  CHECK_THROWS(Interval::from_integer(1, 64) / z);
}

TEST_CASE("decimal output is a rigorous enclosure") {
  const CertifiedReal third = CertifiedReal::exact(mpq_class(1, 3), 200);
  const auto d = third.to_decimal(20);
  CHECK(d.value == "0.33333333333333333333");
  const mpq_class v = parse_rational(d.value), r = parse_rational(d.radius);
  CHECK(v - r <= mpq_class(1, 3));
  CHECK(mpq_class(1, 3) <= v + r);
  CHECK(CertifiedReal::exact(mpq_class(-5, 2), 64).to_decimal(10).value == "-2.5");
  CHECK(CertifiedReal::exact(mpq_class(1, 1000000000), 64).to_decimal(3).value == "1e-9");
}

TEST_CASE("refinement shrinks the enclosure") {
  const CertifiedReal x(Interval::sqrt_of(2, 64), [](mpfr_prec b) { return Interval::sqrt_of(2, b); });
  const CertifiedReal y = x.refined(512);
  CHECK(y.enclosure().precision() == 512);
  CHECK(x.enclosure().contains(y.enclosure()));
}

TEST_CASE("precision context validation") {
  PrecisionContext ctx;
  CHECK_NOTHROW(ctx.validate());
  ctx.working_digits = 10;
  CHECK_THROWS_AS(ctx.validate(), InvalidArgument);
  ctx.working_digits = 200;
  ctx.max_digits = 100;
  CHECK_THROWS_AS(ctx.validate(), InvalidArgument);
}
