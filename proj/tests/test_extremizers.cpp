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
#include <sstream>

#include "dirp/errors.hpp"
#include "dirp/extremizers.hpp"
#include "dirp/numeric_text.hpp"

using namespace dirp;

namespace {

const PrecisionContext kCtx{};
const mpfr_prec kBits = kCtx.working_bits();

Direction golden() { return Direction::parse("dir:[1, quad:(1+sqrt5)/2]"); }

double product(const FamilyMember& m, const Direction& alpha) {
  const Interval ip = inner_product(m.frequency, alpha, kCtx).value.abs();
  return (Interval::sqrt_of(m.frequency.norm_squared(), kBits) * ip).to_double();
}

}  // namespace

TEST_CASE("Fibonacci family") {
  CHECK(fibonacci_family(1).frequency == FreqVector{1, -1});
  CHECK(fibonacci_family(10).frequency == FreqVector{89, -55});
  CHECK(fibonacci_family(10).poly.is_real_valued());
  CHECK_THROWS_AS(fibonacci_family(0), InvalidArgument);

  // The closed form against the direct spectral evaluation, n = 1..30.
  const Direction alpha = golden();
  for (long n = 1; n <= 30; ++n) {
    const Interval closed = fibonacci_closed_form_ratio(n, kBits);
    const Interval direct = poincare_ratio(fibonacci_family(n).poly, alpha, 1, 1, kCtx).enclosure();
    CAPTURE(n);
    CHECK((closed - direct).abs().hi_rational() <= parse_rational("1e-70"));
  }
  // Exact arithmetic (mpmath oracle): n = 10 gives 0.850650809062...
  CHECK(fibonacci_closed_form_ratio(10, kBits).to_double() == doctest::Approx(0.850650809062).epsilon(1e-11));
}

TEST_CASE("Liouville family") {
  CHECK(liouville_family(1).frequency == FreqVector{1, -10});
  CHECK(liouville_family(2).frequency == FreqVector{11, -100});
  CHECK(liouville_family(3).frequency == FreqVector{110001, -1000000});
  const FamilyMember f4 = liouville_family(4);
  CHECK(f4.frequency[1] == -mpz_class("1000000000000000000000000"));
  CHECK(f4.frequency[0] == mpz_class("110001000000000000000001"));
  CHECK(*liouville_family(3).grad_bound == 6000000);
  CHECK(liouville_family(2, 7).frequency == FreqVector{8, -49});
  CHECK_THROWS_AS(liouville_family(5), PrecisionCapExceeded);
  CHECK_THROWS_AS(liouville_family(2, 1), InvalidArgument);

  const Interval pi_root2 = Interval::pi(kBits) * Interval::sqrt_of(2, kBits);
  for (long N = 1; N <= 4; ++N) {
    const FamilyMember m = liouville_family(N);
    CHECK(mass_sum(m.poly) == mpq_class(1, 2));
    CHECK(l2_norm(m.poly, kCtx).enclosure().overlaps(pi_root2));
    CHECK(grad_norm(m.poly, kCtx).enclosure().hi_rational() <= mpq_class(*m.grad_bound));
  }
}

TEST_CASE("convergent waves") {
  const Direction g = golden();
  for (long n = 0; n < 12; ++n) {
    const FamilyMember w = convergent_wave(g, n, kCtx);
    // Fibonacci frequencies up to sign and order.
    const FreqVector fib = fibonacci_family(n + 1).frequency;
    const bool same = w.frequency.canonical_sign() == fib.canonical_sign() ||
                      FreqVector{-w.frequency[1].get_si(), w.frequency[0].get_si()}.canonical_sign() ==
                          fib.canonical_sign();
    CAPTURE(n);
    CHECK(same);
  }

  const Direction e = Direction::parse("dir:[1, const:e]");
  const FamilyMember e19 = convergent_wave(e, 19, kCtx);
  REQUIRE(e19.convergent);
  CHECK(e19.convergent->p == 28245729);
  CHECK(e19.convergent->q == 10391023);
  CHECK(product(e19, e) == doctest::Approx(0.192657148836).epsilon(1e-10));
  CHECK(product(convergent_wave(e, 12, kCtx), e) == doctest::Approx(1.45533).epsilon(1e-5));
  CHECK(product(convergent_wave(e, 13, kCtx), e) == doctest::Approx(0.26219059716777).epsilon(1e-10));

  const Direction s = Direction::parse("dir:[1, quad:sqrt2]");
  const FamilyMember s6 = convergent_wave(s, 6, kCtx);
  CHECK(s6.convergent->p == 239);
  CHECK(s6.convergent->q == 169);
  CHECK(product(s6, s) == doctest::Approx(0.612371542324).epsilon(1e-11));

  CHECK_THROWS_AS(convergent_wave(Direction::parse("dir:[1, 3/2]"), 2, kCtx), RationalRatio);
}

TEST_CASE("family text forms") {
  CHECK(family_member_from_text("fib:10").frequency == FreqVector{89, -55});
  CHECK(family_member_from_text("liouville:2:7").frequency == FreqVector{8, -49});
  const Direction g = golden();
  CHECK(family_member_from_text("cwave:3", &g, kCtx).family == Family::kConvergentWave);
  CHECK_THROWS_AS(family_member_from_text("cwave:3"), InvalidArgument);
  CHECK_THROWS_AS(family_member_from_text("fib"), ParseError);
  CHECK_THROWS_AS(family_member_from_text("wave:3"), ParseError);
  CHECK(parse_family("liouville") == Family::kLiouville);
}

TEST_CASE("sharpness tables") {
  const Direction g = golden();
  const SharpnessTable fib = sharpness_table(g, Family::kFibonacci, 20, {1, 1}, kCtx);
  REQUIRE(fib.rows.size() == 20);
  REQUIRE(fib.dyadic_cover);
  CHECK(*fib.dyadic_cover);
  CHECK(fib.verdict.find("bounded below") != std::string::npos);
  const Interval limit = g.norm(kBits) / Interval::sqrt_of(5, kBits);
  double previous = 1;
  for (const auto& row : fib.rows) {
    REQUIRE(row.limit);
    CHECK(row.limit->enclosure().overlaps(limit));
    const double err = std::abs((row.ratio.enclosure() - limit).to_double());
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-6);

  const Direction lv = Direction::parse("dir:[1, liouville:10]");
  const SharpnessTable lt = sharpness_table(lv, Family::kLiouville, 4, {1, 1}, kCtx);
  REQUIRE(lt.rows.size() == 4);
  for (size_t i = 1; i < lt.rows.size(); ++i) {
    CHECK(lt.rows[i].ratio.enclosure().hi_rational() * 10 < lt.rows[i - 1].ratio.enclosure().lo_rational());
  }
  CHECK(lt.verdict.find("inequality fails") != std::string::npos);

  const Direction e = Direction::parse("dir:[1, const:e]");
  const SharpnessTable et = sharpness_table(e, Family::kConvergentWave, 30, {1, 1}, kCtx);
  CHECK(et.verdict.find("inequality fails") != std::string::npos);

  const std::string csv = to_csv(fib, 20);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "family,index,k,abs_k,inner,ratio,limit");
  long lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 20);
}
