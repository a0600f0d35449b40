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
#include <random>

#include "dirp/errors.hpp"
#include "dirp/lattice.hpp"
#include "dirp/numeric_text.hpp"

using namespace dirp;

namespace {

const PrecisionContext kCtx{};
const mpfr_prec kBits = kCtx.working_bits();

// Values from tests/oracles/diophantine_oracle.py (mpmath, 80 digits).
bool matches(const CertifiedReal& x, const char* oracle, const char* tol = "1e-28") {
  return (x.enclosure() - Interval::from_mpq(parse_rational(oracle), kBits)).abs().hi_rational() <=
         parse_rational(tol);
}

Direction golden() { return Direction::parse("dir:[1, quad:(1+sqrt5)/2]"); }

}  // namespace

TEST_CASE("golden direction minima") {
  const LatticeSearchResult r10 = lattice_min(golden(), 10, 1, NormKind::kEuclidean, kCtx);
  CHECK(matches(r10.minimum, "0.850661548011145287213171155806"));
  CHECK(r10.argmin == FreqVector{8, -5});
  const LatticeSearchResult r100 = lattice_min(golden(), 100, 1, NormKind::kEuclidean, kCtx);
  CHECK(matches(r100.minimum, "0.850650813218251565552540577034"));
  CHECK(r100.argmin == FreqVector{55, -34});
  const LatticeSearchResult r1000 = lattice_min(golden(), 1000, 1, NormKind::kEuclidean, kCtx);
  CHECK(matches(r1000.minimum, "0.850650808352361622646837966693"));
  CHECK(r1000.argmin == FreqVector{610, -377});
  CHECK_FALSE(r1000.exact_zero_witness);
  CHECK(r1000.digits_used == 80);

  // Nonincreasing in R and above |alpha|/sqrt5.
  const Interval limit = golden().norm(kBits) / Interval::sqrt_of(5, kBits);
  CHECK(r100.minimum.enclosure().hi_rational() <= r10.minimum.enclosure().lo_rational());
  CHECK(r1000.minimum.enclosure().hi_rational() <= r100.minimum.enclosure().lo_rational());
  CHECK(r1000.minimum.enclosure().lo_rational() > limit.hi_rational());
}

TEST_CASE("sqrt2 direction") {
  const Direction alpha = Direction::parse("dir:[quad:sqrt2, 1]");
  const Interval expected = Interval::from_integer(2, kBits) - Interval::sqrt_of(2, kBits);
  for (long R : {100L, 200L}) {
    const LatticeSearchResult r = lattice_min(alpha, R, 1, NormKind::kEuclidean, kCtx);
    CHECK((r.minimum.enclosure() - expected).abs().hi_rational() <= parse_rational("1e-70"));
    CHECK(r.argmin == FreqVector{1, -1});
    CHECK(r.minimum.enclosure().lo_rational() >= mpq_class(1, 3));
  }
}

TEST_CASE("rational directions produce exact zero witnesses") {
  const LatticeSearchResult r = lattice_min(Direction::parse("dir:[1, 0]"), 20, 1, NormKind::kEuclidean, kCtx);
  REQUIRE(r.exact_zero_witness);
  CHECK(*r.exact_zero_witness == FreqVector{0, 1});
  CHECK(r.minimum.enclosure().is_point());
  CHECK(r.minimum.to_double() == 0);
  const LatticeSearchResult s = lattice_min(Direction::parse("dir:[2, 3]"), 20, 1, NormKind::kEuclidean, kCtx);
  REQUIRE(s.exact_zero_witness);
  CHECK(*s.exact_zero_witness == FreqVector{3, -2});
}

TEST_CASE("max norm") {
  const LatticeSearchResult r = lattice_min(golden(), 100, 1, NormKind::kMax, kCtx);
  CHECK(matches(r.minimum, "0.618033988749894848204586834366"));
  CHECK(r.argmin == FreqVector{1, -1});
  CHECK(parse_norm_kind("max") == NormKind::kMax);
  CHECK_THROWS_AS(parse_norm_kind("l3"), ParseError);
}

TEST_CASE("agrees with a naive search on random directions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const long D = 2 + static_cast<long>(rng() % 40);
    if (is_perfect_square(D)) continue;
    const long a = 1 + static_cast<long>(rng() % 7);
    const std::string spec = "dir:[" + std::to_string(a) + ", quad:sqrt" + std::to_string(D) + "]";
    const Direction alpha = Direction::parse(spec);
    const mpq_class sigma(1 + static_cast<long>(rng() % 3), 2);
    const long R = 40;
    const LatticeSearchResult r = lattice_min(alpha, R, sigma, NormKind::kEuclidean, kCtx);
    double best = 1e300;
    const double x = a, y = std::sqrt(static_cast<double>(D));
    for (long i = -R; i <= R; ++i) {
      for (long j = -R; j <= R; ++j) {
        const long n2 = i * i + j * j;
        if (n2 == 0 || n2 > R * R) continue;
        best = std::min(best, std::pow(std::sqrt(static_cast<double>(n2)), sigma.get_d()) * std::abs(i * x + j * y));
      }
    }
    CAPTURE(spec);
    CHECK(r.minimum.to_double() == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("half-ball enumeration") {
  long count = 0;
  for_each_half_ball(2, 10, NormKind::kEuclidean, [&](const std::vector<long>& k) {
    CHECK((k[0] > 0 || (k[0] == 0 && k[1] > 0)));
    ++count;
  });
  // 317 lattice points in the closed disc of radius 10, minus the origin, halved.
  CHECK(count == 158);
  long cube = 0;
  for_each_half_ball(3, 2, NormKind::kMax, [&](const std::vector<long>&) { ++cube; });
  CHECK(cube == (125 - 1) / 2);
}

TEST_CASE("profile queries match direct searches") {
  const Direction alpha = golden();
  const LatticeProfile profile(alpha, 64, 1, kCtx);
  for (long R : {1L, 5L, 13L, 40L, 64L}) {
    const LatticeSearchResult r = lattice_min(alpha, R, 1, NormKind::kEuclidean, kCtx);
    const Interval p = profile.min_within_squared(mpz_class(R * R));
    CHECK(p.overlaps(r.minimum.enclosure()));
    CHECK(profile.argmin_within_squared(mpz_class(R * R)) == r.argmin);
  }
  CHECK_FALSE(profile.has_zero());
}

TEST_CASE("systems of linear forms") {
  LinearFormSystem sys;
  sys.forms.push_back(Direction::parse("dir:[quad:sqrt2, quad:sqrt3]"));
  const SystemSearchResult r = system_lattice_min(sys, 30, kCtx);
  CHECK(matches(r.minimum, "0.0182239464753895470442753232005"));
  CHECK(r.argmin.canonical_sign() == FreqVector{5, 4});
  CHECK(r.exponent == 2);
  CHECK(r.dirichlet_consistent);
  CHECK(r.minimum.enclosure().positive());

  LinearFormSystem one;
  one.forms.push_back(Direction::parse("dir:[quad:(1+sqrt5)/2]"));
  const SystemSearchResult g = system_lattice_min(one, 100, kCtx);
  CHECK(matches(g.minimum, "0.381966011250105151795413165634"));
  CHECK(g.argmin.canonical_sign() == FreqVector{1});
  // The absolute variant over (k1, x) is the lattice minimum of (1, phi) in
  // the max norm with exponent (d - l)/l = 1.
  const LatticeSearchResult m = lattice_min(golden(), 100, 1, NormKind::kMax, kCtx);
  CHECK(g.absolute_minimum.enclosure().overlaps(m.minimum.enclosure()));

  LinearFormSystem bad;
  bad.forms.push_back(Direction::parse("dir:[1, 2]"));
  bad.forms.push_back(Direction::parse("dir:[1]"));
  CHECK_THROWS_AS(bad.validate(), DimensionMismatch);
}
