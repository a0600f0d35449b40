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
#include <complex>
#include <numeric>
#include <random>

#include "dirp/diffusion.hpp"
#include "dirp/errors.hpp"

using namespace dirp;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("random variable specs") {
  const RVSpec u = parse_rv("uniform:0:1/2");
  CHECK(u.mean() == mpq_class(1, 4));
  CHECK(u.has_density());
  CHECK(parse_rv(u.to_string()).to_string() == u.to_string());
  const RVSpec a = parse_rv("atoms:[(0.25,1/2),(-0.25,1/2)]");
  CHECK(a.mean() == 0);
  CHECK_FALSE(a.has_density());
  const RVSpec m = parse_rv("mix:1/2@uniform:-0.5:0.5;1/2@atoms:[(0,1)]");
  CHECK(m.mean() == 0);
  CHECK(symmetric_uniform().mean() == 0);
  CHECK_THROWS_AS(parse_rv("uniform:0:1"), InvalidArgument);
  CHECK_THROWS_AS(parse_rv("atoms:[(0,1/2)]"), InvalidArgument);
  CHECK_THROWS_AS(parse_rv("normal:0:1"), ParseError);
  CHECK(parse_pnorm("inf") == PNorm::kInf);
  CHECK_THROWS_AS(parse_pnorm("3"), ParseError);
}

TEST_CASE("measures from random variables") {
  const GridMeasure point = measure_from_rv(parse_rv("atoms:[(0,1)]"), 0.3, 256);
  CHECK(point.weights[0] == doctest::Approx(1.0));
  CHECK(point.mass() == doctest::Approx(1.0).epsilon(1e-15));

  // t = 1 spreads the symmetric uniform law over the whole circle.
  const GridMeasure full = measure_from_rv(symmetric_uniform(), 1.0, 512);
  for (double w : full.weights) CHECK(w == doctest::Approx(1.0 / 512).epsilon(1e-12));

  // uniform(0, 1/2) at t = 0.1: density 20 on [0, 0.05].
  const size_t M = 1024;
  const GridMeasure arc = measure_from_rv(parse_rv("uniform:0:0.5"), 0.1, M);
  CHECK(arc.weights[0] * M == doctest::Approx(10.0));
  for (size_t j = 1; j <= 50; ++j) CHECK(arc.weights[j] * M == doctest::Approx(20.0));
  CHECK(arc.weights[51] * M == doctest::Approx(20.0 * (0.05 * M - 50.5)));
  for (size_t j = 52; j < M; ++j) CHECK(arc.weights[j] == 0);

  // An atom between cell centres is split linearly.
  const GridMeasure split = measure_from_rv(parse_rv("atoms:[(0.25,1)]"), 0.01, 1000);
  CHECK(split.weights[2] == doctest::Approx(0.5));
  CHECK(split.weights[3] == doctest::Approx(0.5));

  CHECK_THROWS_AS(measure_from_rv(symmetric_uniform(), 0, 256), InvalidArgument);
  CHECK_THROWS_AS(measure_from_rv(symmetric_uniform(), 1.5, 256), InvalidArgument);
  CHECK_THROWS_AS(measure_from_rv(symmetric_uniform(), 0.001, 256), UnderResolved);
  CHECK_THROWS_AS(measure_from_rv(symmetric_uniform(), 0.5, 32), InvalidArgument);
}

TEST_CASE("convolution") {
  const size_t M = 256;
  std::mt19937_64 rng(4);
  const GridMeasure a = random_grid_measure(M, rng);
  CHECK(max_abs_diff(convolve(a, GridMeasure::delta(M)).weights, a.weights) < 1e-15);
  const GridMeasure uu = convolve(GridMeasure::uniform(M), GridMeasure::uniform(M));
  CHECK(max_abs_diff(uu.weights, GridMeasure::uniform(M).weights) < 1e-15);
  CHECK_THROWS_AS(convolve(a, GridMeasure::uniform(128)), GridMismatch);

  // FFT and direct summation agree.
  for (int i = 0; i < 5; ++i) {
    const GridMeasure x = random_grid_measure(M, rng), y = random_grid_measure(M, rng);
    CHECK(max_abs_diff(convolve_direct(x, y).weights, convolve_fft(x, y).weights) < 1e-14);
  }
  // Delta at cell 3 convolved with delta at cell 5 is delta at cell 8.
  CHECK(convolve(GridMeasure::delta(M, 3), GridMeasure::delta(M, 5)).weights[8] == doctest::Approx(1.0));
}

TEST_CASE("arc convolved with itself is a triangle") {
  const size_t M = 2048;
  const GridMeasure arc = measure_from_rv(parse_rv("uniform:0:0.5"), 0.2, M);  // density 10 on [0, 0.1]
  const GridMeasure tri = convolve(arc, arc);
  CHECK(std::abs(tri.mass() - 1) < 1e-12);
  // Triangle on [0, 0.2] peaking at 0.1 with height 10.
  double worst = 0;
  for (size_t j = 4; j + 4 < M; ++j) {
    const double x = static_cast<double>(j) / M;
    const double expected = x <= 0.1 ? 100 * x : (x <= 0.2 ? 100 * (0.2 - x) : 0.0);
    worst = std::max(worst, std::abs(tri.weights[j] * M - expected));
  }
  CHECK(worst < 0.1);
  size_t peak = 0;
  for (size_t j = 0; j < M; ++j) {
    if (tri.weights[j] > tri.weights[peak]) peak = j;
  }
  CHECK(std::abs(static_cast<double>(peak) / M - 0.1) < 2.0 / M);
}

TEST_CASE("Markov operator") {
  const size_t M = 4096;
  std::mt19937_64 rng(8);
  const GridFunction f = GridFunction::random_mean_zero(M, rng);
  CHECK(max_abs_diff(apply_markov(f, GridMeasure::delta(M)).values, f.values) < 1e-15);
  const GridFunction c = GridFunction::harmonic(M, 1);
  CHECK(apply_markov(c, GridMeasure::uniform(M)).norm(PNorm::kInf) <= 1e-10);

  // Averaging over [-0.1, 0.1] multiplies cos(2 pi x) by sin(0.2 pi)/(0.2 pi).
  const GridFunction out = apply_markov(c, measure_from_rv(symmetric_uniform(), 0.2, M));
  const double expected = std::sin(0.2 * M_PI) / (0.2 * M_PI);
  CHECK(expected == doctest::Approx(0.93549).epsilon(1e-5));
  CHECK(out.norm(PNorm::kInf) / c.norm(PNorm::kInf) == doctest::Approx(expected).epsilon(1e-6));

  // Shift direction: (f * delta_j)(x_i) = f(x_(i+j)).
  GridFunction step = GridFunction::sign_step(M);
  const GridFunction shifted = apply_markov(step, GridMeasure::delta(M, 1));
  CHECK(shifted.values[0] == step.values[1]);
  CHECK(shifted.values[M / 2 - 1] == step.values[M / 2]);
}

TEST_CASE("multiplier gaps match an explicit transform") {
  const size_t M = 64;
  std::mt19937_64 rng(10);
  const GridMeasure mu = random_grid_measure(M, rng);
  const std::vector<double> gaps = multiplier_gaps(mu);
  REQUIRE(gaps.size() == M);
  for (size_t n = 0; n < M; ++n) {
    std::complex<double> s = 0;
    for (size_t j = 0; j < M; ++j) s += mu.weights[j] * std::polar(1.0, 2 * M_PI * double(n * j) / double(M));
    CHECK(gaps[n] == doctest::Approx(std::abs(1.0 - s)).epsilon(1e-12));
  }
  CHECK(gaps[0] < 1e-14);
}

TEST_CASE("contraction factors") {
  const size_t M = 4096;
  const double t = 0.01;
  const ContractionValue sym = contraction_factor(symmetric_uniform(), t, PNorm::kTwo, M);
  CHECK(sym.method == "spectral");
  CHECK(sym.h == doctest::Approx(std::pow(M_PI * t, 2) / 6).epsilon(0.05));
  const ContractionValue drift = contraction_factor(parse_rv("uniform:0:0.5"), t, PNorm::kTwo, M);
  CHECK(drift.h == doctest::Approx(M_PI * t / 2).epsilon(0.05));
  CHECK(contraction_factor(parse_rv("atoms:[(0,1)]"), t, PNorm::kTwo, M).h < 1e-15);

  // Witness bounds for p = 1 and inf sit above the p = 2 value for harmonics.
  for (PNorm p : {PNorm::kOne, PNorm::kInf}) {
    const ContractionValue w = contraction_factor(symmetric_uniform(), 0.05, p, 1024, 3);
    CHECK(w.method.rfind("witness upper bound", 0) == 0);
    CHECK(w.h > 0);
    CHECK(w.h <= 2);
  }
}

TEST_CASE("scaling fits") {
  const std::vector<double> grid{0.1, 0.05, 0.02, 0.01, 0.005};
  const ContractionEstimate sym = scaling_fit(symmetric_uniform(), PNorm::kTwo, grid, 4096);
  CHECK(sym.slope == doctest::Approx(2.0).epsilon(0.025));
  CHECK(sym.regime == "quadratic");
  CHECK(sym.refinement_agrees);
  const ContractionEstimate drift = scaling_fit(parse_rv("uniform:0:0.5"), PNorm::kTwo, grid, 4096);
  CHECK(drift.slope == doctest::Approx(1.0).epsilon(0.05));
  CHECK(drift.regime == "linear");

  // A shift by 1/2 fixes the even harmonics.
  const ContractionEstimate orbit = scaling_fit(parse_rv("atoms:[(0.5,1)]"), PNorm::kTwo, {1.0, 0.5}, 256);
  CHECK(orbit.h[0] < 1e-14);
  CHECK(orbit.verdict == "no contraction: periodic orbit");

  CHECK_THROWS_AS(scaling_fit(symmetric_uniform(), PNorm::kTwo, {0.01, 0.1}, 4096), InvalidArgument);
}

TEST_CASE("Cesaro averages") {
  const size_t M = 128;
  std::mt19937_64 rng(12);
  const GridMeasure mu = random_grid_measure(M, rng);
  CHECK(max_abs_diff(cesaro_average(mu, 1).weights, mu.weights) < 1e-15);
  const GridMeasure half = measure_from_rv(parse_rv("atoms:[(0.5,1)]"), 1.0, M);
  const GridMeasure two = cesaro_average(half, 2);
  CHECK(two.weights[0] == doctest::Approx(0.5));
  CHECK(two.weights[M / 2] == doctest::Approx(0.5));
  CHECK(cesaro_average(mu, 17).mass() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("density floor") {
  const DensityFloor d = density_floor_check(parse_rv("uniform:0:0.5"), 0.05, 16, 2048);
  CHECK(d.n_used == 1280);
  CHECK(d.floor > 0);
  // A single atom has no density; the floor may vanish and the note says why.
  const DensityFloor s = density_floor_check(parse_rv("atoms:[(0.25,1)]"), 0.05, 16, 2048);
  CHECK(s.floor >= 0);
  CHECK_FALSE(s.note.empty());
  CHECK_THROWS_AS(density_floor_check(symmetric_uniform(), 0.05, 16, 2048), ZeroDrift);
}

TEST_CASE("contraction lemma") {
  const size_t M = 256;
  const ContractionLemmaReport u = contraction_lemma_check(GridMeasure::uniform(M), 10, 1);
  CHECK(u.c == doctest::Approx(1.0));
  CHECK(u.holds);
  GridMeasure mix = GridMeasure::uniform(M);
  for (auto& w : mix.weights) w *= 0.5;
  mix.weights[0] += 0.5;
  const ContractionLemmaReport m = contraction_lemma_check(mix, 10, 2);
  CHECK(m.c == doctest::Approx(0.5));
  CHECK(m.holds);
  CHECK(m.worst_margin <= 1e-12);
  const ContractionLemmaReport d = contraction_lemma_check(measure_from_rv(parse_rv("atoms:[(0.5,1)]"), 1.0, M), 10, 3);
  CHECK(d.c == 0);
  CHECK(d.holds);

  // Young, telescoping and Cesaro bounds on random triples.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const GridMeasure mu = random_grid_measure(M, rng);
    const GridFunction f = GridFunction::random_mean_zero(M, rng);
    const long n = 1 + static_cast<long>(rng() % 32);
    for (PNorm p : {PNorm::kOne, PNorm::kTwo, PNorm::kInf}) {
      const double step = (f - apply_markov(f, mu)).norm(p);
      CHECK(apply_markov(f, mu).norm(p) <= f.norm(p) + 1e-9);
      CHECK((f - apply_markov(f, convolution_power(mu, n))).norm(p) <= n * step + 1e-9);
      CHECK((f - apply_markov(f, cesaro_average(mu, n))).norm(p) <= n * step + 1e-9);
    }
  }
}

TEST_CASE("Taylor limit") {
  const TaylorReport one = taylor_limit_check({{1, 1.0}}, {0.05, 0.04, 0.03, 0.02, 0.01}, 4096);
  CHECK(one.expected == doctest::Approx(4 * M_PI * M_PI / 6));
  CHECK(one.expected == doctest::Approx(6.5797).epsilon(1e-4));
  CHECK(one.relative_error < 0.02);

  const TaylorReport two = taylor_limit_check({{1, 1.0}, {3, 1.0 / 9}}, {0.02, 0.015, 0.01, 0.0075, 0.005}, 8192);
  // ||f''|| / ||f|| = sqrt((2 pi)^4 (1 + 81/81)) / sqrt(1 + 1/81).
  const double closed = std::sqrt(std::pow(2 * M_PI, 4) * 2 / (1 + 1.0 / 81)) / 6;
  CHECK(two.expected == doctest::Approx(closed));
  CHECK(two.relative_error < 0.02);
  CHECK_THROWS_AS(taylor_limit_check({{0, 1.0}}, {0.1, 0.05}, 1024), InvalidArgument);
}
