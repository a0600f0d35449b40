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

// Averaging operators f -> E f(x + tY) on the circle T = R/Z, discretised on
// M cells. Cell j covers [(j - 1/2)/M, (j + 1/2)/M) and is centred at j/M.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dirp {

/// Law of Y: uniform pieces plus atoms, total mass 1, support in [-1/2, 1/2].
struct RVSpec {
  struct Uniform {
    mpq_class lo;
    mpq_class hi;
    mpq_class mass;
  };
  struct Atom {
    mpq_class position;
    mpq_class mass;
  };
  std::vector<Uniform> uniforms;
  std::vector<Atom> atoms;

  mpq_class mean() const;
  bool has_density() const { return !uniforms.empty(); }
  /// Canonical text, parseable by parse_rv.
  std::string to_string() const;
  void validate() const;
};

/// "uniform:lo:hi", "atoms:[(x,m),...]", "mix:w@<spec>;w@<spec>".
RVSpec parse_rv(const std::string& text);

/// The uniform law on [-1/2, 1/2]; at scale 2t it gives the average over [-t, t].
RVSpec symmetric_uniform();

struct GridMeasure {
  std::vector<double> weights;
  /// Notes on renormalisations applied after an operation.
  std::vector<std::string> log;

  size_t size() const { return weights.size(); }
  double mass() const;
  double min_weight() const;
  /// M * min weight, the pointwise density floor against Lebesgue measure.
  double density_floor() const { return static_cast<double>(size()) * min_weight(); }

  static GridMeasure delta(size_t M, size_t cell = 0);
  static GridMeasure uniform(size_t M);
};

enum class PNorm { kOne, kTwo, kInf };
std::string to_string(PNorm p);
PNorm parse_pnorm(const std::string& text);

struct GridFunction {
  std::vector<double> values;
  bool mean_zero = false;

  size_t size() const { return values.size(); }
  /// p = 1: mean |f|; p = 2: root mean square; p = inf: max |f|.
  double norm(PNorm p) const;
  GridFunction operator-(const GridFunction& other) const;

  /// amplitude * cos(2 pi n x + phase) sampled at the cell centres.
  static GridFunction harmonic(size_t M, long n, double phase = 0, double amplitude = 1);
  /// Seeded random values, mean subtracted.
  static GridFunction random_mean_zero(size_t M, std::mt19937_64& rng);
  /// +1 on [0, 1/2), -1 on [1/2, 1).
  static GridFunction sign_step(size_t M);
};

/// Uniform double in [0, 1) from the top 53 bits.
double unit_random(std::mt19937_64& rng);

/// Law of tY on the grid: uniform parts integrated per cell, atoms split
/// linearly between the two nearest cell centres. Requires M >= 64,
/// 0 < t <= 1 and t * width >= 4/M for every uniform piece.
GridMeasure measure_from_rv(const RVSpec& Y, double t, size_t M);

/// Circular convolution (mass at i and j lands at i + j).
GridMeasure convolve(const GridMeasure& a, const GridMeasure& b);
GridMeasure convolution_power(const GridMeasure& a, long n);
/// Convolution by direct summation or by FFT regardless of size.
GridMeasure convolve_direct(const GridMeasure& a, const GridMeasure& b);
GridMeasure convolve_fft(const GridMeasure& a, const GridMeasure& b);

/// (f * mu)(x_j) = sum_i f(x_{j+i}) mu_i.
GridFunction apply_markov(const GridFunction& f, const GridMeasure& mu);

/// |1 - mu^(n)| for n = 0..M-1, mu^(n) = sum_j mu_j e^{2 pi i n j / M}.
std::vector<double> multiplier_gaps(const GridMeasure& mu);

struct ContractionValue {
  double h = 0;
  /// "spectral" (exact minimum on the grid, p = 2) or "witness upper bound".
  std::string method;
};

/// inf over mean-zero grid f of ||f - f * mu_t||_p / ||f||_p. Exact on the
/// grid for p = 2. For p = 1 and p = inf it is the minimum over harmonic,
/// step and seeded random witnesses, which bounds h from above.
ContractionValue contraction_factor(const RVSpec& Y, double t, PNorm p, size_t M, uint64_t seed = 1, int trials = 8);

struct ContractionEstimate {
  PNorm p = PNorm::kTwo;
  std::vector<double> t_grid;
  std::vector<double> h;
  std::string method;
  size_t M = 0;
  uint64_t seed = 0;
  double slope = 0;
  double intercept = 0;
  /// Root mean square residual of the log-log fit.
  double residual = 0;
  /// Slope from the same fit on 2M cells.
  double refined_slope = 0;
  bool refinement_agrees = false;
  /// "quadratic", "linear" or "indeterminate".
  std::string regime;
  std::string verdict;
};

ContractionEstimate scaling_fit(const RVSpec& Y, PNorm p, const std::vector<double>& t_grid, size_t M,
                                uint64_t seed = 1);

/// (1/n) sum_{k=1..n} mu^k.
GridMeasure cesaro_average(const GridMeasure& mu, long n);

struct DensityFloor {
  long n_used = 0;
  /// M * min cell weight of the Cesaro average.
  double floor = 0;
  std::string note;
};
DensityFloor density_floor_check(const RVSpec& Y, double t, double C, size_t M);

struct ContractionLemmaReport {
  double c = 0;
  int trials = 0;
  uint64_t seed = 0;
  /// max over trials and p of ||f * mu||_p - (1 - c)||f||_p.
  double worst_margin = 0;
  bool holds = true;
};
ContractionLemmaReport contraction_lemma_check(const GridMeasure& mu, int trials, uint64_t seed = 1);

struct TaylorRow {
  double t = 0;
  /// ||f - A_t f||_2 / (t^2 ||f||_2).
  double ratio = 0;
};
struct TaylorReport {
  std::vector<TaylorRow> rows;
  double extrapolated = 0;
  /// ||f''||_2 / (6 ||f||_2) in closed form.
  double expected = 0;
  double relative_error = 0;
};
struct Harmonic {
  long n = 1;
  double amplitude = 1;
};
/// f = sum a_n cos(2 pi n x); A_t averages over [-t, t].
TaylorReport taylor_limit_check(const std::vector<Harmonic>& f, const std::vector<double>& t_grid, size_t M);

/// A seeded random probability measure: a random arc density, a few atoms
/// and a random share of each.
GridMeasure random_grid_measure(size_t M, std::mt19937_64& rng);

}  // namespace dirp
