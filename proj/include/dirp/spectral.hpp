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

// Trigonometric polynomials on T^d = (R / 2 pi Z)^d and the norms built from
// their Fourier coefficients. Norms carry the factor (2 pi)^d, so that a
// single real sine has ||f||^2 = 2 pi^2 in dimension 2.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "dirp/certified.hpp"
#include "dirp/direction.hpp"
#include "dirp/freq_vector.hpp"

namespace dirp {

/// Exact complex coefficient re + i im.
struct Coefficient {
  mpq_class re = 0;
  mpq_class im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  mpq_class abs_squared() const { return re * re + im * im; }
  Coefficient conj() const { return {re, -im}; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.re == b.re && a.im == b.im; }
};

enum class ZeroFrequency {
  /// A term at k = 0 raises InvalidArgument.
  kReject,
  /// A term at k = 0 is dropped.
  kStrip,
};

class TrigPoly {
 public:
  using Terms = std::map<FreqVector, Coefficient>;

  explicit TrigPoly(int dim);
  TrigPoly(int dim, const std::vector<std::pair<FreqVector, Coefficient>>& terms,
           ZeroFrequency zero = ZeroFrequency::kReject);

  /// Adds c e^{i k.x}; repeated frequencies accumulate and cancelled terms vanish.
  void add_term(const FreqVector& k, const Coefficient& c, ZeroFrequency zero = ZeroFrequency::kReject);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// (re + i im) * f.
  TrigPoly scaled(const mpq_class& re, const mpq_class& im) const;
  /// Coefficients satisfy a_{-k} = conj(a_k).
  bool is_real_valued() const;

  static TrigPoly exponential(const FreqVector& k, const Coefficient& c = {1, 0});
  /// sin(k.x) = (e^{ik.x} - e^{-ik.x}) / 2i.
  static TrigPoly sine(const FreqVector& k);
  static TrigPoly cosine(const FreqVector& k);

 private:
  int dim_;
  Terms terms_;
};

/// Seeded random polynomial: up to max_terms distinct nonzero frequencies in
/// the ball |k| <= max_norm, coefficients with real and imaginary parts drawn
/// from {-1000..1000}/1000 (not both zero).
TrigPoly random_trig_poly(int dim, int max_terms, long max_norm, std::mt19937_64& rng);

/// Exact sums S0 = sum |a_k|^2 and S1 = sum |k|^2 |a_k|^2.
mpq_class mass_sum(const TrigPoly& f);
mpq_class gradient_mass_sum(const TrigPoly& f);

CertifiedReal l2_norm(const TrigPoly& f, const PrecisionContext& ctx = {});
CertifiedReal grad_norm(const TrigPoly& f, const PrecisionContext& ctx = {});

/// Value of a Fourier symbol P(k). exact_zero marks a proven P(k) = 0.
struct SymbolValue {
  Interval value;
  bool exact_zero = false;
};
/// A symbol evaluates itself to the accuracy the context asks for, raising
/// PrecisionExhausted when it cannot.
using Symbol = std::function<SymbolValue(const FreqVector&, const PrecisionContext&)>;

Symbol identity_symbol();
/// |k|^s, s >= 0.
Symbol power_symbol(const mpq_class& s);
/// <k, alpha>.
Symbol directional_symbol(const Direction& alpha);
/// <k, alpha> |k|^(s-1), s >= 1.
Symbol coifman_symbol(const Direction& alpha, const mpq_class& s);

/// sqrt((2 pi)^d sum |a_k|^2 |P(k)|^2).
CertifiedReal multiplier_norm(const TrigPoly& f, const Symbol& symbol, const PrecisionContext& ctx = {});
CertifiedReal directional_norm(const TrigPoly& f, const Direction& alpha, const PrecisionContext& ctx = {});

/// ||grad f||^eg ||<grad f, alpha>||^ed / ||f||^(eg+ed).
CertifiedReal poincare_ratio(const TrigPoly& f, const Direction& alpha, const mpq_class& exp_grad,
                             const mpq_class& exp_dir, const PrecisionContext& ctx = {});

/// ||grad f||^eg (sum_i ||<grad f, alpha_i>||)^es / ||f||^(eg+es), 1 <= l <= d-1.
CertifiedReal multi_directional_functional(const TrigPoly& f, const std::vector<Direction>& dirs,
                                           const mpq_class& exp_grad, const mpq_class& exp_sum,
                                           const PrecisionContext& ctx = {});

struct HalfMassCutoff {
  /// 2 ||grad f|| / ||f||.
  CertifiedReal radius;
  /// Share of sum |a_k|^2 carried by |k| >= radius.
  CertifiedReal tail_mass_fraction;
  /// radius^2 = 4 S1 / S0, exact.
  mpq_class radius_squared;
  mpq_class tail_fraction_exact;
};
HalfMassCutoff half_mass_cutoff(const TrigPoly& f, const PrecisionContext& ctx = {});

/// (2 pi)^d.
Interval two_pi_power(int d, mpfr_prec bits);

}  // namespace dirp
