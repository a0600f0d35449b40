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

// Exact-form descriptions of real numbers and of directions alpha in R^d.
//
// Textual grammar, one entry:
//   rat:3/2            exact rational (bare "3/2", "-1", "0.25" also accepted)
//   quad:(1+sqrt5)/2   (a + b sqrt D)/c; also "quad:sqrt2", "quad:-3sqrt7/5"
//   dec:1.41421356     decimal literal, true value within 10^-(fraction digits)
//   cf:[1,2,2,2]       finite continued fraction (a rational)
//   cf:[1,(2)]         eventually periodic continued fraction (a quadratic)
//   liouville:10       sum_{n>=1} b^(-n!)
//   const:e | const:pi | const:log2
// Vectors:
//   dir:[1, quad:(1+sqrt5)/2]     alpha as written
//   slope:quad:(1+sqrt5)/2        alpha = (1, beta), several betas as slope:[b1, b2]

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dirp/certified.hpp"
#include "dirp/freq_vector.hpp"
#include "dirp/quadratic.hpp"

namespace dirp {

enum class NamedConstantId { kE, kPi, kLog2 };

struct RationalForm {
  mpq_class value;
};

/// (a + b sqrt(D)) / c with D >= 2 non-square and c != 0.
struct QuadraticForm {
  mpz_class a;
  mpz_class b;
  mpz_class radicand;
  mpz_class c;

  QuadraticNumber value() const;
};

/// A literal that stands for some real within 10^-fraction_digits of it.
struct DecimalForm {
  std::string literal;
  int fraction_digits = 0;
};

struct LiouvilleForm {
  mpz_class base;
};

struct NamedConstantForm {
  NamedConstantId id;
};

/// A derived quantity known only through enclosures (e.g. a ratio of two
/// transcendental entries).
struct EnclosureForm {
  std::function<Interval(mpfr_prec)> enclose;
  std::string description;
  bool refinable = true;
};

using RealForm = std::variant<RationalForm, QuadraticForm, DecimalForm, LiouvilleForm, NamedConstantForm, EnclosureForm>;

RealForm parse_real(const std::string& text);
/// Canonical text; equal texts denote equal numbers.
std::string format_real(const RealForm& form);

/// Rigorous enclosure at (at least) the requested precision. DecimalForm and
/// NamedConstantForm saturate at the literal's own radius.
Interval enclose(const RealForm& form, mpfr_prec bits);
CertifiedReal to_certified(const RealForm& form, mpfr_prec bits);

/// Whether refining the precision can shrink the enclosure without bound.
bool refinable_without_limit(const RealForm& form);

std::optional<mpq_class> as_rational(const RealForm& form);
/// Exact quadratic value. A rational is returned in Q(sqrt radicand_hint)
/// when a hint is given.
std::optional<QuadraticNumber> as_quadratic(const RealForm& form, const mpz_class& radicand_hint = 0);
/// Known to be transcendental (Liouville numbers, e, pi, log 2).
bool is_transcendental(const RealForm& form);

/// num / den, exact whenever both live in Q or in one quadratic field.
RealForm ratio(const RealForm& num, const RealForm& den);

struct EntrySpec {
  RealForm form;
  std::string text;
};

struct DirectionSpec {
  std::vector<EntrySpec> entries;
  /// Built with the "slope:" form, i.e. alpha = (1, beta).
  bool normalized_first_one = false;

  int dim() const { return static_cast<int>(entries.size()); }
  std::string to_string() const;
};

DirectionSpec parse_direction(const std::string& text);
DirectionSpec make_direction(std::vector<RealForm> entries);

/// alpha in R^d with certified entries.
class Direction {
 public:
  explicit Direction(DirectionSpec spec);
  static Direction parse(const std::string& text) { return Direction(parse_direction(text)); }

  int dim() const { return spec_.dim(); }
  const DirectionSpec& spec() const { return spec_; }
  const RealForm& form(int i) const { return spec_.entries[static_cast<size_t>(i)].form; }
  CertifiedReal entry(int i, mpfr_prec bits) const { return to_certified(form(i), bits); }
  std::vector<Interval> enclosures(mpfr_prec bits) const;
  /// Certified Euclidean norm |alpha|.
  Interval norm(mpfr_prec bits) const;

 private:
  DirectionSpec spec_;
};

/// Result of normalizing alpha to (1, beta) as allowed by the scaling
/// freedom alpha -> lambda alpha.
struct NormalizedDirection {
  DirectionSpec spec;
  /// Original coordinate index placed first.
  int leading_index = 0;
  /// Set when the first entry was exactly zero and coordinates were permuted.
  bool permuted = false;
};
NormalizedDirection normalize_first_one(const DirectionSpec& spec);

/// Exact decision whether <k, alpha> = 0. Returns true only when proven by the
/// exact-form procedure (rationals, quadratic radicals, identical entries);
/// false means "not proven zero".
bool proven_zero_inner_product(const FreqVector& k, const DirectionSpec& spec);

struct InnerProduct {
  Interval value;
  bool exact_zero = false;
  mpfr_prec bits = 0;
};

/// <k, alpha> with cancellation-safe refinement: precision doubles while the
/// enclosure contains zero or is too coarse relative to its magnitude, until
/// exact zero is proven or max_digits is reached (PrecisionExhausted).
InnerProduct inner_product(const FreqVector& k, const Direction& alpha, const PrecisionContext& ctx);

/// One evaluation at a fixed precision, with precomputed entry enclosures.
Interval inner_product_at(const FreqVector& k, const std::vector<Interval>& alpha_enclosures);

/// True when the enclosure excludes zero and its radius is small relative to
/// its magnitude.
bool resolved(const Interval& value);

}  // namespace dirp
