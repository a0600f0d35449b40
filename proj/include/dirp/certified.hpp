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

// Rigorous real arithmetic on top of MPFR.
//
// An Interval is a closed interval [lo, hi] with endpoints held as MPFR
// floats. Every operation rounds the lower endpoint toward -inf and the upper
// endpoint toward +inf, so the true result of the corresponding real
// operation always lies inside. A CertifiedReal pairs an Interval with an
// optional refinement callback that recomputes the enclosure at a higher
// precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <string>

namespace dirp {

using mpfr_prec = ::mpfr_prec_t;

/// Owning RAII handle for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec bits = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec precision() const { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// Decimal digits to binary precision, with a few guard bits.
mpfr_prec digits_to_bits(long digits);
long bits_to_digits(mpfr_prec bits);

class Interval {
 public:
  /// The degenerate interval [0, 0].
  explicit Interval(mpfr_prec bits = 64);

  static Interval from_integer(long v, mpfr_prec bits);
  static Interval from_mpz(const mpz_class& v, mpfr_prec bits);
  static Interval from_mpq(const mpq_class& v, mpfr_prec bits);
  /// Encloses a decimal literal such as "2.71828" or "-1e-5" exactly.
  static Interval from_decimal(const std::string& text, mpfr_prec bits);
  /// [lo, hi] from two exact rationals, lo <= hi.
  static Interval hull(const mpq_class& lo, const mpq_class& hi, mpfr_prec bits);
  static Interval pi(mpfr_prec bits);
  static Interval sqrt_of(const mpz_class& n, mpfr_prec bits);

  mpfr_prec precision() const { return lo_.precision(); }
  const Mpfr& lo() const { return lo_; }
  const Mpfr& hi() const { return hi_; }

  bool contains_zero() const;
  bool is_point() const;
  /// Strictly positive / negative lower or upper bound.
  bool positive() const;
  bool negative() const;
  bool contains(const Interval& other) const;
  bool overlaps(const Interval& other) const;

  /// Midpoint (rounded to nearest at one extra bit) and half-width bound.
  Mpfr mid() const;
  Mpfr rad() const;
  double to_double() const;
  double lo_double() const;
  double hi_double() const;

  /// Exact rational values of the endpoints.
  mpq_class lo_rational() const;
  mpq_class hi_rational() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& b);

  Interval mul_int(long k) const;
  Interval mul_mpz(const mpz_class& k) const;
  Interval abs() const;
  Interval square() const;
  Interval sqrt() const;
  /// x^(p/q) for x >= 0 and p/q >= 0; the lower endpoint is clamped at 0.
  Interval pow(const mpq_class& exponent) const;
  /// Smallest interval containing both.
  Interval join(const Interval& other) const;
  /// Componentwise minimum, i.e. an enclosure of min(x, y).
  static Interval min(const Interval& a, const Interval& b);

  /// Compact "mid +- rad" text for diagnostics.
  std::string debug_string(int digits = 20) const;

 private:
  Interval(Mpfr lo, Mpfr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  Mpfr lo_;
  Mpfr hi_;
};

/// Decimal text for a float, rounded in the given direction, with `digits`
/// significant digits. Produces plain or scientific notation.
std::string decimal_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd);

/// A real number known to lie in an interval, refinable on demand.
class CertifiedReal {
 public:
  using Refiner = std::function<Interval(mpfr_prec bits)>;

  CertifiedReal() : enclosure_(64) {}
  explicit CertifiedReal(Interval enclosure, Refiner refine = {});

  static CertifiedReal exact(const mpq_class& value, mpfr_prec bits);

  const Interval& enclosure() const { return enclosure_; }
  bool refinable() const { return static_cast<bool>(refine_); }
  /// A new value whose enclosure is recomputed at `bits`; the original is
  /// returned unchanged when no refiner is attached.
  CertifiedReal refined(mpfr_prec bits) const;

  double to_double() const { return enclosure_.to_double(); }

  /// Decimal value and a radius that together form a rigorous enclosure:
  /// the radius accounts for rounding `value` to `digits` digits.
  struct Decimal {
    std::string value;
    std::string radius;
    int digits;
  };
  Decimal to_decimal(int digits) const;

 private:
  Interval enclosure_;
  Refiner refine_;
};

enum class ZeroPolicy {
  /// Zero is declared only when an exact-form decision procedure proves it.
  kExactForms,
  /// Never declare zero; unresolved values always exhaust precision.
  kNever,
};

struct PrecisionContext {
  long working_digits = 80;
  long max_digits = 100000;
  ZeroPolicy zero_policy = ZeroPolicy::kExactForms;

  /// Throws InvalidArgument unless 30 <= working_digits <= max_digits.
  void validate() const;
  mpfr_prec working_bits() const { return digits_to_bits(working_digits); }
  mpfr_prec max_bits() const { return digits_to_bits(max_digits); }
};

}  // namespace dirp
