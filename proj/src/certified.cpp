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

#include "dirp/certified.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "dirp/errors.hpp"

namespace dirp {

Mpfr::Mpfr(mpfr_prec bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  // MPFR has no cheap move; swap with a minimal fresh value instead.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() {
  mpfr_clear(value_);
}

mpfr_prec digits_to_bits(long digits) {
  return static_cast<mpfr_prec>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 8;
}

long bits_to_digits(mpfr_prec bits) {
  return static_cast<long>(std::floor(static_cast<double>(bits - 8) / 3.3219280948873623));
}

Interval::Interval(mpfr_prec bits) : lo_(bits), hi_(bits) {}

Interval Interval::from_integer(long v, mpfr_prec bits) {
  Interval r(bits);
  mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
  mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec bits) {
  Interval r(bits);
  mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_.get(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(const std::string& text, mpfr_prec bits) {
  Interval r(bits);
  char* end = nullptr;
  mpfr_strtofr(r.lo_.get(), text.c_str(), &end, 10, MPFR_RNDD);
  if (end == text.c_str() || *end != '\0') throw ParseError("not a decimal number: '" + text + "'");
  mpfr_strtofr(r.hi_.get(), text.c_str(), &end, 10, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const mpq_class& lo, const mpq_class& hi, mpfr_prec bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec bits) {
  Interval r(bits);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt_of(const mpz_class& n, mpfr_prec bits) {
  if (n < 0) throw InvalidArgument("square root of a negative integer");
  return from_mpz(n, bits).sqrt();
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }
bool Interval::positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool Interval::negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_.get(), o.lo_.get()) && mpfr_greaterequal_p(hi_.get(), o.hi_.get());
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_lessequal_p(lo_.get(), o.hi_.get()) && mpfr_lessequal_p(o.lo_.get(), hi_.get());
}

Mpfr Interval::mid() const {
  Mpfr m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Mpfr Interval::rad() const {
  Mpfr m = mid();
  Mpfr a(precision()), b(precision());
  mpfr_sub(a.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(b.get(), m.get(), lo_.get(), MPFR_RNDU);
  if (mpfr_less_p(a.get(), b.get())) return b;
  return a;
}

double Interval::to_double() const { return mpfr_get_d(mid().get(), MPFR_RNDN); }
double Interval::lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

mpq_class Interval::lo_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_.get());
  return q;
}

mpq_class Interval::hi_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_.get());
  return q;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

namespace {

mpfr_prec common_bits(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(common_bits(a, b));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& b) {
  if (b.precision() > precision()) {
    *this = *this + b;
    return *this;
  }
  mpfr_add(lo_.get(), lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), b.hi_.get(), MPFR_RNDU);
  return *this;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(common_bits(a, b));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec bits = common_bits(a, b);
  Interval r(bits);
  Mpfr t(bits);
  mpfr_srcptr al = a.lo_.get(), ah = a.hi_.get(), bl = b.lo_.get(), bh = b.hi_.get();
  mpfr_ptr lo = r.lo_.get();
  mpfr_ptr hi = r.hi_.get();

  mpfr_mul(lo, al, bl, MPFR_RNDD);
  mpfr_mul(t.get(), al, bh, MPFR_RNDD);
  mpfr_min(lo, lo, t.get(), MPFR_RNDD);
  mpfr_mul(t.get(), ah, bl, MPFR_RNDD);
  mpfr_min(lo, lo, t.get(), MPFR_RNDD);
  mpfr_mul(t.get(), ah, bh, MPFR_RNDD);
  mpfr_min(lo, lo, t.get(), MPFR_RNDD);

  mpfr_mul(hi, al, bl, MPFR_RNDU);
  mpfr_mul(t.get(), al, bh, MPFR_RNDU);
  mpfr_max(hi, hi, t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), ah, bl, MPFR_RNDU);
  mpfr_max(hi, hi, t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), ah, bh, MPFR_RNDU);
  mpfr_max(hi, hi, t.get(), MPFR_RNDU);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw InvalidArgument("interval division by an interval containing zero");
  const mpfr_prec bits = common_bits(a, b);
  Interval r(bits);
  Mpfr t(bits);
  mpfr_srcptr al = a.lo_.get(), ah = a.hi_.get(), bl = b.lo_.get(), bh = b.hi_.get();
  mpfr_ptr lo = r.lo_.get();
  mpfr_ptr hi = r.hi_.get();

  mpfr_div(lo, al, bl, MPFR_RNDD);
  mpfr_div(t.get(), al, bh, MPFR_RNDD);
  mpfr_min(lo, lo, t.get(), MPFR_RNDD);
  mpfr_div(t.get(), ah, bl, MPFR_RNDD);
  mpfr_min(lo, lo, t.get(), MPFR_RNDD);
  mpfr_div(t.get(), ah, bh, MPFR_RNDD);
  mpfr_min(lo, lo, t.get(), MPFR_RNDD);

  mpfr_div(hi, al, bl, MPFR_RNDU);
  mpfr_div(t.get(), al, bh, MPFR_RNDU);
  mpfr_max(hi, hi, t.get(), MPFR_RNDU);
  mpfr_div(t.get(), ah, bl, MPFR_RNDU);
  mpfr_max(hi, hi, t.get(), MPFR_RNDU);
  mpfr_div(t.get(), ah, bh, MPFR_RNDU);
  mpfr_max(hi, hi, t.get(), MPFR_RNDU);
  return r;
}

Interval Interval::mul_int(long k) const {
  Interval r(precision());
  if (k >= 0) {
    mpfr_mul_si(r.lo_.get(), lo_.get(), k, MPFR_RNDD);
    mpfr_mul_si(r.hi_.get(), hi_.get(), k, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_.get(), hi_.get(), k, MPFR_RNDD);
    mpfr_mul_si(r.hi_.get(), lo_.get(), k, MPFR_RNDU);
  }
  return r;
}

Interval Interval::mul_mpz(const mpz_class& k) const {
  Interval r(precision());
  if (k >= 0) {
    mpfr_mul_z(r.lo_.get(), lo_.get(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_.get(), hi_.get(), k.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(r.lo_.get(), hi_.get(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_.get(), lo_.get(), k.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return -*this;
  Interval r(precision());
  mpfr_set_zero(r.lo_.get(), 1);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  mpfr_max(r.hi_.get(), r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::square() const {
  Interval a = abs();
  Interval r(precision());
  mpfr_sqr(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_sqr(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_.get()) < 0) throw InvalidArgument("square root of a negative interval");
  Interval r(precision());
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_zero(r.lo_.get(), 1);
  } else {
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pow(const mpq_class& exponent) const {
  if (exponent < 0) throw InvalidArgument("negative exponent in Interval::pow");
  if (mpfr_sgn(hi_.get()) < 0) throw InvalidArgument("power of a negative interval");
  if (exponent == 0) return from_integer(1, precision());
  if (!exponent.get_num().fits_ulong_p() || !exponent.get_den().fits_ulong_p()) {
    throw InvalidArgument("exponent too large");
  }
  const unsigned long p = exponent.get_num().get_ui();
  const unsigned long q = exponent.get_den().get_ui();
  Interval r(precision());
  if (mpfr_sgn(lo_.get()) <= 0) {
    mpfr_set_zero(r.lo_.get(), 1);
  } else {
    mpfr_pow_ui(r.lo_.get(), lo_.get(), p, MPFR_RNDD);
    if (q != 1) mpfr_rootn_ui(r.lo_.get(), r.lo_.get(), q, MPFR_RNDD);
  }
  mpfr_pow_ui(r.hi_.get(), hi_.get(), p, MPFR_RNDU);
  if (q != 1) mpfr_rootn_ui(r.hi_.get(), r.hi_.get(), q, MPFR_RNDU);
  return r;
}

Interval Interval::join(const Interval& other) const {
  Interval r(std::max(precision(), other.precision()));
  mpfr_min(r.lo_.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::min(const Interval& a, const Interval& b) {
  Interval r(common_bits(a, b));
  mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_min(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

std::string Interval::debug_string(int digits) const {
  return decimal_string(mid().get(), digits, MPFR_RNDN) + " +- " +
         decimal_string(rad().get(), 3, MPFR_RNDU);
}

std::string decimal_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  mpfr_exp_t exp = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), x, rnd),
                                             mpfr_free_str);
  std::string s(raw.get());
  std::string sign;
  if (!s.empty() && s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  // Value is 0.s * 10^exp. Trim trailing zeros of the mantissa.
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  const long e = static_cast<long>(exp);
  if (e > 0 && e <= 21) {
    std::string out = sign;
    if (static_cast<long>(s.size()) <= e) {
      out += s + std::string(static_cast<size_t>(e) - s.size(), '0');
    } else {
      out += s.substr(0, static_cast<size_t>(e)) + "." + s.substr(static_cast<size_t>(e));
    }
    return out;
  }
  if (e <= 0 && e > -6) {
    return sign + "0." + std::string(static_cast<size_t>(-e), '0') + s;
  }
  std::string out = sign + s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  out += "e" + std::to_string(e - 1);
  return out;
}

CertifiedReal::CertifiedReal(Interval enclosure, Refiner refine)
    : enclosure_(std::move(enclosure)), refine_(std::move(refine)) {}

CertifiedReal CertifiedReal::exact(const mpq_class& value, mpfr_prec bits) {
  return CertifiedReal(Interval::from_mpq(value, bits),
                       [value](mpfr_prec b) { return Interval::from_mpq(value, b); });
}

CertifiedReal CertifiedReal::refined(mpfr_prec bits) const {
  if (!refine_) return *this;
  return CertifiedReal(refine_(bits), refine_);
}

CertifiedReal::Decimal CertifiedReal::to_decimal(int digits) const {
  const Mpfr m = enclosure_.mid();
  Decimal d;
  d.digits = digits;
  d.value = decimal_string(m.get(), digits, MPFR_RNDN);
  // radius = max(v - lo, hi - v), rounded up, where v is the printed value.
  const mpfr_prec bits = enclosure_.precision() + 64;
  const Interval v = Interval::from_decimal(d.value, bits);
  Mpfr a(bits), b(bits);
  mpfr_sub(a.get(), v.hi().get(), enclosure_.lo().get(), MPFR_RNDU);
  mpfr_sub(b.get(), enclosure_.hi().get(), v.lo().get(), MPFR_RNDU);
  mpfr_max(a.get(), a.get(), b.get(), MPFR_RNDU);
  if (mpfr_sgn(a.get()) < 0) mpfr_set_zero(a.get(), 1);
  d.radius = decimal_string(a.get(), 3, MPFR_RNDU);
  return d;
}

void PrecisionContext::validate() const {
  if (working_digits < 30 || max_digits < 30) {
    throw InvalidArgument("precision digits must be at least 30");
  }
  if (working_digits > max_digits) {
    throw InvalidArgument("working digits exceed max digits");
  }
}

}  // namespace dirp
