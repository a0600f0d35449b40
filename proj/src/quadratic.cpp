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

#include "dirp/quadratic.hpp"

#include "dirp/errors.hpp"

namespace dirp {

bool is_perfect_square(const mpz_class& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

QuadraticNumber::QuadraticNumber(mpq_class u, mpq_class v, mpz_class radicand)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(radicand)) {
  if (d_ < 2 || is_perfect_square(d_)) {
    throw InvalidArgument("quadratic radicand must be >= 2 and not a perfect square");
  }
  u_.canonicalize();
  v_.canonicalize();
}

namespace {

void require_same_field(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.radicand() != b.radicand()) throw InvalidArgument("quadratic numbers from different fields");
}

int sgn(const mpq_class& q) { return sgn(q.get_num()); }

}  // namespace

int QuadraticNumber::sign() const {
  const int su = sgn(u_);
  const int sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // Opposite signs: compare u^2 with v^2 D.
  const mpq_class lhs = u_ * u_;
  const mpq_class rhs = v_ * v_ * d_;
  return cmp(lhs, rhs) > 0 ? su : sv;
}

mpz_class QuadraticNumber::floor() const {
  // Guess from an enclosure, then correct exactly.
  const mpfr_prec bits = 128 + static_cast<mpfr_prec>(mpz_sizeinbase(u_.get_num().get_mpz_t(), 2) +
                                                      mpz_sizeinbase(v_.get_num().get_mpz_t(), 2));
  const Interval e = enclose(bits);
  mpz_class guess;
  {
    Mpfr m = e.mid();
    mpfr_get_z(guess.get_mpz_t(), m.get(), MPFR_RNDD);
  }
  while ((*this - mpq_class(guess)).sign() < 0) --guess;
  while ((*this - mpq_class(guess + 1)).sign() >= 0) ++guess;
  return guess;
}

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  require_same_field(a, b);
  return {a.u_ + b.u_, a.v_ + b.v_, a.d_};
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
  require_same_field(a, b);
  return {a.u_ - b.u_, a.v_ - b.v_, a.d_};
}

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  require_same_field(a, b);
  return {a.u_ * b.u_ + a.v_ * b.v_ * a.d_, a.u_ * b.v_ + a.v_ * b.u_, a.d_};
}

QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw InvalidArgument("division by zero in Q(sqrt D)");
  const mpq_class n = b.norm();
  const QuadraticNumber num = a * b.conjugate();
  return {num.u_ / n, num.v_ / n, a.d_};
}

Interval QuadraticNumber::enclose(mpfr_prec bits) const {
  const mpfr_prec work = bits + 32;
  Interval r = Interval::from_mpq(u_, work) + Interval::sqrt_of(d_, work) * Interval::from_mpq(v_, work);
  return r;
}

std::optional<std::pair<mpz_class, mpz_class>> squarefree_decomposition(const mpz_class& n) {
  if (n <= 0) return std::nullopt;
  mpz_class rest = n;
  mpz_class square = 1;
  mpz_class free = 1;
  const unsigned long trial_limit = 1000000;
  for (unsigned long p = 2; p <= trial_limit; p = (p == 2 ? 3 : p + 2)) {
    const mpz_class pp = p;
    if (pp * pp > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= pp;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) square *= pp;
    if (e % 2 == 1) free *= pp;
  }
  if (rest > 1) {
    const mpz_class limit = mpz_class(trial_limit) * trial_limit;
    if (rest > limit) {
      // rest may be a square of a large prime or a product; only decide
      // the easy cases.
      if (is_perfect_square(rest)) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
        if (mpz_probab_prime_p(root.get_mpz_t(), 30) == 0) return std::nullopt;
        square *= root;
        return std::make_pair(square, free);
      }
      if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0) return std::nullopt;
    }
    free *= rest;
  }
  return std::make_pair(square, free);
}

bool RadicalCombination::add_radical(const mpq_class& c, const mpz_class& n) {
  if (c == 0) return true;
  if (n < 0) return false;
  if (n == 0) return true;
  const auto dec = squarefree_decomposition(n);
  if (!dec) return false;
  const mpq_class scaled = c * mpq_class(dec->first);
  if (dec->second == 1) {
    rational_ += scaled;
  } else {
    radicals_[dec->second] += scaled;
  }
  return true;
}

bool RadicalCombination::is_zero() const {
  if (rational_ != 0) return false;
  for (const auto& [r, c] : radicals_) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace dirp
