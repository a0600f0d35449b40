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

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "dirp/certified.hpp"

namespace dirp {

/// Exact element u + v*sqrt(D) of the quadratic field Q(sqrt D), D >= 2 and
/// not a perfect square.
class QuadraticNumber {
 public:
  QuadraticNumber(mpq_class u, mpq_class v, mpz_class radicand);
  static QuadraticNumber rational(const mpq_class& u, const mpz_class& radicand) {
    return QuadraticNumber(u, 0, radicand);
  }

  const mpq_class& rational_part() const { return u_; }
  const mpq_class& radical_part() const { return v_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return v_ == 0; }

  int sign() const;
  bool is_zero() const { return u_ == 0 && v_ == 0; }
  mpz_class floor() const;
  QuadraticNumber conjugate() const { return {u_, -v_, d_}; }
  /// Field norm u^2 - D v^2.
  mpq_class norm() const { return u_ * u_ - v_ * v_ * d_; }

  QuadraticNumber operator-() const { return {-u_, -v_, d_}; }
  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator+(const QuadraticNumber& a, const mpq_class& b) { return {a.u_ + b, a.v_, a.d_}; }
  friend QuadraticNumber operator-(const QuadraticNumber& a, const mpq_class& b) { return {a.u_ - b, a.v_, a.d_}; }
  friend QuadraticNumber operator*(const QuadraticNumber& a, const mpq_class& b) { return {a.u_ * b, a.v_ * b, a.d_}; }
  bool operator==(const QuadraticNumber& o) const { return u_ == o.u_ && v_ == o.v_ && d_ == o.d_; }

  Interval enclose(mpfr_prec bits) const;

 private:
  mpq_class u_;
  mpq_class v_;
  mpz_class d_;
};

bool is_perfect_square(const mpz_class& n);

/// n = s^2 * r with r squarefree, by trial division. Returns nullopt when n
/// has a prime factor beyond the trial bound that prevents a certain answer.
std::optional<std::pair<mpz_class, mpz_class>> squarefree_decomposition(const mpz_class& n);

/// Exact Q-linear combination c_0 + sum_r c_r sqrt(r) over distinct
/// squarefree r > 1. Distinct squarefree radicals are linearly independent
/// over Q, so the combination is zero iff every coefficient is zero.
class RadicalCombination {
 public:
  void add_rational(const mpq_class& c) { rational_ += c; }
  /// Adds c * sqrt(n) for n >= 0. Returns false if n could not be reduced.
  bool add_radical(const mpq_class& c, const mpz_class& n);
  bool is_zero() const;

 private:
  mpq_class rational_ = 0;
  std::map<mpz_class, mpq_class> radicals_;
};

}  // namespace dirp
