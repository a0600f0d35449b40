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

#include "dirp/spectral.hpp"

#include <algorithm>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

namespace {

void check_key(int dim, const FreqVector& k) {
  if (k.dim() != dim) throw DimensionMismatch("frequency " + k.to_string() + " has the wrong dimension");
}

PrecisionContext at_bits(const PrecisionContext& ctx, mpfr_prec bits) {
  PrecisionContext c = ctx;
  c.working_digits = std::clamp<long>(bits_to_digits(bits), 30, ctx.max_digits);
  return c;
}

/// sum_k |a_k|^2 |P(k)|^2 as an enclosure.
Interval weighted_mass(const TrigPoly& f, const Symbol& symbol, const PrecisionContext& ctx) {
  Interval sum(ctx.working_bits());
  for (const auto& [k, c] : f.terms()) {
    const SymbolValue p = symbol(k, ctx);
    if (p.exact_zero) continue;
    sum += p.value.square() * Interval::from_mpq(c.abs_squared(), p.value.precision());
  }
  return sum;
}

Interval norm_from_mass(int d, const Interval& mass, mpfr_prec bits) {
  return (two_pi_power(d, bits + 8) * mass).sqrt();
}

void check_exponents(const mpq_class& a, const mpq_class& b) {
  if (a < 0 || b < 0) throw InvalidArgument("exponents must be nonnegative");
  if (a == 0 && b == 0) throw InvalidArgument("exponents must not both be zero");
}

}  // namespace

TrigPoly::TrigPoly(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidArgument("dimension must be at least 1");
}

TrigPoly::TrigPoly(int dim, const std::vector<std::pair<FreqVector, Coefficient>>& terms, ZeroFrequency zero)
    : TrigPoly(dim) {
  for (const auto& [k, c] : terms) add_term(k, c, zero);
}

void TrigPoly::add_term(const FreqVector& k, const Coefficient& c, ZeroFrequency zero) {
  check_key(dim_, k);
  if (k.is_zero()) {
    if (zero == ZeroFrequency::kStrip) return;
    throw InvalidArgument("trigonometric polynomial must have mean zero (term at k = 0)");
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(k, c);
    return;
  }
  it->second.re += c.re;
  it->second.im += c.im;
  if (it->second.is_zero()) terms_.erase(it);
}

TrigPoly TrigPoly::scaled(const mpq_class& re, const mpq_class& im) const {
  TrigPoly out(dim_);
  if (re == 0 && im == 0) return out;
  for (const auto& [k, c] : terms_) {
    out.terms_.emplace(k, Coefficient{c.re * re - c.im * im, c.re * im + c.im * re});
  }
  return out;
}

bool TrigPoly::is_real_valued() const {
  for (const auto& [k, c] : terms_) {
    const auto it = terms_.find(-k);
    if (it == terms_.end() || !(it->second == c.conj())) return false;
  }
  return true;
}

TrigPoly TrigPoly::exponential(const FreqVector& k, const Coefficient& c) {
  TrigPoly f(k.dim());
  f.add_term(k, c);
  return f;
}

TrigPoly TrigPoly::sine(const FreqVector& k) {
  TrigPoly f(k.dim());
  f.add_term(k, {0, mpq_class(-1, 2)});
  f.add_term(-k, {0, mpq_class(1, 2)});
  return f;
}

TrigPoly TrigPoly::cosine(const FreqVector& k) {
  TrigPoly f(k.dim());
  f.add_term(k, {mpq_class(1, 2), 0});
  f.add_term(-k, {mpq_class(1, 2), 0});
  return f;
}

TrigPoly random_trig_poly(int dim, int max_terms, long max_norm, std::mt19937_64& rng) {
  if (max_terms < 1 || max_norm < 1) throw InvalidArgument("random polynomial needs terms >= 1 and radius >= 1");
  auto below = [&rng](uint64_t n) { return rng() % n; };
  const uint64_t span = 2 * static_cast<uint64_t>(max_norm) + 1;
  const mpz_class r2 = mpz_class(max_norm) * max_norm;
  const int count = 1 + static_cast<int>(below(static_cast<uint64_t>(max_terms)));
  TrigPoly f(dim);
  int attempts = 0;
  while (static_cast<int>(f.size()) < count && attempts < 100 * count) {
    ++attempts;
    std::vector<mpz_class> e(static_cast<size_t>(dim));
    for (auto& v : e) v = static_cast<long>(below(span)) - max_norm;
    FreqVector k(std::move(e));
    if (k.is_zero() || k.norm_squared() > r2 || f.terms().count(k)) continue;
    Coefficient c;
    do {
      c.re = make_rational(static_cast<long>(below(2001)) - 1000, 1000);
      c.im = make_rational(static_cast<long>(below(2001)) - 1000, 1000);
      c.re.canonicalize();
      c.im.canonicalize();
    } while (c.is_zero());
    f.add_term(k, c);
  }
  return f;
}

mpq_class mass_sum(const TrigPoly& f) {
  mpq_class s = 0;
  for (const auto& [k, c] : f.terms()) s += c.abs_squared();
  return s;
}

mpq_class gradient_mass_sum(const TrigPoly& f) {
  mpq_class s = 0;
  for (const auto& [k, c] : f.terms()) s += mpq_class(k.norm_squared()) * c.abs_squared();
  return s;
}

Interval two_pi_power(int d, mpfr_prec bits) {
  const Interval tp = Interval::pi(bits).mul_int(2);
  Interval r = Interval::from_integer(1, bits);
  for (int i = 0; i < d; ++i) r = r * tp;
  return r;
}

CertifiedReal l2_norm(const TrigPoly& f, const PrecisionContext& ctx) {
  const mpq_class s0 = mass_sum(f);
  const int d = f.dim();
  auto eval = [s0, d](mpfr_prec bits) { return norm_from_mass(d, Interval::from_mpq(s0, bits + 8), bits); };
  return CertifiedReal(eval(ctx.working_bits()), eval);
}

CertifiedReal grad_norm(const TrigPoly& f, const PrecisionContext& ctx) {
  const mpq_class s1 = gradient_mass_sum(f);
  const int d = f.dim();
  auto eval = [s1, d](mpfr_prec bits) { return norm_from_mass(d, Interval::from_mpq(s1, bits + 8), bits); };
  return CertifiedReal(eval(ctx.working_bits()), eval);
}

Symbol identity_symbol() {
  return [](const FreqVector&, const PrecisionContext& ctx) {
    return SymbolValue{Interval::from_integer(1, ctx.working_bits()), false};
  };
}

Symbol power_symbol(const mpq_class& s) {
  if (s < 0) throw InvalidArgument("power symbol needs s >= 0");
  return [s](const FreqVector& k, const PrecisionContext& ctx) {
    const mpfr_prec bits = ctx.working_bits();
    if (k.is_zero()) return SymbolValue{Interval::from_integer(s == 0 ? 1 : 0, bits), s != 0};
    return SymbolValue{Interval::from_mpz(k.norm_squared(), bits + 16).pow(s / 2), false};
  };
}

Symbol directional_symbol(const Direction& alpha) {
  return [alpha](const FreqVector& k, const PrecisionContext& ctx) {
    const InnerProduct ip = inner_product(k, alpha, ctx);
    return SymbolValue{ip.value, ip.exact_zero};
  };
}

Symbol coifman_symbol(const Direction& alpha, const mpq_class& s) {
  if (s < 1) throw InvalidArgument("Coifman symbol needs s >= 1");
  const Symbol radial = power_symbol(s - 1);
  return [alpha, radial](const FreqVector& k, const PrecisionContext& ctx) {
    const InnerProduct ip = inner_product(k, alpha, ctx);
    if (ip.exact_zero) return SymbolValue{ip.value, true};
    const SymbolValue r = radial(k, at_bits(ctx, ip.bits));
    return SymbolValue{ip.value * r.value, false};
  };
}

CertifiedReal multiplier_norm(const TrigPoly& f, const Symbol& symbol, const PrecisionContext& ctx) {
  const int d = f.dim();
  auto eval = [f, symbol, ctx, d](mpfr_prec bits) {
    const PrecisionContext c = at_bits(ctx, bits);
    return norm_from_mass(d, weighted_mass(f, symbol, c), c.working_bits());
  };
  return CertifiedReal(eval(ctx.working_bits()), eval);
}

CertifiedReal directional_norm(const TrigPoly& f, const Direction& alpha, const PrecisionContext& ctx) {
  if (f.dim() != alpha.dim()) throw DimensionMismatch("polynomial and direction dimensions differ");
  return multiplier_norm(f, directional_symbol(alpha), ctx);
}

CertifiedReal poincare_ratio(const TrigPoly& f, const Direction& alpha, const mpq_class& exp_grad,
                             const mpq_class& exp_dir, const PrecisionContext& ctx) {
  return multi_directional_functional(f, {alpha}, exp_grad, exp_dir, ctx);
}

CertifiedReal multi_directional_functional(const TrigPoly& f, const std::vector<Direction>& dirs,
                                           const mpq_class& exp_grad, const mpq_class& exp_sum,
                                           const PrecisionContext& ctx) {
  if (dirs.empty()) throw InvalidArgument("at least one direction is required");
  if (dirs.size() > 1 && static_cast<int>(dirs.size()) > f.dim() - 1) {
    throw InvalidArgument("number of directions must be at most d - 1");
  }
  for (const auto& a : dirs) {
    if (a.dim() != f.dim()) throw DimensionMismatch("polynomial and direction dimensions differ");
  }
  check_exponents(exp_grad, exp_sum);
  if (f.empty()) throw ZeroFunction("the functional is undefined for f = 0");
  // The (2 pi)^d factors cancel: work with sums normalised by S0.
  const mpq_class s0 = mass_sum(f);
  const mpq_class grad_ratio_sq = gradient_mass_sum(f) / s0;
  std::vector<Symbol> symbols;
  for (const auto& a : dirs) symbols.push_back(directional_symbol(a));
  auto eval = [f, symbols, s0, grad_ratio_sq, exp_grad, exp_sum, ctx](mpfr_prec bits) {
    const PrecisionContext c = at_bits(ctx, bits);
    const mpfr_prec b = c.working_bits() + 16;
    const Interval inv_s0 = Interval::from_mpq(1 / s0, b);
    Interval dir_sum(b);
    for (const auto& sym : symbols) dir_sum += (weighted_mass(f, sym, c) * inv_s0).sqrt();
    const Interval g = Interval::from_mpq(grad_ratio_sq, b).sqrt();
    return g.pow(exp_grad) * dir_sum.pow(exp_sum);
  };
  return CertifiedReal(eval(ctx.working_bits()), eval);
}

HalfMassCutoff half_mass_cutoff(const TrigPoly& f, const PrecisionContext& ctx) {
  if (f.empty()) throw ZeroFunction("half-mass cutoff is undefined for f = 0");
  const mpq_class s0 = mass_sum(f);
  const mpq_class s1 = gradient_mass_sum(f);
  HalfMassCutoff out;
  out.radius_squared = 4 * s1 / s0;
  mpq_class tail = 0;
  for (const auto& [k, c] : f.terms()) {
    if (mpq_class(k.norm_squared()) >= out.radius_squared) tail += c.abs_squared();
  }
  out.tail_fraction_exact = tail / s0;
  const mpq_class r2 = out.radius_squared;
  auto radius = [r2](mpfr_prec bits) { return Interval::from_mpq(r2, bits + 8).sqrt(); };
  out.radius = CertifiedReal(radius(ctx.working_bits()), radius);
  out.tail_mass_fraction = CertifiedReal::exact(out.tail_fraction_exact, ctx.working_bits());
  return out;
}

}  // namespace dirp
