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

#include "dirp/continued_fraction.hpp"

#include <map>

#include "dirp/errors.hpp"

namespace dirp {

namespace {

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

void fill_convergents(CFExpansion& cf) {
  cf.convergents.clear();
  mpz_class p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (const auto& a : cf.quotients) {
    const mpz_class p = a * p1 + p2;
    const mpz_class q = a * q1 + q2;
    cf.convergents.push_back({p, q});
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
}

}  // namespace

CFExpansion cf_expand_rational(const mpq_class& x_in, size_t depth) {
  if (depth < 1) throw InvalidArgument("continued fraction depth must be at least 1");
  CFExpansion cf;
  cf.unlimited = true;
  mpq_class x = x_in;
  x.canonicalize();
  while (cf.quotients.size() < depth) {
    const mpz_class a = floor_q(x);
    cf.quotients.push_back(a);
    const mpq_class frac = x - a;
    if (frac == 0) {
      cf.terminated = true;
      break;
    }
    x = 1 / frac;
  }
  cf.certified_depth = cf.quotients.size();
  fill_convergents(cf);
  return cf;
}

CFExpansion cf_expand_quadratic(const QuadraticNumber& x_in, size_t depth) {
  if (depth < 1) throw InvalidArgument("continued fraction depth must be at least 1");
  CFExpansion cf;
  cf.unlimited = true;
  // The complete quotients x_n are exact field elements; the expansion is
  // periodic from the first repeated x_n on.
  std::map<std::pair<mpq_class, mpq_class>, size_t> seen;
  QuadraticNumber x = x_in;
  while (cf.quotients.size() < depth) {
    const auto key = std::make_pair(x.rational_part(), x.radical_part());
    const auto it = seen.find(key);
    if (it != seen.end()) {
      cf.period_start = it->second;
      cf.period.assign(cf.quotients.begin() + static_cast<long>(it->second), cf.quotients.end());
      break;
    }
    seen.emplace(key, cf.quotients.size());
    const mpz_class a = x.floor();
    cf.quotients.push_back(a);
    x = QuadraticNumber::rational(1, x.radicand()) / (x - mpq_class(a));
  }
  if (cf.period_start) {
    const size_t start = *cf.period_start;
    const size_t len = cf.period.size();
    while (cf.quotients.size() < depth) cf.quotients.push_back(cf.period[(cf.quotients.size() - start) % len]);
  }
  cf.certified_depth = cf.quotients.size();
  fill_convergents(cf);
  return cf;
}

CFExpansion cf_expand_interval(const mpq_class& lo_in, const mpq_class& hi_in, size_t depth) {
  if (depth < 1) throw InvalidArgument("continued fraction depth must be at least 1");
  if (lo_in > hi_in) throw InvalidArgument("empty interval");
  if (lo_in == hi_in) return cf_expand_rational(lo_in, depth);
  CFExpansion cf;
  mpq_class lo = lo_in, hi = hi_in;
  while (cf.quotients.size() < depth) {
    const mpz_class a = floor_q(lo);
    if (floor_q(hi) != a) {
      cf.note = "floor differs across the enclosure at quotient " + std::to_string(cf.quotients.size());
      break;
    }
    const mpq_class flo = lo - a;
    if (flo == 0) {
      // x may equal a exactly; the next quotient is unbounded.
      cf.note = "enclosure touches an integer at quotient " + std::to_string(cf.quotients.size());
      break;
    }
    cf.quotients.push_back(a);
    const mpq_class fhi = hi - a;
    lo = 1 / fhi;
    hi = 1 / flo;
  }
  cf.certified_depth = cf.quotients.size();
  fill_convergents(cf);
  return cf;
}

CFExpansion cf_expand(const RealForm& x, size_t depth, const PrecisionContext& ctx) {
  if (depth < 1) throw InvalidArgument("continued fraction depth must be at least 1");
  if (const auto q = as_rational(x)) return cf_expand_rational(*q, depth);
  if (const auto* qf = std::get_if<QuadraticForm>(&x)) return cf_expand_quadratic(qf->value(), depth);
  const bool refinable = refinable_without_limit(x);
  mpfr_prec bits = ctx.working_bits();
  CFExpansion best;
  for (;;) {
    const Interval e = enclose(x, bits);
    CFExpansion cf = cf_expand_interval(e.lo_rational(), e.hi_rational(), depth);
    const bool improved = cf.certified_depth > best.certified_depth || best.quotients.empty();
    if (improved) best = std::move(cf);
    if (best.certified_depth >= depth || bits >= ctx.max_bits()) break;
    // Stored-digit forms stop helping once their own radius dominates.
    if (!improved && (!refinable || bits > 4 * ctx.working_bits())) break;
    bits = std::min(ctx.max_bits(), bits * 2);
  }
  if (best.certified_depth < depth) {
    best.note = "certified " + std::to_string(best.certified_depth) + " of " + std::to_string(depth) +
                " quotients from " + format_real(x) + "; " + best.note;
  }
  return best;
}

void require_certified_depth(const CFExpansion& cf, size_t depth) {
  if (cf.certified_depth < depth && !cf.terminated) {
    throw DepthNotCertified("continued fraction certified only to depth " + std::to_string(cf.certified_depth) +
                            " (needed " + std::to_string(depth) + ")");
  }
}

BoundedQuotientReport bounded_quotient_report(const CFExpansion& cf, const mpz_class& bound_window) {
  BoundedQuotientReport r;
  r.threshold = bound_window;
  r.depth_examined = cf.certified_depth;
  r.max_quotient = 0;
  for (size_t i = 1; i < cf.certified_depth; ++i) {
    if (cf.quotients[i] > r.max_quotient) {
      r.max_quotient = cf.quotients[i];
      r.max_index = i;
    }
  }
  r.exceeds_threshold = r.max_quotient > bound_window;
  const std::string depth = std::to_string(cf.certified_depth);
  if (cf.period_start && !r.exceeds_threshold) {
    r.verdict = "periodic expansion, quotients bounded by " + r.max_quotient.get_str() +
                " (exact, quadratic irrational)";
  } else if (r.exceeds_threshold) {
    r.verdict = "unbounded-pattern evidence: quotient " + r.max_quotient.get_str() + " at index " +
                std::to_string(r.max_index) + " exceeds " + bound_window.get_str() + " within certified depth " +
                depth + "; direction (1,x) expected inadmissible (finite-depth evidence, not a proof)";
  } else {
    r.verdict = "no quotient above " + bound_window.get_str() + " within certified depth " + depth +
                " (finite-depth evidence, not a proof)";
  }
  return r;
}

}  // namespace dirp
