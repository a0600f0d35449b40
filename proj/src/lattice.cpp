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

#include "dirp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

namespace {

FreqVector to_freq(const std::vector<long>& k) { return FreqVector(std::vector<mpz_class>(k.begin(), k.end())); }

long max_abs(const std::vector<long>& k) {
  long m = 0;
  for (long v : k) m = std::max(m, std::labs(v));
  return m;
}

long norm2_of(const std::vector<long>& k) {
  long s = 0;
  for (long v : k) s += v * v;
  return s;
}

bool lex_less(const std::vector<long>& a, const std::vector<long>& b) { return a < b; }

void check_radius(long radius) {
  if (radius < 1) throw InvalidArgument("search radius must be at least 1");
  if (radius > 3037000499L / 2) throw InvalidArgument("search radius too large");
}

/// |k|^sigma |<k, alpha>| with a floating-point prefilter that rigorously
/// bounds the value from below.
class WeightedEvaluator {
 public:
  WeightedEvaluator(const Direction& alpha, const mpq_class& sigma, NormKind norm, const PrecisionContext& ctx)
      : alpha_(alpha), sigma_(sigma), norm_(norm), ctx_(ctx), bits_(ctx.working_bits()) {
    if (sigma < 0) throw InvalidArgument("weight exponent must be nonnegative");
    enclosures_ = alpha.enclosures(bits_);
    sigma_d_ = sigma.get_d();
    for (const auto& e : enclosures_) {
      const double a = e.to_double();
      const double lo = e.lo_double();
      const double hi = e.hi_double();
      double err = std::max(hi - a, a - lo);
      err = err * (1 + 1e-14) + std::abs(a) * 1e-15 + std::numeric_limits<double>::denorm_min();
      approx_.push_back(a);
      err_.push_back(err);
      usable_ = usable_ && std::isfinite(a) && std::isfinite(err);
    }
  }

  /// True when the value at k provably exceeds `bound`.
  bool exceeds(const std::vector<long>& k, double bound) const {
    if (!usable_ || !std::isfinite(bound)) return false;
    double s = 0, mag = 0, e = 0;
    for (size_t i = 0; i < k.size(); ++i) {
      const double kd = static_cast<double>(k[i]);
      s += kd * approx_[i];
      mag += std::abs(kd * approx_[i]);
      e += std::abs(kd) * err_[i];
    }
    const double total_err = 2 * (e + 8 * static_cast<double>(k.size() + 1) * 0x1p-53 * mag) + 1e-300;
    const double low = std::abs(s) - total_err;
    if (low <= 0) return false;
    double w = 1;
    if (norm_ == NormKind::kEuclidean) {
      w = std::pow(static_cast<double>(norm2_of(k)), sigma_d_ / 2);
    } else {
      w = std::pow(static_cast<double>(max_abs(k)), sigma_d_);
    }
    return low * w * (1 - 1e-10) > bound;
  }

  struct Value {
    Interval value;
    bool exact_zero = false;
    mpfr_prec bits = 0;
  };

  Value evaluate(const std::vector<long>& k) const {
    const FreqVector fk = to_freq(k);
    Interval ip = inner_product_at(fk, enclosures_);
    mpfr_prec bits = bits_;
    if (!resolved(ip)) {
      const InnerProduct full = inner_product(fk, alpha_, ctx_);
      if (full.exact_zero) return {Interval(bits_), true, full.bits};
      ip = full.value;
      bits = full.bits;
    }
    Interval w(bits);
    if (norm_ == NormKind::kEuclidean) {
      w = Interval::from_integer(norm2_of(k), bits).pow(sigma_ / 2);
    } else {
      w = Interval::from_integer(max_abs(k), bits).pow(sigma_);
    }
    return {w * ip.abs(), false, bits};
  }

 private:
  const Direction& alpha_;
  mpq_class sigma_;
  NormKind norm_;
  PrecisionContext ctx_;
  mpfr_prec bits_;
  std::vector<Interval> enclosures_;
  std::vector<double> approx_;
  std::vector<double> err_;
  double sigma_d_ = 1;
  bool usable_ = true;
};

/// Running minimum with the documented tie-break.
struct MinTracker {
  bool any = false;
  Interval enclosure;
  Mpfr best_mid;
  std::vector<long> argmin;
  std::optional<std::vector<long>> zero;
  mpfr_prec max_bits = 0;

  void offer(const WeightedEvaluator::Value& v, const std::vector<long>& k) {
    max_bits = std::max(max_bits, v.bits);
    if (v.exact_zero) {
      if (!zero || norm2_of(k) < norm2_of(*zero) || (norm2_of(k) == norm2_of(*zero) && lex_less(k, *zero))) {
        zero = k;
      }
      return;
    }
    const Mpfr mid = v.value.mid();
    if (!any) {
      any = true;
      enclosure = v.value;
      best_mid = mid;
      argmin = k;
      return;
    }
    enclosure = Interval::min(enclosure, v.value);
    const int c = mpfr_cmp(mid.get(), best_mid.get());
    if (c < 0 || (c == 0 && lex_less(k, argmin))) {
      best_mid = mid;
      argmin = k;
    }
  }

  double bound() const {
    if (zero) return -1;
    if (!any) return std::numeric_limits<double>::infinity();
    return mpfr_get_d(enclosure.hi().get(), MPFR_RNDU);
  }
};

void enumerate(int dim, long radius, NormKind norm, size_t i, long budget, bool nonzero_seen, std::vector<long>& k,
               const std::function<void(const std::vector<long>&)>& visit) {
  if (i == static_cast<size_t>(dim)) {
    if (nonzero_seen) visit(k);
    return;
  }
  long bound = radius;
  if (norm == NormKind::kEuclidean) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), mpz_class(budget).get_mpz_t());
    bound = r.get_si();
  }
  const long start = nonzero_seen ? -bound : 0;
  for (long v = start; v <= bound; ++v) {
    k[i] = v;
    const long rest = norm == NormKind::kEuclidean ? budget - v * v : budget;
    enumerate(dim, radius, norm, i + 1, rest, nonzero_seen || v != 0, k, visit);
  }
  k[i] = 0;
}

}  // namespace

std::string to_string(NormKind norm) { return norm == NormKind::kEuclidean ? "euclidean" : "max"; }

NormKind parse_norm_kind(const std::string& text) {
  if (text == "euclidean" || text == "l2") return NormKind::kEuclidean;
  if (text == "max" || text == "inf") return NormKind::kMax;
  throw ParseError("norm must be 'euclidean' or 'max', got '" + text + "'");
}

void for_each_half_ball(int dim, long radius, NormKind norm, const std::function<void(const std::vector<long>&)>& visit) {
  if (dim < 1) throw InvalidArgument("dimension must be at least 1");
  check_radius(radius);
  std::vector<long> k(static_cast<size_t>(dim), 0);
  enumerate(dim, radius, norm, 0, norm == NormKind::kEuclidean ? radius * radius : radius, false, k, visit);
}

LatticeSearchResult lattice_min(const Direction& alpha, long radius, const mpq_class& sigma, NormKind norm,
                                const PrecisionContext& ctx) {
  ctx.validate();
  check_radius(radius);
  WeightedEvaluator eval(alpha, sigma, norm, ctx);
  MinTracker tracker;
  LatticeSearchResult out;
  for_each_half_ball(alpha.dim(), radius, norm, [&](const std::vector<long>& k) {
    ++out.enumerated;
    if (eval.exceeds(k, tracker.bound())) return;
    tracker.offer(eval.evaluate(k), k);
  });
  out.direction = alpha.spec();
  out.radius = radius;
  out.sigma = sigma;
  out.norm = norm;
  out.digits_used = bits_to_digits(std::max(tracker.max_bits, ctx.working_bits()));
  if (tracker.zero) {
    out.exact_zero_witness = to_freq(*tracker.zero);
    out.argmin = *out.exact_zero_witness;
    out.minimum = CertifiedReal::exact(0, ctx.working_bits());
  } else {
    out.argmin = to_freq(tracker.argmin);
    out.minimum = CertifiedReal(tracker.enclosure);
  }
  return out;
}

LatticeProfile::LatticeProfile(const Direction& alpha, long max_radius, const mpq_class& sigma,
                               const PrecisionContext& ctx)
    : max_radius_(max_radius) {
  ctx.validate();
  check_radius(max_radius);
  std::vector<std::vector<long>> points;
  for_each_half_ball(alpha.dim(), max_radius, NormKind::kEuclidean,
                     [&](const std::vector<long>& k) { points.push_back(k); });
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    const long na = norm2_of(a), nb = norm2_of(b);
    return na != nb ? na < nb : a < b;
  });
  WeightedEvaluator eval(alpha, sigma, NormKind::kEuclidean, ctx);
  MinTracker tracker;
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& k = points[i];
    if (!tracker.zero && !eval.exceeds(k, tracker.bound())) tracker.offer(eval.evaluate(k), k);
    const bool shell_end = i + 1 == points.size() || norm2_of(points[i + 1]) != norm2_of(k);
    if (!shell_end) continue;
    if (tracker.zero) {
      has_zero_ = true;
      shells_.push_back({norm2_of(k), Interval(ctx.working_bits()), to_freq(*tracker.zero)});
    } else {
      shells_.push_back({norm2_of(k), tracker.enclosure, to_freq(tracker.argmin)});
    }
  }
}

const LatticeProfile::Shell& LatticeProfile::shell_for(const mpz_class& bound) const {
  if (bound > mpz_class(max_radius_) * max_radius_) throw InvalidArgument("query beyond the profile radius");
  auto it = std::upper_bound(shells_.begin(), shells_.end(), bound,
                             [](const mpz_class& b, const Shell& s) { return b < s.norm_squared; });
  if (it == shells_.begin()) throw InvalidArgument("query radius below the first nonzero shell");
  return *std::prev(it);
}

Interval LatticeProfile::min_within_squared(const mpz_class& bound) const { return shell_for(bound).prefix_min; }

FreqVector LatticeProfile::argmin_within_squared(const mpz_class& bound) const {
  return shell_for(bound).prefix_argmin;
}

void LinearFormSystem::validate() const {
  if (forms.empty()) throw InvalidArgument("a system needs at least one linear form");
  const int n = forms.front().dim();
  for (const auto& f : forms) {
    if (f.dim() != n) throw DimensionMismatch("linear forms have different dimensions");
  }
  if (ell() > dim() - 1) throw InvalidArgument("number of forms must be at most d - 1");
}

SystemSearchResult system_lattice_min(const LinearFormSystem& system, long radius, const PrecisionContext& ctx) {
  ctx.validate();
  system.validate();
  check_radius(radius);
  const int d = system.dim();
  const int ell = system.ell();
  // Each form L_i is read as the direction (1, beta_i) in R^d, so that
  // ||L_i(x)|| = min over k_1 of |<(k_1, x), (1, beta_i)>|.
  std::vector<Direction> extended;
  for (const auto& f : system.forms) {
    DirectionSpec spec;
    spec.entries.push_back({RationalForm{1}, "1"});
    for (const auto& e : f.spec().entries) spec.entries.push_back(e);
    spec.normalized_first_one = true;
    extended.emplace_back(spec);
  }
  const mpfr_prec bits = ctx.working_bits();
  std::vector<std::vector<Interval>> beta;
  for (const auto& f : system.forms) beta.push_back(f.enclosures(bits));
  std::vector<std::vector<Interval>> extended_enclosures;
  for (const auto& e : extended) extended_enclosures.push_back(e.enclosures(bits));

  SystemSearchResult out;
  for (const auto& f : system.forms) out.forms.push_back(f.spec());
  out.radius = radius;
  out.exponent = make_rational(d - 1, ell);
  out.absolute_exponent = make_rational(d - ell, ell);
  mpfr_prec max_bits = bits;

  auto abs_inner = [&](size_t i, const std::vector<long>& k) -> std::pair<Interval, bool> {
    const FreqVector fk = to_freq(k);
    Interval v = inner_product_at(fk, extended_enclosures[i]);
    if (resolved(v)) return {v.abs(), false};
    const InnerProduct ip = inner_product(fk, extended[i], ctx);
    max_bits = std::max(max_bits, ip.bits);
    return {ip.value.abs(), ip.exact_zero};
  };

  // Distance-to-integer form over x in Z^(d-1).
  {
    MinTracker tracker;
    for_each_half_ball(d - 1, radius, NormKind::kMax, [&](const std::vector<long>& x) {
      ++out.enumerated;
      const FreqVector fx = to_freq(x);
      Interval worst(bits);
      bool first = true;
      for (size_t i = 0; i < system.forms.size(); ++i) {
        const Interval l = inner_product_at(fx, beta[i]);
        mpz_class n;
        {
          Mpfr m = l.mid();
          mpfr_get_z(n.get_mpz_t(), m.get(), MPFR_RNDD);
        }
        std::optional<Interval> dist;
        for (const mpz_class& cand : {mpz_class(n), mpz_class(n + 1)}) {
          std::vector<long> k{-cand.get_si()};
          k.insert(k.end(), x.begin(), x.end());
          const auto [v, zero] = abs_inner(i, k);
          const Interval dv = zero ? Interval(bits) : v;
          dist = dist ? Interval::min(*dist, dv) : dv;
        }
        if (first) {
          worst = *dist;
          first = false;
        } else {
          // max of two enclosures
          worst = -Interval::min(-worst, -*dist);
        }
      }
      const Interval w = Interval::from_integer(max_abs(x), bits).pow(out.exponent);
      WeightedEvaluator::Value v{w * worst, false, bits};
      tracker.offer(v, x);
    });
    out.minimum = CertifiedReal(tracker.enclosure);
    out.argmin = to_freq(tracker.argmin);
    out.dirichlet_consistent = mpfr_cmp_ui(tracker.enclosure.lo().get(), 1) <= 0;
  }

  // Absolute-value variant over k in Z^d.
  {
    MinTracker tracker;
    for_each_half_ball(d, radius, NormKind::kMax, [&](const std::vector<long>& k) {
      ++out.enumerated;
      Interval worst(bits);
      bool first = true;
      bool all_zero = true;
      for (size_t i = 0; i < extended.size(); ++i) {
        const auto [v, zero] = abs_inner(i, k);
        all_zero = all_zero && zero;
        const Interval dv = zero ? Interval(bits) : v;
        if (first) {
          worst = dv;
          first = false;
        } else {
          worst = -Interval::min(-worst, -dv);
        }
      }
      if (all_zero) {
        tracker.offer({Interval(bits), true, bits}, k);
        return;
      }
      const Interval w = Interval::from_integer(max_abs(k), bits).pow(out.absolute_exponent);
      tracker.offer({w * worst, false, bits}, k);
    });
    if (tracker.zero) {
      out.absolute_minimum = CertifiedReal::exact(0, bits);
      out.absolute_argmin = to_freq(*tracker.zero);
    } else {
      out.absolute_minimum = CertifiedReal(tracker.enclosure);
      out.absolute_argmin = to_freq(tracker.argmin);
    }
  }
  out.digits_used = bits_to_digits(max_bits);
  return out;
}

}  // namespace dirp
