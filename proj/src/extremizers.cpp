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

#include "dirp/extremizers.hpp"

#include <sstream>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

namespace {

mpz_class fib(unsigned long n) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class ipow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

unsigned long factorial(long n) {
  unsigned long f = 1;
  for (long i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

std::string decimal(const CertifiedReal& x, int digits) { return x.to_decimal(digits).value; }

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::kFibonacci:
      return "fibonacci";
    case Family::kLiouville:
      return "liouville";
    case Family::kConvergentWave:
      return "convergent_wave";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "fib" || text == "fibonacci") return Family::kFibonacci;
  if (text == "liouville") return Family::kLiouville;
  if (text == "cwave" || text == "convergent_wave") return Family::kConvergentWave;
  throw ParseError("unknown family '" + text + "' (fib, liouville, cwave)");
}

FamilyMember fibonacci_family(long n) {
  if (n < 1) throw InvalidArgument("Fibonacci index must be at least 1");
  FamilyMember m;
  m.family = Family::kFibonacci;
  m.index = n;
  m.frequency = FreqVector(std::vector<mpz_class>{fib(static_cast<unsigned long>(n + 1)), -fib(static_cast<unsigned long>(n))});
  m.poly = TrigPoly::sine(m.frequency);
  m.expected = "ratio = sqrt(F_(n+1)^2/F_n^2 + 1) |F_(n+1)/F_n - phi| F_n^2 -> |alpha|/sqrt5 against (1, phi)";
  return m;
}

Interval fibonacci_closed_form_ratio(long n, mpfr_prec bits) {
  if (n < 1) throw InvalidArgument("Fibonacci index must be at least 1");
  const mpfr_prec b = bits + 32;
  const mpz_class fn = fib(static_cast<unsigned long>(n));
  const mpz_class fn1 = fib(static_cast<unsigned long>(n + 1));
  const Interval r = Interval::from_mpq(mpq_class(fn1, fn), b);
  const Interval phi = (Interval::from_integer(1, b) + Interval::sqrt_of(5, b)) / Interval::from_integer(2, b);
  const Interval one = Interval::from_integer(1, b);
  return (r.square() + one).sqrt() * (r - phi).abs() * Interval::from_mpz(fn * fn, b);
}

FamilyMember liouville_family(long N, long base) {
  if (N < 1) throw InvalidArgument("Liouville index must be at least 1");
  if (base < 2) throw InvalidArgument("Liouville base must be at least 2");
  if (N >= 5) {
    throw PrecisionCapExceeded("Liouville index N = " + std::to_string(N) +
                               " exceeds the supported range 1..4 (frequencies of size b^(N!))");
  }
  const unsigned long nf = factorial(N);
  const mpz_class b = base;
  mpz_class k1 = 0;
  for (long n = 1; n <= N; ++n) k1 += ipow(b, nf - factorial(n));
  FamilyMember m;
  m.family = Family::kLiouville;
  m.index = N;
  m.frequency = FreqVector(std::vector<mpz_class>{k1, -ipow(b, nf)});
  m.poly = TrigPoly::sine(m.frequency);
  m.grad_bound = 6 * ipow(b, nf);
  m.expected = "||f_N||^2 = 2 pi^2, ||grad f_N|| / ||f_N|| <= 6 b^(N!), directional ratio = b^(N!) sum_{n>N} b^(-n!)";
  return m;
}

FamilyMember convergent_wave(const Direction& alpha, long n, const PrecisionContext& ctx) {
  if (alpha.dim() != 2) throw DimensionMismatch("convergent waves need a direction in R^2");
  if (n < 0) throw InvalidArgument("convergent index must be nonnegative");
  const auto a1 = as_rational(alpha.form(0));
  if (a1 && *a1 == 0) throw InvalidArgument("first entry of alpha must be nonzero");
  const RealForm beta = ratio(alpha.form(1), alpha.form(0));
  if (as_rational(beta)) throw RationalRatio("alpha_2/alpha_1 is rational");
  const CFExpansion cf = cf_expand(beta, static_cast<size_t>(n) + 1, ctx);
  require_certified_depth(cf, static_cast<size_t>(n) + 1);
  const Convergent& c = cf.convergents[static_cast<size_t>(n)];
  FamilyMember m;
  m.family = Family::kConvergentWave;
  m.index = n;
  m.frequency = FreqVector(std::vector<mpz_class>{c.p, -c.q});
  m.poly = TrigPoly::sine(m.frequency);
  m.convergent = c;
  m.expected = "<k_n, alpha> = alpha_1 (p_n - beta q_n) small; |k_n| |<k_n, alpha>| bounded below iff quotients bounded";
  return m;
}

FamilyMember family_member_from_text(const std::string& text, const Direction* alpha, const PrecisionContext& ctx) {
  const auto parts = split_top_level(text, ':');
  if (parts.size() < 2) throw ParseError("family spec must look like fib:n, liouville:N[:base] or cwave:n");
  const Family fam = parse_family(parts[0]);
  const long idx = parse_integer(parts[1]).get_si();
  switch (fam) {
    case Family::kFibonacci:
      if (parts.size() != 2) throw ParseError("fib:n takes one index");
      return fibonacci_family(idx);
    case Family::kLiouville:
      if (parts.size() > 3) throw ParseError("liouville:N[:base]");
      return liouville_family(idx, parts.size() == 3 ? parse_integer(parts[2]).get_si() : 10);
    case Family::kConvergentWave:
      if (!alpha) throw InvalidArgument("cwave:n needs a direction");
      return convergent_wave(*alpha, idx, ctx);
  }
  throw ParseError("unknown family");
}

SharpnessTable sharpness_table(const Direction& alpha, Family family, long n_max, const ExponentPair& exponents,
                               const PrecisionContext& ctx) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  if (alpha.dim() != 2) throw DimensionMismatch("family tables need a direction in R^2");
  SharpnessTable table;
  table.exponents = exponents;
  const mpfr_prec bits = ctx.working_bits();
  std::optional<CertifiedReal> limit;
  if (family == Family::kFibonacci) limit = markov_envelope(alpha, 1, ctx);
  if (family == Family::kLiouville) limit = CertifiedReal::exact(0, bits);

  long first = family == Family::kConvergentWave ? 0 : 1;
  long last = n_max;
  if (family == Family::kLiouville) last = std::min<long>(n_max, 4);
  for (long n = first; n <= last; ++n) {
    FamilyMember m;
    switch (family) {
      case Family::kFibonacci:
        m = fibonacci_family(n);
        break;
      case Family::kLiouville:
        m = liouville_family(n);
        break;
      case Family::kConvergentWave:
        m = convergent_wave(alpha, n, ctx);
        break;
    }
    const InnerProduct ip = inner_product(m.frequency, alpha, ctx);
    const mpz_class n2 = m.frequency.norm_squared();
    SharpnessRow row;
    row.family = family;
    row.index = n;
    row.k = m.frequency;
    row.abs_k = CertifiedReal(Interval::from_mpz(n2, bits).sqrt(),
                              [n2](mpfr_prec b) { return Interval::from_mpz(n2, b).sqrt(); });
    row.inner = CertifiedReal(ip.value);
    row.ratio = poincare_ratio(m.poly, alpha, exponents.grad, exponents.dir, ctx);
    row.limit = limit;
    table.rows.push_back(std::move(row));
  }

  const size_t count = table.rows.size();
  if (family == Family::kFibonacci) {
    bool cover = true;
    for (size_t i = 3; i < count; ++i) {
      const Interval q = table.rows[i].abs_k.enclosure() / table.rows[i - 1].abs_k.enclosure();
      if (mpfr_cmp_ui(q.hi().get(), 2) >= 0) cover = false;
    }
    table.dyadic_cover = cover;
  }
  if (count < 3) {
    table.verdict = "too few rows for a verdict";
    return table;
  }
  // Minimum over each third of the table. A drop of at least 20% from one
  // third to the next, twice in a row, reads as "not bounded below".
  const size_t third = count / 3;
  const size_t cuts[] = {0, third, 2 * third, count};
  std::vector<Interval> mins;
  for (int part = 0; part < 3; ++part) {
    Interval m = table.rows[cuts[part]].ratio.enclosure();
    for (size_t i = cuts[part] + 1; i < cuts[part + 1]; ++i) m = Interval::min(m, table.rows[i].ratio.enclosure());
    mins.push_back(m);
  }
  const Interval factor = Interval::from_mpq(mpq_class(4, 5), bits);
  const bool falling = mpfr_cmp(mins[1].hi().get(), (mins[0] * factor).lo().get()) < 0 &&
                       mpfr_cmp(mins[2].hi().get(), (mins[1] * factor).lo().get()) < 0;
  if (falling) {
    table.verdict = "ratios not bounded below on the computed range: inequality fails (finite-depth evidence)";
  } else {
    table.verdict = "ratios bounded below on the computed range (finite-depth evidence)";
  }
  if (family == Family::kFibonacci && limit) {
    table.verdict += "; limit |alpha|/sqrt5 = " + decimal(*limit, 20);
  }
  return table;
}

std::string to_csv(const SharpnessTable& table, int digits) {
  std::ostringstream out;
  out << "family,index,k,abs_k,inner,ratio,limit\n";
  for (const auto& r : table.rows) {
    out << to_string(r.family) << ',' << r.index << ",\"" << r.k.to_string() << "\"," << decimal(r.abs_k, digits) << ','
        << decimal(r.inner, digits) << ',' << decimal(r.ratio, digits) << ','
        << (r.limit ? decimal(*r.limit, digits) : std::string()) << '\n';
  }
  return out.str();
}

}  // namespace dirp
