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

#include "dirp/diophantine.hpp"

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

ExponentPair delta_from_sigma(const mpq_class& sigma) {
  if (sigma <= 0) throw NonpositiveSigma("sigma must be positive, got " + sigma.get_str());
  mpq_class delta = 1 / (sigma + 1);
  delta.canonicalize();
  mpq_class grad = 1 - delta;
  grad.canonicalize();
  return {grad, delta};
}

ExponentPair roth_exponents(const mpq_class& eps) {
  if (eps <= 0 || eps >= mpq_class(1, 2)) throw InvalidArgument("Roth epsilon must lie in (0, 1/2)");
  mpq_class g = mpq_class(1, 2) + eps;
  mpq_class d = mpq_class(1, 2) - eps;
  g.canonicalize();
  d.canonicalize();
  return {g, d};
}

ExponentPair exponent_preset(const std::string& name, int d, int ell) {
  if (d < 1 || ell < 1) throw InvalidArgument("dimension and direction count must be positive");
  if (name == "thm1") {
    if (ell != 1) throw InvalidArgument("thm1 takes exactly one direction");
    return {d - 1, 1};
  }
  if (name == "thm2") return {d - 1, ell};
  if (name == "improved") return {d - ell, ell};
  if (name.rfind("delta:", 0) == 0) return delta_from_sigma(parse_rational(name.substr(6)));
  if (name.rfind("roth:", 0) == 0) return roth_exponents(parse_rational(name.substr(5)));
  throw ParseError("unknown exponent preset '" + name + "' (thm1, thm2, improved, delta:sigma, roth:eps)");
}

HurwitzReport hurwitz_witnesses(const Direction& alpha, size_t count, const PrecisionContext& ctx) {
  if (alpha.dim() != 2) throw DimensionMismatch("Hurwitz witnesses need a direction in R^2");
  if (count < 1) throw InvalidArgument("count must be at least 1");
  const RealForm& a1 = alpha.form(0);
  const RealForm& a2 = alpha.form(1);
  const auto r1 = as_rational(a1);
  const auto r2 = as_rational(a2);
  if ((r1 && *r1 == 0) || (r2 && *r2 == 0)) throw InvalidArgument("both entries must be nonzero");
  const RealForm rho = ratio(a1, a2);
  if (as_rational(rho)) throw RationalRatio("alpha_1/alpha_2 is rational; no Hurwitz sequence exists");
  const auto* rho_quad = std::get_if<QuadraticForm>(&rho);

  HurwitzReport out;
  const mpfr_prec bits = ctx.working_bits();
  out.envelope = CertifiedReal(alpha.norm(bits) / Interval::sqrt_of(5, bits));

  size_t depth = 2 * count + 8;
  for (;;) {
    const CFExpansion cf = cf_expand(rho, depth, ctx);
    out.witnesses.clear();
    out.convergents_tested = 0;
    for (size_t n = 0; n < cf.certified_depth && out.witnesses.size() < count; ++n) {
      const Convergent& c = cf.convergents[n];
      ++out.convergents_tested;
      bool pass = false;
      bool exact = false;
      if (rho_quad) {
        // 5 q^4 (rho - p/q)^2 <= 1 in Q(sqrt D).
        const QuadraticNumber diff = rho_quad->value() - mpq_class(c.p, c.q);
        const QuadraticNumber lhs = diff * diff * mpq_class(5 * c.q * c.q * c.q * c.q);
        pass = (lhs - mpq_class(1)).sign() <= 0;
        exact = true;
      } else {
        const mpfr_prec b = bits + 2 * static_cast<mpfr_prec>(mpz_sizeinbase(c.q.get_mpz_t(), 2));
        const Interval diff = enclose(rho, b) - Interval::from_mpq(mpq_class(c.p, c.q), b);
        const Interval lhs = diff.square().mul_int(5).mul_mpz(c.q * c.q * c.q * c.q);
        pass = mpfr_cmp_ui(lhs.hi().get(), 1) <= 0;
      }
      if (!pass) continue;
      FreqVector k(std::vector<mpz_class>{c.q, -c.p});
      const InnerProduct ip = inner_product(k, alpha, ctx);
      const mpfr_prec b = std::max(ip.bits, bits);
      const Interval norm = Interval::from_mpz(k.norm_squared(), b).sqrt();
      out.witnesses.push_back({k, c, CertifiedReal(norm * ip.value.abs()), exact});
    }
    if (out.witnesses.size() >= count) return out;
    if (cf.certified_depth < depth && !cf.unlimited) {
      throw DepthNotCertified("only " + std::to_string(out.witnesses.size()) + " Hurwitz witnesses within certified depth " +
                              std::to_string(cf.certified_depth));
    }
    depth *= 2;
  }
}

MarkovConstant markov_bounds(int level, const PrecisionContext& ctx) {
  static const char* const kForms[] = {"quad:sqrt5", "quad:sqrt8", "quad:sqrt221/5"};
  if (level < 1 || level > 3) {
    throw UnsupportedLevel("Markov level " + std::to_string(level) + " unsupported (levels 1 to 3 only)");
  }
  MarkovConstant m;
  m.level = level;
  m.exact = parse_real(kForms[level - 1]);
  m.value = to_certified(m.exact, ctx.working_bits());
  return m;
}

CertifiedReal markov_envelope(const Direction& alpha, int level, const PrecisionContext& ctx) {
  const MarkovConstant m = markov_bounds(level, ctx);
  const RealForm form = m.exact;
  const Direction a = alpha;
  auto eval = [a, form](mpfr_prec bits) { return a.norm(bits + 16) / enclose(form, bits + 16); };
  return CertifiedReal(eval(ctx.working_bits()), eval);
}

}  // namespace dirp
