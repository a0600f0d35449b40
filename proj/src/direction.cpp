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

#include "dirp/direction.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"
#include "named_constants.hpp"

namespace dirp {

namespace {

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

mpq_class pow10_inverse(long digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return mpq_class(1, scale);
}

/// (a + b sqrt D)/c in lowest terms with D squarefree and c > 0; a rational
/// when the radical vanishes.
RealForm canonical_quadratic(mpz_class a, mpz_class b, mpz_class d, mpz_class c) {
  if (c == 0) throw ParseError("quadratic denominator is zero");
  if (d < 0) throw ParseError("negative radicand");
  if (d == 0 || b == 0) return RationalForm{make_rational(a, c)};
  const auto dec = squarefree_decomposition(d);
  if (dec) {
    b *= dec->first;
    d = dec->second;
  }
  if (d == 1) {
    mpq_class q(a + b, c);
    q.canonicalize();
    return RationalForm{q};
  }
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return QuadraticForm{a, b, d, c};
}

RealForm from_quadratic_number(const QuadraticNumber& x) {
  if (x.is_rational()) return RationalForm{x.rational_part()};
  mpz_class c;
  mpz_lcm(c.get_mpz_t(), x.rational_part().get_den_mpz_t(), x.radical_part().get_den_mpz_t());
  const mpq_class a = x.rational_part() * c;
  const mpq_class b = x.radical_part() * c;
  return canonical_quadratic(a.get_num(), b.get_num(), x.radicand(), c);
}

// "(1+sqrt5)/2", "sqrt2", "-3sqrt7/5", "(3-2*sqrt(7))/5", "2+sqrt3"
RealForm parse_quadratic(const std::string& body_in) {
  std::string body;
  for (char ch : body_in) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') body += ch;
  }
  mpz_class c = 1;
  const auto slash = body.rfind('/');
  const auto close = body.rfind(')');
  const auto sq = body.find("sqrt");
  if (sq == std::string::npos) throw ParseError("quadratic form needs 'sqrt': '" + body_in + "'");
  if (slash != std::string::npos && slash > sq && (close == std::string::npos || slash > close)) {
    c = parse_integer(body.substr(slash + 1));
    body = body.substr(0, slash);
  }
  if (!body.empty() && body.front() == '(' && body.back() == ')' && body.find("sqrt(") == std::string::npos) {
    body = body.substr(1, body.size() - 2);
  } else if (body.size() > 1 && body.front() == '(' && body.back() == ')') {
    // "(1+sqrt(5))" keeps inner parens for the radicand.
    const std::string inner = body.substr(1, body.size() - 2);
    if (std::count(inner.begin(), inner.end(), '(') == std::count(inner.begin(), inner.end(), ')')) body = inner;
  }
  const auto pos = body.find("sqrt");
  const std::string prefix = body.substr(0, pos);
  std::string radicand = body.substr(pos + 4);
  if (!radicand.empty() && radicand.front() == '(' && radicand.back() == ')') {
    radicand = radicand.substr(1, radicand.size() - 2);
  }
  const mpz_class d = parse_integer(radicand);

  mpz_class a = 0, b = 1;
  size_t split = std::string::npos;
  for (size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      split = i;
      break;
    }
  }
  std::string bpart = prefix;
  if (split != std::string::npos) {
    a = parse_integer(prefix.substr(0, split));
    bpart = prefix.substr(split);
  } else if (!prefix.empty() && prefix.back() != '+' && prefix.back() != '-' &&
             prefix.find_first_of("+-", 1) != std::string::npos) {
    throw ParseError("cannot parse quadratic form '" + body_in + "'");
  }
  if (bpart.empty() || bpart == "+") {
    b = 1;
  } else if (bpart == "-") {
    b = -1;
  } else {
    b = parse_integer(bpart);
  }
  return canonical_quadratic(a, b, d, c);
}

RealForm parse_continued_fraction(const std::string& body) {
  std::string inner = trim(body);
  if (inner.size() < 2 || inner.front() != '[' || inner.back() != ']') {
    throw ParseError("continued fraction must look like cf:[a0,a1,...]: '" + body + "'");
  }
  inner = inner.substr(1, inner.size() - 2);
  std::replace(inner.begin(), inner.end(), ';', ',');
  std::vector<mpz_class> prefix;
  std::vector<mpz_class> period;
  for (const auto& part : split_top_level(inner, ',')) {
    if (part.empty()) continue;
    if (part.front() == '(') {
      if (part.back() != ')') throw ParseError("bad periodic block in '" + body + "'");
      if (!period.empty()) throw ParseError("only one periodic block allowed in '" + body + "'");
      for (const auto& p : split_top_level(part.substr(1, part.size() - 2), ',')) period.push_back(parse_integer(p));
      if (period.empty()) throw ParseError("empty periodic block in '" + body + "'");
    } else {
      if (!period.empty()) throw ParseError("periodic block must come last in '" + body + "'");
      prefix.push_back(parse_integer(part));
    }
  }
  if (prefix.empty() && period.empty()) throw ParseError("empty continued fraction");
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (i > 0 && prefix[i] <= 0) throw ParseError("partial quotients after a0 must be positive");
  }
  for (const auto& p : period) {
    if (p <= 0) throw ParseError("periodic quotients must be positive");
  }

  if (period.empty()) {
    // Evaluate the finite expansion from the back.
    mpq_class x = mpq_class(prefix.back());
    for (size_t i = prefix.size() - 1; i-- > 0;) {
      if (x == 0) throw ParseError("zero partial quotient");
      x = mpq_class(prefix[i]) + 1 / x;
    }
    x.canonicalize();
    return RationalForm{x};
  }

  // Purely periodic tail y = [b1; ..., bp, y] solves k y^2 + (k' - h) y - h' = 0.
  mpz_class h = 1, hp = 0, k = 0, kp = 1;
  for (const auto& b : period) {
    const mpz_class hn = b * h + hp;
    const mpz_class kn = b * k + kp;
    hp = h;
    h = hn;
    kp = k;
    k = kn;
  }
  const mpz_class disc = (kp - h) * (kp - h) + 4 * k * hp;
  if (is_perfect_square(disc)) throw ParseError("periodic block does not define a quadratic irrational");
  QuadraticNumber y(mpq_class(h - kp, 2 * k), mpq_class(1, 2 * k), disc);
  // Apply the prefix from the back: x = a + 1/x.
  QuadraticNumber x = y;
  for (size_t i = prefix.size(); i-- > 0;) {
    x = QuadraticNumber::rational(mpq_class(prefix[i]), disc) +
        QuadraticNumber::rational(1, disc) / x;
    if (i == 0) break;
  }
  return from_quadratic_number(x);
}

Interval liouville_enclosure(const mpz_class& base, mpfr_prec bits) {
  // Partial sum of b^-n! until the next term drops below 2^-(bits+16); the
  // tail after term m is at most 2 b^-(m+1)!.
  const mpfr_prec work = bits + 32;
  const Interval b = Interval::from_mpz(base, work);
  const Interval one = Interval::from_integer(1, work);
  Interval sum(work);
  unsigned long fact = 1;
  for (unsigned long n = 1;; ++n) {
    fact *= n;
    sum += one / b.pow(mpq_class(fact));
    const unsigned long next = fact * (n + 1);
    // log2(b^next) >= next * (bits of b - 1)
    const double next_log2 = static_cast<double>(next) * (static_cast<double>(mpz_sizeinbase(base.get_mpz_t(), 2)) - 1.0);
    if (next_log2 > static_cast<double>(bits + 16) || n > 20) {
      const Interval tail = (one / b.pow(mpq_class(next))).mul_int(2);
      Interval zero_to_tail = Interval::from_integer(0, work).join(tail);
      return sum + zero_to_tail;
    }
  }
}

const char* named_digits(NamedConstantId id) {
  switch (id) {
    case NamedConstantId::kE:
      return detail::kEDigits;
    case NamedConstantId::kPi:
      return detail::kPiDigits;
    case NamedConstantId::kLog2:
      return detail::kLog2Digits;
  }
  return detail::kEDigits;
}

Interval literal_enclosure(const std::string& literal, int fraction_digits, mpfr_prec bits) {
  const mpq_class v = parse_decimal_exact(literal);
  const mpq_class r = pow10_inverse(fraction_digits);
  return Interval::hull(v - r, v + r, bits);
}

int count_fraction_digits(const std::string& literal) {
  const auto dot = literal.find('.');
  if (dot == std::string::npos) return 0;
  int n = 0;
  for (size_t i = dot + 1; i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i])); ++i) ++n;
  return n;
}

}  // namespace

QuadraticNumber QuadraticForm::value() const { return QuadraticNumber(make_rational(a, c), make_rational(b, c), radicand); }

RealForm parse_real(const std::string& text_in) {
  const std::string text = trim(text_in);
  if (text.empty()) throw ParseError("empty number spec");
  if (starts_with(text, "rat:")) return RationalForm{parse_rational(text.substr(4))};
  if (starts_with(text, "quad:")) return parse_quadratic(text.substr(5));
  if (starts_with(text, "dec:")) {
    std::string lit = trim(text.substr(4));
    // tolerate a trailing ellipsis
    for (const std::string ell : {"\xE2\x80\xA6", "..."}) {
      if (lit.size() >= ell.size() && lit.compare(lit.size() - ell.size(), ell.size(), ell) == 0) {
        lit.erase(lit.size() - ell.size());
      }
    }
    parse_decimal_exact(lit);
    if (lit.find_first_of("eE") != std::string::npos) throw ParseError("dec: literals take no exponent: '" + text + "'");
    return DecimalForm{lit, count_fraction_digits(lit)};
  }
  if (starts_with(text, "cf:")) return parse_continued_fraction(text.substr(3));
  if (starts_with(text, "liouville:")) {
    const mpz_class b = parse_integer(text.substr(10));
    if (b < 2) throw ParseError("Liouville base must be >= 2");
    return LiouvilleForm{b};
  }
  if (starts_with(text, "const:")) {
    const std::string name = trim(text.substr(6));
    if (name == "e") return NamedConstantForm{NamedConstantId::kE};
    if (name == "pi") return NamedConstantForm{NamedConstantId::kPi};
    if (name == "log2") return NamedConstantForm{NamedConstantId::kLog2};
    throw ParseError("unknown constant '" + name + "' (expected e, pi or log2)");
  }
  if (text.find("sqrt") != std::string::npos) return parse_quadratic(text);
  try {
    return RationalForm{parse_rational(text)};
  } catch (const ParseError&) {
    throw ParseError("unrecognised number spec '" + text + "'");
  }
}

std::string format_real(const RealForm& form) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, RationalForm>) {
          return "rat:" + f.value.get_str(10);
        } else if constexpr (std::is_same_v<T, QuadraticForm>) {
          const mpz_class ab = abs(f.b);
          std::string radical = (ab != 1 ? ab.get_str(10) : "") + "sqrt" + f.radicand.get_str(10);
          std::string s = f.a == 0 ? "quad:" + std::string(f.b < 0 ? "-" : "") + radical
                                   : "quad:(" + f.a.get_str(10) + (f.b < 0 ? "-" : "+") + radical + ")";
          if (f.c != 1) s += "/" + f.c.get_str(10);
          return s;
        } else if constexpr (std::is_same_v<T, DecimalForm>) {
          return "dec:" + f.literal;
        } else if constexpr (std::is_same_v<T, LiouvilleForm>) {
          return "liouville:" + f.base.get_str(10);
        } else if constexpr (std::is_same_v<T, NamedConstantForm>) {
          switch (f.id) {
            case NamedConstantId::kE:
              return "const:e";
            case NamedConstantId::kPi:
              return "const:pi";
            case NamedConstantId::kLog2:
              return "const:log2";
          }
          return "const:?";
        } else {
          return "derived:" + f.description;
        }
      },
      form);
}

Interval enclose(const RealForm& form, mpfr_prec bits) {
  return std::visit(
      [bits](const auto& f) -> Interval {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, RationalForm>) {
          return Interval::from_mpq(f.value, bits);
        } else if constexpr (std::is_same_v<T, QuadraticForm>) {
          const mpfr_prec work = bits + 32;
          return (Interval::from_mpz(f.a, work) + Interval::sqrt_of(f.radicand, work).mul_mpz(f.b)) /
                 Interval::from_mpz(f.c, work);
        } else if constexpr (std::is_same_v<T, DecimalForm>) {
          return literal_enclosure(f.literal, f.fraction_digits, bits);
        } else if constexpr (std::is_same_v<T, LiouvilleForm>) {
          return liouville_enclosure(f.base, bits);
        } else if constexpr (std::is_same_v<T, NamedConstantForm>) {
          return literal_enclosure(named_digits(f.id), detail::kNamedConstantDigits, bits);
        } else {
          return f.enclose(bits);
        }
      },
      form);
}

CertifiedReal to_certified(const RealForm& form, mpfr_prec bits) {
  return CertifiedReal(enclose(form, bits), [form](mpfr_prec b) { return enclose(form, b); });
}

bool refinable_without_limit(const RealForm& form) {
  if (std::holds_alternative<DecimalForm>(form) || std::holds_alternative<NamedConstantForm>(form)) return false;
  if (const auto* e = std::get_if<EnclosureForm>(&form)) return e->refinable;
  return true;
}

std::optional<mpq_class> as_rational(const RealForm& form) {
  if (const auto* r = std::get_if<RationalForm>(&form)) return r->value;
  return std::nullopt;
}

std::optional<QuadraticNumber> as_quadratic(const RealForm& form, const mpz_class& radicand_hint) {
  if (const auto* q = std::get_if<QuadraticForm>(&form)) return q->value();
  if (const auto* r = std::get_if<RationalForm>(&form)) {
    if (radicand_hint >= 2 && !is_perfect_square(radicand_hint)) return QuadraticNumber::rational(r->value, radicand_hint);
  }
  return std::nullopt;
}

bool is_transcendental(const RealForm& form) {
  return std::holds_alternative<LiouvilleForm>(form) || std::holds_alternative<NamedConstantForm>(form);
}

RealForm ratio(const RealForm& num, const RealForm& den) {
  const auto rn = as_rational(num);
  const auto rd = as_rational(den);
  if (rd && *rd == 0) throw InvalidArgument("ratio with a zero denominator");
  if (rn && rd) return RationalForm{mpq_class(*rn / *rd)};
  mpz_class radicand = 0;
  if (const auto* q = std::get_if<QuadraticForm>(&num)) radicand = q->radicand;
  if (const auto* q = std::get_if<QuadraticForm>(&den)) {
    if (radicand != 0 && radicand != q->radicand) radicand = -1;
    if (radicand == 0) radicand = q->radicand;
  }
  if (radicand > 0) {
    const auto qn = as_quadratic(num, radicand);
    const auto qd = as_quadratic(den, radicand);
    if (qn && qd) return from_quadratic_number(*qn / *qd);
  }
  const RealForm n = num, d = den;
  EnclosureForm e;
  e.description = "(" + format_real(num) + ")/(" + format_real(den) + ")";
  e.refinable = refinable_without_limit(num) && refinable_without_limit(den);
  e.enclose = [n, d](mpfr_prec bits) { return enclose(n, bits + 16) / enclose(d, bits + 16); };
  return e;
}

std::string DirectionSpec::to_string() const {
  std::string s = "dir:[";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += entries[i].text;
  }
  return s + "]";
}

DirectionSpec make_direction(std::vector<RealForm> entries) {
  DirectionSpec spec;
  for (auto& f : entries) {
    const std::string text = format_real(f);
    spec.entries.push_back({std::move(f), text});
  }
  return spec;
}

DirectionSpec parse_direction(const std::string& text_in) {
  const std::string text = trim(text_in);
  DirectionSpec spec;
  std::string body;
  if (starts_with(text, "dir:")) {
    body = trim(text.substr(4));
  } else if (starts_with(text, "slope:")) {
    spec.normalized_first_one = true;
    spec.entries.push_back({RationalForm{1}, "1"});
    body = trim(text.substr(6));
    if (body.empty() || body.front() != '[') body = "[" + body + "]";
  } else {
    body = text;
  }
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError("direction must look like dir:[a1, a2, ...] or slope:beta: '" + text + "'");
  }
  for (const auto& part : split_top_level(body.substr(1, body.size() - 2), ',')) {
    if (part.empty()) throw ParseError("empty entry in direction '" + text + "'");
    spec.entries.push_back({parse_real(part), part});
  }
  if (spec.entries.empty()) throw ParseError("direction has no entries");
  return spec;
}

Direction::Direction(DirectionSpec spec) : spec_(std::move(spec)) {
  if (spec_.entries.empty()) throw InvalidArgument("direction must have at least one entry");
}

std::vector<Interval> Direction::enclosures(mpfr_prec bits) const {
  std::vector<Interval> out;
  out.reserve(spec_.entries.size());
  for (const auto& e : spec_.entries) out.push_back(enclose(e.form, bits));
  return out;
}

Interval Direction::norm(mpfr_prec bits) const {
  Interval s(bits);
  for (const auto& e : enclosures(bits)) s += e.square();
  return s.sqrt();
}

NormalizedDirection normalize_first_one(const DirectionSpec& spec) {
  NormalizedDirection out;
  int lead = -1;
  for (int i = 0; i < spec.dim(); ++i) {
    const auto r = as_rational(spec.entries[static_cast<size_t>(i)].form);
    if (!r || *r != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw InvalidArgument("direction is identically zero");
  out.leading_index = lead;
  out.permuted = lead != 0;
  const RealForm& pivot = spec.entries[static_cast<size_t>(lead)].form;
  std::vector<RealForm> entries;
  entries.push_back(RationalForm{1});
  for (int i = 0; i < spec.dim(); ++i) {
    if (i == lead) continue;
    entries.push_back(ratio(spec.entries[static_cast<size_t>(i)].form, pivot));
  }
  out.spec = make_direction(std::move(entries));
  out.spec.normalized_first_one = true;
  return out;
}

bool proven_zero_inner_product(const FreqVector& k, const DirectionSpec& spec) {
  if (k.dim() != spec.dim()) throw DimensionMismatch("frequency and direction dimensions differ");
  // Identical entries are merged before the algebraic test.
  std::map<std::string, std::pair<const RealForm*, mpz_class>> groups;
  for (int i = 0; i < spec.dim(); ++i) {
    const auto& f = spec.entries[static_cast<size_t>(i)].form;
    if (std::holds_alternative<EnclosureForm>(f)) {
      if (k[static_cast<size_t>(i)] != 0) return false;
      continue;
    }
    auto& g = groups[format_real(f)];
    g.first = &f;
    g.second += k[static_cast<size_t>(i)];
  }
  RadicalCombination sum;
  for (const auto& [text, g] : groups) {
    const mpz_class& coef = g.second;
    if (coef == 0) continue;
    const RealForm& f = *g.first;
    if (const auto* r = std::get_if<RationalForm>(&f)) {
      sum.add_rational(mpq_class(coef) * r->value);
    } else if (const auto* q = std::get_if<QuadraticForm>(&f)) {
      sum.add_rational(make_rational(coef * q->a, q->c));
      if (!sum.add_radical(make_rational(coef * q->b, q->c), q->radicand)) return false;
    } else {
      return false;
    }
  }
  return sum.is_zero();
}

Interval inner_product_at(const FreqVector& k, const std::vector<Interval>& alpha) {
  Interval s(alpha.front().precision());
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (k[i] == 0) continue;
    if (k[i].fits_slong_p()) {
      s += alpha[i].mul_int(k[i].get_si());
    } else {
      s += alpha[i].mul_mpz(k[i]);
    }
  }
  return s;
}

bool resolved(const Interval& value) {
  if (value.contains_zero()) return false;
  Mpfr r = value.rad();
  mpfr_mul_2ui(r.get(), r.get(), 64, MPFR_RNDU);
  const Interval a = value.abs();
  return mpfr_lessequal_p(r.get(), a.lo().get()) != 0;
}

InnerProduct inner_product(const FreqVector& k, const Direction& alpha, const PrecisionContext& ctx) {
  if (k.dim() != alpha.dim()) throw DimensionMismatch("frequency and direction dimensions differ");
  bool all_refinable = true;
  for (int i = 0; i < alpha.dim(); ++i) {
    if (k[static_cast<size_t>(i)] != 0 && !refinable_without_limit(alpha.form(i))) all_refinable = false;
  }
  std::optional<bool> zero_proof;
  mpfr_prec bits = ctx.working_bits();
  // Frequencies with huge entries need their own magnitude in extra bits.
  for (const auto& v : k.entries()) bits += static_cast<mpfr_prec>(mpz_sizeinbase(v.get_mpz_t(), 2) / 4);
  const mpfr_prec cap = ctx.max_bits();
  if (bits > cap) bits = cap;
  Mpfr previous_rad(64);
  bool have_previous = false;
  for (;;) {
    InnerProduct out{inner_product_at(k, alpha.enclosures(bits)), false, bits};
    if (resolved(out.value)) return out;
    if (out.value.contains_zero() && ctx.zero_policy == ZeroPolicy::kExactForms) {
      if (!zero_proof) zero_proof = proven_zero_inner_product(k, alpha.spec());
      if (*zero_proof) {
        out.value = Interval(bits);
        out.exact_zero = true;
        return out;
      }
    }
    const Mpfr rad = out.value.rad();
    const bool stalled = have_previous && !all_refinable &&
                         mpfr_cmp(rad.get(), previous_rad.get()) >= 0;
    if (bits >= cap || stalled) {
      if (!out.value.contains_zero()) return out;
      throw PrecisionExhausted("<k, alpha> cannot be separated from zero for k = " + k.to_string() + " at " +
                               std::to_string(bits_to_digits(bits)) + " digits");
    }
    previous_rad = rad;
    have_previous = true;
    bits = std::min(cap, bits * 2);
  }
}

}  // namespace dirp
