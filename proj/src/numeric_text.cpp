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

#include "dirp/numeric_text.hpp"

#include <algorithm>
#include <cctype>

#include "dirp/errors.hpp"

namespace dirp {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  parts.push_back(trim(cur));
  return parts;
}

mpz_class parse_integer(std::string_view text) {
  const std::string t = trim(text);
  size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
  if (i == t.size()) throw ParseError("expected an integer, got '" + t + "'");
  for (size_t j = i; j < t.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(t[j]))) throw ParseError("expected an integer, got '" + t + "'");
  }
  mpz_class z;
  z.set_str(t[0] == '+' ? t.substr(1) : t, 10);
  return z;
}

mpq_class parse_decimal_exact(std::string_view text) {
  const std::string t = trim(text);
  size_t i = 0;
  bool negative = false;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) negative = t[i++] == '-';
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  bool any_digit = false;
  for (; i < t.size(); ++i) {
    const char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      any_digit = true;
      if (seen_dot) ++frac;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw ParseError("expected a decimal number, got '" + t + "'");
  long exponent = 0;
  if (i < t.size()) {
    if (t[i] != 'e' && t[i] != 'E') throw ParseError("trailing characters in decimal '" + t + "'");
    const mpz_class e = parse_integer(std::string_view(t).substr(i + 1));
    if (!e.fits_slong_p() || abs(e) > 1000000) throw ParseError("decimal exponent out of range in '" + t + "'");
    exponent = e.get_si();
  }
  mpz_class num(digits, 10);
  const long shift = exponent - frac;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift >= 0 ? shift : -shift));
  mpq_class q = shift >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class parse_rational(std::string_view text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return parse_decimal_exact(t);
  const mpq_class num = parse_decimal_exact(std::string_view(t).substr(0, slash));
  const mpq_class den = parse_decimal_exact(std::string_view(t).substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + t + "'");
  mpq_class q = num / den;
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return q.get_str(10);
  const int places = std::max(twos, fives);
  if (places == 0) return q.get_num().get_str(10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const mpz_class scaled = q.get_num() * scale / q.get_den();
  const bool negative = scaled < 0;
  std::string s = mpz_class(abs(scaled)).get_str(10);
  if (static_cast<int>(s.size()) <= places) s = std::string(static_cast<size_t>(places) - s.size() + 1, '0') + s;
  s.insert(s.size() - static_cast<size_t>(places), ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return negative ? "-" + s : s;
}

}  // namespace dirp
