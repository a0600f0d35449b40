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

#include "dirp/serialize.hpp"

#include <charconv>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

namespace {

mpz_class integer_from_json(const Json& v) {
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (v.is_number_unsigned()) return mpz_class(v.get<unsigned long>());
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw ParseError("frequency entries must be integers");
}

std::string text_field(const Json& term, const char* key) {
  if (!term.contains(key)) return "0";
  const Json& v = term.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw ParseError(std::string("coefficient field '") + key + "' must be a decimal string");
}

Json strings(const std::vector<mpz_class>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace

Json to_json(const CertifiedReal& x, int digits) {
  const auto d = x.to_decimal(digits);
  return Json{{"value", d.value}, {"radius", d.radius}, {"digits", d.digits}};
}

std::string double_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const FreqVector& k) {
  Json a = Json::array();
  for (const auto& v : k.entries()) {
    if (v.fits_slong_p()) {
      a.push_back(v.get_si());
    } else {
      a.push_back(v.get_str());
    }
  }
  return a;
}

Json to_json(const TrigPoly& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    terms.push_back(Json{{"k", to_json(k)}, {"re", rational_to_string(c.re)}, {"im", rational_to_string(c.im)}});
  }
  return Json{{"dim", f.dim()}, {"terms", terms}};
}

TrigPoly trig_poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms")) {
    throw ParseError("polynomial JSON needs \"dim\" and \"terms\"");
  }
  if (!j.at("dim").is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const int dim = j.at("dim").get<int>();
  TrigPoly f(dim);
  size_t index = 0;
  for (const auto& term : j.at("terms")) {
    const std::string where = "term " + std::to_string(index++) + ": ";
    try {
      if (!term.contains("k") || !term.at("k").is_array()) throw ParseError("missing \"k\" array");
      std::vector<mpz_class> k;
      for (const auto& v : term.at("k")) k.push_back(integer_from_json(v));
      Coefficient c{parse_rational(text_field(term, "re")), parse_rational(text_field(term, "im"))};
      f.add_term(FreqVector(std::move(k)), c);
    } catch (const Error& e) {
      if (dynamic_cast<const DimensionMismatch*>(&e)) throw DimensionMismatch(where + e.what());
      throw ParseError(where + e.what());
    }
  }
  return f;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset to line and column.
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

TrigPoly parse_trig_poly(const std::string& text) { return trig_poly_from_json(parse_json_text(text)); }

Json to_json(const LatticeSearchResult& r, int digits) {
  Json j{{"direction", r.direction.to_string()},
         {"radius", r.radius},
         {"weight_exponent", rational_to_string(r.sigma)},
         {"norm_used", to_string(r.norm)},
         {"minimum", to_json(r.minimum, digits)},
         {"argmin", to_json(r.argmin)},
         {"digits_used", r.digits_used},
         {"exact_zero_witness", r.exact_zero_witness ? to_json(*r.exact_zero_witness) : Json(nullptr)},
         {"enumerated", r.enumerated}};
  return j;
}

Json to_json(const SystemSearchResult& r, int digits) {
  Json forms = Json::array();
  for (const auto& f : r.forms) forms.push_back(f.to_string());
  return Json{{"forms", forms},
              {"radius", r.radius},
              {"exponent", rational_to_string(r.exponent)},
              {"minimum", to_json(r.minimum, digits)},
              {"argmin", to_json(r.argmin)},
              {"absolute_exponent", rational_to_string(r.absolute_exponent)},
              {"absolute_minimum", to_json(r.absolute_minimum, digits)},
              {"absolute_argmin", to_json(r.absolute_argmin)},
              {"dirichlet_consistent", r.dirichlet_consistent},
              {"digits_used", r.digits_used},
              {"enumerated", r.enumerated}};
}

Json to_json(const CFExpansion& cf) {
  Json conv = Json::array();
  for (const auto& c : cf.convergents) conv.push_back(c.p.get_str() + "/" + c.q.get_str());
  Json j{{"quotients", strings(cf.quotients)},
         {"convergents", conv},
         {"certified_depth", cf.certified_depth},
         {"unlimited", cf.unlimited},
         {"terminated", cf.terminated}};
  if (cf.period_start) {
    j["period_start"] = *cf.period_start;
    j["period"] = strings(cf.period);
  }
  if (!cf.note.empty()) j["note"] = cf.note;
  return j;
}

Json to_json(const BoundedQuotientReport& r) {
  return Json{{"max_quotient", r.max_quotient.get_str()},
              {"max_index", r.max_index},
              {"depth_examined", r.depth_examined},
              {"threshold", r.threshold.get_str()},
              {"exceeds_threshold", r.exceeds_threshold},
              {"verdict", r.verdict}};
}

Json to_json(const HurwitzReport& r, int digits) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    w.push_back(Json{{"k", to_json(x.k)},
                     {"convergent", x.convergent.p.get_str() + "/" + x.convergent.q.get_str()},
                     {"product", to_json(x.product, digits)},
                     {"exact_test", x.exact}});
  }
  return Json{{"witnesses", w}, {"convergents_tested", r.convergents_tested}, {"envelope", to_json(r.envelope, digits)}};
}

Json to_json(const SharpnessTable& t, int digits) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back(Json{{"family", to_string(r.family)},
                        {"index", r.index},
                        {"k", to_json(r.k)},
                        {"abs_k", to_json(r.abs_k, digits)},
                        {"inner", to_json(r.inner, digits)},
                        {"ratio", to_json(r.ratio, digits)},
                        {"limit", r.limit ? to_json(*r.limit, digits) : Json(nullptr)}});
  }
  Json j{{"exponents", {rational_to_string(t.exponents.grad), rational_to_string(t.exponents.dir)}},
         {"rows", rows},
         {"verdict", t.verdict}};
  if (t.dyadic_cover) j["dyadic_cover"] = *t.dyadic_cover;
  return j;
}

Json to_json(const ContractionEstimate& e) {
  Json t = Json::array(), h = Json::array();
  for (double x : e.t_grid) t.push_back(double_text(x));
  for (double x : e.h) h.push_back(double_text(x));
  return Json{{"p", to_string(e.p)},
              {"M", e.M},
              {"seed", e.seed},
              {"method", e.method},
              {"t", t},
              {"h", h},
              {"slope", double_text(e.slope)},
              {"intercept", double_text(e.intercept)},
              {"residual", double_text(e.residual)},
              {"refined_slope", double_text(e.refined_slope)},
              {"refinement_agrees", e.refinement_agrees},
              {"regime", e.regime},
              {"verdict", e.verdict}};
}

Json run_header(const RunConfig& c) {
  return Json{{"tool", "dirp"},
              {"version", kVersion},
              {"config",
               {{"digits", c.digits},
                {"max_digits", c.max_digits},
                {"radius", c.radius},
                {"grid", c.grid},
                {"seed", std::to_string(c.seed)},
                {"format", c.format}}},
              {"seed", std::to_string(c.seed)},
              {"precision_digits", c.digits}};
}

}  // namespace dirp
