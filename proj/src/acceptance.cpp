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

#include "dirp/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

namespace {

constexpr int kDigits = 30;

Direction golden() { return Direction::parse("dir:[1, quad:(1+sqrt5)/2]"); }

bool hi_le(const Interval& x, const mpq_class& b) { return x.hi_rational() <= b; }
bool lo_ge(const Interval& x, const mpq_class& b) { return x.lo_rational() >= b; }

mpq_class q(const char* text) { return parse_rational(text); }

std::string dec(const Interval& x, int digits = 15) { return CertifiedReal(x).to_decimal(digits).value; }

CriterionResult fibonacci_sharpness(const RunConfig& cfg, SuiteOutput& out) {
  CriterionResult r{1, "Fibonacci sharpness", false, "", Json::object()};
  const PrecisionContext ctx = cfg.precision();
  const Direction alpha = golden();
  const SharpnessTable table = sharpness_table(alpha, Family::kFibonacci, 20, {1, 1}, ctx);
  out.files["fibonacci_table.csv"] = to_csv(table, kDigits);
  const Interval limit = table.rows.back().limit->enclosure();
  const Interval r20 = table.rows.back().ratio.enclosure();
  const bool near_limit = hi_le((r20 - limit).abs(), q("1e-6"));
  // Closed form against the direct spectral evaluation.
  bool agree = true;
  mpq_class worst = 0;
  for (const auto& row : table.rows) {
    const Interval closed = fibonacci_closed_form_ratio(row.index, ctx.working_bits());
    const mpq_class diff = (closed - row.ratio.enclosure()).abs().hi_rational();
    worst = std::max(worst, diff);
    if (diff > q("1e-30")) agree = false;
  }
  // Errors shrink along the table.
  bool converging = true;
  for (size_t i = 2; i < table.rows.size(); ++i) {
    const mpq_class e1 = (table.rows[i].ratio.enclosure() - limit).abs().lo_rational();
    const mpq_class e0 = (table.rows[i - 1].ratio.enclosure() - limit).abs().hi_rational();
    if (e1 > e0) converging = false;
  }
  r.passed = near_limit && agree && converging && table.dyadic_cover.value_or(false);
  std::ostringstream d;
  d << "ratio_20 = " << dec(r20) << ", |a|/sqrt5 = " << dec(limit) << ", closed form vs direct max diff "
    << CertifiedReal(Interval::from_mpq(worst, 64)).to_decimal(3).value << ", converging=" << converging;
  r.detail = d.str();
  r.data = to_json(table, kDigits);
  return r;
}

CriterionResult golden_lattice(const RunConfig& cfg) {
  CriterionResult r{2, "Proposition upper bound (lattice minimum for (1, phi))", false, "", Json::array()};
  const PrecisionContext ctx = cfg.precision();
  const Direction alpha = golden();
  std::vector<LatticeSearchResult> res;
  for (long R : {10L, 100L, 1000L}) {
    res.push_back(lattice_min(alpha, R, 1, NormKind::kEuclidean, ctx));
    r.data.push_back(to_json(res.back(), kDigits));
  }
  const Interval m1000 = res.back().minimum.enclosure();
  const bool in_range = lo_ge(m1000, q("0.8506508")) && hi_le(m1000, q("0.8507"));
  bool monotone = true;
  for (size_t i = 1; i < res.size(); ++i) {
    if (res[i].minimum.enclosure().lo_rational() > res[i - 1].minimum.enclosure().hi_rational()) monotone = false;
  }
  r.passed = in_range && monotone;
  r.detail = "R=10: " + dec(res[0].minimum.enclosure()) + ", R=100: " + dec(res[1].minimum.enclosure()) +
             ", R=1000: " + dec(m1000) + " at " + res.back().argmin.to_string() +
             (monotone ? ", nonincreasing" : ", NOT monotone");
  return r;
}

CriterionResult liouville_failure(const RunConfig& cfg) {
  CriterionResult r{3, "Liouville failure", false, "", Json::object()};
  const PrecisionContext ctx = cfg.precision();
  const Direction alpha = Direction::parse("dir:[1, liouville:10]");
  const FamilyMember m = liouville_family(3);
  const CertifiedReal l2 = l2_norm(m.poly, ctx);
  const CertifiedReal dn = directional_norm(m.poly, alpha, ctx);
  const CertifiedReal gn = grad_norm(m.poly, ctx);
  const Interval dir_ratio = dn.enclosure() / l2.enclosure();
  const Interval grad_ratio = gn.enclosure() / l2.enclosure();
  const CertifiedReal thm1 = poincare_ratio(m.poly, alpha, 1, 1, ctx);
  const bool dir_ok = lo_ge(dir_ratio, q("0.999e-18")) && hi_le(dir_ratio, q("1.001e-18"));
  const bool thm1_ok = hi_le(thm1.enclosure(), q("1e-11"));
  // ||f_3||^2 = (2 pi)^2 * 1/2 exactly; compare with an independent pi sqrt 2.
  const bool mass_exact = mass_sum(m.poly) == mpq_class(1, 2);
  const mpfr_prec bits = ctx.working_bits();
  const Interval pi_sqrt2 = Interval::pi(bits) * Interval::sqrt_of(2, bits);
  const bool l2_ok = mass_exact && l2.enclosure().overlaps(pi_sqrt2);
  const bool grad_ok = hi_le(grad_ratio, mpq_class(*m.grad_bound));
  const bool grad_abs_ok = hi_le(gn.enclosure(), mpq_class(*m.grad_bound));
  const InnerProduct ip = inner_product(m.frequency, alpha, ctx);
  r.passed = dir_ok && thm1_ok && l2_ok && grad_ok && grad_abs_ok && ip.value.negative();
  r.detail = "dir/l2 = " + dec(dir_ratio) + ", thm1 ratio = " + dec(thm1.enclosure()) + ", grad/l2 = " +
             dec(grad_ratio) + ", ||f_3|| = pi sqrt2: " + (l2_ok ? "yes" : "no");
  r.data = Json{{"frequency", to_json(m.frequency)},
                {"l2_norm", to_json(l2, kDigits)},
                {"grad_norm", to_json(gn, kDigits)},
                {"directional_norm", to_json(dn, kDigits)},
                {"poincare_ratio", to_json(thm1, kDigits)},
                {"inner_product", to_json(CertifiedReal(ip.value), kDigits)}};
  return r;
}

CriterionResult sqrt2_floor(const RunConfig& cfg) {
  CriterionResult r{4, "Liouville sqrt2 floor", false, "", Json::object()};
  const PrecisionContext ctx = cfg.precision();
  const Direction alpha = Direction::parse("dir:[quad:sqrt2, 1]");
  const LatticeSearchResult res = lattice_min(alpha, 200, 1, NormKind::kEuclidean, ctx);
  const Interval m = res.minimum.enclosure();
  const mpfr_prec bits = ctx.working_bits();
  const Interval exact = Interval::from_integer(2, bits) - Interval::sqrt_of(2, bits);
  const bool floor_ok = lo_ge(m, mpq_class(1, 3));
  const bool value_ok = hi_le((m - exact).abs(), q("1e-20"));
  r.passed = floor_ok && value_ok && !res.exact_zero_witness;
  r.detail = "minimum over " + std::to_string(res.enumerated) + " pairs +-k = " + dec(m, 25) + " at " +
             res.argmin.to_string() + ", 2 - sqrt2 = " + dec(exact, 25);
  r.data = to_json(res, kDigits);
  return r;
}

std::vector<TrigPoly> random_population(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<TrigPoly> polys;
  for (int i = 0; i < 1000; ++i) polys.push_back(random_trig_poly(2, 100, 128, rng));
  return polys;
}

CriterionResult half_mass(const std::vector<TrigPoly>& polys, const RunConfig& cfg) {
  CriterionResult r{5, "Half-mass lemma", false, "", Json::object()};
  int failures = 0;
  mpq_class worst = 0;
  for (const auto& f : polys) {
    const HalfMassCutoff h = half_mass_cutoff(f, cfg.precision());
    if (h.tail_fraction_exact > mpq_class(1, 2)) ++failures;
    worst = std::max(worst, h.tail_fraction_exact);
  }
  r.passed = failures == 0;
  r.detail = std::to_string(polys.size()) + " polynomials, failures " + std::to_string(failures) +
             ", largest tail fraction " + CertifiedReal(Interval::from_mpq(worst, 64)).to_decimal(6).value;
  r.data = Json{{"samples", polys.size()},
                {"failures", failures},
                {"max_tail_fraction", rational_to_string(worst)},
                {"seed", std::to_string(cfg.seed)}};
  return r;
}

CriterionResult ratio_lattice_chain(const std::vector<TrigPoly>& polys, const RunConfig& cfg) {
  CriterionResult r{6, "Ratio vs lattice minimum chain", false, "", Json::object()};
  const PrecisionContext ctx = cfg.precision();
  const Direction alpha = golden();
  const LatticeProfile profile(alpha, 256, 1, ctx);
  const mpfr_prec bits = ctx.working_bits();
  const Interval factor = Interval::from_integer(1, bits) / (Interval::sqrt_of(2, bits).mul_int(2));
  int failures = 0;
  mpq_class tightest = -1;
  for (const auto& f : polys) {
    const HalfMassCutoff h = half_mass_cutoff(f, ctx);
    mpz_class bound;
    mpz_fdiv_q(bound.get_mpz_t(), h.radius_squared.get_num_mpz_t(), h.radius_squared.get_den_mpz_t());
    const Interval rhs = factor * profile.min_within_squared(bound);
    const Interval lhs = poincare_ratio(f, alpha, 1, 1, ctx).enclosure();
    if (lhs.lo_rational() < rhs.hi_rational()) ++failures;
    const mpq_class slack = lhs.lo_rational() / rhs.hi_rational();
    if (tightest < 0 || slack < tightest) tightest = slack;
  }
  r.passed = failures == 0;
  r.detail = std::to_string(polys.size()) + " polynomials, failures " + std::to_string(failures) +
             ", smallest lhs/rhs " + CertifiedReal(Interval::from_mpq(tightest, 64)).to_decimal(6).value;
  r.data = Json{{"samples", polys.size()},
                {"failures", failures},
                {"min_lhs_over_rhs", CertifiedReal(Interval::from_mpq(tightest, 64)).to_decimal(12).value}};
  return r;
}

CriterionResult delta_table() {
  CriterionResult r{7, "delta-exponent table", true, "", Json::array()};
  const std::pair<const char*, std::pair<const char*, const char*>> rows[] = {
      {"1", {"1/2", "1/2"}}, {"7", {"7/8", "1/8"}}, {"13/5", {"13/18", "5/18"}}};
  std::string detail;
  for (const auto& [sigma, expected] : rows) {
    const ExponentPair e = delta_from_sigma(q(sigma));
    const bool ok = e.grad == q(expected.first) && e.dir == q(expected.second) &&
                    1 / e.dir - 1 == q(sigma);
    r.passed = r.passed && ok;
    const std::string got = "(" + e.grad.get_str() + ", " + e.dir.get_str() + ")";
    detail += std::string(detail.empty() ? "" : ", ") + "sigma=" + sigma + " -> " + got;
    r.data.push_back(Json{{"sigma", sigma}, {"exp_grad", e.grad.get_str()}, {"exp_dir", e.dir.get_str()}});
  }
  r.detail = detail;
  return r;
}

CriterionResult markov(const RunConfig& cfg) {
  CriterionResult r{8, "Markov constants", true, "", Json::array()};
  const PrecisionContext ctx = cfg.precision();
  const mpfr_prec bits = ctx.working_bits();
  const mpq_class squares[] = {5, 8, mpq_class(221, 25)};
  const Interval independent[] = {Interval::sqrt_of(5, bits), Interval::sqrt_of(8, bits),
                                  Interval::sqrt_of(221, bits) / Interval::from_integer(5, bits)};
  const mpq_class ulp = parse_rational("1e-" + std::to_string(cfg.digits - 2));
  std::string detail;
  for (int level = 1; level <= 3; ++level) {
    const MarkovConstant m = markov_bounds(level, ctx);
    const auto d = m.value.to_decimal(static_cast<int>(cfg.digits));
    const Interval printed = Interval::from_decimal(d.value, bits + 64);
    const auto exact = as_quadratic(m.exact);
    const bool form_ok = exact && exact->sign() > 0 && (*exact * *exact).is_rational() &&
                         (*exact * *exact).rational_part() == squares[level - 1];
    const bool value_ok = m.value.enclosure().overlaps(independent[level - 1]) &&
                          hi_le((printed - independent[level - 1]).abs(), ulp);
    r.passed = r.passed && form_ok && value_ok;
    detail += std::string(detail.empty() ? "" : ", ") + "L" + std::to_string(level) + " = " + format_real(m.exact) +
              " = " + d.value.substr(0, 20) + "...";
    r.data.push_back(Json{{"level", level},
                          {"exact", format_real(m.exact)},
                          {"value", to_json(m.value, static_cast<int>(cfg.digits))}});
  }
  r.detail = detail;
  return r;
}

CriterionResult cf_diagnostics(const RunConfig& cfg) {
  CriterionResult r{9, "CF diagnostics", false, "", Json::object()};
  const PrecisionContext ctx = cfg.precision();
  const CFExpansion phi = cf_expand(parse_real("quad:(1+sqrt5)/2"), 60, ctx);
  bool phi_ok = phi.unlimited && phi.period_start && phi.period == std::vector<mpz_class>{1};
  for (const auto& a : phi.quotients) phi_ok = phi_ok && a == 1;
  const CFExpansion s2 = cf_expand(parse_real("quad:sqrt2"), 60, ctx);
  bool s2_ok = s2.unlimited && s2.period_start && s2.period == std::vector<mpz_class>{2} && s2.quotients[0] == 1;
  for (size_t i = 1; i < s2.quotients.size(); ++i) s2_ok = s2_ok && s2.quotients[i] == 2;
  const CFExpansion e =
      cf_expand(parse_real("dec:2.718281828459045235360287471352662497757247093699959574966968"), 60, ctx);
  const BoundedQuotientReport er = bounded_quotient_report(e, 5);
  const bool e_ok = e.certified_depth >= 20 && er.max_quotient >= 10;
  r.passed = phi_ok && s2_ok && e_ok;
  r.detail = std::string("phi all ones (period (1)): ") + (phi_ok ? "yes" : "no") +
             ", sqrt2 period (2): " + (s2_ok ? "yes" : "no") + ", e literal certified depth " +
             std::to_string(e.certified_depth) + ", max quotient " + er.max_quotient.get_str();
  r.data = Json{{"phi", to_json(phi)}, {"sqrt2", to_json(s2)}, {"e", to_json(e)}, {"e_report", to_json(er)}};
  return r;
}

CriterionResult diffusion_scaling(const RunConfig& cfg, SuiteOutput& out) {
  CriterionResult r{10, "Diffusion scaling", false, "", Json::object()};
  const std::vector<double> grid{0.1, 0.05, 0.02, 0.01, 0.005};
  const size_t M = 4096;
  const ContractionEstimate sym = scaling_fit(parse_rv("uniform:-0.5:0.5"), PNorm::kTwo, grid, M, cfg.seed);
  const ContractionEstimate drift = scaling_fit(parse_rv("uniform:0:0.5"), PNorm::kTwo, grid, M, cfg.seed);
  const bool sym_ok = sym.slope >= 1.9 && sym.slope <= 2.1;
  const bool drift_ok = drift.slope >= 0.9 && drift.slope <= 1.1;
  r.passed = sym_ok && drift_ok;
  r.detail = "symmetric slope " + double_text(sym.slope) + " (" + sym.regime + "), drifted slope " +
             double_text(drift.slope) + " (" + drift.regime + ")";
  std::string csv = "Y,p,t,h,method,M,seed\n";
  for (const auto* e : {&sym, &drift}) {
    const std::string y = e == &sym ? "uniform:-0.5:0.5" : "uniform:0:0.5";
    for (size_t i = 0; i < e->t_grid.size(); ++i) {
      csv += y + "," + to_string(e->p) + "," + double_text(e->t_grid[i]) + "," + double_text(e->h[i]) + "," +
             e->method + "," + std::to_string(e->M) + "," + std::to_string(e->seed) + "\n";
    }
  }
  out.files["diffusion_scaling.csv"] = csv;
  r.data = Json{{"symmetric", to_json(sym)}, {"drifted", to_json(drift)}};
  return r;
}

CriterionResult taylor(const RunConfig&) {
  CriterionResult r{11, "Taylor limit", false, "", Json::object()};
  const TaylorReport t = taylor_limit_check({{1, 1.0}}, {0.05, 0.04, 0.03, 0.02, 0.01}, 4096);
  r.passed = t.relative_error <= 0.02;
  r.detail = "extrapolated " + double_text(t.extrapolated) + " vs (2 pi)^2/6 = " + double_text(t.expected) +
             ", relative error " + double_text(t.relative_error);
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(Json{{"t", double_text(row.t)}, {"ratio", double_text(row.ratio)}});
  r.data = Json{{"rows", rows},
                {"extrapolated", double_text(t.extrapolated)},
                {"expected", double_text(t.expected)},
                {"relative_error", double_text(t.relative_error)}};
  return r;
}

CriterionResult contraction_properties(const RunConfig& cfg) {
  CriterionResult r{12, "Contraction lemma, telescoping and Cesaro bounds", false, "", Json::object()};
  const size_t M = 256;
  const double slack = 1e-9;
  std::mt19937_64 rng(cfg.seed + 12);
  int failures[4] = {0, 0, 0, 0};
  double worst[4] = {-1e300, -1e300, -1e300, -1e300};
  for (int trial = 0; trial < 200; ++trial) {
    const GridMeasure mu = random_grid_measure(M, rng);
    const GridFunction f = GridFunction::random_mean_zero(M, rng);
    const long n = 1 + static_cast<long>(rng() % 64);
    const GridFunction fmu = apply_markov(f, mu);
    const GridFunction fpow = apply_markov(f, convolution_power(mu, n));
    const GridFunction fces = apply_markov(f, cesaro_average(mu, n));
    const double c = std::clamp(mu.density_floor(), 0.0, 1.0);
    const double nd = static_cast<double>(n);
    for (PNorm p : {PNorm::kOne, PNorm::kTwo, PNorm::kInf}) {
      const double step = (f - fmu).norm(p);
      const double margins[4] = {fmu.norm(p) - f.norm(p), (f - fpow).norm(p) - nd * step,
                                 (f - fces).norm(p) - nd * step, fmu.norm(p) - (1 - c) * f.norm(p)};
      for (int i = 0; i < 4; ++i) {
        worst[i] = std::max(worst[i], margins[i]);
        if (margins[i] > slack) ++failures[i];
      }
    }
  }
  r.passed = failures[0] + failures[1] + failures[2] + failures[3] == 0;
  const char* names[] = {"young", "telescoping", "cesaro", "one_minus_c"};
  std::string detail = "200 triples, M=256:";
  for (int i = 0; i < 4; ++i) {
    detail += std::string(" ") + names[i] + " failures " + std::to_string(failures[i]) + ";";
    r.data[names[i]] = Json{{"failures", failures[i]}, {"worst_margin", double_text(worst[i])}};
  }
  r.data["seed"] = std::to_string(cfg.seed + 12);
  r.detail = detail;
  return r;
}

CriterionResult density_floor(const RunConfig&) {
  CriterionResult r{13, "Density floor", false, "", Json::object()};
  const RVSpec y = parse_rv("uniform:0:0.5");
  const DensityFloor a = density_floor_check(y, 0.05, 16, 2048);
  const DensityFloor b = density_floor_check(y, 0.05, 16, 4096);
  const double change = a.floor > 0 ? std::abs(b.floor - a.floor) / a.floor : 1;
  r.passed = a.floor > 0 && change < 0.05;
  r.detail = "n = " + std::to_string(a.n_used) + ", floor(M=2048) = " + double_text(a.floor) +
             ", floor(M=4096) = " + double_text(b.floor) + ", relative change " + double_text(change);
  r.data = Json{{"n_used", a.n_used},
                {"floor_2048", double_text(a.floor)},
                {"floor_4096", double_text(b.floor)},
                {"relative_change", double_text(change)}};
  return r;
}

}  // namespace

SuiteOutput run_acceptance(const RunConfig& config, const std::function<void(const CriterionResult&)>& on_result) {
  config.validate();
  SuiteOutput out;
  auto record = [&](CriterionResult r) {
    if (on_result) on_result(r);
    out.results.push_back(std::move(r));
  };
  auto guarded = [&](int id, const std::string& name, const std::function<CriterionResult()>& run) {
    try {
      record(run());
    } catch (const std::exception& e) {
      record(CriterionResult{id, name, false, std::string("error: ") + e.what(), Json::object()});
    }
  };
  guarded(1, "Fibonacci sharpness", [&] { return fibonacci_sharpness(config, out); });
  guarded(2, "Proposition upper bound", [&] { return golden_lattice(config); });
  guarded(3, "Liouville failure", [&] { return liouville_failure(config); });
  guarded(4, "Liouville sqrt2 floor", [&] { return sqrt2_floor(config); });
  const std::vector<TrigPoly> polys = random_population(config);
  guarded(5, "Half-mass lemma", [&] { return half_mass(polys, config); });
  guarded(6, "Ratio vs lattice minimum chain", [&] { return ratio_lattice_chain(polys, config); });
  guarded(7, "delta-exponent table", [&] { return delta_table(); });
  guarded(8, "Markov constants", [&] { return markov(config); });
  guarded(9, "CF diagnostics", [&] { return cf_diagnostics(config); });
  guarded(10, "Diffusion scaling", [&] { return diffusion_scaling(config, out); });
  guarded(11, "Taylor limit", [&] { return taylor(config); });
  guarded(12, "Contraction lemma, telescoping and Cesaro bounds", [&] { return contraction_properties(config); });
  guarded(13, "Density floor", [&] { return density_floor(config); });
  return out;
}

CriterionResult determinism_result(const std::map<std::string, std::string>& first,
                                   const std::map<std::string, std::string>& second) {
  CriterionResult r{14, "Determinism", true, "", Json::array()};
  std::vector<std::string> differing;
  for (const auto& [name, content] : first) {
    const auto it = second.find(name);
    if (it == second.end() || it->second != content) differing.push_back(name);
  }
  for (const auto& [name, content] : second) {
    if (!first.count(name)) differing.push_back(name);
  }
  r.passed = differing.empty() && !first.empty();
  for (const auto& [name, content] : first) r.data.push_back(Json{{"file", name}, {"bytes", content.size()}});
  if (r.passed) {
    r.detail = std::to_string(first.size()) + " artifacts byte-identical across two runs";
  } else {
    r.detail = "differing artifacts:";
    for (const auto& d : differing) r.detail += " " + d;
  }
  return r;
}

std::map<std::string, std::string> report_artifacts(const RunConfig& config, const SuiteOutput& suite,
                                                    const CriterionResult* determinism) {
  Json criteria = Json::array();
  bool all = true;
  auto add = [&](const CriterionResult& r) {
    all = all && r.passed;
    criteria.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}});
  };
  for (const auto& r : suite.results) add(r);
  if (determinism) add(*determinism);
  Json report = run_header(config);
  report["criteria"] = criteria;
  report["all_passed"] = all;
  std::map<std::string, std::string> files = suite.files;
  files["report.json"] = report.dump(2) + "\n";
  return files;
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

}  // namespace dirp
