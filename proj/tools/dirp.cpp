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

// Command-line front end. Every command prints one JSON document (or CSV
// for tables) that starts with the run header; with --out the same text is
// also written to <out>/<command>.<ext>.

#include <CLI11.hpp>
#include <charconv>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dirp/acceptance.hpp"
#include "dirp/config.hpp"
#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"
#include "dirp/serialize.hpp"

using namespace dirp;

namespace {

struct Flags {
  std::string config_path;
  long digits = 0;
  long max_digits = 0;
  long radius = 0;
  long grid = 0;
  uint64_t seed = 0;
  std::string out;
  std::string format;
};

RunConfig resolve(CLI::App& app, const Flags& f) {
  RunConfig c = default_config();
  if (!f.config_path.empty()) c = load_config(f.config_path, c);
  if (app.count("--digits")) c.digits = f.digits;
  if (app.count("--max-digits")) c.max_digits = f.max_digits;
  if (app.count("--radius")) c.radius = f.radius;
  if (app.count("--grid")) c.grid = f.grid;
  if (app.count("--seed")) c.seed = f.seed;
  if (app.count("--out")) c.out = f.out;
  if (app.count("--format")) c.format = f.format;
  c.validate();
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A polynomial file, or a family member such as "fib:10".
TrigPoly load_poly(const std::string& source, const Direction* alpha, const PrecisionContext& ctx) {
  if (std::filesystem::exists(source)) {
    try {
      return parse_trig_poly(read_file(source));
    } catch (const ParseError& e) {
      throw ParseError(source + ": " + e.what());
    }
  }
  const auto colon = source.find(':');
  if (colon == std::string::npos) throw InvalidArgument("no such file or family member: " + source);
  return family_member_from_text(source, alpha, ctx).poly;
}

class Output {
 public:
  Output(const RunConfig& config, bool write_files) : config_(config), write_(write_files) {}

  void emit(const std::string& name, Json result, const std::string& csv = {}) const {
    const bool want_csv = !csv.empty() && (config_.format == "csv" || config_.format == "both");
    const bool want_json = csv.empty() || config_.format != "csv";
    std::string json_text;
    if (want_json) {
      Json doc = run_header(config_);
      doc["command"] = name;
      doc["result"] = std::move(result);
      json_text = doc.dump(2) + "\n";
      std::cout << json_text;
    }
    if (want_csv) {
      if (!want_json) std::cout << csv;
      if (write_) write_file_atomic(path(name + ".csv"), csv);
    }
    if (write_ && want_json) write_file_atomic(path(name + ".json"), json_text);
  }

 private:
  std::string path(const std::string& file) const { return (std::filesystem::path(config_.out) / file).string(); }

  const RunConfig& config_;
  bool write_;
};

std::vector<double> parse_t_grid(const std::string& text) {
  std::vector<double> t;
  std::string body = trim(text);
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  for (const auto& part : split_top_level(body, ',')) {
    const std::string v = trim(part);
    double x = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    // Fractions such as 1/3 go through the exact parser.
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) x = parse_rational(v).get_d();
    t.push_back(x);
  }
  if (t.size() < 2) throw InvalidArgument("need at least two values of t");
  return t;
}

int run_report(const RunConfig& config, bool repeat) {
  auto print = [](const CriterionResult& r) { std::cout << format_line(r) << std::endl; };
  const SuiteOutput first = run_acceptance(config, print);
  std::optional<CriterionResult> det;
  if (repeat) {
    const SuiteOutput second = run_acceptance(config);
    det = determinism_result(report_artifacts(config, first, nullptr), report_artifacts(config, second, nullptr));
    print(*det);
  }
  const auto files = report_artifacts(config, first, det ? &*det : nullptr);
  for (const auto& [name, content] : files) {
    write_file_atomic((std::filesystem::path(config.out) / name).string(), content);
  }
  size_t passed = 0, total = first.results.size() + (det ? 1 : 0);
  for (const auto& r : first.results) passed += r.passed;
  if (det) passed += det->passed;
  std::cout << passed << "/" << total << " criteria passed; artifacts in " << config.out << std::endl;
  return passed == total ? 0 : static_cast<int>(ExitCode::kUnresolved);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional Poincare ratios, lattice minima and diffusion contraction on the torus"};
  app.set_version_flag("--version", std::string("dirp ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--config", flags.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_option("--digits", flags.digits, "working precision in decimal digits (default 80, env DIRP_DIGITS)");
  app.add_option("--max-digits", flags.max_digits, "precision cap for refinement");
  app.add_option("--radius", flags.radius, "default search radius R");
  app.add_option("--grid", flags.grid, "default grid size M");
  app.add_option("--seed", flags.seed, "random seed");
  app.add_option("--out", flags.out, "output directory");
  app.add_option("--format", flags.format, "json, csv or both");

  std::string poly, direction, preset = "thm1", sigma = "1", norm = "euclidean", real, family = "fib", rv, pnorm = "2";
  std::string t_grid = "[0.1,0.05,0.02,0.01,0.005]";
  std::vector<std::string> dirs, forms;
  long depth = 30, n_max = 20, level = 1, radius = 0, grid = 0;
  std::string bound = "100";
  bool no_repeat = false;

  auto* norms = app.add_subcommand("norms", "l2, gradient and directional norms of a polynomial");
  norms->add_option("poly", poly, "polynomial JSON file or family member (fib:n, liouville:N, cwave:n)")->required();
  norms->add_option("--dir", direction, "direction, e.g. dir:[1, quad:(1+sqrt5)/2]")->required();

  auto* ratio = app.add_subcommand("ratio", "Poincare-type ratio for an exponent preset");
  ratio->add_option("poly", poly, "polynomial JSON file or family member")->required();
  ratio->add_option("--dir", dirs, "direction (repeat for several)")->required();
  ratio->add_option("--preset", preset, "thm1, thm2, improved, delta:sigma or roth:eps");

  auto* lattice = app.add_subcommand("lattice", "minimum of |k|^sigma |<k, alpha>| over a ball");
  lattice->add_option("--dir", direction, "direction");
  lattice->add_option("--form", forms, "slope vector of a linear form (repeat for a system)");
  lattice->add_option("-R", radius, "radius (default from config)");
  lattice->add_option("--sigma", sigma, "weight exponent");
  lattice->add_option("--norm", norm, "euclidean or max");

  auto* hurwitz = app.add_subcommand("hurwitz", "convergent witnesses of the sqrt5 bound");
  hurwitz->add_option("--dir", direction, "direction")->required();
  hurwitz->add_option("--count", depth, "convergents to test");

  auto* markov = app.add_subcommand("markov", "Markov constant and envelope");
  markov->add_option("--level", level, "1, 2 or 3");
  markov->add_option("--dir", direction, "direction for the envelope");

  auto* cf = app.add_subcommand("cf", "continued fraction expansion");
  cf->add_option("real", real, "number, e.g. const:e")->required();
  cf->add_option("--depth", depth, "quotients wanted");
  cf->add_option("--bound", bound, "quotient threshold for the bounded-quotient report");

  auto* table = app.add_subcommand("table", "sharpness table of a family");
  table->add_option("--family", family, "fib, liouville or cwave");
  table->add_option("--dir", direction, "direction")->required();
  table->add_option("-n", n_max, "rows");
  table->add_option("--preset", preset, "exponent preset");

  auto* diffusion = app.add_subcommand("diffusion", "contraction scaling of f -> E f(x + tY)");
  diffusion->add_option("--rv", rv, "law of Y: uniform:lo:hi, atoms:[(x,m)], mix:w@spec;w@spec")->required();
  diffusion->add_option("--p", pnorm, "1, 2 or inf");
  diffusion->add_option("--t", t_grid, "grid of t values, e.g. [0.1,0.05]");
  diffusion->add_option("-M", grid, "cells (default from config)");

  auto* report = app.add_subcommand("report", "run the acceptance suite");
  report->add_flag("--no-repeat", no_repeat, "skip the second run used for the determinism check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kInputError);
  }

  try {
    const RunConfig config = resolve(app, flags);
    const PrecisionContext ctx = config.precision();
    const int digits = static_cast<int>(config.digits);
    const Output out(config, app.count("--out") > 0 || !flags.config_path.empty());

    if (*norms) {
      const Direction alpha = Direction::parse(direction);
      const TrigPoly f = load_poly(poly, &alpha, ctx);
      if (f.dim() != alpha.dim()) {
        throw DimensionMismatch("polynomial has dimension " + std::to_string(f.dim()) + ", direction " +
                                std::to_string(alpha.dim()));
      }
      out.emit("norms", Json{{"poly", poly},
                             {"direction", alpha.spec().to_string()},
                             {"terms", f.size()},
                             {"l2_norm", to_json(l2_norm(f, ctx), digits)},
                             {"grad_norm", to_json(grad_norm(f, ctx), digits)},
                             {"directional_norm", to_json(directional_norm(f, alpha, ctx), digits)}});
    } else if (*ratio) {
      std::vector<Direction> alphas;
      for (const auto& d : dirs) alphas.push_back(Direction::parse(d));
      const TrigPoly f = load_poly(poly, &alphas.front(), ctx);
      for (const auto& a : alphas) {
        if (a.dim() != f.dim()) throw DimensionMismatch("direction " + a.spec().to_string() + " has the wrong dimension");
      }
      const ExponentPair e = exponent_preset(preset, f.dim(), static_cast<int>(alphas.size()));
      const CertifiedReal value = alphas.size() == 1 ? poincare_ratio(f, alphas.front(), e.grad, e.dir, ctx)
                                                     : multi_directional_functional(f, alphas, e.grad, e.dir, ctx);
      Json dj = Json::array();
      for (const auto& a : alphas) dj.push_back(a.spec().to_string());
      out.emit("ratio", Json{{"poly", poly},
                             {"directions", dj},
                             {"preset", preset},
                             {"exp_grad", rational_to_string(e.grad)},
                             {"exp_dir", rational_to_string(e.dir)},
                             {"ratio", to_json(value, digits)}});
    } else if (*lattice) {
      const long R = radius > 0 ? radius : config.radius;
      if (!forms.empty()) {
        LinearFormSystem system;
        for (const auto& s : forms) system.forms.push_back(Direction::parse(s));
        out.emit("lattice", to_json(system_lattice_min(system, R, ctx), digits));
      } else {
        if (direction.empty()) throw InvalidArgument("lattice needs --dir or --form");
        const Direction alpha = Direction::parse(direction);
        out.emit("lattice",
                 to_json(lattice_min(alpha, R, parse_rational(sigma), parse_norm_kind(norm), ctx), digits));
      }
    } else if (*hurwitz) {
      const Direction alpha = Direction::parse(direction);
      out.emit("hurwitz", to_json(hurwitz_witnesses(alpha, static_cast<size_t>(depth), ctx), digits));
    } else if (*markov) {
      const MarkovConstant m = markov_bounds(static_cast<int>(level), ctx);
      Json j{{"level", level}, {"exact", format_real(m.exact)}, {"value", to_json(m.value, digits)}};
      if (!direction.empty()) {
        j["envelope"] = to_json(markov_envelope(Direction::parse(direction), static_cast<int>(level), ctx), digits);
      }
      out.emit("markov", j);
    } else if (*cf) {
      if (depth < 1) throw InvalidArgument("depth must be positive");
      const CFExpansion e = cf_expand(parse_real(real), static_cast<size_t>(depth), ctx);
      out.emit("cf", Json{{"real", real},
                          {"expansion", to_json(e)},
                          {"bounded_quotients", to_json(bounded_quotient_report(e, parse_integer(bound)))}});
    } else if (*table) {
      const Direction alpha = Direction::parse(direction);
      const ExponentPair e = exponent_preset(preset, alpha.dim(), 1);
      const SharpnessTable t = sharpness_table(alpha, parse_family(family), n_max, e, ctx);
      out.emit("table", to_json(t, digits), to_csv(t, digits));
    } else if (*diffusion) {
      const size_t M = static_cast<size_t>(grid > 0 ? grid : config.grid);
      const RVSpec Y = parse_rv(rv);
      const ContractionEstimate e = scaling_fit(Y, parse_pnorm(pnorm), parse_t_grid(t_grid), M, config.seed);
      std::string csv = "p,t,h,method,M,seed\n";
      for (size_t i = 0; i < e.t_grid.size(); ++i) {
        csv += to_string(e.p) + "," + double_text(e.t_grid[i]) + "," + double_text(e.h[i]) + "," + e.method + "," +
               std::to_string(e.M) + "," + std::to_string(e.seed) + "\n";
      }
      Json j = to_json(e);
      j["Y"] = Y.to_string();
      out.emit("diffusion", j, csv);
    } else if (*report) {
      return run_report(config, !no_repeat);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "dirp: " << e.what() << std::endl;
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "dirp: internal error: " << e.what() << std::endl;
    return 1;
  }
}
