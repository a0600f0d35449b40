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

#include "dirp/diffusion.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "dirp/errors.hpp"
#include "dirp/numeric_text.hpp"

namespace dirp {

namespace {

constexpr size_t kDirectLimit = 4096;
constexpr double kMassTolerance = 1e-12;
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_same_size(size_t a, size_t b) {
  if (a != b) throw GridMismatch("grid sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

size_t wrap(long c, size_t M) {
  const long m = static_cast<long>(M);
  long r = c % m;
  if (r < 0) r += m;
  return static_cast<size_t>(r);
}

double sum_of(const std::vector<double>& v) {
  // Neumaier summation.
  double s = 0, comp = 0;
  for (double x : v) {
    const double t = s + x;
    comp += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  return s + comp;
}

void check_mass(GridMeasure& m, const char* op) {
  const double total = sum_of(m.weights);
  if (std::abs(total - 1) > kMassTolerance) {
    for (auto& w : m.weights) w /= total;
    m.log.push_back(std::string(op) + ": mass " + std::to_string(total) + " renormalised to 1");
  }
}

std::vector<size_t> support_of(const std::vector<double>& w) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) idx.push_back(i);
  }
  return idx;
}

/// Forward real DFT, X_k = sum_j x_j e^{-2 pi i jk/M}, k = 0..M/2.
std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> in(x);
  std::vector<std::complex<double>> out(static_cast<size_t>(n / 2 + 1));
  fftw_plan plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

std::vector<double> irfft(std::vector<std::complex<double>> X, size_t n) {
  std::vector<double> out(n);
  fftw_plan plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(X.data()), out.data(),
                                        FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (auto& v : out) v /= static_cast<double>(n);
  return out;
}

RVSpec parse_single(const std::string& text) {
  RVSpec y;
  if (text.rfind("uniform:", 0) == 0) {
    const auto parts = split_top_level(text.substr(8), ':');
    if (parts.size() != 2) throw ParseError("uniform:lo:hi expected, got '" + text + "'");
    y.uniforms.push_back({parse_rational(parts[0]), parse_rational(parts[1]), 1});
    return y;
  }
  if (text.rfind("atoms:", 0) == 0) {
    std::string body = trim(text.substr(6));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw ParseError("atoms:[(x,m),...] expected, got '" + text + "'");
    }
    for (const auto& item : split_top_level(body.substr(1, body.size() - 2), ',')) {
      if (item.size() < 2 || item.front() != '(' || item.back() != ')') throw ParseError("bad atom '" + item + "'");
      const auto xm = split_top_level(item.substr(1, item.size() - 2), ',');
      if (xm.size() != 2) throw ParseError("atom needs (position, mass): '" + item + "'");
      y.atoms.push_back({parse_rational(xm[0]), parse_rational(xm[1])});
    }
    return y;
  }
  throw ParseError("unknown random-variable spec '" + text + "' (uniform:, atoms:, mix:)");
}

}  // namespace

mpq_class RVSpec::mean() const {
  mpq_class m = 0;
  for (const auto& u : uniforms) m += u.mass * (u.lo + u.hi) / 2;
  for (const auto& a : atoms) m += a.mass * a.position;
  m.canonicalize();
  return m;
}

void RVSpec::validate() const {
  mpq_class total = 0;
  const mpq_class half(1, 2);
  for (const auto& u : uniforms) {
    if (!(u.lo < u.hi)) throw InvalidArgument("uniform piece needs lo < hi");
    if (u.lo < -half || u.hi > half) throw InvalidArgument("support must lie in [-1/2, 1/2]");
    if (u.mass < 0) throw InvalidArgument("negative mass");
    total += u.mass;
  }
  for (const auto& a : atoms) {
    if (a.position < -half || a.position > half) throw InvalidArgument("support must lie in [-1/2, 1/2]");
    if (a.mass < 0) throw InvalidArgument("negative mass");
    total += a.mass;
  }
  if (total != 1) throw InvalidArgument("total mass must be 1, got " + rational_to_string(total));
}

std::string RVSpec::to_string() const {
  auto piece = [](const std::string& s, const mpq_class& w) { return rational_to_string(w) + "@" + s; };
  std::vector<std::string> parts;
  for (const auto& u : uniforms) {
    parts.push_back(piece("uniform:" + rational_to_string(u.lo) + ":" + rational_to_string(u.hi), u.mass));
  }
  if (!atoms.empty()) {
    std::string s = "atoms:[";
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (i) s += ",";
      s += "(" + rational_to_string(atoms[i].position) + "," + rational_to_string(atoms[i].mass) + ")";
    }
    parts.push_back(piece(s + "]", 1));
  }
  if (uniforms.size() == 1 && atoms.empty()) {
    return "uniform:" + rational_to_string(uniforms[0].lo) + ":" + rational_to_string(uniforms[0].hi);
  }
  if (uniforms.empty()) return parts.front().substr(parts.front().find('@') + 1);
  std::string s = "mix:";
  for (size_t i = 0; i < uniforms.size(); ++i) {
    if (i) s += ";";
    s += parts[i];
  }
  if (!atoms.empty()) {
    // Atom masses are absolute, so the atom block carries weight 1.
    s += ";" + parts.back();
  }
  return s;
}

RVSpec parse_rv(const std::string& text_in) {
  const std::string text = trim(text_in);
  RVSpec y;
  if (text.rfind("mix:", 0) == 0) {
    for (const auto& comp : split_top_level(text.substr(4), ';')) {
      const auto at = comp.find('@');
      if (at == std::string::npos) throw ParseError("mixture component needs weight@spec: '" + comp + "'");
      const mpq_class w = parse_rational(comp.substr(0, at));
      const RVSpec part = parse_single(trim(comp.substr(at + 1)));
      for (auto u : part.uniforms) {
        u.mass *= w;
        y.uniforms.push_back(u);
      }
      for (auto a : part.atoms) {
        a.mass *= w;
        y.atoms.push_back(a);
      }
    }
  } else {
    y = parse_single(text);
  }
  y.validate();
  return y;
}

RVSpec symmetric_uniform() {
  RVSpec y;
  y.uniforms.push_back({mpq_class(-1, 2), mpq_class(1, 2), 1});
  return y;
}

double GridMeasure::mass() const { return sum_of(weights); }

double GridMeasure::min_weight() const { return *std::min_element(weights.begin(), weights.end()); }

GridMeasure GridMeasure::delta(size_t M, size_t cell) {
  GridMeasure m;
  m.weights.assign(M, 0);
  m.weights[cell % M] = 1;
  return m;
}

GridMeasure GridMeasure::uniform(size_t M) {
  GridMeasure m;
  m.weights.assign(M, 1.0 / static_cast<double>(M));
  return m;
}

std::string to_string(PNorm p) {
  switch (p) {
    case PNorm::kOne:
      return "1";
    case PNorm::kTwo:
      return "2";
    case PNorm::kInf:
      return "inf";
  }
  return "?";
}

PNorm parse_pnorm(const std::string& text) {
  if (text == "1") return PNorm::kOne;
  if (text == "2") return PNorm::kTwo;
  if (text == "inf" || text == "infinity") return PNorm::kInf;
  throw ParseError("p must be 1, 2 or inf, got '" + text + "'");
}

double GridFunction::norm(PNorm p) const {
  if (values.empty()) return 0;
  switch (p) {
    case PNorm::kOne: {
      std::vector<double> a(values.size());
      std::transform(values.begin(), values.end(), a.begin(), [](double v) { return std::abs(v); });
      return sum_of(a) / static_cast<double>(values.size());
    }
    case PNorm::kTwo: {
      std::vector<double> a(values.size());
      std::transform(values.begin(), values.end(), a.begin(), [](double v) { return v * v; });
      return std::sqrt(sum_of(a) / static_cast<double>(values.size()));
    }
    case PNorm::kInf: {
      double m = 0;
      for (double v : values) m = std::max(m, std::abs(v));
      return m;
    }
  }
  return 0;
}

GridFunction GridFunction::operator-(const GridFunction& other) const {
  require_same_size(size(), other.size());
  GridFunction r;
  r.values.resize(size());
  for (size_t i = 0; i < size(); ++i) r.values[i] = values[i] - other.values[i];
  r.mean_zero = mean_zero && other.mean_zero;
  return r;
}

GridFunction GridFunction::harmonic(size_t M, long n, double phase, double amplitude) {
  GridFunction f;
  f.values.resize(M);
  const long m = static_cast<long>(M);
  for (size_t j = 0; j < M; ++j) {
    // Reduce n*j mod M exactly before scaling.
    const long r = ((n % m) * static_cast<long>(j)) % m;
    f.values[j] = amplitude * std::cos(kTwoPi * static_cast<double>(r) / static_cast<double>(M) + phase);
  }
  f.mean_zero = n % m != 0;
  return f;
}

double unit_random(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

GridFunction GridFunction::random_mean_zero(size_t M, std::mt19937_64& rng) {
  GridFunction f;
  f.values.resize(M);
  for (auto& v : f.values) v = 2 * unit_random(rng) - 1;
  const double mean = sum_of(f.values) / static_cast<double>(M);
  for (auto& v : f.values) v -= mean;
  f.mean_zero = true;
  return f;
}

GridFunction GridFunction::sign_step(size_t M) {
  GridFunction f;
  f.values.resize(M);
  for (size_t j = 0; j < M; ++j) f.values[j] = 2 * j < M ? 1.0 : -1.0;
  f.mean_zero = M % 2 == 0;
  return f;
}

GridMeasure measure_from_rv(const RVSpec& Y, double t, size_t M) {
  Y.validate();
  if (M < 64) throw InvalidArgument("grid size must be at least 64");
  if (!(t > 0 && t <= 1)) throw InvalidArgument("t must lie in (0, 1]");
  GridMeasure mu;
  mu.weights.assign(M, 0);
  const double Md = static_cast<double>(M);
  for (const auto& u : Y.uniforms) {
    const double mass = u.mass.get_d();
    if (mass == 0) continue;
    const double a = t * u.lo.get_d();
    const double b = t * u.hi.get_d();
    if ((b - a) * Md < 4) {
      throw UnderResolved("t * width = " + std::to_string(b - a) + " is below 4/M; increase M");
    }
    // Grid units: cell c covers [c, c+1).
    const double ua = a * Md + 0.5;
    const double ub = b * Md + 0.5;
    const double len = ub - ua;
    const long c0 = static_cast<long>(std::floor(ua));
    const long c1 = static_cast<long>(std::ceil(ub)) - 1;
    for (long c = c0; c <= c1; ++c) {
      const double overlap = std::min(static_cast<double>(c + 1), ub) - std::max(static_cast<double>(c), ua);
      if (overlap > 0) mu.weights[wrap(c, M)] += mass * overlap / len;
    }
  }
  for (const auto& atom : Y.atoms) {
    const double mass = atom.mass.get_d();
    if (mass == 0) continue;
    const double u = t * atom.position.get_d() * Md;
    const double c = std::floor(u);
    const double frac = u - c;
    const long ci = static_cast<long>(c);
    mu.weights[wrap(ci, M)] += mass * (1 - frac);
    if (frac > 0) mu.weights[wrap(ci + 1, M)] += mass * frac;
  }
  check_mass(mu, "measure_from_rv");
  return mu;
}

GridMeasure convolve_direct(const GridMeasure& a, const GridMeasure& b) {
  require_same_size(a.size(), b.size());
  const size_t M = a.size();
  const auto sa = support_of(a.weights);
  const auto sb = support_of(b.weights);
  const bool a_sparse = sa.size() <= sb.size();
  const auto& sparse = a_sparse ? sa : sb;
  const auto& sw = a_sparse ? a.weights : b.weights;
  const auto& dense = a_sparse ? b.weights : a.weights;
  GridMeasure out;
  out.weights.assign(M, 0);
  for (size_t i : sparse) {
    const double w = sw[i];
    // out[i + j] += w * dense[j]
    for (size_t j = 0; j < M - i; ++j) out.weights[i + j] += w * dense[j];
    for (size_t j = M - i; j < M; ++j) out.weights[i + j - M] += w * dense[j];
  }
  check_mass(out, "convolve");
  return out;
}

GridMeasure convolve_fft(const GridMeasure& a, const GridMeasure& b) {
  require_same_size(a.size(), b.size());
  auto A = rfft(a.weights);
  const auto B = rfft(b.weights);
  for (size_t k = 0; k < A.size(); ++k) A[k] *= B[k];
  GridMeasure out;
  out.weights = irfft(std::move(A), a.size());
  double clipped = 0;
  for (auto& w : out.weights) {
    if (w < 0) {
      clipped += -w;
      w = 0;
    }
  }
  if (clipped > kMassTolerance) out.log.push_back("convolve_fft: clipped negative round-off " + std::to_string(clipped));
  check_mass(out, "convolve_fft");
  return out;
}

GridMeasure convolve(const GridMeasure& a, const GridMeasure& b) {
  return a.size() <= kDirectLimit ? convolve_direct(a, b) : convolve_fft(a, b);
}

GridMeasure convolution_power(const GridMeasure& a, long n) {
  if (n < 0) throw InvalidArgument("convolution power must be nonnegative");
  GridMeasure result = GridMeasure::delta(a.size());
  GridMeasure base = a;
  while (n > 0) {
    if (n & 1) result = convolve(result, base);
    n >>= 1;
    if (n > 0) base = convolve(base, base);
  }
  return result;
}

GridFunction apply_markov(const GridFunction& f, const GridMeasure& mu) {
  require_same_size(f.size(), mu.size());
  const size_t M = f.size();
  GridFunction out;
  out.mean_zero = f.mean_zero;
  const auto support = support_of(mu.weights);
  if (M <= kDirectLimit || support.size() < 8) {
    out.values.assign(M, 0);
    for (size_t i : support) {
      const double w = mu.weights[i];
      for (size_t j = 0; j < M - i; ++j) out.values[j] += w * f.values[i + j];
      for (size_t j = M - i; j < M; ++j) out.values[j] += w * f.values[i + j - M];
    }
    return out;
  }
  auto F = rfft(f.values);
  const auto U = rfft(mu.weights);
  for (size_t k = 0; k < F.size(); ++k) F[k] *= std::conj(U[k]);
  out.values = irfft(std::move(F), M);
  return out;
}

std::vector<double> multiplier_gaps(const GridMeasure& mu) {
  const size_t M = mu.size();
  const auto U = rfft(mu.weights);
  std::vector<double> gaps(M);
  for (size_t n = 0; n < M; ++n) {
    // mu^(n) = conj(U_n); |1 - mu^(n)| = |1 - U_n|, and U_{M-n} = conj(U_n).
    const std::complex<double> u = n < U.size() ? U[n] : std::conj(U[M - n]);
    gaps[n] = std::abs(1.0 - u);
  }
  return gaps;
}

ContractionValue contraction_factor(const RVSpec& Y, double t, PNorm p, size_t M, uint64_t seed, int trials) {
  const GridMeasure mu = measure_from_rv(Y, t, M);
  if (p == PNorm::kTwo) {
    const auto gaps = multiplier_gaps(mu);
    return {*std::min_element(gaps.begin() + 1, gaps.end()), "spectral"};
  }
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const GridFunction& f) {
    const double nf = f.norm(p);
    if (nf == 0) return;
    best = std::min(best, (f - apply_markov(f, mu)).norm(p) / nf);
  };
  const long top = std::min<long>(8, static_cast<long>(M / 2));
  for (long n = 1; n <= top; ++n) {
    consider(GridFunction::harmonic(M, n, 0));
    consider(GridFunction::harmonic(M, n, kTwoPi / 8));
  }
  consider(GridFunction::sign_step(M));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) consider(GridFunction::random_mean_zero(M, rng));
  return {best, "witness upper bound (harmonic, step and random functions)"};
}

namespace {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

}  // namespace

ContractionEstimate scaling_fit(const RVSpec& Y, PNorm p, const std::vector<double>& t_grid, size_t M,
                                uint64_t seed) {
  if (t_grid.empty()) throw InvalidArgument("t grid is empty");
  for (size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] < t_grid[i - 1])) throw InvalidArgument("t grid must be strictly decreasing");
  }
  ContractionEstimate est;
  est.p = p;
  est.t_grid = t_grid;
  est.M = M;
  est.seed = seed;
  std::vector<double> refined;
  for (double t : t_grid) {
    const ContractionValue v = contraction_factor(Y, t, p, M, seed);
    est.h.push_back(v.h);
    est.method = v.method;
  }
  const bool periodic = std::any_of(est.h.begin(), est.h.end(), [](double h) { return h <= 1e-14; });
  if (periodic) {
    est.regime = "indeterminate";
    est.verdict = "no contraction: periodic orbit";
    return est;
  }
  if (t_grid.size() < 2) {
    est.regime = "indeterminate";
    est.verdict = "a slope needs at least two t values";
    return est;
  }
  for (double t : t_grid) refined.push_back(contraction_factor(Y, t, p, 2 * M, seed).h);
  std::vector<double> lt, lh, lr;
  for (size_t i = 0; i < t_grid.size(); ++i) {
    lt.push_back(std::log(t_grid[i]));
    lh.push_back(std::log(est.h[i]));
    lr.push_back(std::log(std::max(refined[i], 1e-300)));
  }
  const LineFit fit = fit_line(lt, lh);
  est.slope = fit.slope;
  est.intercept = fit.intercept;
  est.residual = fit.residual;
  est.refined_slope = fit_line(lt, lr).slope;
  est.refinement_agrees = std::abs(est.refined_slope - est.slope) <= 0.01 * std::abs(est.slope);
  if (!est.refinement_agrees) {
    est.regime = "indeterminate";
    est.verdict = "slopes at M and 2M differ by more than 1%";
  } else if (est.slope >= 1.9 && est.slope <= 2.1) {
    est.regime = "quadratic";
    est.verdict = "quadratic regime (h ~ t^2)";
  } else if (est.slope >= 0.9 && est.slope <= 1.1) {
    est.regime = "linear";
    est.verdict = "linear regime (h ~ t)";
  } else {
    est.regime = "indeterminate";
    est.verdict = "slope outside both regimes";
  }
  return est;
}

GridMeasure cesaro_average(const GridMeasure& mu, long n) {
  if (n < 1) throw InvalidArgument("Cesaro length must be at least 1");
  GridMeasure power = mu;
  std::vector<double> sum = mu.weights;
  for (long k = 2; k <= n; ++k) {
    power = convolve(power, mu);
    for (size_t j = 0; j < sum.size(); ++j) sum[j] += power.weights[j];
  }
  GridMeasure out;
  out.weights = std::move(sum);
  for (auto& w : out.weights) w /= static_cast<double>(n);
  out.log = power.log;
  check_mass(out, "cesaro_average");
  return out;
}

DensityFloor density_floor_check(const RVSpec& Y, double t, double C, size_t M) {
  if (!(C > 0)) throw InvalidArgument("calibration constant C must be positive");
  const mpq_class mean = Y.mean();
  if (mean == 0) throw ZeroDrift("E Y = 0: the drift mechanism does not apply");
  DensityFloor out;
  out.n_used = static_cast<long>(std::ceil(C / (t * std::abs(mean.get_d()))));
  const GridMeasure ces = cesaro_average(measure_from_rv(Y, t, M), out.n_used);
  out.floor = ces.density_floor();
  if (!Y.has_density()) {
    out.note = "Y has no absolutely continuous part; a singular law can stay singular, so a zero floor is expected";
  } else if (out.floor <= 0) {
    out.note = "no positive density floor at this n";
  } else {
    out.note = "positive density floor";
  }
  return out;
}

ContractionLemmaReport contraction_lemma_check(const GridMeasure& mu, int trials, uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  ContractionLemmaReport r;
  r.c = std::clamp(mu.density_floor(), 0.0, 1.0);
  r.trials = trials;
  r.seed = seed;
  r.worst_margin = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const GridFunction f = GridFunction::random_mean_zero(mu.size(), rng);
    const GridFunction g = apply_markov(f, mu);
    for (PNorm p : {PNorm::kOne, PNorm::kTwo, PNorm::kInf}) {
      r.worst_margin = std::max(r.worst_margin, g.norm(p) - (1 - r.c) * f.norm(p));
    }
  }
  r.holds = r.worst_margin <= 1e-9;
  return r;
}

TaylorReport taylor_limit_check(const std::vector<Harmonic>& f_spec, const std::vector<double>& t_grid, size_t M) {
  if (f_spec.empty()) throw InvalidArgument("f needs at least one harmonic");
  if (t_grid.size() < 2) throw InvalidArgument("t grid needs at least two values");
  GridFunction f;
  f.values.assign(M, 0);
  double mass = 0, curvature = 0;
  for (const auto& h : f_spec) {
    if (h.n <= 0) throw InvalidArgument("f must be mean zero: harmonics need n >= 1");
    if (2 * static_cast<size_t>(h.n) >= M) throw UnderResolved("harmonic above the grid Nyquist frequency");
    const GridFunction part = GridFunction::harmonic(M, h.n, 0, h.amplitude);
    for (size_t j = 0; j < M; ++j) f.values[j] += part.values[j];
    const double w = kTwoPi * static_cast<double>(h.n);
    mass += h.amplitude * h.amplitude;
    curvature += h.amplitude * h.amplitude * w * w * w * w;
  }
  f.mean_zero = true;
  TaylorReport r;
  r.expected = std::sqrt(curvature / mass) / 6;
  const double nf = f.norm(PNorm::kTwo);
  std::vector<double> x, y;
  for (double t : t_grid) {
    if (!(t > 0 && t <= 0.5)) throw InvalidArgument("Taylor check needs 0 < t <= 1/2");
    const GridMeasure mu = measure_from_rv(symmetric_uniform(), 2 * t, M);
    const double ratio = (f - apply_markov(f, mu)).norm(PNorm::kTwo) / (t * t * nf);
    r.rows.push_back({t, ratio});
    x.push_back(t * t);
    y.push_back(ratio);
  }
  r.extrapolated = fit_line(x, y).intercept;
  r.relative_error = std::abs(r.extrapolated - r.expected) / r.expected;
  return r;
}

GridMeasure random_grid_measure(size_t M, std::mt19937_64& rng) {
  GridMeasure mu;
  mu.weights.assign(M, 0);
  const bool with_density = unit_random(rng) < 0.75;
  const double share = with_density ? 0.1 + 0.8 * unit_random(rng) : 0.0;
  if (with_density) {
    const size_t start = static_cast<size_t>(rng() % M);
    const size_t len = 1 + static_cast<size_t>(rng() % std::max<size_t>(1, M / 4));
    for (size_t i = 0; i < len; ++i) mu.weights[(start + i) % M] += share / static_cast<double>(len);
  }
  const int atoms = 1 + static_cast<int>(rng() % 3);
  std::vector<double> masses(static_cast<size_t>(atoms));
  for (auto& m : masses) m = 0.1 + unit_random(rng);
  const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  for (int i = 0; i < atoms; ++i) {
    mu.weights[static_cast<size_t>(rng() % M)] += (1 - share) * masses[static_cast<size_t>(i)] / total;
  }
  check_mass(mu, "random_grid_measure");
  return mu;
}

}  // namespace dirp
