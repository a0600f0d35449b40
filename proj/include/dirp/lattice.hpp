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

#pragma once

// Minima of |k|^sigma |<k, alpha>| over integer vectors in a ball, and the
// analogous quantity for systems of linear forms.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirp/certified.hpp"
#include "dirp/direction.hpp"
#include "dirp/freq_vector.hpp"

namespace dirp {

enum class NormKind { kEuclidean, kMax };

std::string to_string(NormKind norm);
NormKind parse_norm_kind(const std::string& text);

struct LatticeSearchResult {
  DirectionSpec direction;
  long radius = 0;
  mpq_class sigma;
  NormKind norm = NormKind::kEuclidean;
  /// Enclosure of the minimum over the ball.
  CertifiedReal minimum;
  FreqVector argmin;
  long digits_used = 0;
  /// Set when <k, alpha> = 0 was proven for some k in the ball.
  std::optional<FreqVector> exact_zero_witness;
  /// Vectors examined, one per pair +-k.
  uint64_t enumerated = 0;
};

/// Exhaustive search over 0 < |k| <= R (|k| is the chosen norm). k and -k
/// are visited once. Ties in the minimum go to the lexicographically
/// smallest k; exact-zero witnesses are ordered by (|k|^2, lex).
LatticeSearchResult lattice_min(const Direction& alpha, long radius, const mpq_class& sigma,
                                NormKind norm = NormKind::kEuclidean, const PrecisionContext& ctx = {});

/// Running minima of |k|^sigma |<k, alpha>| by Euclidean shell, for many
/// queries at radii up to a fixed bound.
class LatticeProfile {
 public:
  LatticeProfile(const Direction& alpha, long max_radius, const mpq_class& sigma, const PrecisionContext& ctx = {});

  long max_radius() const { return max_radius_; }
  /// Minimum over 0 < |k|^2 <= bound. bound must not exceed max_radius^2.
  Interval min_within_squared(const mpz_class& bound) const;
  FreqVector argmin_within_squared(const mpz_class& bound) const;
  bool has_zero() const { return has_zero_; }

 private:
  struct Shell {
    mpz_class norm_squared;
    Interval prefix_min;
    FreqVector prefix_argmin;
  };
  const Shell& shell_for(const mpz_class& bound) const;

  long max_radius_;
  bool has_zero_ = false;
  std::vector<Shell> shells_;
};

/// l linear forms L_i(x) = <beta_i, x> on Z^(d-1).
struct LinearFormSystem {
  std::vector<Direction> forms;

  int ell() const { return static_cast<int>(forms.size()); }
  /// Ambient dimension d = (dimension of each form) + 1.
  int dim() const { return forms.empty() ? 0 : forms.front().dim() + 1; }
  void validate() const;
};

struct SystemSearchResult {
  std::vector<DirectionSpec> forms;
  long radius = 0;
  /// (d-1)/l.
  mpq_class exponent;
  /// min over 0 < max|x| <= R of max_i ||L_i(x)|| (max|x|)^exponent,
  /// ||.|| the distance to the nearest integer.
  CertifiedReal minimum;
  FreqVector argmin;
  /// Variant over k = (k_1, x) in Z^d with |.| in place of ||.||:
  /// max_i |k_1 + L_i(x)| (max|k|)^((d-l)/l).
  mpq_class absolute_exponent;
  CertifiedReal absolute_minimum;
  FreqVector absolute_argmin;
  /// Dirichlet's pigeonhole bound says the first minimum is at most 1.
  bool dirichlet_consistent = true;
  long digits_used = 0;
  uint64_t enumerated = 0;
};

SystemSearchResult system_lattice_min(const LinearFormSystem& system, long radius, const PrecisionContext& ctx = {});

/// Visits each integer vector 0 < |k| <= R whose first nonzero entry is
/// positive, in lexicographic order.
void for_each_half_ball(int dim, long radius, NormKind norm, const std::function<void(const std::vector<long>&)>& visit);

}  // namespace dirp
