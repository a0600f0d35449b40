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

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace dirp {

/// An integer frequency k in Z^d. Entries are arbitrary-precision because
/// the Liouville family uses frequencies of size b^(N!).
class FreqVector {
 public:
  FreqVector() = default;
  explicit FreqVector(std::vector<mpz_class> entries) : entries_(std::move(entries)) {}
  FreqVector(std::initializer_list<long> entries);
  static FreqVector zero(int dim) { return FreqVector(std::vector<mpz_class>(static_cast<size_t>(dim), 0)); }

  int dim() const { return static_cast<int>(entries_.size()); }
  const mpz_class& operator[](size_t i) const { return entries_[i]; }
  const std::vector<mpz_class>& entries() const { return entries_; }

  bool is_zero() const;
  /// Exact |k|^2.
  mpz_class norm_squared() const;
  /// floor(|k|) via integer square root.
  mpz_class norm_floor() const;
  mpz_class max_norm() const;

  FreqVector operator-() const;
  /// k with its first nonzero entry positive (the representative of +-k).
  FreqVector canonical_sign() const;
  bool first_nonzero_positive() const;

  /// Lexicographic order on entries; vectors of different length compare by length first.
  friend bool operator<(const FreqVector& a, const FreqVector& b);
  friend bool operator==(const FreqVector& a, const FreqVector& b) { return a.entries_ == b.entries_; }

  /// "(3,-4)"
  std::string to_string() const;

 private:
  std::vector<mpz_class> entries_;
};

}  // namespace dirp
