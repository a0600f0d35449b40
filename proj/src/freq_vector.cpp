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

#include "dirp/freq_vector.hpp"

namespace dirp {

FreqVector::FreqVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long v : entries) entries_.emplace_back(v);
}

bool FreqVector::is_zero() const {
  for (const auto& v : entries_) {
    if (v != 0) return false;
  }
  return true;
}

mpz_class FreqVector::norm_squared() const {
  mpz_class s = 0;
  for (const auto& v : entries_) s += v * v;
  return s;
}

mpz_class FreqVector::norm_floor() const {
  mpz_class r;
  const mpz_class n2 = norm_squared();
  mpz_sqrt(r.get_mpz_t(), n2.get_mpz_t());
  return r;
}

mpz_class FreqVector::max_norm() const {
  mpz_class m = 0;
  for (const auto& v : entries_) {
    const mpz_class a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

FreqVector FreqVector::operator-() const {
  std::vector<mpz_class> e = entries_;
  for (auto& v : e) v = -v;
  return FreqVector(std::move(e));
}

bool FreqVector::first_nonzero_positive() const {
  for (const auto& v : entries_) {
    if (v != 0) return v > 0;
  }
  return false;
}

FreqVector FreqVector::canonical_sign() const {
  return first_nonzero_positive() || is_zero() ? *this : -*this;
}

bool operator<(const FreqVector& a, const FreqVector& b) {
  if (a.entries_.size() != b.entries_.size()) return a.entries_.size() < b.entries_.size();
  for (size_t i = 0; i < a.entries_.size(); ++i) {
    const int c = cmp(a.entries_[i], b.entries_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string FreqVector::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].get_str(10);
  }
  return s + ")";
}

}  // namespace dirp
