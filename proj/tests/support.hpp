// Copyright 2026 The cubicpair Authors
//
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

#ifndef CUBICPAIR_TESTS_SUPPORT_HPP_
#define CUBICPAIR_TESTS_SUPPORT_HPP_

#include <cstdint>

#include "cubicpair/analysis.hpp"
#include "cubicpair/rng.hpp"

namespace cubicpair::test {

inline const RingPtr& ring5() {
  static const RingPtr ring = Ring::make();
  return ring;
}

inline PairInput seeded_pair(std::uint64_t seed) { return generate_pair(ring5(), seed).pair; }

inline HomForm seeded_cubic(std::uint64_t seed) { return random_form(ring5(), 3, derive_seed(seed, 0)); }

inline Mat random_matrix(const PrimeField& field, Index rows, Index cols, std::uint64_t seed) {
  Stream s(seed);
  Mat m = zeros(field, rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = field(static_cast<std::int64_t>(s.below(field.modulus())));
  }
  return m;
}

/// Product of two random matrices, so its rank is at most `r`.
inline Mat low_rank_matrix(const PrimeField& field, Index rows, Index cols, Index r, std::uint64_t seed) {
  return random_matrix(field, rows, r, seed) * random_matrix(field, r, cols, seed + 1);
}

inline Mat random_invertible(const PrimeField& field, Index n, std::uint64_t seed) {
  for (std::uint64_t k = 0;; ++k) {
    Mat g = random_matrix(field, n, n, derive_seed(seed, k));
    if (!det(field, g).is_zero()) return g;
  }
}

/// A random element of J_{F,2}.
inline HomForm random_jacobian_quadric(const HomForm& F, std::uint64_t seed) {
  Stream s(seed);
  const PrimeField& field = F.field();
  HomForm q(F.ring(), 2);
  for (int i = 0; i < F.ring()->nvars(); ++i) {
    q += field(static_cast<std::int64_t>(s.below(field.modulus()))) * partial(F, i);
  }
  return q;
}

}  // namespace cubicpair::test

#endif  // CUBICPAIR_TESTS_SUPPORT_HPP_
