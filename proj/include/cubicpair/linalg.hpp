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

#ifndef CUBICPAIR_LINALG_HPP_
#define CUBICPAIR_LINALG_HPP_

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "cubicpair/field.hpp"

namespace cubicpair {

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;

Mat zeros(const PrimeField& field, Index rows, Index cols);
Mat identity(const PrimeField& field, Index n);
Vec zero_vector(const PrimeField& field, Index n);
bool is_zero(const Mat& m);
bool is_zero(const Vec& v);

/// Fully reduced row echelon form. Only the `rank` nonzero rows are kept.
/// Pivot search takes the first nonzero entry in column order, so the
/// result is a deterministic function of the input.
struct RowEchelon {
  Index rank = 0;
  Mat reduced;
  std::vector<Index> pivots;
};

RowEchelon rref(const PrimeField& field, const Mat& m);

template <class Derived>
RowEchelon rref(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  return rref(field, Mat(m));
}

Index rank(const PrimeField& field, const Mat& m);

template <class Derived>
Index rank(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  return rank(field, Mat(m));
}

/// Rows span the right kernel {v : m v = 0}; there are cols - rank of them.
Mat nullspace(const PrimeField& field, const Mat& m);

template <class Derived>
Mat nullspace(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  return nullspace(field, Mat(m));
}

/// Determinant by elimination. Throws Errc::non_square.
Fp det(const PrimeField& field, const Mat& m);

struct Solution {
  Vec x;
  Index kernel_dim = 0;  ///< dimension of the affine solution space
};

/// One solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<Solution> solve(const PrimeField& field, const Mat& m, const Vec& rhs);

/// Reduce v against an RREF basis; the result vanishes on every pivot column.
Vec reduce_against(const RowEchelon& echelon, const Vec& v);

}  // namespace cubicpair

#endif  // CUBICPAIR_LINALG_HPP_
