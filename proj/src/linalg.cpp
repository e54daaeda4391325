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

#include "cubicpair/linalg.hpp"

#include <cstdint>
#include <utility>

#include "cubicpair/error.hpp"

namespace cubicpair {
namespace {

// Barrett reduction of x < 2^62 by a fixed modulus below 2^31.
struct Reducer {
  std::uint64_t p;
  std::uint64_t m;

  explicit Reducer(std::uint32_t modulus) : p(modulus), m(~std::uint64_t{0} / modulus) {}

  std::uint32_t operator()(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m) >> 64);
    std::uint64_t r = x - q * p;
    if (r >= p) r -= p;
    return static_cast<std::uint32_t>(r);
  }
};

// Flat row-major residues; all elimination runs on this representation.
struct Dense {
  Index rows;
  Index cols;
  std::uint32_t p;
  Reducer mod;
  std::vector<std::uint32_t> a;

  Dense(const PrimeField& field, const Mat& m)
      : rows(m.rows()), cols(m.cols()), p(field.modulus()), mod(p), a(m.size()) {
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) a[i * cols + j] = (m(i, j) * field.one()).value();
    }
  }

  std::uint32_t* row(Index i) { return a.data() + i * cols; }

  std::uint32_t inv(std::uint32_t x) const { return Fp(x, p).inverse().value(); }

  void swap_rows(Index i, Index k) {
    if (i == k) return;
    for (Index j = 0; j < cols; ++j) std::swap(a[i * cols + j], a[k * cols + j]);
  }

  void scale_row(Index i, std::uint32_t s, Index from) {
    std::uint32_t* r = row(i);
    for (Index j = from; j < cols; ++j) r[j] = mod(std::uint64_t{r[j]} * s);
  }

  // row(i) -= s * row(k), on columns >= from
  void axpy(Index i, Index k, std::uint32_t s, Index from) {
    std::uint32_t* dst = row(i);
    const std::uint32_t* src = row(k);
    const std::uint64_t neg = p - s;
    for (Index j = from; j < cols; ++j) {
      if (src[j]) dst[j] = mod(dst[j] + neg * src[j]);
    }
  }

  // In-place RREF; returns pivot columns.
  std::vector<Index> reduce() {
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
      Index sel = -1;
      for (Index i = r; i < rows; ++i) {
        if (a[i * cols + c]) {
          sel = i;
          break;
        }
      }
      if (sel < 0) continue;
      swap_rows(r, sel);
      scale_row(r, inv(a[r * cols + c]), c);
      for (Index i = 0; i < rows; ++i) {
        if (i != r && a[i * cols + c]) axpy(i, r, a[i * cols + c], c);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  // Forward elimination only, stopping once every column holds a pivot.
  Index echelon_rank() {
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
      Index sel = -1;
      for (Index i = r; i < rows; ++i) {
        if (a[i * cols + c]) {
          sel = i;
          break;
        }
      }
      if (sel < 0) continue;
      swap_rows(r, sel);
      const std::uint32_t pinv = inv(a[r * cols + c]);
      for (Index i = r + 1; i < rows; ++i) {
        const std::uint32_t x = a[i * cols + c];
        if (x) axpy(i, r, mod(std::uint64_t{x} * pinv), c);
      }
      ++r;
    }
    return r;
  }

  Mat to_mat(Index nrows) const {
    Mat m(nrows, cols);
    for (Index i = 0; i < nrows; ++i) {
      for (Index j = 0; j < cols; ++j) m(i, j) = Fp(a[i * cols + j], p);
    }
    return m;
  }
};

}  // namespace

Mat zeros(const PrimeField& field, Index rows, Index cols) {
  return Mat::Constant(rows, cols, field.zero());
}

Mat identity(const PrimeField& field, Index n) {
  Mat m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vec zero_vector(const PrimeField& field, Index n) { return Vec::Constant(n, field.zero()); }

bool is_zero(const Mat& m) {
  for (Index i = 0; i < m.size(); ++i) {
    if (!m.data()[i].is_zero()) return false;
  }
  return true;
}

bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return false;
  }
  return true;
}

RowEchelon rref(const PrimeField& field, const Mat& m) {
  Dense d(field, m);
  RowEchelon out;
  out.pivots = d.reduce();
  out.rank = static_cast<Index>(out.pivots.size());
  out.reduced = d.to_mat(out.rank);
  return out;
}

Index rank(const PrimeField& field, const Mat& m) {
  Dense d(field, m);
  return d.echelon_rank();
}

Mat nullspace(const PrimeField& field, const Mat& m) {
  const RowEchelon e = rref(field, m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  Mat basis = zeros(field, n - e.rank, n);
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(k, f) = field.one();
    for (Index r = 0; r < e.rank; ++r) basis(k, e.pivots[r]) = -e.reduced(r, f);
    ++k;
  }
  return basis;
}

Fp det(const PrimeField& field, const Mat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::non_square, "det of a non-square matrix");
  Dense d(field, m);
  const Index n = d.rows;
  std::uint64_t acc = 1;
  bool negate = false;
  for (Index c = 0; c < n; ++c) {
    Index sel = -1;
    for (Index i = c; i < n; ++i) {
      if (d.a[i * n + c]) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return field.zero();
    if (sel != c) {
      d.swap_rows(c, sel);
      negate = !negate;
    }
    const std::uint32_t piv = d.a[c * n + c];
    acc = acc * piv % d.p;
    const std::uint32_t pinv = d.inv(piv);
    for (Index i = c + 1; i < n; ++i) {
      const std::uint32_t x = d.a[i * n + c];
      if (x) d.axpy(i, c, d.mod(std::uint64_t{x} * pinv), c);
    }
  }
  const Fp out(static_cast<std::uint32_t>(acc), d.p);
  return negate ? -out : out;
}

std::optional<Solution> solve(const PrimeField& field, const Mat& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::shape_mismatch, "rhs length must equal rows");
  Mat aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = rhs;
  const RowEchelon e = rref(field, aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Solution s;
  s.x = zero_vector(field, m.cols());
  for (Index r = 0; r < e.rank; ++r) s.x[e.pivots[r]] = e.reduced(r, m.cols());
  s.kernel_dim = m.cols() - e.rank;
  return s;
}

Vec reduce_against(const RowEchelon& echelon, const Vec& v) {
  Vec out = v;
  for (Index r = 0; r < echelon.rank; ++r) {
    const Fp s = out[echelon.pivots[r]];
    if (!s.is_zero()) out -= s * echelon.reduced.row(r).transpose();
  }
  return out;
}

}  // namespace cubicpair
