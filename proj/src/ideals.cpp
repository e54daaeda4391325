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

#include "cubicpair/ideals.hpp"

#include <utility>

#include "cubicpair/error.hpp"

namespace cubicpair {
namespace {

// Row block of all products m * g, m running over monomials of degree d - deg g.
template <Side S>
void append_multiples(const Ring& ring, const Form<S>& g, int degree, std::vector<Vec>& rows) {
  const int shift = degree - g.degree();
  if (shift < 0) return;
  const MonomialBasis& bm = ring.basis(shift);
  const MonomialBasis& bg = ring.basis(g.degree());
  const MonomialBasis& bd = ring.basis(degree);
  for (Index m = 0; m < bm.size(); ++m) {
    Vec v = zero_vector(ring.field(), bd.size());
    for (Index j = 0; j < bg.size(); ++j) {
      if (!g[j].is_zero()) v[bd.find_key(bm.key(m) + bg.key(j))] = g[j];
    }
    rows.push_back(std::move(v));
  }
}

Mat stack(const PrimeField& field, const std::vector<Vec>& rows, Index cols) {
  Mat m = zeros(field, static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Index>(r)) = rows[r].transpose();
  return m;
}

template <Side S>
void check_compatible(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.degree() != b.degree()) throw Error(Errc::degree_mismatch, "subspaces live in different degrees");
}

}  // namespace

template <Side S>
Subspace<S>::Subspace(RingPtr ring, int degree, const Mat& spanning_rows)
    : ring_(std::move(ring)), degree_(degree) {
  if (spanning_rows.cols() != ring_->dim(degree)) {
    throw Error(Errc::shape_mismatch, "spanning rows do not match the graded piece");
  }
  echelon_ = rref(ring_->field(), spanning_rows);
}

template <Side S>
Subspace<S> Subspace<S>::zero(RingPtr ring, int degree) {
  const Index n = ring->dim(degree);
  Mat empty = zeros(ring->field(), 0, n);
  return Subspace(std::move(ring), degree, empty);
}

template <Side S>
Subspace<S> Subspace<S>::full(RingPtr ring, int degree) {
  const Index n = ring->dim(degree);
  Mat id = identity(ring->field(), n);
  return Subspace(std::move(ring), degree, id);
}

template <Side S>
Subspace<S> Subspace<S>::span(const RingPtr& ring, int degree, const std::vector<Form<S>>& forms) {
  return Subspace(ring, degree, coefficient_matrix(forms, ring, degree));
}

template <Side S>
Form<S> Subspace<S>::element(Index r) const {
  return Form<S>(ring_, degree_, echelon_.reduced.row(r).transpose());
}

template <Side S>
std::vector<Form<S>> Subspace<S>::forms() const {
  std::vector<Form<S>> out;
  for (Index r = 0; r < dim(); ++r) out.push_back(element(r));
  return out;
}

template <Side S>
bool Subspace<S>::contains(const Form<S>& f) const {
  if (f.degree() != degree_) return false;
  return is_zero(reduce(f.coeffs()));
}

template <Side S>
bool Subspace<S>::contains(const Subspace& other) const {
  if (other.degree_ != degree_) return false;
  for (Index r = 0; r < other.dim(); ++r) {
    if (!is_zero(reduce(other.basis().row(r).transpose()))) return false;
  }
  return true;
}

template <Side S>
IdealGens<S>::IdealGens(std::vector<Form<S>> gens) {
  for (auto& g : gens) add(g);
}

template <Side S>
void IdealGens<S>::add(const Form<S>& f) {
  if (!f.is_zero()) gens_.push_back(f);
}

template <Side S>
IdealGens<S> jacobian_gens(const Form<S>& f) {
  IdealGens<S> out;
  for (int i = 0; i < f.ring()->nvars(); ++i) out.add(partial(f, i));
  return out;
}

template <Side S>
Subspace<S> graded_piece(const RingPtr& ring, const IdealGens<S>& ideal, int degree) {
  std::vector<Vec> rows;
  for (const auto& g : ideal.gens()) append_multiples(*ring, g, degree, rows);
  return Subspace<S>(ring, degree, stack(ring->field(), rows, ring->dim(degree)));
}

template <Side S>
Index graded_piece_dim(const RingPtr& ring, const IdealGens<S>& ideal, int degree) {
  std::vector<Vec> rows;
  for (const auto& g : ideal.gens()) append_multiples(*ring, g, degree, rows);
  return rank(ring->field(), stack(ring->field(), rows, ring->dim(degree)));
}

template <Side S>
Subspace<S> colon_piece(const Subspace<S>& piece, const std::vector<Form<S>>& by, int degree) {
  const RingPtr& ring = piece.ring();
  const int shift = piece.degree() - degree;
  for (const auto& g : by) {
    if (g.degree() != shift) throw Error(Errc::degree_mismatch, "colon divisor has the wrong degree");
  }
  if (shift < 0) throw Error(Errc::degree_mismatch, "colon target degree exceeds the piece degree");

  // Complement coordinates: the non-pivot columns of the piece's RREF.
  std::vector<Index> free_cols;
  {
    std::vector<bool> pivot(piece.ambient_dim(), false);
    for (Index c : piece.pivots()) pivot[c] = true;
    for (Index c = 0; c < piece.ambient_dim(); ++c) {
      if (!pivot[c]) free_cols.push_back(c);
    }
  }
  const Index codim = static_cast<Index>(free_cols.size());
  const MonomialBasis& bd = ring->basis(degree);
  const MonomialBasis& bs = ring->basis(shift);
  const MonomialBasis& bt = ring->basis(piece.degree());
  Mat map = zeros(ring->field(), codim * static_cast<Index>(by.size()), bd.size());
  for (std::size_t k = 0; k < by.size(); ++k) {
    const auto& g = by[k];
    for (Index b = 0; b < bd.size(); ++b) {
      Vec v = zero_vector(ring->field(), bt.size());
      for (Index j = 0; j < bs.size(); ++j) {
        if (!g[j].is_zero()) v[bt.find_key(bd.key(b) + bs.key(j))] += g[j];
      }
      const Vec red = piece.reduce(v);
      for (Index c = 0; c < codim; ++c) map(static_cast<Index>(k) * codim + c, b) = red[free_cols[c]];
    }
  }
  return Subspace<S>(ring, degree, nullspace(ring->field(), map));
}

template <Side S>
Subspace<opposite(S)> perp(const Subspace<S>& s) {
  const RingPtr& ring = s.ring();
  Mat weighted = s.basis();
  for (Index c = 0; c < weighted.cols(); ++c) {
    weighted.col(c) *= ring->factorial_weight(s.degree(), c);
  }
  return Subspace<opposite(S)>(ring, s.degree(), nullspace(ring->field(), weighted));
}

template <Side S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  check_compatible(a, b);
  Mat rows(a.dim() + b.dim(), a.ambient_dim());
  rows.topRows(a.dim()) = a.basis();
  rows.bottomRows(b.dim()) = b.basis();
  return Subspace<S>(a.ring(), a.degree(), rows);
}

// x in A with x = sum s_i a_i = sum t_j b_j: kernel of [A^T | -B^T].
template <Side S>
Subspace<S> subspace_intersect(const Subspace<S>& a, const Subspace<S>& b) {
  check_compatible(a, b);
  const PrimeField& field = a.ring()->field();
  Mat joint(a.ambient_dim(), a.dim() + b.dim());
  joint.leftCols(a.dim()) = a.basis().transpose();
  joint.rightCols(b.dim()) = -b.basis().transpose();
  const Mat ker = nullspace(field, joint);
  Mat rows = zeros(field, ker.rows(), a.ambient_dim());
  if (ker.rows() > 0 && a.dim() > 0) rows = ker.leftCols(a.dim()) * a.basis();
  return Subspace<S>(a.ring(), a.degree(), rows);
}

template <Side S>
std::vector<Index> hilbert_function(const RingPtr& ring, const IdealGens<S>& ideal, int max_degree) {
  std::vector<Index> out;
  for (int d = 0; d <= max_degree; ++d) {
    out.push_back(ring->dim(d) - graded_piece_dim(ring, ideal, d));
  }
  return out;
}

template <Side S>
std::vector<Form<S>> variables(const RingPtr& ring) {
  std::vector<Form<S>> out;
  for (int i = 0; i < ring->nvars(); ++i) out.push_back(variable<S>(ring, i));
  return out;
}

template <Side S>
std::vector<Form<S>> monomials(const RingPtr& ring, int degree) {
  std::vector<Form<S>> out;
  for (const Exponents& e : ring->basis(degree).monomials()) {
    out.push_back(monomial<S>(ring, e, ring->field().one()));
  }
  return out;
}

#define CUBICPAIR_INSTANTIATE(S)                                                                 \
  template class Subspace<S>;                                                                    \
  template class IdealGens<S>;                                                                   \
  template IdealGens<S> jacobian_gens<S>(const Form<S>&);                                        \
  template Subspace<S> graded_piece<S>(const RingPtr&, const IdealGens<S>&, int);                \
  template Index graded_piece_dim<S>(const RingPtr&, const IdealGens<S>&, int);                  \
  template Subspace<S> colon_piece<S>(const Subspace<S>&, const std::vector<Form<S>>&, int);     \
  template Subspace<opposite(S)> perp<S>(const Subspace<S>&);                                    \
  template Subspace<S> subspace_sum<S>(const Subspace<S>&, const Subspace<S>&);                  \
  template Subspace<S> subspace_intersect<S>(const Subspace<S>&, const Subspace<S>&);            \
  template std::vector<Index> hilbert_function<S>(const RingPtr&, const IdealGens<S>&, int);     \
  template std::vector<Form<S>> variables<S>(const RingPtr&);                                    \
  template std::vector<Form<S>> monomials<S>(const RingPtr&, int);

CUBICPAIR_INSTANTIATE(Side::primal)
CUBICPAIR_INSTANTIATE(Side::dual)

#undef CUBICPAIR_INSTANTIATE

}  // namespace cubicpair
