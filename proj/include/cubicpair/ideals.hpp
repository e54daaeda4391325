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

#ifndef CUBICPAIR_IDEALS_HPP_
#define CUBICPAIR_IDEALS_HPP_

#include <vector>

#include "cubicpair/polyring.hpp"

namespace cubicpair {

/**
 * Linear subspace of one graded piece S^d (or S^d V*), stored as the
 * canonical RREF of a spanning set. Two equal subspaces compare equal
 * bit for bit.
 */
template <Side S>
class Subspace {
 public:
  Subspace(RingPtr ring, int degree, const Mat& spanning_rows);

  static Subspace zero(RingPtr ring, int degree);
  static Subspace full(RingPtr ring, int degree);
  static Subspace span(const RingPtr& ring, int degree, const std::vector<Form<S>>& forms);

  const RingPtr& ring() const { return ring_; }
  int degree() const { return degree_; }
  Index dim() const { return echelon_.rank; }
  Index ambient_dim() const { return ring_->dim(degree_); }
  Index codim() const { return ambient_dim() - dim(); }
  const Mat& basis() const { return echelon_.reduced; }
  const std::vector<Index>& pivots() const { return echelon_.pivots; }
  const RowEchelon& echelon() const { return echelon_; }

  Form<S> element(Index r) const;
  std::vector<Form<S>> forms() const;

  /// Canonical representative of v modulo this subspace (zero on pivots).
  Vec reduce(const Vec& v) const { return reduce_against(echelon_, v); }
  bool contains(const Form<S>& f) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.degree_ == b.degree_ && a.echelon_.rank == b.echelon_.rank &&
           a.echelon_.reduced == b.echelon_.reduced;
  }

 private:
  RingPtr ring_;
  int degree_;
  RowEchelon echelon_;
};

using PrimalSubspace = Subspace<Side::primal>;
using DualSubspace = Subspace<Side::dual>;

/// Homogeneous generators of an ideal; zero forms are dropped.
template <Side S>
class IdealGens {
 public:
  IdealGens() = default;
  explicit IdealGens(std::vector<Form<S>> gens);

  const std::vector<Form<S>>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  void add(const Form<S>& f);

 private:
  std::vector<Form<S>> gens_;
};

/// [d_1 F, ..., d_n F] with zero partials dropped.
template <Side S>
IdealGens<S> jacobian_gens(const Form<S>& f);

/// Span of m * g over generators g and monomials m of degree d - deg g.
/// Generators of degree above d contribute nothing.
template <Side S>
Subspace<S> graded_piece(const RingPtr& ring, const IdealGens<S>& ideal, int degree);

/// dim of the degree-d piece without forming its canonical basis.
template <Side S>
Index graded_piece_dim(const RingPtr& ring, const IdealGens<S>& ideal, int degree);

/// {P in S^d : g P in piece for all g}; every g must have degree
/// piece.degree() - d. Errc::degree_mismatch otherwise.
template <Side S>
Subspace<S> colon_piece(const Subspace<S>& piece, const std::vector<Form<S>>& by, int degree);

/// Annihilator under the apolarity pairing, living on the other side.
template <Side S>
Subspace<opposite(S)> perp(const Subspace<S>& s);

template <Side S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b);

template <Side S>
Subspace<S> subspace_intersect(const Subspace<S>& a, const Subspace<S>& b);

/// codim of I_d in S^d for d = 0..max_degree.
template <Side S>
std::vector<Index> hilbert_function(const RingPtr& ring, const IdealGens<S>& ideal, int max_degree);

/// The variables z_1..z_n as degree-one forms.
template <Side S>
std::vector<Form<S>> variables(const RingPtr& ring);

/// Every monomial of the given degree, as forms.
template <Side S>
std::vector<Form<S>> monomials(const RingPtr& ring, int degree);

}  // namespace cubicpair

#endif  // CUBICPAIR_IDEALS_HPP_
