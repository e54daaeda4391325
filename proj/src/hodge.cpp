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

#include "cubicpair/hodge.hpp"

#include <algorithm>
#include <utility>

#include "cubicpair/error.hpp"

namespace cubicpair {
namespace {

int socle_degree(const HomForm& F) { return F.ring()->nvars() * (F.degree() - 2); }

void require_smooth(const HomForm& F, int degree_bound) {
  if (F.degree() != 3) throw Error(Errc::degree_mismatch, "expected a cubic form");
  if (!is_smooth_form(F, degree_bound)) throw Error(Errc::singular_cubic, "the cubic F is singular");
}

std::vector<HomForm> times_variables(const HomForm& f) {
  std::vector<HomForm> out;
  for (const auto& z : variables<Side::primal>(f.ring())) out.push_back(multiply(f, z));
  return out;
}

// Incremental echelon used to select independent rows in a fixed order.
class RowSelector {
 public:
  explicit RowSelector(const PrimeField& field) : field_(field) {}

  bool offer(const Vec& v) {
    Vec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Fp s = r[pivots_[k]];
      if (!s.is_zero()) r -= s * rows_[k];
    }
    Index lead = -1;
    for (Index i = 0; i < r.size(); ++i) {
      if (!r[i].is_zero()) {
        lead = i;
        break;
      }
    }
    if (lead < 0) return false;
    rows_.push_back(r[lead].inverse() * r);
    pivots_.push_back(lead);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  PrimeField field_;
  std::vector<Vec> rows_;
  std::vector<Index> pivots_;
};

}  // namespace

bool is_smooth_form(const HomForm& f, int degree_bound) {
  return graded_piece_dim(f.ring(), jacobian_gens(f), degree_bound) == f.ring()->dim(degree_bound);
}

std::vector<HomForm> wedge_minors(const HomForm& F, const HomForm& Q) {
  const int n = F.ring()->nvars();
  std::vector<HomForm> dF, dQ, out;
  for (int i = 0; i < n; ++i) {
    dF.push_back(partial(F, i));
    dQ.push_back(partial(Q, i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.push_back(multiply(dQ[i], dF[j]) - multiply(dQ[j], dF[i]));
    }
  }
  return out;
}

SurfaceCertificate certify_surface(const HomForm& F, const HomForm& Q, int degree_bound) {
  IdealGens<Side::primal> ideal(wedge_minors(F, Q));
  ideal.add(F);
  ideal.add(Q);
  SurfaceCertificate cert;
  cert.degree_bound = degree_bound;
  cert.codim = F.ring()->dim(degree_bound) - graded_piece_dim(F.ring(), ideal, degree_bound);
  cert.smooth = cert.codim == 0;
  return cert;
}

DualForm socle_functional(const HomForm& F) {
  const int s = socle_degree(F);
  const PrimalSubspace piece = graded_piece(F.ring(), jacobian_gens(F), s);
  const DualSubspace ann = perp(piece);
  if (ann.dim() != 1) throw Error(Errc::singular_cubic, "J_F does not have codimension one in the socle degree");
  return ann.element(0);
}

DualForm cubic_form_raw(const DualForm& lambda, const HomForm& Q) {
  const RingPtr& ring = Q.ring();
  const int d = lambda.degree() - Q.degree();
  const MonomialBasis& b = ring->basis(d);
  DualForm C(ring, d);
  for (Index i = 0; i < b.size(); ++i) {
    const HomForm m = monomial<Side::primal>(ring, b[i], ring->field().one());
    C[i] = apolar_pair(lambda, multiply(Q, m)) / ring->factorial_weight(d, i);
  }
  return C;
}

CubicFormResult cubic_form(const PairInput& pair, int degree_bound) {
  const HomForm& F = pair.F;
  const HomForm& Q = pair.Q;
  const RingPtr& ring = F.ring();
  require_smooth(F, degree_bound);
  const auto jac = jacobian_gens(F);

  CubicFormResult out{DualForm(ring, 3), socle_functional(F)};
  out.C = normalized(cubic_form_raw(out.lambda, Q));
  out.is_zero = out.C.is_zero();
  out.q_in_jf2 = graded_piece(ring, jac, 2).contains(Q);

  const PrimalSubspace colon5 = colon_piece(graded_piece(ring, jac, 5), {Q}, 3);
  out.colon_f5q_3 = colon5.dim();
  const DualSubspace line = perp(colon5);
  out.span_matches_colon =
      out.is_zero ? line.dim() == 0 || colon5.dim() == colon5.ambient_dim()
                  : line == DualSubspace::span(ring, 3, {out.C});

  const PrimalSubspace jf4 = graded_piece(ring, jac, 4);
  out.colon_f4q_2 = colon_piece(jf4, {Q}, 2).dim();
  std::vector<HomForm> qs2;
  for (const auto& m : monomials<Side::primal>(ring, 2)) qs2.push_back(multiply(Q, m));
  out.mq_rank = subspace_sum(jf4, PrimalSubspace::span(ring, 4, qs2)).dim() - jf4.dim();
  out.is_nondegenerate = !out.is_zero && out.mq_rank == jf4.codim();

  const IdealGens<Side::dual> jc = jacobian_gens(out.C);
  out.j_c2_dim = out.is_zero ? 0 : graded_piece(ring, jc, 2).dim();
  out.jc6_codim = ring->dim(degree_bound) - graded_piece_dim(ring, jc, degree_bound);
  out.is_smooth = !out.is_zero && out.jc6_codim == 0;
  return out;
}

DualForm mf_form(const HomForm& F, MfMode mode) {
  const RingPtr& ring = F.ring();
  if (!is_smooth_form(F)) throw Error(Errc::singular_cubic, "the cubic F is singular");
  const DualForm lambda = socle_functional(F);
  if (mode == MfMode::nullspace) return lambda;

  const int s = socle_degree(F);
  const Index N = ring->dim(s);
  const MonomialBasis& bs = ring->basis(s);
  const MonomialBasis& bj = ring->basis(s - 2);
  const PrimeField& field = ring->field();
  RowSelector selector(field);
  Mat rows = zeros(field, N - 1, N);
  Index filled = 0;
  for (int i = 0; i < ring->nvars() && filled < N - 1; ++i) {
    const HomForm Fi = partial(F, i);
    const MonomialBasis& bf = ring->basis(Fi.degree());
    for (Index j = 0; j < bj.size() && filled < N - 1; ++j) {
      Vec v = zero_vector(field, N);
      for (Index k = 0; k < bf.size(); ++k) {
        if (!Fi[k].is_zero()) v[bs.find_key(bj.key(j) + bf.key(k))] += Fi[k];
      }
      if (selector.offer(v)) rows.row(filled++) = v.transpose();
    }
  }
  if (filled != N - 1) throw Error(Errc::singular_cubic, "products z^J F_i do not span a hyperplane");

  // Laplace expansion along the symbolic first row. Its entries are the
  // dual basis z*^I / I!, so cofactors are divided by I! to land in the
  // differentiation convention.
  DualForm out(ring, s);
  Mat minor(N - 1, N - 1);
  for (Index j = 0; j < N; ++j) {
    minor.leftCols(j) = rows.leftCols(j);
    minor.rightCols(N - 1 - j) = rows.rightCols(N - 1 - j);
    Fp cof = det(field, minor);
    if (j % 2 == 1) cof = -cof;
    out[j] = cof / ring->factorial_weight(s, j);
  }
  return out;
}

DualForm cubic_from_mf(const DualForm& mf, const HomForm& Q) { return contract(Q, mf); }

HomForm associated_quintic(const DualForm& C) {
  const RingPtr& ring = C.ring();
  const int s = ring->nvars() * (C.degree() - 2);
  const DualSubspace jc5 = graded_piece(ring, jacobian_gens(C), s);
  const PrimalSubspace ann = perp(jc5);
  if (ann.dim() != 1) {
    throw Error(Errc::singular_associated_cubic, "perp(J_{C,5}) is not one-dimensional");
  }
  return ann.element(0);
}

ModuliReport moduli_report(const PairInput& pair, int degree_bound, int surface_degree_bound) {
  return moduli_report(pair, certify_surface(pair.F, pair.Q, surface_degree_bound), degree_bound);
}

ModuliReport moduli_report(const PairInput& pair, const SurfaceCertificate& surface, int degree_bound) {
  const HomForm& F = pair.F;
  const HomForm& Q = pair.Q;
  const RingPtr& ring = F.ring();
  require_smooth(F, degree_bound);
  if (!surface.smooth) throw Error(Errc::singular_surface, "the surface F = Q = 0 is singular");

  ModuliReport r;
  r.degree_bound = degree_bound;
  std::vector<HomForm> wedge = wedge_minors(F, Q);
  wedge.push_back(F);
  const PrimalSubspace tdef = PrimalSubspace::span(ring, 3, wedge);
  r.dim_tdef_xy = tdef.codim();

  const PrimalSubspace qv = PrimalSubspace::span(ring, 3, times_variables(Q));
  r.dim_h11_new = subspace_sum(tdef, qv).codim();

  const PrimalSubspace jf3 = graded_piece(ring, jacobian_gens(F), 3);
  r.milnor_dim_3 = jf3.codim();
  r.dim_ker_alpha = colon_piece(jf3, {Q}, 1).dim();
  const PrimalSubspace jf3_qv = subspace_sum(jf3, qv);
  r.rank_mq_s3 = jf3_qv.dim() - jf3.dim();
  r.dim_coker_alpha = jf3_qv.codim();
  r.dim_jf3_cap_qv = subspace_intersect(jf3, qv).dim();
  r.delta_b_nonzero = r.rank_mq_s3 < r.milnor_dim_3;
  return r;
}

BinarySyzygy binary_syzygy_form(const HomForm& F) {
  if (F.ring()->nvars() != 2) throw Error(Errc::wrong_arity, "binary forms need exactly two variables");
  const int d = F.degree();
  if (d < 3) throw Error(Errc::degree_out_of_range, "binary syzygy form needs degree >= 3");
  const int e = 2 * d - 4;

  RingPtr ring = F.ring();
  HomForm f = F;
  if (ring->max_degree() < std::max(e, d)) {
    ring = Ring::make(ring->field().modulus(), 2, std::max(e, d));
    f = HomForm(ring, d, F.coeffs());
  }
  std::vector<HomForm> rows;
  const HomForm fx = partial(f, 0);
  const HomForm fy = partial(f, 1);
  for (const HomForm& g : {fx, fy}) {
    for (const auto& m : monomials<Side::primal>(ring, d - 3)) rows.push_back(multiply(m, g));
  }
  const PrimalSubspace w = PrimalSubspace::span(ring, e, rows);
  BinarySyzygy out{false, w.dim(), DualForm(ring, e)};
  out.has_syzygy = w.dim() < e;
  if (!out.has_syzygy) out.form = perp(w).element(0);
  return out;
}

}  // namespace cubicpair
