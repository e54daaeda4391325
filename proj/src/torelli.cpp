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

#include "cubicpair/torelli.hpp"

#include <utility>

#include "cubicpair/error.hpp"

namespace cubicpair {
namespace {

Index binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Index r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// lambda(m_a m_b) for all quadric monomials a and cubic monomials b.
Mat pairing_matrix(const RingPtr& ring, const DualForm& lambda) {
  const MonomialBasis& b2 = ring->basis(2);
  const MonomialBasis& b3 = ring->basis(3);
  const MonomialBasis& b5 = ring->basis(lambda.degree());
  Mat T = zeros(ring->field(), b2.size(), b3.size());
  for (Index a = 0; a < b2.size(); ++a) {
    for (Index b = 0; b < b3.size(); ++b) {
      const Index k = b5.find_key(b2.key(a) + b3.key(b));
      T(a, b) = lambda[k] * ring->factorial_weight(lambda.degree(), k);
    }
  }
  return T;
}

// s with a = s * b, if any (both nonzero).
std::optional<Fp> proportionality(const Mat& a, const Mat& b) {
  if (a.size() != b.size() || a.rows() != b.rows()) return std::nullopt;
  Index lead = -1;
  for (Index i = 0; i < b.size(); ++i) {
    if (!b.data()[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0 || a.data()[lead].is_zero()) return std::nullopt;
  const Fp s = a.data()[lead] / b.data()[lead];
  for (Index i = 0; i < a.size(); ++i) {
    if (a.data()[i] != s * b.data()[i]) return std::nullopt;
  }
  return s;
}

Mat as_row(const Vec& v) { return v.transpose(); }

struct Stages {
  std::optional<PrimalSubspace> j3;
  std::optional<PrimalSubspace> j2;
};

TorelliResult run(const PairData& data, Stages& stages) {
  TorelliResult r;
  auto fail = [&r](const Error& e) {
    r.error = e.code();
    r.failure_reason = std::string(to_string(e.code())) + ": " + e.what();
    return r;
  };
  try {
    r.stage = "recover_jf3";
    stages.j3 = recover_jf3(data);
    r.stage = "recover_partials";
    stages.j2 = recover_partials(*stages.j3);
    r.stage = "recover_F";
    r.F_hat = recover_F(*stages.j2);
    r.stage = "recover_Q";
    QuadricRecovery q = recover_Q(*r.F_hat, data);
    r.Q_hat = q.Q_hat;
    r.q_ambiguity_dim = q.ambiguity_dim;
    r.stage = "verify";
    r.data_reproduced = pairing_data_proportional(pairing_data({*r.F_hat, *r.Q_hat}), data);
    if (!r.data_reproduced) {
      throw Error(Errc::inconsistent_data, "recovered pair does not reproduce the pairing data");
    }
  } catch (const Error& e) {
    return fail(e);
  }
  r.success = true;
  r.stage = "done";
  return r;
}

}  // namespace

PairData pairing_data(const PairInput& pair) {
  const RingPtr& ring = pair.F.ring();
  if (!is_smooth_form(pair.F)) throw Error(Errc::singular_cubic, "the cubic F is singular");
  const DualForm lambda = socle_functional(pair.F);
  PairData d{ring, pairing_matrix(ring, lambda), zero_vector(ring->field(), ring->dim(3))};
  const MonomialBasis& b3 = ring->basis(3);
  for (Index b = 0; b < b3.size(); ++b) {
    d.c[b] = apolar_pair(lambda, multiply(pair.Q, monomial<Side::primal>(ring, b3[b], ring->field().one())));
  }
  return d;
}

PrimalSubspace recover_jf3(const PairData& data) {
  const RingPtr& ring = data.ring;
  if (data.T.rows() != ring->dim(2) || data.T.cols() != ring->dim(3)) {
    throw Error(Errc::shape_mismatch, "pairing matrix has the wrong shape");
  }
  const Index expected = ring->dim(3) - binomial(ring->nvars(), 3);
  PrimalSubspace j3(ring, 3, nullspace(ring->field(), data.T));
  if (j3.dim() != expected) {
    throw Error(Errc::genericity_failure, "kernel of T has dimension " + std::to_string(j3.dim()) +
                                              ", expected " + std::to_string(expected));
  }
  return j3;
}

PrimalSubspace recover_partials(const PrimalSubspace& j3) {
  const PrimalSubspace j2 = colon_piece(j3, variables<Side::primal>(j3.ring()), 2);
  if (j2.dim() != j3.ring()->nvars()) {
    throw Error(Errc::genericity_failure, "(J3 : m) has dimension " + std::to_string(j2.dim()));
  }
  return j2;
}

HomForm recover_F(const PrimalSubspace& w) {
  const RingPtr& ring = w.ring();
  const PrimeField& field = ring->field();
  const int n = ring->nvars();
  if (w.degree() != 2 || w.dim() != n) {
    throw Error(Errc::inconsistent_w, "expected an n-dimensional space of quadrics");
  }
  const std::vector<HomForm> basis = w.forms();
  // dw[k][j] = d_j w_k
  std::vector<std::vector<HomForm>> dw(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) dw[k].push_back(partial(basis[k], j));
  }
  // Unknown (i, k) sits in column i * n + k; G_i = sum_k c_ik w_k.
  const Index pairs = n * (n - 1) / 2;
  Mat sys = zeros(field, pairs * n, n * n);
  Index row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, row += n) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          sys(row + l, i * n + k) += dw[k][j][l];
          sys(row + l, j * n + k) -= dw[k][i][l];
        }
      }
    }
  }
  const Mat ker = nullspace(field, sys);
  if (ker.rows() == 0) throw Error(Errc::inconsistent_w, "no nonzero symmetric gradient in W");
  if (ker.rows() > 1) {
    throw Error(Errc::non_unique_gradient,
                "symmetric gradients form a space of dimension " + std::to_string(ker.rows()));
  }
  std::vector<HomForm> G;
  for (int i = 0; i < n; ++i) {
    HomForm g(ring, 2);
    for (int k = 0; k < n; ++k) g += ker(0, i * n + k) * basis[k];
    G.push_back(std::move(g));
  }
  HomForm F(ring, 3);
  for (int i = 0; i < n; ++i) F += multiply(variable<Side::primal>(ring, i), G[i]);
  F *= field(3).inverse();
  for (int i = 0; i < n; ++i) {
    if (!(partial(F, i) == G[i])) throw Error(Errc::inconsistent_w, "Euler reconstruction is not a potential");
  }
  if (!(PrimalSubspace::span(ring, 2, jacobian_gens(F).gens()) == w)) {
    throw Error(Errc::inconsistent_w, "J_{F,2} of the reconstruction differs from W");
  }
  return normalized(F);
}

QuadricRecovery recover_Q(const HomForm& F_hat, const PairData& data) {
  const RingPtr& ring = F_hat.ring();
  const PrimeField& field = ring->field();
  const DualForm lambda = socle_functional(F_hat);
  const Mat T_hat = pairing_matrix(ring, lambda);
  if (!proportionality(data.T, T_hat)) {
    throw Error(Errc::inconsistent_data, "T is not the pairing matrix of the recovered cubic");
  }
  if (is_zero(data.c)) {
    throw Error(Errc::genericity_failure, "the cubic form vanishes, so Q lies in J_{F,2}");
  }
  // (q, t) with T_hat^T q + t c = 0.
  const Index m = T_hat.rows();
  Mat sys(T_hat.cols(), m + 1);
  sys.leftCols(m) = T_hat.transpose();
  sys.col(m) = data.c;
  const Mat ker = nullspace(field, sys);
  Index pick = -1;
  for (Index r = 0; r < ker.rows(); ++r) {
    if (!ker(r, m).is_zero()) {
      pick = r;
      break;
    }
  }
  if (pick < 0) throw Error(Errc::inconsistent_data, "c is not a cubic form of the recovered family");

  const PrimalSubspace jf2 = PrimalSubspace::span(ring, 2, jacobian_gens(F_hat).gens());
  const PrimalSubspace ambiguity(ring, 2, nullspace(field, T_hat.transpose()));
  if (!(ambiguity == jf2)) {
    throw Error(Errc::non_unique_q, "the indistinguishable quadrics exceed J_{F,2}");
  }
  const Vec q = ker.row(pick).head(m).transpose();
  HomForm Q_hat(ring, 2, jf2.reduce(q));
  if (Q_hat.is_zero()) throw Error(Errc::genericity_failure, "the recovered quadric lies in J_{F,2}");
  return {normalized(Q_hat), ambiguity.dim()};
}

bool pairing_data_proportional(const PairData& a, const PairData& b) {
  return proportionality(a.T, b.T).has_value() && proportionality(as_row(a.c), as_row(b.c)).has_value();
}

TorelliResult reconstruct(const PairData& data) {
  Stages stages;
  return run(data, stages);
}

TorelliResult torelli_roundtrip(const PairInput& pair) {
  TorelliResult r;
  PairData data;
  try {
    data = pairing_data(pair);
  } catch (const Error& e) {
    r.stage = "pairing_data";
    r.error = e.code();
    r.failure_reason = std::string(to_string(e.code())) + ": " + e.what();
    return r;
  }
  Stages stages;
  r = run(data, stages);
  const RingPtr& ring = pair.F.ring();
  const auto jac = jacobian_gens(pair.F);
  const PrimalSubspace jf2 = graded_piece(ring, jac, 2);
  if (stages.j3) r.jf3_exact = *stages.j3 == graded_piece(ring, jac, 3);
  if (stages.j2) r.jf2_exact = *stages.j2 == jf2;
  if (r.F_hat) r.f_proportional = proportional(*r.F_hat, pair.F);
  if (r.Q_hat) {
    r.q_proportional = proportional(*r.Q_hat, pair.Q);
    r.q_class_proportional = proportional(*r.Q_hat, HomForm(ring, 2, jf2.reduce(pair.Q.coeffs())));
  }
  r.success = r.success && r.f_proportional.value_or(false) && r.q_class_proportional.value_or(false);
  return r;
}

}  // namespace cubicpair
