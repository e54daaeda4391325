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

#ifndef CUBICPAIR_TORELLI_HPP_
#define CUBICPAIR_TORELLI_HPP_

#include <optional>
#include <string>

#include "cubicpair/error.hpp"
#include "cubicpair/hodge.hpp"

namespace cubicpair {

/**
 * Second-order pairing data of a pair (F, Q), the only input the blind
 * reconstructor reads.
 *
 *   T[a][b] = lambda(m_a * m_b)   m_a in S^2 V, m_b in S^3 V monomials
 *   c[b]    = lambda(Q * m_b)     the cubic form C, as pairing values
 *
 * Row a of T is the cubic form attached to the quadric m_a, so T is the
 * full linear family Q' -> C_{Q'} and c picks out the member for Q. Both
 * are meaningful only up to a nonzero scalar each.
 */
struct PairData {
  RingPtr ring;
  Mat T;  ///< dim S^2 x dim S^3
  Vec c;  ///< dim S^3
};

/// Errc::singular_cubic.
PairData pairing_data(const PairInput& pair);

/// Right kernel of T. Errc::genericity_failure unless it is the expected
/// dim S^3 - dim S^3/J_{F,3} (25 for five variables).
PrimalSubspace recover_jf3(const PairData& data);

/// (J3 : m)_2. Errc::genericity_failure unless its dimension is nvars.
PrimalSubspace recover_partials(const PrimalSubspace& j3);

/**
 * Cubic F with span(d_1 F, ..., d_n F) = W, via the symmetric-gradient
 * solve: G_i in W with d_j G_i = d_i G_j, then F = (1/3) sum z_i G_i.
 * Errc::non_unique_gradient when the solution space has dimension > 1,
 * Errc::inconsistent_w when only G = 0 solves it or J_F != W afterwards.
 */
HomForm recover_F(const PrimalSubspace& w);

struct QuadricRecovery {
  HomForm Q_hat;         ///< canonical representative, reduced modulo J_{F,2}
  Index ambiguity_dim;   ///< dimension of the indistinguishable directions
};

/**
 * Quadrics Q' whose cubic form under F_hat is proportional to c. The
 * solution set is span(Q) + J_{F,2}: adding any element of J_{F,2} to Q
 * leaves every pairing value unchanged. Errc::inconsistent_data when T is
 * not proportional to the pairing matrix of F_hat or c is not in its row
 * space, Errc::genericity_failure when c = 0, Errc::non_unique_q when the
 * ambiguity exceeds J_{F,2}.
 */
QuadricRecovery recover_Q(const HomForm& F_hat, const PairData& data);

struct TorelliResult {
  bool success = false;
  std::string stage;           ///< last stage reached, or the failing stage
  std::string failure_reason;  ///< empty on success
  std::optional<Errc> error;
  std::optional<HomForm> F_hat;
  std::optional<HomForm> Q_hat;
  Index q_ambiguity_dim = 0;
  bool data_reproduced = false;  ///< pairing_data(F_hat, Q_hat) proportional to the input
  // Ground-truth comparisons, filled by torelli_roundtrip.
  std::optional<bool> jf3_exact;
  std::optional<bool> jf2_exact;
  std::optional<bool> f_proportional;
  std::optional<bool> q_proportional;
  std::optional<bool> q_class_proportional;  ///< Q_hat = cQ modulo J_{F,2}
};

/// Blind reconstruction from pairing data alone.
TorelliResult reconstruct(const PairData& data);

/// pairing_data then reconstruct, compared with the ground truth.
TorelliResult torelli_roundtrip(const PairInput& pair);

/// T and c each equal to a nonzero multiple of the other's.
bool pairing_data_proportional(const PairData& a, const PairData& b);

}  // namespace cubicpair

#endif  // CUBICPAIR_TORELLI_HPP_
