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

#ifndef CUBICPAIR_HODGE_HPP_
#define CUBICPAIR_HODGE_HPP_

#include <optional>
#include <vector>

#include "cubicpair/ideals.hpp"

namespace cubicpair {

inline constexpr int kDefaultDegreeBound = 6;
inline constexpr int kSurfaceDegreeBound = 7;

/// X = {F = 0} a cubic threefold, Y = {F = Q = 0} an anticanonical surface.
struct PairInput {
  HomForm F;
  HomForm Q;
};

/// J_F piece in the given degree fills S^d. For a cubic in five variables
/// degree 6 is the first degree where this must happen.
bool is_smooth_form(const HomForm& f, int degree_bound = kDefaultDegreeBound);

/// Extra generators of the singular-locus ideal of Y: Q_i F_j - Q_j F_i, i < j.
std::vector<HomForm> wedge_minors(const HomForm& F, const HomForm& Q);

struct SurfaceCertificate {
  bool smooth = false;
  int degree_bound = kSurfaceDegreeBound;
  Index codim = 0;  ///< codim of (F, Q, minors) in S^degree_bound
};

/// Y is smooth iff (F, Q, minors) has no projective zero; certified by
/// its graded piece filling S^degree_bound. Degree 6 is too early for
/// generic pairs; saturation happens in degree 7.
SurfaceCertificate certify_surface(const HomForm& F, const HomForm& Q,
                                   int degree_bound = kSurfaceDegreeBound);

/// Canonical generator of perp(J_{F,5}) in S^5 V* (leading coefficient 1).
/// Errc::singular_cubic unless that annihilator is a line.
DualForm socle_functional(const HomForm& F);

/// The cubic form <C, P> = lambda(Q P), unnormalized so that it is linear in Q.
DualForm cubic_form_raw(const DualForm& lambda, const HomForm& Q);

struct CubicFormResult {
  DualForm C;       ///< normalized, or the zero form
  DualForm lambda;  ///< the functional on S^5 V
  bool is_zero = false;
  bool is_nondegenerate = false;
  bool is_smooth = false;
  bool q_in_jf2 = false;
  Index j_c2_dim = 0;
  Index colon_f5q_3 = 0;  ///< dim (J_{F,5} : Q)_3
  Index colon_f4q_2 = 0;  ///< dim (J_{F,4} : Q)_2
  Index mq_rank = 0;      ///< rank of S^2 V -> S^4 V / J_{F,4}
  Index jc6_codim = 0;    ///< dim S^6 V* / J_{C,6}
  bool span_matches_colon = false;  ///< span C == perp((J_{F,5}:Q)_3), or C = 0
};

/// Errc::singular_cubic when F is singular.
CubicFormResult cubic_form(const PairInput& pair, int degree_bound = kDefaultDegreeBound);

enum class MfMode { nullspace, determinant };

/// The quintic dual form annihilating J_{F,5}. Determinant mode expands
/// the bordered 126 x 126 matrix along its symbolic first row; the
/// remaining rows are the first independent products z^J F_i.
DualForm mf_form(const HomForm& F, MfMode mode = MfMode::nullspace);

/// sum w_ij d^2 M_F / dz_i* dz_j* for Q = sum w_ij z_i z_j.
DualForm cubic_from_mf(const DualForm& mf, const HomForm& Q);

/// Generator of perp(J_{C,5}) in S^5 V, normalized.
/// Errc::singular_associated_cubic when that space is not a line.
HomForm associated_quintic(const DualForm& C);

struct ModuliReport {
  Index dim_tdef_xy = 0;      ///< S^3 V / ((dQ ^ dF)_3 + F)
  Index dim_h11_new = 0;      ///< S^3 V / ((dQ ^ dF)_3 + F + Q V)
  Index dim_ker_alpha = 0;    ///< (J_{F,3} : Q)_1
  Index rank_mq_s3 = 0;       ///< rank of V -> S^3 V / J_{F,3}, v -> Q v
  Index dim_coker_alpha = 0;  ///< S^3 V / (J_{F,3} + Q V)
  Index dim_jf3_cap_qv = 0;   ///< J_{F,3} intersected with Q V, reported separately
  Index milnor_dim_3 = 0;     ///< dim S^3 V / J_{F,3}
  bool delta_b_nonzero = false;
  int degree_bound = kDefaultDegreeBound;
};

/// Errc::singular_cubic, Errc::singular_surface.
ModuliReport moduli_report(const PairInput& pair, int degree_bound = kDefaultDegreeBound,
                           int surface_degree_bound = kSurfaceDegreeBound);

/// Same, reusing a surface certificate computed for this pair.
ModuliReport moduli_report(const PairInput& pair, const SurfaceCertificate& surface,
                           int degree_bound = kDefaultDegreeBound);

struct BinarySyzygy {
  bool has_syzygy = false;
  Index span_dim = 0;  ///< dim of W inside S^{2d-4}
  DualForm form;       ///< generator of perp(W) when dim W = 2d - 4, else zero
};

/// Binary forms only (Errc::wrong_arity otherwise), degree >= 3.
BinarySyzygy binary_syzygy_form(const HomForm& F);

}  // namespace cubicpair

#endif  // CUBICPAIR_HODGE_HPP_
