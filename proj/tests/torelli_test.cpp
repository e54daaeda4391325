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

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "cubicpair/error.hpp"
#include "cubicpair/json_io.hpp"
#include "cubicpair/torelli.hpp"
#include "support.hpp"

namespace cubicpair {
namespace {

using test::ring5;

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::malformed_input;
}

PrimalSubspace quadric_span(std::initializer_list<Exponents> monos) {
  std::vector<HomForm> forms;
  for (const auto& e : monos) forms.push_back(monomial<Side::primal>(ring5(), e, ring5()->field().one()));
  return PrimalSubspace::span(ring5(), 2, forms);
}

TEST(PairingData, ShapeRankAndKernel) {
  const PairInput p = test::seeded_pair(1);
  const PairData d = pairing_data(p);
  EXPECT_EQ(d.T.rows(), 15);
  EXPECT_EQ(d.T.cols(), 35);
  EXPECT_EQ(rank(ring5()->field(), d.T), 10);
  EXPECT_EQ(nullspace(ring5()->field(), d.T).rows(), 25);
}

TEST(PairingData, ScalingQScalesC) {
  const PairInput p = test::seeded_pair(2);
  const Fp s = ring5()->field()(42);
  const PairData a = pairing_data(p);
  const PairData b = pairing_data({p.F, s * p.Q});
  EXPECT_EQ(b.T, a.T);
  EXPECT_EQ(b.c, Vec(s * a.c));
}

TEST(PairingData, CIsTheCubicFormAsPairingValues) {
  const PairInput p = test::seeded_pair(3);
  const PairData d = pairing_data(p);
  const DualForm raw = cubic_form_raw(socle_functional(p.F), p.Q);
  const MonomialBasis& b3 = ring5()->basis(3);
  for (Index b = 0; b < b3.size(); ++b) EXPECT_EQ(d.c[b], raw[b] * ring5()->factorial_weight(3, b));
}

TEST(PairingData, BlindToJacobianShift) {
  const PairInput p = test::seeded_pair(4);
  EXPECT_TRUE(pairing_data_proportional(pairing_data(p), pairing_data({p.F, p.Q + partial(p.F, 0)})));
}

TEST(PairingData, SingularCubicIsRejected) {
  const HomForm z13 = monomial<Side::primal>(ring5(), {3, 0, 0, 0, 0}, ring5()->field().one());
  EXPECT_EQ(error_of([&] { pairing_data({z13, fermat_quadric(ring5())}); }), Errc::singular_cubic);
}

TEST(PairingData, JsonRoundTrip) {
  const PairData d = pairing_data(test::seeded_pair(5));
  const PairData e = pairing_data_from_json(parse_json(dump(pairing_data_to_json(d))));
  EXPECT_EQ(e.T, d.T);
  EXPECT_EQ(e.c, d.c);
}

TEST(RecoverJF3, DegenerateTFails) {
  PairData d = pairing_data(test::seeded_pair(6));
  d.T = zeros(ring5()->field(), 15, 35);
  EXPECT_EQ(error_of([&] { recover_jf3(d); }), Errc::genericity_failure);
  const TorelliResult r = reconstruct(d);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.stage, "recover_jf3");
  EXPECT_EQ(r.error, Errc::genericity_failure);
}

TEST(RecoverJF3, FermatStillRecoversJF3) {
  const PairInput p{fermat_cubic(ring5()), random_form(ring5(), 2, 11)};
  EXPECT_EQ(recover_jf3(pairing_data(p)), graded_piece(ring5(), jacobian_gens(p.F), 3));
}

TEST(RecoverPartials, FullSpaceGivesFullSpace) {
  const auto r = colon_piece(PrimalSubspace::full(ring5(), 3), variables<Side::primal>(ring5()), 2);
  EXPECT_EQ(r, PrimalSubspace::full(ring5(), 2));
  EXPECT_EQ(error_of([] { recover_partials(PrimalSubspace::full(ring5(), 3)); }), Errc::genericity_failure);
}

TEST(RecoverPartials, PermutationEquivariant) {
  const HomForm F = test::seeded_pair(7).F;
  const PrimeField& field = ring5()->field();
  Mat perm = zeros(field, 5, 5);
  const int sigma[5] = {2, 0, 4, 1, 3};
  for (int i = 0; i < 5; ++i) perm(i, sigma[i]) = field.one();
  const HomForm G = substitute(F, perm);
  const auto jf3 = graded_piece(ring5(), jacobian_gens(F), 3);
  const auto jg3 = graded_piece(ring5(), jacobian_gens(G), 3);
  std::vector<HomForm> moved;
  for (const HomForm& w : recover_partials(jf3).forms()) moved.push_back(substitute(w, perm));
  EXPECT_EQ(recover_partials(jg3), PrimalSubspace::span(ring5(), 2, moved));
}

TEST(RecoverF, DiagonalGradientSpaceIsNotUnique) {
  const auto w = quadric_span({{2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}});
  EXPECT_EQ(error_of([&] { recover_F(w); }), Errc::non_unique_gradient);
  // The Fermat cubic is one member of the family of potentials.
  EXPECT_EQ(PrimalSubspace::span(ring5(), 2, jacobian_gens(fermat_cubic(ring5())).gens()), w);
}

TEST(RecoverF, CyclicProductsAdmitNoPotential) {
  const auto w = quadric_span({{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {1, 0, 0, 0, 1}});
  EXPECT_EQ(error_of([&] { recover_F(w); }), Errc::inconsistent_w);
}

TEST(RecoverF, WrongDimensionIsRejected) {
  EXPECT_EQ(error_of([] { recover_F(quadric_span({{2, 0, 0, 0, 0}})); }), Errc::inconsistent_w);
}

TEST(RecoverQ, ElementOfJacobianPieceFails) {
  const HomForm F = test::seeded_pair(8).F;
  const PairInput p{F, test::random_jacobian_quadric(F, 3)};
  const TorelliResult r = torelli_roundtrip(p);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.stage, "recover_Q");
  EXPECT_EQ(r.error, Errc::genericity_failure);
  EXPECT_EQ(r.jf3_exact, true);
}

TEST(RecoverQ, PerturbedTIsRejected) {
  const PairInput p = test::seeded_pair(9);
  PairData d = pairing_data(p);
  const HomForm F_hat = recover_F(recover_partials(recover_jf3(d)));
  d.T(3, 4) += ring5()->field().one();
  EXPECT_EQ(error_of([&] { recover_Q(F_hat, d); }), Errc::inconsistent_data);
}

TEST(RecoverQ, ForeignCubicFormIsRejected) {
  const PairInput p = test::seeded_pair(10);
  PairData d = pairing_data(p);
  const HomForm F_hat = recover_F(recover_partials(recover_jf3(d)));
  d.c = pairing_data(test::seeded_pair(11)).c;
  EXPECT_EQ(error_of([&] { recover_Q(F_hat, d); }), Errc::inconsistent_data);
}

TEST(RecoverQ, GaugeIndependent) {
  const PairInput p = test::seeded_pair(12);
  PairData d = pairing_data(p);
  const HomForm F_hat = recover_F(recover_partials(recover_jf3(d)));
  const HomForm q1 = recover_Q(F_hat, d).Q_hat;
  d.T *= ring5()->field()(5);
  d.c *= ring5()->field()(-3);
  EXPECT_EQ(recover_Q(F_hat, d).Q_hat, q1);
}

class RoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(RoundTrip, StagesAreExact) {
  const PairInput p = test::seeded_pair(3000 + GetParam());
  const TorelliResult r = torelli_roundtrip(p);
  ASSERT_TRUE(r.success) << r.failure_reason;
  EXPECT_EQ(r.stage, "done");
  EXPECT_EQ(r.jf3_exact, true);
  EXPECT_EQ(r.jf2_exact, true);
  EXPECT_EQ(r.f_proportional, true);
  EXPECT_EQ(r.q_class_proportional, true);
  EXPECT_TRUE(r.data_reproduced);
  EXPECT_EQ(r.q_ambiguity_dim, 5);
  EXPECT_EQ(PrimalSubspace::span(ring5(), 2, jacobian_gens(*r.F_hat).gens()),
            graded_piece(ring5(), jacobian_gens(p.F), 2));
}

TEST_P(RoundTrip, RecoverFInvertsPartialsSpan) {
  const HomForm F = test::seeded_cubic(4000 + GetParam());
  const auto w = PrimalSubspace::span(ring5(), 2, jacobian_gens(F).gens());
  EXPECT_TRUE(proportional(recover_F(w), F));
}

TEST_P(RoundTrip, BlindReconstructionReproducesData) {
  const PairInput hidden = test::seeded_pair(5000 + GetParam());
  const PairData d = pairing_data(hidden);
  const TorelliResult r = reconstruct(d);
  ASSERT_TRUE(r.success) << r.failure_reason;
  EXPECT_TRUE(pairing_data_proportional(pairing_data({*r.F_hat, *r.Q_hat}), d));
}

TEST_P(RoundTrip, ScaleInvariant) {
  const PairInput p = test::seeded_pair(6000 + GetParam());
  const PrimeField& field = ring5()->field();
  const TorelliResult a = reconstruct(pairing_data(p));
  PairData scaled = pairing_data({field(11) * p.F, field(-4) * p.Q});
  scaled.T *= field(9);
  const TorelliResult b = reconstruct(scaled);
  ASSERT_TRUE(a.success && b.success);
  EXPECT_EQ(*a.F_hat, *b.F_hat);
  EXPECT_EQ(*a.Q_hat, *b.Q_hat);
}

TEST_P(RoundTrip, EquivariantUnderSubstitution) {
  const PairInput p = test::seeded_pair(7000 + GetParam());
  const Mat g = test::random_invertible(ring5()->field(), 5, 8000 + GetParam());
  const TorelliResult a = reconstruct(pairing_data(p));
  const TorelliResult b = reconstruct(pairing_data({substitute(p.F, g), substitute(p.Q, g)}));
  ASSERT_TRUE(a.success && b.success);
  EXPECT_TRUE(proportional(substitute(*a.F_hat, g), *b.F_hat));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RoundTrip, ::testing::Range(0, 20));

TEST(RoundTrip, QIsOnlyDeterminedModuloJacobianPiece) {
  const PairInput p = test::seeded_pair(13);
  const PairInput shifted{p.F, p.Q + test::random_jacobian_quadric(p.F, 1)};
  const TorelliResult a = torelli_roundtrip(p);
  const TorelliResult b = torelli_roundtrip(shifted);
  ASSERT_TRUE(a.success && b.success);
  EXPECT_EQ(*a.Q_hat, *b.Q_hat);
}

TEST(TorelliJson, FailureRecordsStageAndError) {
  PairData d = pairing_data(test::seeded_pair(14));
  d.T = zeros(ring5()->field(), 15, 35);
  const Json j = torelli_to_json(reconstruct(d));
  EXPECT_EQ(j["success"], false);
  EXPECT_EQ(j["stage"], "recover_jf3");
  EXPECT_EQ(j["error"], "GenericityFailure");
}

}  // namespace
}  // namespace cubicpair
