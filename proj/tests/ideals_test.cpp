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

#include <gtest/gtest.h>

#include "cubicpair/error.hpp"
#include "cubicpair/ideals.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace cubicpair {
namespace {

using test::ring5;

Index binomial(int n, int k) {
  Index r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Jacobian, FermatGradientIsDiagonal) {
  const auto gens = jacobian_gens(fermat_cubic(ring5())).gens();
  ASSERT_EQ(gens.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    Exponents e(5, 0);
    e[i] = 2;
    EXPECT_EQ(gens[i], monomial<Side::primal>(ring5(), e, ring5()->field()(3)));
  }
}

TEST(Jacobian, ZeroPartialsAreDropped) {
  const HomForm z13 = monomial<Side::primal>(ring5(), {3, 0, 0, 0, 0}, ring5()->field().one());
  EXPECT_EQ(jacobian_gens(z13).size(), 1u);
}

TEST(Jacobian, RandomCubicHasIndependentPartials) {
  const HomForm F = test::seeded_cubic(1);
  EXPECT_EQ(rank(ring5()->field(), coefficient_matrix(jacobian_gens(F).gens(), ring5(), 2)), 5);
}

TEST(GradedPiece, DimensionsForRandomSmoothCubic) {
  const HomForm F = test::seeded_cubic(2);
  const auto jac = jacobian_gens(F);
  EXPECT_EQ(graded_piece(ring5(), jac, 2).dim(), 5);
  EXPECT_EQ(graded_piece(ring5(), jac, 3).dim(), 25);
  EXPECT_EQ(graded_piece(ring5(), jac, 5).dim(), 125);
  EXPECT_EQ(perp(graded_piece(ring5(), jac, 5)).dim(), 1);
}

TEST(Hilbert, RandomSmoothCubicMatchesCompleteIntersection) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto h = hilbert_function(ring5(), jacobian_gens(test::seeded_cubic(s)), 6);
    // Five quadrics in five variables: series (1 + t)^5.
    std::vector<Index> ci;
    for (int d = 0; d <= 6; ++d) ci.push_back(d <= 5 ? binomial(5, d) : 0);
    EXPECT_EQ(h, ci);
    EXPECT_EQ(h, (std::vector<Index>{1, 5, 10, 10, 5, 1, 0}));
  }
}

TEST(Hilbert, FermatCubic) {
  EXPECT_EQ(hilbert_function(ring5(), jacobian_gens(fermat_cubic(ring5())), 6),
            (std::vector<Index>{1, 5, 10, 10, 5, 1, 0}));
}

TEST(Hilbert, ZeroIdealGivesBinomials) {
  const auto h = hilbert_function(ring5(), IdealGens<Side::primal>{}, 6);
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(h[d], binomial(d + 4, 4));
}

TEST(Hilbert, ReferenceRankAgrees) {
  const HomForm F = test::seeded_cubic(9);
  const oracle::Poly f = oracle::from_form(F);
  const auto h = hilbert_function(ring5(), jacobian_gens(F), 6);
  for (int d = 2; d <= 6; ++d) {
    const int r = oracle::rank(oracle::ideal_rows(oracle::gradient(f, 5, kDefaultPrime), 2, 5, d, kDefaultPrime),
                               kDefaultPrime);
    EXPECT_EQ(h[d], ring5()->dim(d) - r) << "degree " << d;
  }
}

TEST(Colon, RejectsDegreeMismatch) {
  const auto piece = graded_piece(ring5(), jacobian_gens(test::seeded_cubic(1)), 4);
  const HomForm cubic = random_form(ring5(), 3, 1);
  EXPECT_THROW(colon_piece(piece, {cubic}, 2), Error);
}

TEST(Colon, PieceOfSeededPairMatchesReference) {
  const PairInput pair = test::seeded_pair(3);
  const auto jf5 = graded_piece(ring5(), jacobian_gens(pair.F), 5);
  const auto colon = colon_piece(jf5, {pair.Q}, 3);
  EXPECT_EQ(colon.dim(), 34);
  EXPECT_EQ(colon.dim(), oracle::colon_dim(oracle::from_form(pair.F), oracle::from_form(pair.Q), 5, 5, kDefaultPrime));
  for (const HomForm& P : colon.forms()) EXPECT_TRUE(jf5.contains(multiply(P, pair.Q)));
}

TEST(Colon, ByAllOfSpaceIsEverything) {
  const auto full3 = PrimalSubspace::full(ring5(), 3);
  EXPECT_EQ(colon_piece(full3, variables<Side::primal>(ring5()), 2), PrimalSubspace::full(ring5(), 2));
}

TEST(Colon, Monotone) {
  const PairInput pair = test::seeded_pair(4);
  const auto jac = jacobian_gens(pair.F);
  const auto small = graded_piece(ring5(), jac, 4);
  const auto big = subspace_sum(small, PrimalSubspace::span(ring5(), 4, {multiply(pair.Q, pair.Q)}));
  EXPECT_TRUE(colon_piece(big, {pair.Q}, 2).contains(colon_piece(small, {pair.Q}, 2)));
}

TEST(Colon, MultiplesOfGeneratorsStayInHigherPieces) {
  const HomForm F = test::seeded_cubic(5);
  const auto jac = jacobian_gens(F);
  const auto j3 = graded_piece(ring5(), jac, 3);
  const auto j4 = graded_piece(ring5(), jac, 4);
  for (const HomForm& g : j3.forms()) {
    for (const auto& z : variables<Side::primal>(ring5())) EXPECT_TRUE(j4.contains(multiply(g, z)));
  }
}

class ColonLemma : public ::testing::TestWithParam<int> {};

TEST_P(ColonLemma, ColonByMaximalIdealDropsOneDegree) {
  const HomForm F = test::seeded_cubic(100 + GetParam());
  const auto jac = jacobian_gens(F);
  const auto m = variables<Side::primal>(ring5());
  for (int k = 3; k <= 5; ++k) {
    EXPECT_EQ(colon_piece(graded_piece(ring5(), jac, k), m, k - 1), graded_piece(ring5(), jac, k - 1)) << "k = " << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Cubics, ColonLemma, ::testing::Range(0, 20));

// Beyond the socle degree the identity is not expected: J_{F,6} is all of
// S^6, so the colon is all of S^5 while J_{F,5} has codimension one.
TEST(ColonLemma, ObservedAtDegreeSix) {
  const HomForm F = test::seeded_cubic(7);
  const auto jac = jacobian_gens(F);
  const auto colon = colon_piece(graded_piece(ring5(), jac, 6), variables<Side::primal>(ring5()), 5);
  RecordProperty("colon_dim_k6", static_cast<int>(colon.dim()));
  RecordProperty("jf5_dim", static_cast<int>(graded_piece(ring5(), jac, 5).dim()));
  std::cout << "[ observed ] dim (J_{F,6} : m)_5 = " << colon.dim() << ", dim J_{F,5} = "
            << graded_piece(ring5(), jac, 5).dim() << '\n';
}

class RandomSubspace : public ::testing::TestWithParam<int> {};

PrimalSubspace random_subspace(int degree, Index dim, std::uint64_t seed) {
  return PrimalSubspace(ring5(), degree, test::random_matrix(ring5()->field(), dim, ring5()->dim(degree), seed));
}

TEST_P(RandomSubspace, PerpIsAnOrderReversingInvolution) {
  const std::uint64_t s = static_cast<std::uint64_t>(GetParam());
  const auto a = random_subspace(3, 3 + GetParam() % 20, s);
  const auto b = subspace_sum(a, random_subspace(3, 4, s + 50));
  const auto pa = perp(a);
  EXPECT_EQ(pa.dim(), 35 - a.dim());
  EXPECT_EQ(perp(pa), a);
  EXPECT_TRUE(pa.contains(perp(b)));
  for (const DualForm& phi : pa.forms()) {
    for (const HomForm& f : a.forms()) EXPECT_TRUE(apolar_pair(phi, f).is_zero());
  }
}

TEST_P(RandomSubspace, SumAndIntersectionDimensions) {
  const std::uint64_t s = static_cast<std::uint64_t>(GetParam());
  const auto a = random_subspace(3, 10 + GetParam() % 15, s);
  const auto b = random_subspace(3, 12 + GetParam() % 11, s + 9);
  EXPECT_EQ(a.dim() + b.dim(), subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());
  EXPECT_TRUE(a.contains(subspace_intersect(a, b)));
  EXPECT_TRUE(b.contains(subspace_intersect(a, b)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSubspace, ::testing::Range(0, 20));

TEST(Subspace, TrivialIdentities) {
  const auto a = random_subspace(2, 6, 1);
  const auto zero = PrimalSubspace::zero(ring5(), 2);
  const auto full = PrimalSubspace::full(ring5(), 2);
  EXPECT_EQ(subspace_sum(a, zero), a);
  EXPECT_EQ(subspace_intersect(a, a), a);
  EXPECT_EQ(perp(full).dim(), 0);
  EXPECT_EQ(perp(zero).dim(), 15);
}

TEST(Subspace, ComplementaryCoordinateSpaces) {
  const PrimeField& field = ring5()->field();
  const Mat id = identity(field, 15);
  const PrimalSubspace low(ring5(), 2, id.topRows(7));
  const PrimalSubspace high(ring5(), 2, id.bottomRows(8));
  EXPECT_EQ(subspace_intersect(low, high).dim(), 0);
  EXPECT_EQ(subspace_sum(low, high).dim(), 15);
}

TEST(Subspace, CanonicalBasisIsIndependentOfSpanningSet) {
  const PrimeField& field = ring5()->field();
  const Mat m = test::random_matrix(field, 6, 35, 11);
  const Mat mix = test::random_invertible(field, 6, 12) * m;
  EXPECT_EQ(PrimalSubspace(ring5(), 3, m).basis(), PrimalSubspace(ring5(), 3, mix).basis());
}

TEST(Subspace, ShapeMismatchThrows) {
  EXPECT_THROW(PrimalSubspace(ring5(), 3, zeros(ring5()->field(), 2, 15)), Error);
}

}  // namespace
}  // namespace cubicpair
