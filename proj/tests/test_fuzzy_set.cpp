// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Fuzzy sets over a lattice: constructors, validation, pointwise algebra,
// and the graded inclusion / overlap folds with their threshold variants.
// The lemma sweep verifies the fold calculus exhaustively on every
// residuated lattice with at most three elements and universes of up to
// three points.

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "helpers.hpp"
#include "lrough/axioms.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/lattice.hpp"

namespace {

using namespace lrough;
using lrough::testing::expect_error;
using lrough::testing::kEps;
using lrough::testing::luk3;

TEST(Universe, Validation) {
  universe u({"x", "y", "z"});
  EXPECT_EQ(u.size(), 3);
  EXPECT_EQ(u.label(1), "y");
  EXPECT_EQ(u.index_of("z"), 2);
  expect_error([&] { u.index_of("w"); }, errc::parse, "unknown_label");
  expect_error([] { universe({}); }, errc::parse, "bad_input");
  expect_error([] { universe({"x", "x"}); }, errc::parse, "bad_input");
  expect_error([] { universe({""}); }, errc::parse, "bad_input");
  EXPECT_EQ(default_universe(2)->labels(), (std::vector<std::string>{"x1", "x2"}));
}

TEST(FuzzySet, ConstructionAndValidation) {
  godel_lattice l;
  universe_ptr u = default_universe(3);
  fuzzy_set<godel_lattice> x = make_set(l, u, {0.2, 0.5, 1.0});
  EXPECT_EQ(x.size(), 3);
  EXPECT_NEAR(x(1), 0.5, kEps);
  expect_error([&] { make_set(l, u, {0.2, 0.5}); }, errc::parse, "dimension_mismatch");
  expect_error([&] { make_set(l, u, {0.2, 0.5, 1.2}); }, errc::domain, "foreign_value");
  expect_error([&] { make_set(l, u, {-0.1, 0.5, 1.0}); }, errc::domain, "foreign_value");

  finite_lattice three = finite_lattice::chain(3);
  expect_error([&] { make_set(three, u, {0, 1, 3}); }, errc::domain, "foreign_value");

  fuzzy_set<godel_lattice> y = make_set(l, default_universe(2), {0.1, 0.2});
  expect_error([&] { pointwise_meet(l, x, y); }, errc::domain, "universe_mismatch");
}

TEST(FuzzySet, PointwiseAlgebra) {
  lukasiewicz_lattice l;
  universe_ptr u = default_universe(2);
  auto x = make_set(l, u, {0.7, 0.2});
  auto y = make_set(l, u, {0.5, 0.6});
  lrough::testing::expect_vec_near(pointwise_meet(l, x, y).a, {0.5, 0.2});
  lrough::testing::expect_vec_near(pointwise_join(l, x, y).a, {0.7, 0.6});
  lrough::testing::expect_vec_near(pointwise_tnorm(l, x, y).a, {0.2, 0.0});
  lrough::testing::expect_vec_near(pointwise_implication(l, x, y).a, {0.8, 1.0});
  lrough::testing::expect_vec_near(scalar_tnorm(l, 0.9, x).a, {0.6, 0.1});
  lrough::testing::expect_vec_near(scalar_implication(l, 0.9, x).a, {0.8, 0.3});
  lrough::testing::expect_vec_near(implication_scalar(l, x, 0.1).a, {0.4, 0.9});
  lrough::testing::expect_vec_near(complement_set(l, x).a, {0.3, 0.8});
  EXPECT_TRUE(set_leq(l, pointwise_meet(l, x, y), x));
  EXPECT_FALSE(set_leq(l, x, y));
  EXPECT_TRUE(set_eq(l, x, x));
}

TEST(FuzzySet, SpecialSets) {
  finite_lattice three = finite_lattice::chain(3);
  universe_ptr u = make_universe({"x", "y", "z"});
  EXPECT_EQ(empty_set(three, u).a, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(full_set(three, u).a, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(constant_set(three, u, 1).a, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(characteristic(three, u, {1}).a, (std::vector<int>{0, 2, 0}));
  EXPECT_EQ(characteristic(three, u, {0, 2}).a, (std::vector<int>{2, 0, 2}));
  EXPECT_EQ(co_singleton(three, u, 1).a, (std::vector<int>{2, 0, 2}));
}

// The worked pair on the three-chain: A = (0,a,1,0,a,1), B = (0,1,a,a,1,a),
// beta = a.  Expected: S(A,B) = a, N-beta = a, S-beta = 1.
TEST(Folds, ThreeChainPair) {
  finite_lattice l = finite_lattice::chain(3);
  universe_ptr u = default_universe(6);
  auto A = make_set(l, u, {0, 1, 2, 0, 1, 2});
  auto B = make_set(l, u, {0, 2, 1, 1, 2, 1});
  int beta = l.index_of("a");
  EXPECT_EQ(subsethood(l, A, B), 1);
  EXPECT_EQ(overlap_beta(l, beta, A, B), 1);
  EXPECT_EQ(subsethood_beta(l, beta, A, B), 2);
  EXPECT_TRUE(le_beta(l, beta, A, B));
  EXPECT_FALSE(le_beta(l, l.top(), A, B));
}

// Per-member folds on the six-point Godel fixture.
TEST(Folds, GodelFixtureValues) {
  auto inst = lrough::testing::godel6();
  const auto& l = inst.lat;
  const auto& x = inst.target("X");
  std::vector<double> s_vals, n_vals;
  for (int i = 0; i < inst.covering.size(); ++i) {
    s_vals.push_back(subsethood(l, inst.covering.member_set(i), x));
    n_vals.push_back(overlap(l, inst.covering.member_set(i), x));
  }
  lrough::testing::expect_vec_near(s_vals, {0.4, 0.3, 0.3, 0.4});
  lrough::testing::expect_vec_near(n_vals, {0.5, 0.6, 0.4, 0.6});
  EXPECT_NEAR(subsethood_beta(l, 0.6, inst.covering.member_set(1), x), 0.3, kEps);
  EXPECT_NEAR(overlap_beta(l, 0.6, inst.covering.member_set(0), x), 0.5, kEps);
}

// ---------------------------------------------------------------------------
// Exhaustive fold calculus on all lattices with <= 3 elements
// ---------------------------------------------------------------------------

void sweep_fold_lemmas(const finite_lattice& l, int n) {
  universe_ptr u = default_universe(n);
  const long count = set_count(l, n);
  auto set_of = [&](long i) { return fuzzy_set<finite_lattice>{u, set_at(l, n, i)}; };

  for (long i = 0; i < count; ++i) {
    auto A = set_of(i);
    for (long j = 0; j < count; ++j) {
      auto B = set_of(j);
      int s = subsethood(l, A, B);
      int nv = overlap(l, A, B);
      // graded inclusion is top exactly on actual inclusion
      ASSERT_EQ(s == l.top(), set_leq(l, A, B));
      // overlap is symmetric
      ASSERT_EQ(nv, overlap(l, B, A));
      for (int alpha = 0; alpha < l.size(); ++alpha) {
        ASSERT_EQ(subsethood(l, A, scalar_implication(l, alpha, B)), l.implication(alpha, s));
        ASSERT_TRUE(l.leq(l.tnorm(alpha, s), subsethood(l, A, scalar_tnorm(l, alpha, B))));
        ASSERT_EQ(overlap(l, A, scalar_tnorm(l, alpha, B)), l.tnorm(alpha, nv));
        ASSERT_TRUE(l.leq(overlap(l, A, scalar_implication(l, alpha, B)),
                          l.implication(alpha, overlap(l, A, B))));
        ASSERT_EQ(l.implication(nv, alpha), subsethood(l, A, implication_scalar(l, B, alpha)));
      }
      for (int beta = 0; beta < l.size(); ++beta) {
        ASSERT_EQ(subsethood_beta(l, beta, A, B) == l.top(), l.leq(beta, s));
        ASSERT_EQ(le_beta(l, beta, A, B), l.leq(beta, s));
      }
    }
  }

  // monotonicity in the first argument, and join decomposition
  for (long i = 0; i < count; ++i) {
    auto A1 = set_of(i);
    for (long j = 0; j < count; ++j) {
      auto A2 = set_of(j);
      bool a1_below = set_leq(l, A1, A2);
      auto joined = pointwise_join(l, A1, A2);
      for (long k = 0; k < count; ++k) {
        auto C = set_of(k);
        for (int beta = 0; beta < l.size(); ++beta) {
          if (a1_below) {
            ASSERT_TRUE(l.leq(subsethood_beta(l, beta, A2, C), subsethood_beta(l, beta, A1, C)));
            ASSERT_TRUE(l.leq(overlap_beta(l, beta, A1, C), overlap_beta(l, beta, A2, C)));
          }
          ASSERT_EQ(subsethood_beta(l, beta, joined, C),
                    l.meet(subsethood_beta(l, beta, A1, C), subsethood_beta(l, beta, A2, C)));
          ASSERT_EQ(overlap_beta(l, beta, joined, C),
                    l.join(overlap_beta(l, beta, A1, C), overlap_beta(l, beta, A2, C)));
        }
      }
    }
  }
}

TEST(FoldLemmas, ExhaustiveSmallLattices) {
  std::vector<finite_lattice> lattices{finite_lattice::chain(2), finite_lattice::chain(3), luk3()};
  for (const auto& l : lattices)
    for (int n = 1; n <= 3; ++n) sweep_fold_lemmas(l, n);
}

}  // namespace
