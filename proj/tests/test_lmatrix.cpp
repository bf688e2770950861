// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Lattice-valued matrices and the two composition products: the
// implication/meet fold and the tnorm/join fold, their scalar forms, and
// the covering-derived matrices.

#include <gtest/gtest.h>

#include <vector>

#include "helpers.hpp"
#include "lrough/covering.hpp"
#include "lrough/lmatrix.hpp"

namespace {

using namespace lrough;
using lrough::testing::expect_error;
using lrough::testing::kEps;

TEST(Lmatrix, BasicsAndTranspose) {
  lmatrix<godel_lattice> m = lmatrix<godel_lattice>::from_rows({{0.1, 0.2, 0.3}, {0.4, 0.5, 0.6}});
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(m.cols(), 3);
  lmatrix<godel_lattice> t = transpose(m);
  EXPECT_EQ(t.rows(), 3);
  EXPECT_EQ(t.cols(), 2);
  EXPECT_NEAR(t.at(2, 0), 0.3, kEps);
  EXPECT_NEAR(t.at(1, 1), 0.5, kEps);
  expect_error([] { lmatrix<godel_lattice>(0, 2, 0.0); }, errc::parse, "dimension_mismatch");
}

TEST(Lmatrix, CompositionShapes) {
  godel_lattice l;
  lmatrix<godel_lattice> a(2, 3, 0.5);
  lmatrix<godel_lattice> b(3, 4, 0.5);
  EXPECT_EQ(tri(l, a, b).cols(), 4);
  EXPECT_EQ(btri(l, a, b).rows(), 2);
  lmatrix<godel_lattice> bad(2, 4, 0.5);
  expect_error([&] { tri(l, a, bad); }, errc::parse, "dimension_mismatch");
  expect_error([&] { btri(l, a, bad); }, errc::parse, "dimension_mismatch");
}

// On the six-point Godel fixture, composing the transposed membership
// matrix with the target column yields the per-member folds.
TEST(Lmatrix, MembershipColumnFolds) {
  auto inst = lrough::testing::godel6();
  const auto& l = inst.lat;
  lmatrix<godel_lattice> mc = m_covering(l, inst.covering);
  EXPECT_EQ(mc.rows(), 6);
  EXPECT_EQ(mc.cols(), 4);
  lmatrix<godel_lattice> mx = m_set(l, inst.target("X"));
  EXPECT_EQ(mx.rows(), 6);
  EXPECT_EQ(mx.cols(), 1);

  lmatrix<godel_lattice> s_col = tri(l, transpose(mc), mx);
  lmatrix<godel_lattice> n_col = btri(l, transpose(mc), mx);
  std::vector<double> s_vals, n_vals;
  for (int i = 0; i < 4; ++i) {
    s_vals.push_back(s_col.at(i, 0));
    n_vals.push_back(n_col.at(i, 0));
  }
  lrough::testing::expect_vec_near(s_vals, {0.4, 0.3, 0.3, 0.4});
  lrough::testing::expect_vec_near(n_vals, {0.5, 0.6, 0.4, 0.6});
}

TEST(Lmatrix, ScalarForms) {
  lukasiewicz_lattice l;
  lmatrix<lukasiewicz_lattice> b = lmatrix<lukasiewicz_lattice>::from_rows({{0.3, 0.8}});
  lmatrix<lukasiewicz_lattice> imp = tri(l, 0.9, b);
  EXPECT_NEAR(imp.at(0, 0), 0.4, kEps);
  EXPECT_NEAR(imp.at(0, 1), 0.9, kEps);
  lmatrix<lukasiewicz_lattice> tn = btri(l, b, 0.9);
  EXPECT_NEAR(tn.at(0, 0), 0.2, kEps);
  EXPECT_NEAR(tn.at(0, 1), 0.7, kEps);
  lmatrix<lukasiewicz_lattice> tn2 = btri(l, 0.9, b);
  EXPECT_NEAR(tn2.at(0, 0), 0.2, kEps);
}

TEST(Lmatrix, RelationMatrixAgreesWithRelationTable) {
  auto inst = lrough::testing::luk5a();
  const auto& l = inst.lat;
  lmatrix<lukasiewicz_lattice> via_product = relation_matrix(l, inst.covering);
  lmatrix<lukasiewicz_lattice> via_table = to_matrix(l, relation_arrow(inst.covering));
  ASSERT_EQ(via_product.rows(), 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) EXPECT_NEAR(via_product.at(x, y), via_table.at(x, y), kEps);

  lmatrix<lukasiewicz_lattice> sym_product = sym_relation_matrix(l, inst.covering);
  relation_table<lukasiewicz_lattice> sym_table = relation_sym(l, inst.covering);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) EXPECT_NEAR(sym_product.at(x, y), sym_table.at(x, y), kEps);
}

TEST(Lmatrix, SetRoundTrip) {
  godel_lattice l;
  universe_ptr u = default_universe(3);
  fuzzy_set<godel_lattice> x = make_set(l, u, {0.1, 0.6, 1.0});
  fuzzy_set<godel_lattice> back = to_set(l, u, m_set(l, x));
  EXPECT_TRUE(set_eq(l, back, x));
  expect_error([&] { to_set(l, u, lmatrix<godel_lattice>(3, 2, 0.0)); }, errc::internal,
               "dimension_mismatch");
}

}  // namespace
