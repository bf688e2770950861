// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Residuated-lattice backends: connective values, the adjoint property,
// table validation, chain construction, and structure enumeration.

#include <gtest/gtest.h>

#include <vector>

#include "helpers.hpp"
#include "lrough/lattice.hpp"

namespace {

using namespace lrough;
using lrough::testing::chain_structures;
using lrough::testing::diamond;
using lrough::testing::expect_error;
using lrough::testing::kEps;
using lrough::testing::luk3;

// Exactly representable grid, so comparisons are never within tolerance of
// a boundary by accident.
const std::vector<double> kGrid{0.0, 0.25, 0.5, 0.75, 1.0};

TEST(GodelLattice, Connectives) {
  godel_lattice l;
  EXPECT_NEAR(l.tnorm(0.6, 0.3), 0.3, kEps);
  EXPECT_NEAR(l.implication(0.6, 0.3), 0.3, kEps);
  EXPECT_NEAR(l.implication(0.3, 0.6), 1.0, kEps);
  EXPECT_NEAR(negation(l, 0.0), 1.0, kEps);
  EXPECT_NEAR(negation(l, 0.5), 0.0, kEps);
  EXPECT_FALSE(regular(l));
  EXPECT_TRUE(heyting(l));
}

TEST(LukasiewiczLattice, Connectives) {
  lukasiewicz_lattice l;
  EXPECT_NEAR(l.tnorm(0.7, 0.6), 0.3, kEps);
  EXPECT_NEAR(l.tnorm(0.3, 0.4), 0.0, kEps);
  EXPECT_NEAR(l.implication(0.7, 0.3), 0.6, kEps);
  EXPECT_NEAR(l.implication(0.3, 0.7), 1.0, kEps);
  EXPECT_NEAR(negation(l, 0.4), 0.6, kEps);
  EXPECT_TRUE(regular(l));
  EXPECT_FALSE(heyting(l));
  for (double a : kGrid) EXPECT_NEAR(negation(l, negation(l, a)), a, kEps);
}

TEST(ProductLattice, Connectives) {
  product_lattice l;
  EXPECT_NEAR(l.tnorm(0.5, 0.4), 0.2, kEps);
  EXPECT_NEAR(l.implication(0.8, 0.4), 0.5, kEps);
  EXPECT_NEAR(l.implication(0.3, 0.6), 1.0, kEps);
  EXPECT_NEAR(negation(l, 0.5), 0.0, kEps);
  EXPECT_FALSE(regular(l));
  EXPECT_FALSE(heyting(l));
}

template <class L>
void check_residuation_on_grid(const L& l) {
  for (double a : kGrid)
    for (double b : kGrid) {
      EXPECT_NEAR(l.tnorm(a, b), l.tnorm(b, a), kEps);
      EXPECT_NEAR(l.tnorm(a, 1.0), a, kEps);
      for (double c : kGrid) {
        bool left = l.leq(l.tnorm(a, b), c);
        bool right = l.leq(b, l.implication(a, c));
        EXPECT_EQ(left, right) << "a=" << a << " b=" << b << " c=" << c;
      }
    }
}

TEST(UnitIntervalLattices, AdjointProperty) {
  check_residuation_on_grid(godel_lattice{});
  check_residuation_on_grid(lukasiewicz_lattice{});
  check_residuation_on_grid(product_lattice{});
}

TEST(FiniteChain, Construction) {
  finite_lattice two = finite_lattice::chain(2);
  EXPECT_EQ(two.size(), 2);
  EXPECT_EQ(two.name_of(0), "0");
  EXPECT_EQ(two.name_of(1), "1");
  EXPECT_TRUE(two.is_regular());
  EXPECT_TRUE(two.is_heyting());

  finite_lattice three = finite_lattice::chain(3);
  EXPECT_EQ(three.size(), 3);
  EXPECT_EQ(three.names(), (std::vector<std::string>{"0", "a", "1"}));
  EXPECT_FALSE(three.is_regular());
  EXPECT_TRUE(three.is_heyting());
  int a = three.index_of("a");
  EXPECT_EQ(three.tnorm(a, a), a);
  EXPECT_EQ(three.implication(a, 0), 0);
  EXPECT_EQ(three.implication(0, a), three.top());
  EXPECT_EQ(negation(three, a), 0);
  EXPECT_EQ(negation(three, 0), three.top());

  finite_lattice four = finite_lattice::chain(4);
  EXPECT_EQ(four.names(), (std::vector<std::string>{"0", "a", "b", "1"}));
  EXPECT_TRUE(four.is_heyting());
}

TEST(FiniteChain, BadSizes) {
  expect_error([] { finite_lattice::chain(1); }, errc::domain, "bad_carrier");
  expect_error([] { finite_lattice::chain(65); }, errc::domain, "bad_carrier");
}

TEST(FiniteLattice, CarrierLookup) {
  finite_lattice three = finite_lattice::chain(3);
  EXPECT_EQ(three.index_of("1"), 2);
  expect_error([&] { three.index_of("z"); }, errc::domain, "foreign_value");
}

TEST(FiniteLattice, LukThreeTable) {
  finite_lattice l = luk3();
  EXPECT_TRUE(l.is_regular());
  EXPECT_FALSE(l.is_heyting());
  int a = l.index_of("a");
  EXPECT_EQ(l.tnorm(a, a), 0);
  EXPECT_EQ(negation(l, a), a);
  EXPECT_EQ(negation(l, negation(l, a)), a);
  // adjunction, exhaustively
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        EXPECT_EQ(l.leq(l.tnorm(x, y), z), l.leq(y, l.implication(x, z)));
}

TEST(FiniteLattice, Diamond) {
  finite_lattice l = diamond();
  EXPECT_TRUE(l.is_regular());
  EXPECT_TRUE(l.is_heyting());
  int p = l.index_of("p"), q = l.index_of("q");
  EXPECT_FALSE(l.leq(p, q));
  EXPECT_FALSE(l.leq(q, p));
  EXPECT_EQ(l.meet(p, q), l.bottom());
  EXPECT_EQ(l.join(p, q), l.top());
  EXPECT_EQ(negation(l, p), q);
  EXPECT_EQ(negation(l, q), p);
}

TEST(FiniteLattice, RejectsBrokenTables) {
  // non-associative tnorm on the three-chain: a*a=1 violates monotone/unit
  expect_error(
      [] {
        finite_lattice({"0", "a", "1"}, {{0, 0, 0}, {0, 2, 1}, {0, 1, 2}},
                       {{2, 2, 2}, {1, 2, 2}, {0, 1, 2}});
      },
      errc::domain, "table_not_residuated");
  // implication inconsistent with the tnorm (claims a->0 = 1)
  expect_error(
      [] {
        finite_lattice({"0", "a", "1"}, {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                       {{2, 2, 2}, {2, 2, 2}, {0, 1, 2}});
      },
      errc::domain, "table_not_residuated");
  // coherent three-chain tables, but the middle element is listed first:
  // the carrier must start at the least element
  expect_error(
      [] {
        finite_lattice({"a", "0", "1"}, {{0, 1, 0}, {1, 1, 1}, {0, 1, 2}},
                       {{2, 1, 2}, {2, 2, 2}, {0, 1, 2}});
      },
      errc::domain, "bad_carrier");
  // wrong row count
  expect_error(
      [] { finite_lattice({"0", "1"}, {{0, 0}}, {{1, 1}, {0, 1}}); },
      errc::domain, "bad_carrier");
  // duplicate carrier names
  expect_error(
      [] { finite_lattice({"0", "0"}, {{0, 0}, {0, 1}}, {{1, 1}, {0, 1}}); },
      errc::domain, "bad_carrier");
}

TEST(StructureEnumeration, ChainCounts) {
  EXPECT_EQ(chain_structures(2).size(), 1u);
  EXPECT_EQ(chain_structures(3).size(), 2u);
  EXPECT_EQ(chain_structures(4).size(), 6u);
  // the two three-element structures are the min tnorm and the Lukasiewicz one
  auto threes = chain_structures(3);
  int heyting_count = 0, regular_count = 0;
  for (const auto& l : threes) {
    if (l.is_heyting()) ++heyting_count;
    if (l.is_regular()) ++regular_count;
  }
  EXPECT_EQ(heyting_count, 1);
  EXPECT_EQ(regular_count, 1);
}

TEST(StructureEnumeration, DiamondTnormIsUnique) {
  // on the 2x2 diamond, join-distributivity forces t(p,p)=p, t(q,q)=q and
  // t(p,q)=0, i.e. tnorm = meet; count the survivors among all candidates
  std::vector<std::string> names{"0", "p", "q", "1"};
  int survivors = 0;
  for (int pp : {0, 1})
    for (int qq : {0, 2}) {
      std::vector<std::vector<int>> t{
          {0, 0, 0, 0}, {0, pp, 0, 1}, {0, 0, qq, 2}, {0, 1, 2, 3}};
      // derive residuum against the diamond order: c maximal with t(a,c)<=b
      auto leq = [](int x, int y) {
        if (x == y || x == 0 || y == 3) return true;
        return false;
      };
      std::vector<std::vector<int>> impl(4, std::vector<int>(4, 0));
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          int best = 0;
          for (int c = 0; c < 4; ++c)
            if (leq(t[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)], b) &&
                leq(best, c))
              best = c;
          impl[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = best;
        }
      try {
        finite_lattice cand(names, t, impl);
        ++survivors;
      } catch (const error&) {
      }
    }
  EXPECT_EQ(survivors, 1);
}

TEST(LatticeDescriptor, BuildAndDispatch) {
  lattice_descriptor d;
  d.kind = "godel";
  lattice g = build_lattice(d);
  EXPECT_EQ(lattice_kind(g), "godel");
  d.kind = "lukasiewicz";
  EXPECT_EQ(lattice_kind(build_lattice(d)), "lukasiewicz");
  d.kind = "product";
  EXPECT_EQ(lattice_kind(build_lattice(d)), "product");
  d.kind = "finite_chain";
  d.n = 3;
  lattice c = build_lattice(d);
  EXPECT_EQ(lattice_kind(c), "finite");
  EXPECT_EQ(std::get<finite_lattice>(c).size(), 3);

  lattice_descriptor t;
  t.kind = "table";
  t.carrier = {"0", "a", "1"};
  t.tnorm = {{"0", "0", "0"}, {"0", "0", "a"}, {"0", "a", "1"}};
  t.implication = {{"1", "1", "1"}, {"a", "1", "1"}, {"0", "a", "1"}};
  lattice lk = build_lattice(t);
  EXPECT_TRUE(std::get<finite_lattice>(lk).is_regular());

  lattice_descriptor bad;
  bad.kind = "boolean";
  expect_error([&] { build_lattice(bad); }, errc::parse, "bad_input");
}

}  // namespace
