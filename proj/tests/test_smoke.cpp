// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Compile-and-link smoke test: pulls in every public header and runs one
// end-to-end computation.

#include <gtest/gtest.h>

#include <sstream>

#include "lrough/approx.hpp"
#include "lrough/axioms.hpp"
#include "lrough/cli.hpp"
#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/io.hpp"
#include "lrough/lattice.hpp"
#include "lrough/lmatrix.hpp"
#include "lrough/reduction.hpp"

namespace {

using namespace lrough;

TEST(Smoke, EndToEnd) {
  godel_lattice l;
  universe_ptr u = default_universe(3);
  beta_covering<godel_lattice> c(l, u, {"C1", "C2"},
                                 {{1.0, 0.4, 0.2}, {0.3, 0.8, 1.0}}, 0.8);
  fuzzy_set<godel_lattice> x = make_set(l, u, {0.5, 0.5, 0.5});
  for (int pair = 1; pair <= 3; ++pair) {
    fuzzy_set<godel_lattice> lo = approximate(l, c, x, pair, direction::lower, route::both);
    fuzzy_set<godel_lattice> up = approximate(l, c, x, pair, direction::upper, route::both);
    EXPECT_EQ(lo.size(), 3);
    EXPECT_EQ(up.size(), 3);
  }
  EXPECT_TRUE(is_reducible(l, c, 0) == std::nullopt);
}

TEST(Smoke, CliHelp) {
  std::ostringstream out, err;
  int rc = run({"--help"}, out, err);
  EXPECT_EQ(rc, 0);
  EXPECT_NE(out.str().find("approx"), std::string::npos);
}

}  // namespace
