// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Shared helpers for the test suite: typed error expectations, fixture
// loading, value comparison, and the small bespoke lattices used across
// files.

#ifndef LROUGH_TESTS_HELPERS_HPP
#define LROUGH_TESTS_HELPERS_HPP

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "lrough/error.hpp"
#include "lrough/io.hpp"
#include "lrough/lattice.hpp"

namespace lrough::testing {

/// Run `fn`, expecting a lrough::error with the given kind and code.
template <class F>
void expect_error(F&& fn, errc kind, const std::string& code) {
  try {
    fn();
    FAIL() << "expected error with code '" << code << "', but nothing was thrown";
  } catch (const error& e) {
    EXPECT_EQ(static_cast<int>(e.kind()), static_cast<int>(kind)) << e.what();
    EXPECT_EQ(e.code(), code) << e.what();
  } catch (const std::exception& e) {
    FAIL() << "expected lrough::error '" << code << "', got: " << e.what();
  }
}

inline std::string fixture_path(const std::string& name) {
  return std::string(LROUGH_FIXTURE_DIR) + "/" + name;
}

template <residuated_lattice L>
instance<L> load_typed_fixture(const L& l, const std::string& name) {
  return materialize(l, parse_instance_json(read_file(fixture_path(name))));
}

inline instance<godel_lattice> godel6() { return load_typed_fixture(godel_lattice{}, "godel6.json"); }
inline instance<lukasiewicz_lattice> luk5a() {
  return load_typed_fixture(lukasiewicz_lattice{}, "luk5a.json");
}
inline instance<lukasiewicz_lattice> luk5b() {
  return load_typed_fixture(lukasiewicz_lattice{}, "luk5b.json");
}

constexpr double kEps = 1e-9;

inline void expect_vec_near(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], kEps) << "at index " << i;
}

inline void expect_vec_eq(const std::vector<int>& got, const std::vector<int>& want) {
  EXPECT_EQ(got, want);
}

/// The three-element Lukasiewicz chain as an explicit table lattice:
/// regular but not Heyting.
inline finite_lattice luk3() {
  return finite_lattice({"0", "a", "1"},
                        {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}},
                        {{2, 2, 2}, {1, 2, 2}, {0, 1, 2}});
}

/// The four-element diamond 2x2 (0 < p,q < 1 with p,q incomparable) with
/// tnorm = meet: regular and Heyting.
inline finite_lattice diamond() {
  return finite_lattice({"0", "p", "q", "1"},
                        {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}},
                        {{3, 3, 3, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {0, 1, 2, 3}});
}

/// All residuated-lattice structures on the chain 0 < ... < n-1, found by
/// brute force: fix the zero row/column and the unit (top) row/column,
/// enumerate the remaining symmetric entries below the meet, derive the
/// residuum as max{c : a (*) c <= b}, and keep whatever the validating
/// constructor accepts.
inline std::vector<finite_lattice> chain_structures(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "0" : (i == n - 1 ? "1" : std::string(1, static_cast<char>('a' + i - 1))));
  std::vector<std::pair<int, int>> free;
  for (int i = 1; i <= n - 2; ++i)
    for (int j = i; j <= n - 2; ++j) free.emplace_back(i, j);
  std::vector<finite_lattice> out;
  std::vector<int> choice(free.size(), 0);
  while (true) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a) {
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(n - 1)] = a;
      t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(a)] = a;
      t[static_cast<std::size_t>(a)][0] = 0;
      t[0][static_cast<std::size_t>(a)] = 0;
    }
    for (std::size_t k = 0; k < free.size(); ++k) {
      auto [i, j] = free[k];
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = choice[k];
      t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = choice[k];
    }
    std::vector<std::vector<int>> impl(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int best = 0;
        for (int c = 0; c < n; ++c)
          if (t[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] <= b) best = c;
        impl[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = best;
      }
    try {
      out.emplace_back(names, t, impl);
    } catch (const error&) {
      // not residuated; skip
    }
    // advance the odometer: entry (i,j) ranges over 0..min(i,j) = 0..i
    std::size_t k = 0;
    for (; k < free.size(); ++k) {
      if (choice[k] < free[k].first) {
        ++choice[k];
        break;
      }
      choice[k] = 0;
    }
    if (k == free.size()) break;
  }
  return out;
}

}  // namespace lrough::testing

#endif  // LROUGH_TESTS_HELPERS_HPP
