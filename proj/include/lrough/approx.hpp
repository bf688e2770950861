// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// The three pairs of beta-covering-based rough approximation operators.
// Throughout, C ranges over the covering members, X is the target set,
// S_b / N_b are the beta-relative subsethood and overlap measures, and
// R(x, y) = /\_C (C(x) -> C(y)) is the covering's neighborhood relation.
//
//   pair 1:  lower1(X)(x) = \/_C [ C(x) (x) S_b(C, X) ]
//            upper1(X)(x) = /\_C [ C(x) ->  N_b(C, X) ]
//
//   pair 2:  lower2(X)(x) = /\_C [ C(x) ->  S_b(C, X) ]
//            upper2(X)(x) = \/_C [ C(x) (x) N_b(C, X) ]
//
//   pair 3:  lower3(X)(x) = S_b(R(-, x), X)
//            upper3(X)(x) = N_b(R(-, x), X)
//
// where R(-, x) is the column of R at x, i.e. the set y |-> R(y, x).
//
// Every operator is also computable through triangle products of
// lattice-valued matrices (M_C = points-by-members matrix, M_X = column of
// X, M_R = tri(M_C, transpose(M_C)), b = beta):
//
//   lower1 = btri(M_C, tri(b, tri(transpose(M_C), M_X)))
//   upper1 = tri (M_C, btri(btri(transpose(M_C), M_X), b))
//   lower2 = tri (M_C, tri(b, tri(transpose(M_C), M_X)))
//   upper2 = btri(M_C, btri(btri(transpose(M_C), M_X), b))
//   lower3 = tri(b, tri(transpose(M_R), M_X))
//   upper3 = btri(btri(transpose(M_R), M_X), b)
//
// `approximate` evaluates through either route, or through both with a
// consistency check (an internal error reports any disagreement).

#ifndef LROUGH_APPROX_HPP
#define LROUGH_APPROX_HPP

#include <string>
#include <vector>

#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/lattice.hpp"
#include "lrough/lmatrix.hpp"

namespace lrough {

enum class direction { lower, upper };

/// Which evaluation path to take; `both` runs the definitional and the
/// matrix route and verifies they agree.
enum class route { direct, matrix, both };

inline direction parse_direction(const std::string& s) {
  if (s == "lower") return direction::lower;
  if (s == "upper") return direction::upper;
  fail_parse("bad_input", "direction must be 'lower' or 'upper', got '" + s + "'");
}

inline route parse_route(const std::string& s) {
  if (s == "direct") return route::direct;
  if (s == "matrix") return route::matrix;
  if (s == "both") return route::both;
  fail_parse("bad_input", "route must be 'direct', 'matrix', or 'both', got '" + s + "'");
}

inline void require_pair(int pair) {
  if (pair < 1 || pair > 3)
    fail_parse("bad_input", "operator pair must be 1, 2, or 3, got " + std::to_string(pair));
}

namespace detail {
template <residuated_lattice L>
void require_context(const beta_covering<L>& c, const fuzzy_set<L>& x) {
  if (!(x.u == c.univ() || (x.u && *x.u == *c.univ())))
    fail_domain("universe_mismatch", "target set and covering live on different universes");
}

/// The column R(-, x) of a relation as a fuzzy set: y |-> R(y, x).
template <residuated_lattice L>
fuzzy_set<L> relation_column(const beta_covering<L>& c, int x) {
  const relation_table<L>& r = c.relation();
  std::vector<value_t<L>> col(static_cast<std::size_t>(r.n));
  for (int y = 0; y < r.n; ++y) col[static_cast<std::size_t>(y)] = r.at(y, x);
  return fuzzy_set<L>{c.univ(), std::move(col)};
}
}  // namespace detail

/// lower1(X)(x) = \/_C [ C(x) (x) S_b(C, X) ].
template <residuated_lattice L>
fuzzy_set<L> lower1(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x) {
  detail::require_context(c, x);
  fuzzy_set<L> out = empty_set(l, c.univ());
  for (int i = 0; i < c.size(); ++i) {
    fuzzy_set<L> ci = c.member_set(i);
    value_t<L> s = subsethood_beta(l, c.beta(), ci, x);
    for (int p = 0; p < out.size(); ++p)
      out.a[static_cast<std::size_t>(p)] =
          l.join(out.a[static_cast<std::size_t>(p)], l.tnorm(ci.a[static_cast<std::size_t>(p)], s));
  }
  return out;
}

/// upper1(X)(x) = /\_C [ C(x) -> N_b(C, X) ].
template <residuated_lattice L>
fuzzy_set<L> upper1(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x) {
  detail::require_context(c, x);
  fuzzy_set<L> out = full_set(l, c.univ());
  for (int i = 0; i < c.size(); ++i) {
    fuzzy_set<L> ci = c.member_set(i);
    value_t<L> nv = overlap_beta(l, c.beta(), ci, x);
    for (int p = 0; p < out.size(); ++p)
      out.a[static_cast<std::size_t>(p)] =
          l.meet(out.a[static_cast<std::size_t>(p)], l.implication(ci.a[static_cast<std::size_t>(p)], nv));
  }
  return out;
}

/// lower2(X)(x) = /\_C [ C(x) -> S_b(C, X) ].
template <residuated_lattice L>
fuzzy_set<L> lower2(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x) {
  detail::require_context(c, x);
  fuzzy_set<L> out = full_set(l, c.univ());
  for (int i = 0; i < c.size(); ++i) {
    fuzzy_set<L> ci = c.member_set(i);
    value_t<L> s = subsethood_beta(l, c.beta(), ci, x);
    for (int p = 0; p < out.size(); ++p)
      out.a[static_cast<std::size_t>(p)] =
          l.meet(out.a[static_cast<std::size_t>(p)], l.implication(ci.a[static_cast<std::size_t>(p)], s));
  }
  return out;
}

/// upper2(X)(x) = \/_C [ C(x) (x) N_b(C, X) ].
template <residuated_lattice L>
fuzzy_set<L> upper2(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x) {
  detail::require_context(c, x);
  fuzzy_set<L> out = empty_set(l, c.univ());
  for (int i = 0; i < c.size(); ++i) {
    fuzzy_set<L> ci = c.member_set(i);
    value_t<L> nv = overlap_beta(l, c.beta(), ci, x);
    for (int p = 0; p < out.size(); ++p)
      out.a[static_cast<std::size_t>(p)] =
          l.join(out.a[static_cast<std::size_t>(p)], l.tnorm(ci.a[static_cast<std::size_t>(p)], nv));
  }
  return out;
}

/// lower3(X)(x) = S_b(R(-, x), X).
template <residuated_lattice L>
fuzzy_set<L> lower3(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x) {
  detail::require_context(c, x);
  fuzzy_set<L> out = empty_set(l, c.univ());
  for (int p = 0; p < out.size(); ++p)
    out.a[static_cast<std::size_t>(p)] = subsethood_beta(l, c.beta(), detail::relation_column(c, p), x);
  return out;
}

/// upper3(X)(x) = N_b(R(-, x), X).
template <residuated_lattice L>
fuzzy_set<L> upper3(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x) {
  detail::require_context(c, x);
  fuzzy_set<L> out = empty_set(l, c.univ());
  for (int p = 0; p < out.size(); ++p)
    out.a[static_cast<std::size_t>(p)] = overlap_beta(l, c.beta(), detail::relation_column(c, p), x);
  return out;
}

/// Definitional route, by pair and direction.
template <residuated_lattice L>
fuzzy_set<L> approximate_direct(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x,
                                int pair, direction dir) {
  require_pair(pair);
  if (pair == 1) return dir == direction::lower ? lower1(l, c, x) : upper1(l, c, x);
  if (pair == 2) return dir == direction::lower ? lower2(l, c, x) : upper2(l, c, x);
  return dir == direction::lower ? lower3(l, c, x) : upper3(l, c, x);
}

/// Matrix route, by pair and direction (see the header comment for the
/// six formulas).
template <residuated_lattice L>
fuzzy_set<L> approximate_matrix(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x,
                                int pair, direction dir) {
  require_pair(pair);
  detail::require_context(c, x);
  const value_t<L> b = c.beta();
  lmatrix<L> mx = m_set(l, x);
  if (pair == 3) {
    lmatrix<L> mr = relation_matrix(l, c);
    lmatrix<L> mrt = transpose(mr);
    lmatrix<L> col = (dir == direction::lower) ? tri(l, b, tri(l, mrt, mx))
                                               : btri(l, btri(l, mrt, mx), b);
    return to_set(l, c.univ(), col);
  }
  lmatrix<L> mc = m_covering(l, c);
  lmatrix<L> mct = transpose(mc);
  lmatrix<L> col;
  if (dir == direction::lower) {
    lmatrix<L> inner = tri(l, b, tri(l, mct, mx));
    col = (pair == 1) ? btri(l, mc, inner) : tri(l, mc, inner);
  } else {
    lmatrix<L> inner = btri(l, btri(l, mct, mx), b);
    col = (pair == 1) ? tri(l, mc, inner) : btri(l, mc, inner);
  }
  return to_set(l, c.univ(), col);
}

/// Evaluate via the requested route.  With route::both, both routes run and
/// any disagreement (beyond the lattice's equality tolerance) raises an
/// internal error with code "route_mismatch".
template <residuated_lattice L>
fuzzy_set<L> approximate(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x,
                         int pair, direction dir, route via = route::direct) {
  if (via == route::direct) return approximate_direct(l, c, x, pair, dir);
  if (via == route::matrix) return approximate_matrix(l, c, x, pair, dir);
  fuzzy_set<L> d = approximate_direct(l, c, x, pair, dir);
  fuzzy_set<L> m = approximate_matrix(l, c, x, pair, dir);
  for (int p = 0; p < d.size(); ++p)
    if (!l.eq(d.a[static_cast<std::size_t>(p)], m.a[static_cast<std::size_t>(p)]))
      fail_internal("route_mismatch",
                    "definitional and matrix routes disagree at point '" + c.univ()->label(p) + "'");
  return d;
}

}  // namespace lrough

#endif  // LROUGH_APPROX_HPP
