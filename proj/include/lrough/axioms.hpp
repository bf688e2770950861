// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Finite-scale verification toolkit: operator tables over small finite
// lattices, the eighteen lower/upper axioms with witness-producing checks,
// operator classification, covering reconstruction from an operator, the
// four Galois maps induced by a lattice-valued relation, and the duality
// identities connecting each operator pair.
//
// Everything here that enumerates L^U is capped at |U| <= 3 and |L| <= 4
// (table size |L|^|U| <= 64): exhaustive semantics is the point, and these
// sizes keep every sweep instantaneous.

#ifndef LROUGH_AXIOMS_HPP
#define LROUGH_AXIOMS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lrough/approx.hpp"
#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/lattice.hpp"
#include "lrough/lmatrix.hpp"

namespace lrough {

// ---------------------------------------------------------------------------
// Enumeration of L^U for finite lattices
//
// Sets are numbered like |L|-ary numerals with the FIRST universe point as
// the most significant digit and carrier values ascending: index 0 is the
// constant-bottom set, the last index the constant-top set.
// ---------------------------------------------------------------------------

inline long power_count(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

template <finite_residuated_lattice L>
long set_count(const L& l, int n) {
  return power_count(l.size(), n);
}

template <finite_residuated_lattice L>
std::vector<int> set_at(const L& l, int n, long idx) {
  std::vector<int> x(static_cast<std::size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    x[static_cast<std::size_t>(p)] = static_cast<int>(idx % l.size());
    idx /= l.size();
  }
  return x;
}

template <finite_residuated_lattice L>
long set_index(const L& l, const std::vector<int>& x) {
  long idx = 0;
  for (int v : x) idx = idx * l.size() + v;
  return idx;
}

// ---------------------------------------------------------------------------
// Operator tables
// ---------------------------------------------------------------------------

/// A total map L^U -> L^U over a finite lattice, stored extensionally.
template <finite_residuated_lattice L>
class operator_table {
 public:
  static constexpr int max_points = 3;
  static constexpr int max_carrier = 4;

  /// Tabulate `fn` over every set in L^U.  `fn` maps value vectors to value
  /// vectors.  Raises "size_cap" beyond |U| <= 3 / |L| <= 4 and
  /// "dimension_mismatch" if `fn` returns the wrong length.
  template <class F>
  operator_table(const L& l, universe_ptr u, F&& fn) : lat_(l), u_(std::move(u)) {
    if (!u_) fail_internal("bad_input", "null universe");
    n_ = u_->size();
    if (n_ > max_points)
      fail_domain("size_cap", "operator tables require a universe of at most " +
                                  std::to_string(max_points) + " points, got " + std::to_string(n_));
    if (lat_.size() > max_carrier)
      fail_domain("size_cap", "operator tables require a carrier of at most " +
                                  std::to_string(max_carrier) + " elements, got " +
                                  std::to_string(lat_.size()));
    const long total = set_count(lat_, n_);
    out_.reserve(static_cast<std::size_t>(total));
    for (long i = 0; i < total; ++i) {
      std::vector<int> y = fn(set_at(lat_, n_, i));
      if (static_cast<int>(y.size()) != n_)
        fail_internal("dimension_mismatch", "operator produced a set of the wrong size");
      for (int v : y) require_in_carrier(lat_, v);
      out_.push_back(std::move(y));
    }
  }

  const L& lat() const { return lat_; }
  const universe_ptr& univ() const { return u_; }
  int points() const { return n_; }
  long count() const { return static_cast<long>(out_.size()); }

  const std::vector<int>& at(long idx) const { return out_.at(static_cast<std::size_t>(idx)); }

  const std::vector<int>& apply(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != n_)
      fail_parse("dimension_mismatch", "input set size does not match the universe");
    return at(set_index(lat_, x));
  }

 private:
  L lat_;
  universe_ptr u_;
  int n_ = 0;
  std::vector<std::vector<int>> out_;
};

/// Tabulate one of the six covering-based operators.
template <finite_residuated_lattice L>
operator_table<L> table_from_covering(const L& l, const beta_covering<L>& c, int pair,
                                      direction dir) {
  require_pair(pair);
  return operator_table<L>(l, c.univ(), [&](const std::vector<int>& x) {
    fuzzy_set<L> fx{c.univ(), x};
    return approximate_direct(l, c, fx, pair, dir).a;
  });
}

// ---------------------------------------------------------------------------
// Verdicts and witnesses
// ---------------------------------------------------------------------------

/// A universe point inside a witness (kept distinct from scalar values).
struct point_ref {
  int p = 0;
};

template <residuated_lattice L>
using witness_part = std::variant<value_t<L>, std::vector<value_t<L>>, point_ref, std::string>;

/// Named bindings that violate a law, e.g. {"alpha": a, "X": (0,a)}.
template <residuated_lattice L>
struct axiom_witness {
  std::vector<std::pair<std::string, witness_part<L>>> parts;

  void add(std::string name, witness_part<L> v) { parts.emplace_back(std::move(name), std::move(v)); }
};

template <residuated_lattice L>
struct axiom_verdict {
  std::string axiom;
  bool holds = true;
  std::optional<axiom_witness<L>> witness;
};

/// The eighteen axiom identifiers, lower block then upper block.
inline const std::vector<std::string>& axiom_ids() {
  static const std::vector<std::string> ids = {
      "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9",
      "U1", "U2", "U3", "U4", "U5", "U6", "U7", "U8", "U9"};
  return ids;
}

/// Axiom set characterizing each operator (the theorem for that pair and
/// direction).
inline std::vector<std::string> required_axioms(int pair, direction dir) {
  require_pair(pair);
  if (pair == 1)
    return dir == direction::lower ? std::vector<std::string>{"L1", "L2", "L3", "L4", "L5"}
                                   : std::vector<std::string>{"U1", "U2", "U3", "U4", "U5"};
  if (pair == 2)
    return dir == direction::lower ? std::vector<std::string>{"L3", "L6", "L7", "L8"}
                                   : std::vector<std::string>{"U3", "U6", "U7", "U8"};
  return dir == direction::lower ? std::vector<std::string>{"L3", "L6", "L7", "L9"}
                                 : std::vector<std::string>{"U3", "U6", "U7", "U9"};
}

/// Structural preconditions each characterization theorem places on the
/// lattice.
struct lattice_requirement {
  bool needs_regular = false;
  bool needs_heyting = false;
};

inline lattice_requirement required_lattice(int pair, direction dir) {
  require_pair(pair);
  if (pair == 1) return {dir == direction::upper, false};
  if (pair == 2) return {dir == direction::lower, true};
  return {dir == direction::lower, true};
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

namespace detail {

template <finite_residuated_lattice L>
bool vec_leq(const L& l, const std::vector<int>& x, const std::vector<int>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!l.leq(x[i], y[i])) return false;
  return true;
}

template <finite_residuated_lattice L>
std::vector<int> vec_scalar_tnorm(const L& l, int a, const std::vector<int>& x) {
  std::vector<int> y = x;
  for (int& v : y) v = l.tnorm(a, v);
  return y;
}

template <finite_residuated_lattice L>
std::vector<int> vec_scalar_impl(const L& l, int a, const std::vector<int>& x) {
  std::vector<int> y = x;
  for (int& v : y) v = l.implication(a, v);
  return y;
}

template <finite_residuated_lattice L>
std::vector<int> vec_meet(const L& l, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = l.meet(z[i], y[i]);
  return z;
}

template <finite_residuated_lattice L>
std::vector<int> vec_join(const L& l, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = l.join(z[i], y[i]);
  return z;
}

template <finite_residuated_lattice L>
std::vector<int> singleton_set(const L& l, int n, int x) {
  std::vector<int> s(static_cast<std::size_t>(n), l.bottom());
  s[static_cast<std::size_t>(x)] = l.top();
  return s;
}

template <finite_residuated_lattice L>
std::vector<int> co_singleton_set(const L& l, int n, int x) {
  std::vector<int> s(static_cast<std::size_t>(n), l.top());
  s[static_cast<std::size_t>(x)] = l.bottom();
  return s;
}

template <finite_residuated_lattice L>
axiom_verdict<L> fail_with(std::string axiom, axiom_witness<L> w) {
  return axiom_verdict<L>{std::move(axiom), false, std::move(w)};
}

}  // namespace detail

/// Check one axiom of `g` at threshold `beta`, producing the first witness
/// in enumeration order on failure.  The strict readings of U3 and L3 that
/// surface in the pair-3 theorem statements are available as "U3_strict"
/// ("g(A) >= beta (x) A with equality nowhere attained") and "L3_strict";
/// they are informational and not part of any required set.
template <finite_residuated_lattice L>
axiom_verdict<L> check_axiom(const L& l, const operator_table<L>& g, int beta,
                             const std::string& axiom) {
  using detail::co_singleton_set;
  using detail::singleton_set;
  using detail::vec_join;
  using detail::vec_leq;
  using detail::vec_meet;
  using detail::vec_scalar_impl;
  using detail::vec_scalar_tnorm;

  const int n = g.points();
  const long total = g.count();
  require_in_carrier(l, beta);

  auto witness_set = [&](const char* name, const std::vector<int>& x) {
    axiom_witness<L> w;
    w.add(name, x);
    return w;
  };

  if (axiom == "L1") {
    // g(1_U) >= beta
    std::vector<int> top(static_cast<std::size_t>(n), l.top());
    const auto& y = g.apply(top);
    for (int p = 0; p < n; ++p)
      if (!l.leq(beta, y[static_cast<std::size_t>(p)])) {
        axiom_witness<L> w;
        w.add("x", point_ref{p});
        return detail::fail_with<L>(axiom, std::move(w));
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L2" || axiom == "U2") {
    // A <= B  implies  g(A) <= g(B)
    for (long i = 0; i < total; ++i)
      for (long j = 0; j < total; ++j) {
        std::vector<int> a = set_at(l, n, i), b = set_at(l, n, j);
        if (vec_leq(l, a, b) && !vec_leq(l, g.at(i), g.at(j))) {
          axiom_witness<L> w;
          w.add("A", a);
          w.add("B", b);
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L3" || axiom == "L3_strict") {
    // g(X) <= beta -> X   (strict: additionally g(X) != beta -> X)
    for (long i = 0; i < total; ++i) {
      std::vector<int> x = set_at(l, n, i);
      std::vector<int> bound = vec_scalar_impl(l, beta, x);
      bool le = vec_leq(l, g.at(i), bound);
      bool strict_ok = le && g.at(i) != bound;
      if ((axiom == "L3" && !le) || (axiom == "L3_strict" && !strict_ok))
        return detail::fail_with<L>(axiom, witness_set("X", x));
    }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L4") {
    // g(X) <= g(beta (x) g(X))
    for (long i = 0; i < total; ++i) {
      std::vector<int> x = set_at(l, n, i);
      const auto& gx = g.at(i);
      if (!vec_leq(l, gx, g.apply(vec_scalar_tnorm(l, beta, gx))))
        return detail::fail_with<L>(axiom, witness_set("X", x));
    }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L5") {
    // alpha (x) g(X) <= g(alpha (x) X)
    for (int a = 0; a < l.size(); ++a)
      for (long i = 0; i < total; ++i) {
        std::vector<int> x = set_at(l, n, i);
        if (!vec_leq(l, vec_scalar_tnorm(l, a, g.at(i)), g.apply(vec_scalar_tnorm(l, a, x)))) {
          axiom_witness<L> w;
          w.add("alpha", a);
          w.add("X", x);
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L6") {
    // alpha -> g(X) = g(alpha -> X)
    for (int a = 0; a < l.size(); ++a)
      for (long i = 0; i < total; ++i) {
        std::vector<int> x = set_at(l, n, i);
        if (vec_scalar_impl(l, a, g.at(i)) != g.apply(vec_scalar_impl(l, a, x))) {
          axiom_witness<L> w;
          w.add("alpha", a);
          w.add("X", x);
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L7" || axiom == "U7") {
    // g preserves meets (L7) / joins (U7); families of size 0, 1, 2.
    const bool meets = (axiom == "L7");
    std::vector<int> unit(static_cast<std::size_t>(n), meets ? l.top() : l.bottom());
    if (g.apply(unit) != unit) {
      axiom_witness<L> w;
      w.add("family", std::string("empty"));
      return detail::fail_with<L>(axiom, std::move(w));
    }
    // singleton families hold definitionally: g(fold{X}) = g(X).
    for (long i = 0; i < total; ++i)
      for (long j = 0; j < total; ++j) {
        std::vector<int> x = set_at(l, n, i), y = set_at(l, n, j);
        std::vector<int> fold = meets ? vec_meet(l, x, y) : vec_join(l, x, y);
        std::vector<int> lhs = g.apply(fold);
        std::vector<int> rhs = meets ? vec_meet(l, g.at(i), g.at(j)) : vec_join(l, g.at(i), g.at(j));
        if (lhs != rhs) {
          axiom_witness<L> w;
          w.add("X", x);
          w.add("Y", y);
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L8") {
    // g(1_{U-{x}})(y) = g(1_{U-{y}})(x) >= neg(beta)
    const int nb = negation(l, beta);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int vxy = g.apply(co_singleton_set(l, n, x))[static_cast<std::size_t>(y)];
        int vyx = g.apply(co_singleton_set(l, n, y))[static_cast<std::size_t>(x)];
        if (vxy != vyx || !l.leq(nb, vxy)) {
          axiom_witness<L> w;
          w.add("x", point_ref{x});
          w.add("y", point_ref{y});
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "L9") {
    // g(g(X)) >= beta -> g(X)
    for (long i = 0; i < total; ++i) {
      std::vector<int> x = set_at(l, n, i);
      if (!vec_leq(l, vec_scalar_impl(l, beta, g.at(i)), g.apply(g.at(i))))
        return detail::fail_with<L>(axiom, witness_set("X", x));
    }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "U1") {
    // g(0_U) = 0_U
    std::vector<int> bot(static_cast<std::size_t>(n), l.bottom());
    if (g.apply(bot) != bot) return detail::fail_with<L>(axiom, witness_set("X", bot));
    return {axiom, true, std::nullopt};
  }
  if (axiom == "U3" || axiom == "U3_strict") {
    // g(A) >= beta (x) A   (strict: additionally g(A) != beta (x) A)
    for (long i = 0; i < total; ++i) {
      std::vector<int> a = set_at(l, n, i);
      std::vector<int> bound = vec_scalar_tnorm(l, beta, a);
      bool ge = vec_leq(l, bound, g.at(i));
      bool strict_ok = ge && g.at(i) != bound;
      if ((axiom == "U3" && !ge) || (axiom == "U3_strict" && !strict_ok))
        return detail::fail_with<L>(axiom, witness_set("A", a));
    }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "U4") {
    // g(beta -> g(A)) <= g(A)
    for (long i = 0; i < total; ++i) {
      std::vector<int> a = set_at(l, n, i);
      if (!vec_leq(l, g.apply(vec_scalar_impl(l, beta, g.at(i))), g.at(i)))
        return detail::fail_with<L>(axiom, witness_set("A", a));
    }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "U5") {
    // g(alpha -> A) <= alpha -> g(A)
    for (int a = 0; a < l.size(); ++a)
      for (long i = 0; i < total; ++i) {
        std::vector<int> x = set_at(l, n, i);
        if (!vec_leq(l, g.apply(vec_scalar_impl(l, a, x)), vec_scalar_impl(l, a, g.at(i)))) {
          axiom_witness<L> w;
          w.add("alpha", a);
          w.add("A", x);
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "U6") {
    // alpha (x) g(X) = g(alpha (x) X)
    for (int a = 0; a < l.size(); ++a)
      for (long i = 0; i < total; ++i) {
        std::vector<int> x = set_at(l, n, i);
        if (vec_scalar_tnorm(l, a, g.at(i)) != g.apply(vec_scalar_tnorm(l, a, x))) {
          axiom_witness<L> w;
          w.add("alpha", a);
          w.add("X", x);
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "U8") {
    // g(1_{x})(y) = g(1_{y})(x) <= beta
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int vxy = g.apply(singleton_set(l, n, x))[static_cast<std::size_t>(y)];
        int vyx = g.apply(singleton_set(l, n, y))[static_cast<std::size_t>(x)];
        if (vxy != vyx || !l.leq(vxy, beta)) {
          axiom_witness<L> w;
          w.add("x", point_ref{x});
          w.add("y", point_ref{y});
          return detail::fail_with<L>(axiom, std::move(w));
        }
      }
    return {axiom, true, std::nullopt};
  }
  if (axiom == "U9") {
    // g(g(X)) <= beta (x) g(X)
    for (long i = 0; i < total; ++i) {
      std::vector<int> x = set_at(l, n, i);
      if (!vec_leq(l, g.apply(g.at(i)), vec_scalar_tnorm(l, beta, g.at(i))))
        return detail::fail_with<L>(axiom, witness_set("X", x));
    }
    return {axiom, true, std::nullopt};
  }
  fail_parse("unknown_axiom", "unknown axiom id '" + axiom + "'");
}

/// Run every axiom (plus the two informational strict readings) and return
/// the verdicts in a fixed order.
template <finite_residuated_lattice L>
std::vector<axiom_verdict<L>> classify_operator(const L& l, const operator_table<L>& g, int beta) {
  std::vector<axiom_verdict<L>> out;
  for (const auto& id : axiom_ids()) out.push_back(check_axiom(l, g, beta, id));
  out.push_back(check_axiom(l, g, beta, "L3_strict"));
  out.push_back(check_axiom(l, g, beta, "U3_strict"));
  return out;
}

/// Ids of the axioms that hold, in the classify_operator order.
template <finite_residuated_lattice L>
std::vector<std::string> holding_ids(const std::vector<axiom_verdict<L>>& verdicts) {
  std::vector<std::string> out;
  for (const auto& v : verdicts)
    if (v.holds) out.push_back(v.axiom);
  return out;
}

// ---------------------------------------------------------------------------
// Covering reconstruction (the <== halves of the characterization theorems)
// ---------------------------------------------------------------------------

/// Rebuild a covering from an operator table per the theorem for the given
/// pair and direction:
///
///   pair 1, lower:  { X : beta (x) g(X) = X }
///   pair 1, upper:  { A : A = neg(g(neg A)) }            (regular lattices)
///   pair 2, upper:  { C_xy : C_xy(z) = g(1_x)(y) on z in {x,y}, else 0 }
///   pair 2, lower:  as pair-2 upper with value neg(g(1_{U-{x}})(y))
///   pair 3, upper:  { g(1_x) : x in U }
///   pair 3, lower:  { neg(g(1_{U-{x}})) : x in U }
///
/// The lattice preconditions (regular / Heyting, per theorem) are checked
/// first ("lattice_precondition_unmet"), then the theorem's axiom set
/// ("axioms_not_satisfied" listing the failures).  The returned family is
/// validated as a beta-covering.
template <finite_residuated_lattice L>
beta_covering<L> reconstruct_covering(const L& l, const operator_table<L>& g, int beta, int pair,
                                      direction dir) {
  require_pair(pair);
  lattice_requirement need = required_lattice(pair, dir);
  if (need.needs_regular && !regular(l))
    fail_domain("lattice_precondition_unmet",
                "this reconstruction requires a regular lattice (double negation involutive)");
  if (need.needs_heyting && !heyting(l))
    fail_domain("lattice_precondition_unmet",
                "this reconstruction requires a Heyting lattice (tnorm = meet)");

  std::string failing;
  for (const auto& id : required_axioms(pair, dir))
    if (!check_axiom(l, g, beta, id).holds) failing += (failing.empty() ? "" : ", ") + id;
  if (!failing.empty())
    fail_domain("axioms_not_satisfied", "operator violates required axioms: " + failing);

  const int n = g.points();
  std::vector<std::string> names;
  std::vector<std::vector<int>> members;
  auto neg_vec = [&](std::vector<int> v) {
    for (int& x : v) x = negation(l, x);
    return v;
  };

  if (pair == 1) {
    for (long i = 0; i < g.count(); ++i) {
      std::vector<int> x = set_at(l, n, i);
      bool fixed = (dir == direction::lower)
                       ? detail::vec_scalar_tnorm(l, beta, g.at(i)) == x
                       : neg_vec(g.apply(neg_vec(x))) == x;
      if (fixed) {
        names.push_back("A" + std::to_string(names.size() + 1));
        members.push_back(std::move(x));
      }
    }
  } else if (pair == 2) {
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        int v = (dir == direction::upper)
                    ? g.apply(detail::singleton_set(l, n, x))[static_cast<std::size_t>(y)]
                    : negation(l, g.apply(detail::co_singleton_set(l, n, x))[static_cast<std::size_t>(y)]);
        std::vector<int> member(static_cast<std::size_t>(n), l.bottom());
        member[static_cast<std::size_t>(x)] = v;
        member[static_cast<std::size_t>(y)] = v;
        names.push_back("C(" + g.univ()->label(x) + "," + g.univ()->label(y) + ")");
        members.push_back(std::move(member));
      }
  } else {
    for (int x = 0; x < n; ++x) {
      std::vector<int> member = (dir == direction::upper)
                                    ? g.apply(detail::singleton_set(l, n, x))
                                    : neg_vec(g.apply(detail::co_singleton_set(l, n, x)));
      names.push_back("N(" + g.univ()->label(x) + ")");
      members.push_back(std::move(member));
    }
  }
  return beta_covering<L>(l, g.univ(), std::move(names), std::move(members), beta);
}

// ---------------------------------------------------------------------------
// Galois maps induced by a lattice-valued relation
// ---------------------------------------------------------------------------

/// The four maps induced by an |X| x |Y| relation R and a threshold beta,
/// acting on raw value vectors:
///
///   up_n(A)(y)   = N_b(A, R(-, y))      L^X -> L^Y
///   down_s(B)(x) = S_b(R(x, -), B)      L^Y -> L^X
///   up_s(A)(y)   = S_b(R(-, y), A)      L^X -> L^Y
///   down_n(B)(x) = N_b(B, R(x, -))      L^Y -> L^X
///
/// (up_n, down_s) and (down_n, up_s) each form an isotone Galois
/// connection: S(A, down_s B) = S(up_n A, B) and S(down_n B, A) = S(B, up_s A).
template <residuated_lattice L>
class galois_maps {
 public:
  galois_maps(const L& l, lmatrix<L> r, value_t<L> beta) : l_(l), r_(std::move(r)), beta_(beta) {
    require_in_carrier(l_, beta_);
    if (l_.leq(beta_, l_.bottom()))
      fail_domain("beta_out_of_range", "beta must be strictly above the lattice bottom");
  }

  int rows() const { return r_.rows(); }
  int cols() const { return r_.cols(); }

  std::vector<value_t<L>> up_n(const std::vector<value_t<L>>& a) const {
    require_len(a, r_.rows());
    std::vector<value_t<L>> out(static_cast<std::size_t>(r_.cols()));
    for (int y = 0; y < r_.cols(); ++y) {
      value_t<L> acc = l_.bottom();
      for (int x = 0; x < r_.rows(); ++x)
        acc = l_.join(acc, l_.tnorm(a[static_cast<std::size_t>(x)], r_.at(x, y)));
      out[static_cast<std::size_t>(y)] = l_.tnorm(acc, beta_);
    }
    return out;
  }

  std::vector<value_t<L>> down_s(const std::vector<value_t<L>>& b) const {
    require_len(b, r_.cols());
    std::vector<value_t<L>> out(static_cast<std::size_t>(r_.rows()));
    for (int x = 0; x < r_.rows(); ++x) {
      value_t<L> acc = l_.top();
      for (int y = 0; y < r_.cols(); ++y)
        acc = l_.meet(acc, l_.implication(r_.at(x, y), b[static_cast<std::size_t>(y)]));
      out[static_cast<std::size_t>(x)] = l_.implication(beta_, acc);
    }
    return out;
  }

  std::vector<value_t<L>> up_s(const std::vector<value_t<L>>& a) const {
    require_len(a, r_.rows());
    std::vector<value_t<L>> out(static_cast<std::size_t>(r_.cols()));
    for (int y = 0; y < r_.cols(); ++y) {
      value_t<L> acc = l_.top();
      for (int x = 0; x < r_.rows(); ++x)
        acc = l_.meet(acc, l_.implication(r_.at(x, y), a[static_cast<std::size_t>(x)]));
      out[static_cast<std::size_t>(y)] = l_.implication(beta_, acc);
    }
    return out;
  }

  std::vector<value_t<L>> down_n(const std::vector<value_t<L>>& b) const {
    require_len(b, r_.cols());
    std::vector<value_t<L>> out(static_cast<std::size_t>(r_.rows()));
    for (int x = 0; x < r_.rows(); ++x) {
      value_t<L> acc = l_.bottom();
      for (int y = 0; y < r_.cols(); ++y)
        acc = l_.join(acc, l_.tnorm(b[static_cast<std::size_t>(y)], r_.at(x, y)));
      out[static_cast<std::size_t>(x)] = l_.tnorm(acc, beta_);
    }
    return out;
  }

 private:
  void require_len(const std::vector<value_t<L>>& v, int len) const {
    if (static_cast<int>(v.size()) != len)
      fail_parse("dimension_mismatch", "vector length does not match the relation");
  }

  L l_;
  lmatrix<L> r_;
  value_t<L> beta_;
};

namespace detail {
template <residuated_lattice L>
value_t<L> vec_subsethood(const L& l, const std::vector<value_t<L>>& x,
                          const std::vector<value_t<L>>& y) {
  value_t<L> acc = l.top();
  for (std::size_t i = 0; i < x.size(); ++i) acc = l.meet(acc, l.implication(x[i], y[i]));
  return acc;
}
}  // namespace detail

/// Exhaustively verify both Galois identities for a finite-lattice relation
/// (caps |L|^rows and |L|^cols at 64 entries each, code "size_cap").
template <finite_residuated_lattice L>
axiom_verdict<L> check_galois(const L& l, const lmatrix<L>& r, int beta) {
  if (r.rows() > operator_table<L>::max_points || r.cols() > operator_table<L>::max_points ||
      l.size() > operator_table<L>::max_carrier)
    fail_domain("size_cap", "exhaustive Galois verification caps at 3x3 relations over carriers of 4");
  galois_maps<L> maps(l, r, beta);
  const long ca = set_count(l, r.rows());
  const long cb = set_count(l, r.cols());
  for (long i = 0; i < ca; ++i) {
    std::vector<int> a = set_at(l, r.rows(), i);
    std::vector<int> ua = maps.up_n(a);
    std::vector<int> sa = maps.up_s(a);
    for (long j = 0; j < cb; ++j) {
      std::vector<int> b = set_at(l, r.cols(), j);
      bool first = l.eq(detail::vec_subsethood(l, a, maps.down_s(b)), detail::vec_subsethood(l, ua, b));
      bool second = l.eq(detail::vec_subsethood(l, maps.down_n(b), a), detail::vec_subsethood(l, b, sa));
      if (!first || !second) {
        axiom_witness<L> w;
        w.add("A", a);
        w.add("B", b);
        w.add("identity", std::string(first ? "second" : "first"));
        return axiom_verdict<L>{"galois", false, std::move(w)};
      }
    }
  }
  return axiom_verdict<L>{"galois", true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Duality identities
// ---------------------------------------------------------------------------

namespace detail {
/// Thresholds b to fold over: the whole carrier for finite lattices; for
/// unit-interval lattices the grid {0, 0.05, ..., 1} plus every value
/// appearing in the inputs (target, members, beta).
template <residuated_lattice L>
std::vector<value_t<L>> duality_thresholds(const L& l, const beta_covering<L>& c,
                                           const fuzzy_set<L>& x) {
  if constexpr (std::is_same_v<value_t<L>, double>) {
    std::vector<double> g;
    for (int k = 0; k <= 20; ++k) g.push_back(0.05 * k);
    g.insert(g.end(), x.a.begin(), x.a.end());
    for (const auto& m : c.members()) g.insert(g.end(), m.begin(), m.end());
    g.push_back(c.beta());
    return g;
  } else {
    std::vector<int> g;
    for (int v = 0; v < l.size(); ++v) g.push_back(v);
    (void)c;
    (void)x;
    return g;
  }
}
}  // namespace detail

/// Verify the duality identity for one pair on one target:
///
///   pair 1:  upper1(X) = /\_b ( lower1(X -> b) -> b )
///   pair 2:  lower2(X) = /\_b ( upper2(X -> b) -> b )
///   pair 3:  lower3(X) = /\_b ( upper3(X -> b) -> b )
///
/// b ranges over the whole carrier (finite) or the deterministic grid
/// described at duality_thresholds.  The witness names the first universe
/// point where the two sides differ.
template <residuated_lattice L>
axiom_verdict<L> check_duality(const L& l, const beta_covering<L>& c, const fuzzy_set<L>& x,
                               int pair) {
  require_pair(pair);
  // base operator evaluated on X -> b; derived = the operator the identity
  // reconstructs.
  direction base_dir = (pair == 1) ? direction::lower : direction::upper;
  direction derived_dir = (pair == 1) ? direction::upper : direction::lower;
  fuzzy_set<L> derived = approximate_direct(l, c, x, pair, derived_dir);

  fuzzy_set<L> acc = full_set(l, c.univ());
  for (value_t<L> b : detail::duality_thresholds(l, c, x)) {
    fuzzy_set<L> v = approximate_direct(l, c, implication_scalar(l, x, b), pair, base_dir);
    for (int p = 0; p < acc.size(); ++p)
      acc.a[static_cast<std::size_t>(p)] =
          l.meet(acc.a[static_cast<std::size_t>(p)],
                 l.implication(v.a[static_cast<std::size_t>(p)], b));
  }

  for (int p = 0; p < acc.size(); ++p)
    if (!l.eq(acc.a[static_cast<std::size_t>(p)], derived.a[static_cast<std::size_t>(p)])) {
      axiom_witness<L> w;
      w.add("x", point_ref{p});
      w.add("expected", derived.a[static_cast<std::size_t>(p)]);
      w.add("folded", acc.a[static_cast<std::size_t>(p)]);
      return axiom_verdict<L>{"duality", false, std::move(w)};
    }
  return axiom_verdict<L>{"duality", true, std::nullopt};
}

// ---------------------------------------------------------------------------
// The counterexample catalogue
// ---------------------------------------------------------------------------

/// One catalogued operator: a finite lattice, a universe, a threshold, and
/// the operator table.  Each is built to pass a specific axiom subset while
/// violating exactly one axiom, witnessing the independence of the axiom
/// sets.
struct counterexample_case {
  std::string id;
  finite_lattice lat;
  universe_ptr u;
  int beta;
  operator_table<finite_lattice> table;
};

/// Known ids: e4-1-1, e4-1-2, e4-2, e4-3-1, e4-3-2, e4-4-1, e4-4-2, e4-5,
/// e4-6, e4-7.  Unknown ids raise "unknown_counterexample".
inline counterexample_case counterexample(const std::string& id) {
  const finite_lattice two = finite_lattice::chain(2);
  const finite_lattice three = finite_lattice::chain(3);

  auto mk = [&](const finite_lattice& l, std::vector<std::string> labels,
                std::function<std::vector<int>(const finite_lattice&, const std::vector<int>&)> fn) {
    universe_ptr u = make_universe(std::move(labels));
    operator_table<finite_lattice> t(l, u, [&](const std::vector<int>& x) { return fn(l, x); });
    return counterexample_case{id, l, u, l.top(), std::move(t)};
  };
  auto is_const = [](const std::vector<int>& x, int v) {
    for (int e : x)
      if (e != v) return false;
    return true;
  };

  if (id == "e4-1-1")  // constant bottom: L2-L5 hold, L1 fails
    return mk(two, {"x", "y"}, [](const finite_lattice& l, const std::vector<int>& x) {
      return std::vector<int>(x.size(), l.bottom());
    });
  if (id == "e4-1-2")  // bottom at 0_U, top elsewhere: L1,L2,L4,L5 hold, L3 fails
    return mk(two, {"x", "y"}, [&](const finite_lattice& l, const std::vector<int>& x) {
      return std::vector<int>(x.size(), is_const(x, l.bottom()) ? l.bottom() : l.top());
    });
  if (id == "e4-2")  // top at 1_U only, on the three-chain: L1-L4 hold, L5 fails
    return mk(three, {"x", "y"}, [&](const finite_lattice& l, const std::vector<int>& x) {
      return std::vector<int>(x.size(), is_const(x, l.top()) ? l.top() : l.bottom());
    });
  if (id == "e4-3-1")  // doubleton rotation: L1,L2,L3,L5 hold, L4 fails
    return mk(two, {"x", "y", "z"}, [](const finite_lattice&, const std::vector<int>& x) {
      if (x == std::vector<int>{1, 1, 1}) return std::vector<int>{1, 1, 1};
      if (x == std::vector<int>{1, 1, 0}) return std::vector<int>{1, 0, 0};
      if (x == std::vector<int>{0, 1, 1}) return std::vector<int>{0, 1, 0};
      if (x == std::vector<int>{1, 0, 1}) return std::vector<int>{0, 0, 1};
      return std::vector<int>{0, 0, 0};
    });
  if (id == "e4-3-2")  // identity except doubletons -> 0: L1,L3,L4,L5 hold, L2 fails
    return mk(two, {"x", "y", "z"}, [](const finite_lattice&, const std::vector<int>& x) {
      int s = x[0] + x[1] + x[2];
      return s == 2 ? std::vector<int>{0, 0, 0} : x;
    });
  if (id == "e4-4-1")  // collapse onto 1_y: U6-U9 hold, U3 fails
    return mk(two, {"x", "y"}, [](const finite_lattice&, const std::vector<int>& x) {
      if (x == std::vector<int>{0, 1} || x == std::vector<int>{1, 1}) return std::vector<int>{0, 1};
      return std::vector<int>{0, 0};
    });
  if (id == "e4-4-2")  // asymmetric singleton map: U3,U6,U7,U9 hold, U8 fails
    return mk(two, {"x", "y"}, [](const finite_lattice&, const std::vector<int>& x) {
      if (x == std::vector<int>{0, 0}) return std::vector<int>{0, 0};
      if (x == std::vector<int>{1, 0}) return std::vector<int>{1, 0};
      return std::vector<int>{1, 1};
    });
  if (id == "e4-5")  // blanket to 1_U on the three-chain: U3,U7,U8,U9 hold, U6 fails
    return mk(three, {"x", "y"}, [&](const finite_lattice& l, const std::vector<int>& x) {
      return std::vector<int>(x.size(), is_const(x, l.bottom()) ? l.bottom() : l.top());
    });
  if (id == "e4-6")  // identity on atoms, 1_U elsewhere: U3,U6,U8,U9 hold, U7 fails
    return mk(two, {"x", "y", "z"}, [](const finite_lattice&, const std::vector<int>& x) {
      int s = x[0] + x[1] + x[2];
      return s <= 1 ? x : std::vector<int>{1, 1, 1};
    });
  if (id == "e4-7")  // atoms rotated into doubletons: U3,U6,U7 hold, U9 fails
    return mk(two, {"x", "y", "z"}, [](const finite_lattice&, const std::vector<int>& x) {
      if (x == std::vector<int>{0, 0, 0}) return std::vector<int>{0, 0, 0};
      if (x == std::vector<int>{1, 0, 0}) return std::vector<int>{1, 0, 1};
      if (x == std::vector<int>{0, 1, 0}) return std::vector<int>{1, 1, 0};
      if (x == std::vector<int>{0, 0, 1}) return std::vector<int>{0, 1, 1};
      return std::vector<int>{1, 1, 1};
    });
  fail_parse("unknown_counterexample", "unknown counterexample id '" + id + "'");
}

/// All catalogued counterexample ids.
inline const std::vector<std::string>& counterexample_ids() {
  static const std::vector<std::string> ids = {"e4-1-1", "e4-1-2", "e4-2", "e4-3-1", "e4-3-2",
                                               "e4-4-1", "e4-4-2", "e4-5", "e4-6", "e4-7"};
  return ids;
}

}  // namespace lrough

#endif  // LROUGH_AXIOMS_HPP
