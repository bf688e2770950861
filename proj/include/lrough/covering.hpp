// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// L-fuzzy beta-coverings.  A finite family C = {C_1, ..., C_m} of L-fuzzy
// sets over a universe U is a beta-covering (for a threshold beta > 0) when
//
//     ( \/_i C_i )(x) >= beta     for every point x in U.
//
// Construction validates this and caches the implication-based neighborhood
// relation
//
//     R(x, y) = /\_i ( C_i(x) -> C_i(y) )
//
// which drives the relation-based approximation operators.  The symmetric
// overlap relation  R_sym(x, y) = \/_i ( C_i(x) (x) C_i(y) )  is also
// provided.

#ifndef LROUGH_COVERING_HPP
#define LROUGH_COVERING_HPP

#include <string>
#include <utility>
#include <vector>

#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/lattice.hpp"

namespace lrough {

/// A square point-by-point table of lattice values (a binary L-relation on
/// the universe).  Row x, column y holds the degree attached to (x, y).
template <residuated_lattice L>
struct relation_table {
  int n = 0;
  std::vector<value_t<L>> v;

  value_t<L> at(int x, int y) const {
    return v.at(static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y));
  }
  value_t<L>& at(int x, int y) {
    return v.at(static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y));
  }
};

/// Largest threshold for which a family is a covering:
///   max_beta = /\_x \/_i C_i(x).
/// The family must be non-empty and rectangular; values are not otherwise
/// validated here.
template <residuated_lattice L>
value_t<L> max_beta(const L& l, const std::vector<std::vector<value_t<L>>>& members) {
  if (members.empty()) fail_domain("not_a_covering", "a covering needs at least one member");
  std::size_t n = members.front().size();
  value_t<L> acc = l.top();
  for (std::size_t x = 0; x < n; ++x) {
    value_t<L> best = l.bottom();
    for (const auto& c : members) {
      if (c.size() != n) fail_parse("dimension_mismatch", "covering members must have equal length");
      best = l.join(best, c[x]);
    }
    acc = l.meet(acc, best);
  }
  return acc;
}

/// A validated beta-covering.  Immutable after construction.
template <residuated_lattice L>
class beta_covering {
 public:
  /// Validates shape, carrier membership, beta (must satisfy 0 < beta <= 1
  /// in the lattice order), and the covering condition; on failure raises
  /// "not_a_covering" naming the first uncovered point, or
  /// "beta_out_of_range".  The neighborhood relation R is precomputed here.
  beta_covering(const L& l, universe_ptr u, std::vector<std::string> names,
                std::vector<std::vector<value_t<L>>> members, value_t<L> beta)
      : u_(std::move(u)), names_(std::move(names)), members_(std::move(members)), beta_(beta) {
    if (!u_) fail_internal("bad_input", "null universe");
    const int n = u_->size();
    const int m = static_cast<int>(members_.size());
    if (m == 0) fail_domain("not_a_covering", "a covering needs at least one member");
    if (static_cast<int>(names_.size()) != m)
      fail_parse("dimension_mismatch", "expected one name per covering member");
    for (int i = 0; i < m; ++i) {
      if (names_[static_cast<std::size_t>(i)].empty())
        fail_parse("bad_input", "covering member names must be non-empty");
      for (int j = i + 1; j < m; ++j)
        if (names_[static_cast<std::size_t>(i)] == names_[static_cast<std::size_t>(j)])
          fail_parse("bad_input", "duplicate covering member name '" + names_[static_cast<std::size_t>(i)] + "'");
      if (static_cast<int>(members_[static_cast<std::size_t>(i)].size()) != n)
        fail_parse("dimension_mismatch", "member '" + names_[static_cast<std::size_t>(i)] + "' has " +
                                             std::to_string(members_[static_cast<std::size_t>(i)].size()) +
                                             " values but the universe has " + std::to_string(n) + " points");
      for (auto val : members_[static_cast<std::size_t>(i)]) require_in_carrier(l, val);
    }

    require_in_carrier(l, beta_);
    if (l.leq(beta_, l.bottom()))
      fail_domain("beta_out_of_range", "beta must be strictly above the lattice bottom");

    // Covering condition, reporting the first uncovered point.
    for (int x = 0; x < n; ++x) {
      value_t<L> best = l.bottom();
      for (const auto& c : members_) best = l.join(best, c[static_cast<std::size_t>(x)]);
      if (!l.leq(beta_, best))
        fail_domain("not_a_covering", "the members do not cover point '" + u_->label(x) +
                                          "' to degree beta");
    }

    // duplicate_of[i] = earliest j < i with identical values, else -1.
    duplicate_of_.assign(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j) {
        bool equal = true;
        for (int x = 0; x < n && equal; ++x)
          equal = l.eq(members_[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)],
                       members_[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)]);
        if (equal) {
          duplicate_of_[static_cast<std::size_t>(i)] = j;
          break;
        }
      }

    // Neighborhood relation R(x, y) = /\_i (C_i(x) -> C_i(y)).
    arrow_.n = n;
    arrow_.v.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), l.top());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        value_t<L> acc = l.top();
        for (const auto& c : members_)
          acc = l.meet(acc, l.implication(c[static_cast<std::size_t>(x)], c[static_cast<std::size_t>(y)]));
        arrow_.at(x, y) = acc;
      }
  }

  const universe_ptr& univ() const { return u_; }
  int points() const { return u_->size(); }
  int size() const { return static_cast<int>(members_.size()); }
  value_t<L> beta() const { return beta_; }

  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<value_t<L>>& member(int i) const { return members_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<value_t<L>>>& members() const { return members_; }

  /// Member as a fuzzy set.
  fuzzy_set<L> member_set(int i) const { return fuzzy_set<L>{u_, member(i)}; }

  int index_of_member(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[static_cast<std::size_t>(i)] == name) return i;
    fail_parse("unknown_member", "unknown covering member '" + name + "'");
  }

  /// Earliest identical earlier member for each member (-1 when none).
  const std::vector<int>& duplicate_of() const { return duplicate_of_; }

  bool has_duplicates() const {
    for (int d : duplicate_of_)
      if (d >= 0) return true;
    return false;
  }

  /// Cached neighborhood relation R(x, y) = /\_i (C_i(x) -> C_i(y)).
  const relation_table<L>& relation() const { return arrow_; }

 private:
  universe_ptr u_;
  std::vector<std::string> names_;
  std::vector<std::vector<value_t<L>>> members_;
  value_t<L> beta_;
  std::vector<int> duplicate_of_;
  relation_table<L> arrow_;
};

template <residuated_lattice L>
value_t<L> max_beta(const L& l, const beta_covering<L>& c) {
  return max_beta(l, c.members());
}

/// R(x, y) = /\_i (C_i(x) -> C_i(y)).  Reflexive, and tnorm-transitive:
/// R(x,y) (x) R(y,z) <= R(x,z).
template <residuated_lattice L>
const relation_table<L>& relation_arrow(const beta_covering<L>& c) {
  return c.relation();
}

/// R_sym(x, y) = \/_i (C_i(x) (x) C_i(y)).  Symmetric by construction.  On a
/// Heyting lattice (tnorm = meet) the covering condition gives
/// R_sym(x, x) = \/_i C_i(x) >= beta, i.e. reflexivity holds to degree beta.
template <residuated_lattice L>
relation_table<L> relation_sym(const L& l, const beta_covering<L>& c) {
  const int n = c.points();
  relation_table<L> r;
  r.n = n;
  r.v.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), l.bottom());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      value_t<L> acc = l.bottom();
      for (const auto& cm : c.members())
        acc = l.join(acc, l.tnorm(cm[static_cast<std::size_t>(x)], cm[static_cast<std::size_t>(y)]));
      r.at(x, y) = acc;
    }
  return r;
}

}  // namespace lrough

#endif  // LROUGH_COVERING_HPP
