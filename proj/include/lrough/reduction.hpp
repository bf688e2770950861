// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Covering reduction.  A member C of a covering is
//
//  - reducible   when it is the pointwise join of the other members below
//    it:   C = \/ { C' != C : C' <= C pointwise };
//  - independent when it is the pointwise meet of the other members above
//    it:   C = /\ { C' != C : C' >= C pointwise }.
//
// Both are decided by the single candidate join/meet above — if the join of
// everything dominated by C falls short of C, no subset of it can reach C
// either, so no subset search is needed.  The decomposing family must be
// non-empty: a member is never the empty join or the empty meet.  (This is
// not pedantry — declaring a constant-top member "the empty meet" would let
// the core drop it, which changes the pair-2 operators.)  The reduct
// removes all reducible members, the core removes all independent ones;
// both classifications are computed simultaneously on the original covering
// (removal order does not matter for members with distinct values).
//
// Value-identical duplicates need a tie-break: each copy is trivially the
// join (and meet) of any other.  Exactly one copy survives — the earliest
// by insertion order; later copies are classified reducible/independent
// with the earliest copy as witness, and the earliest copy never counts
// duplicates of itself among its candidates.
//
// Reducts are invariant data for the pair-1 and pair-3 operators, cores for
// the pair-2 operators; `same_operators` compares two coverings through
// those invariants.

#ifndef LROUGH_REDUCTION_HPP
#define LROUGH_REDUCTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/lattice.hpp"

namespace lrough {

namespace detail {

template <residuated_lattice L>
bool values_eq(const L& l, const std::vector<value_t<L>>& a, const std::vector<value_t<L>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!l.eq(a[i], b[i])) return false;
  return true;
}

template <residuated_lattice L>
bool values_leq(const L& l, const std::vector<value_t<L>>& a, const std::vector<value_t<L>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!l.leq(a[i], b[i])) return false;
  return true;
}

/// Decide whether member k is the fold (join when `joining`, else meet) of
/// the candidate members on the proper side of it, and return the pruned
/// witness list if so.
template <residuated_lattice L>
std::optional<std::vector<int>> decomposition(const L& l, const beta_covering<L>& c, int k,
                                              bool joining) {
  const auto& target = c.member(k);

  // Later duplicate copies decompose through the earliest copy alone.
  int dup = c.duplicate_of()[static_cast<std::size_t>(k)];
  if (dup >= 0) return std::vector<int>{dup};

  // Candidates: members strictly on the right side of k (duplicates of k,
  // which sit on both sides, are excluded so that the earliest copy of a
  // value class is kept by both reduct and core).
  std::vector<int> cand;
  for (int j = 0; j < c.size(); ++j) {
    if (j == k) continue;
    const auto& cj = c.member(j);
    if (values_eq(l, cj, target)) continue;
    bool side = joining ? values_leq(l, cj, target) : values_leq(l, target, cj);
    if (side) cand.push_back(j);
  }
  if (cand.empty()) return std::nullopt;

  auto fold_equals_target = [&](const std::vector<int>& sel) {
    std::vector<value_t<L>> acc(target.size(), joining ? l.bottom() : l.top());
    for (int j : sel) {
      const auto& cj = c.member(j);
      for (std::size_t p = 0; p < acc.size(); ++p)
        acc[p] = joining ? l.join(acc[p], cj[p]) : l.meet(acc[p], cj[p]);
    }
    return values_eq(l, acc, target);
  };

  if (!fold_equals_target(cand)) return std::nullopt;

  // Greedy pruning in insertion order: drop every candidate the fold can do
  // without.  Deterministic, and minimal in the sense that each survivor is
  // necessary relative to the final list.
  std::vector<int> witnesses = cand;
  for (std::size_t i = 0; i < witnesses.size();) {
    std::vector<int> trial = witnesses;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!trial.empty() && fold_equals_target(trial))
      witnesses = std::move(trial);
    else
      ++i;
  }
  return witnesses;
}

}  // namespace detail

/// Witness list {C_j : j} with member k = \/_j C_j, if member k is
/// reducible; std::nullopt otherwise.
template <residuated_lattice L>
std::optional<std::vector<int>> is_reducible(const L& l, const beta_covering<L>& c, int k) {
  return detail::decomposition(l, c, k, /*joining=*/true);
}

template <residuated_lattice L>
std::optional<std::vector<int>> is_reducible(const L& l, const beta_covering<L>& c,
                                             const std::string& member) {
  return is_reducible(l, c, c.index_of_member(member));
}

/// Witness list {C_j : j} with member k = /\_j C_j, if member k is
/// independent; std::nullopt otherwise.
template <residuated_lattice L>
std::optional<std::vector<int>> is_independent(const L& l, const beta_covering<L>& c, int k) {
  return detail::decomposition(l, c, k, /*joining=*/false);
}

template <residuated_lattice L>
std::optional<std::vector<int>> is_independent(const L& l, const beta_covering<L>& c,
                                               const std::string& member) {
  return is_independent(l, c, c.index_of_member(member));
}

/// Result of a reduct or core computation.
template <residuated_lattice L>
struct reduction_report {
  beta_covering<L> covering;  ///< the surviving members, revalidated
  std::vector<std::string> kept;
  /// (removed member, its witnesses), in insertion order.
  std::vector<std::pair<std::string, std::vector<std::string>>> removed;
};

namespace detail {
template <residuated_lattice L>
reduction_report<L> remove_decomposable(const L& l, const beta_covering<L>& c, bool joining) {
  std::vector<std::string> kept_names;
  std::vector<std::vector<value_t<L>>> kept_members;
  std::vector<std::pair<std::string, std::vector<std::string>>> removed;
  for (int k = 0; k < c.size(); ++k) {
    auto w = decomposition(l, c, k, joining);
    if (w) {
      std::vector<std::string> names;
      names.reserve(w->size());
      for (int j : *w) names.push_back(c.name(j));
      removed.emplace_back(c.name(k), std::move(names));
    } else {
      kept_names.push_back(c.name(k));
      kept_members.push_back(c.member(k));
    }
  }
  beta_covering<L> out(l, c.univ(), std::move(kept_names), std::move(kept_members), c.beta());
  std::vector<std::string> kept = out.names();
  return reduction_report<L>{std::move(out), std::move(kept), std::move(removed)};
}
}  // namespace detail

/// Remove every reducible member (pair-1 / pair-3 invariant).
template <residuated_lattice L>
reduction_report<L> reduct(const L& l, const beta_covering<L>& c) {
  return detail::remove_decomposable(l, c, /*joining=*/true);
}

/// Remove every independent member (pair-2 invariant).
template <residuated_lattice L>
reduction_report<L> core(const L& l, const beta_covering<L>& c) {
  return detail::remove_decomposable(l, c, /*joining=*/false);
}

/// Do two coverings of the same universe and threshold induce the same
/// operators of the given pair?  Pairs 1 and 3 hold iff the reducts carry
/// the same member values (as sets), pair 2 iff the cores do.
template <residuated_lattice L>
bool same_operators(const L& l, const beta_covering<L>& c1, const beta_covering<L>& c2, int pair) {
  if (pair < 1 || pair > 3)
    fail_parse("bad_input", "operator pair must be 1, 2, or 3, got " + std::to_string(pair));
  if (!(c1.univ() == c2.univ() || *c1.univ() == *c2.univ()))
    fail_domain("universe_mismatch", "coverings live on different universes");
  if (!l.eq(c1.beta(), c2.beta()))
    fail_domain("context_mismatch", "coverings must share the same beta");

  const beta_covering<L> r1 = (pair == 2) ? core(l, c1).covering : reduct(l, c1).covering;
  const beta_covering<L> r2 = (pair == 2) ? core(l, c2).covering : reduct(l, c2).covering;
  if (r1.size() != r2.size()) return false;
  // Reduced coverings carry pairwise-distinct values, so a one-directional
  // containment check of the value sets suffices.
  for (int i = 0; i < r1.size(); ++i) {
    bool found = false;
    for (int j = 0; j < r2.size() && !found; ++j)
      found = detail::values_eq(l, r1.member(i), r2.member(j));
    if (!found) return false;
  }
  return true;
}

}  // namespace lrough

#endif  // LROUGH_REDUCTION_HPP
