// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// L-fuzzy sets over a finite universe, and the two fold measures the whole
// library is built on:
//
//   subsethood          S(A,B) = /\_x  A(x) -> B(x)
//   overlap             N(A,B) = \/_x  A(x) (x) B(x)        ((x) = tnorm)
//
// plus their beta-relative forms
//
//   subsethood_beta     S_b(A,B) = beta -> S(A,B)
//   overlap_beta        N_b(A,B) = N(A,B) (x) beta
//
// and the graded inclusion  A <=_beta B  iff  beta <= S(A,B)  (equivalently
// S_b(A,B) = 1).

#ifndef LROUGH_FUZZY_SET_HPP
#define LROUGH_FUZZY_SET_HPP

#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrough/error.hpp"
#include "lrough/lattice.hpp"

namespace lrough {

/// A finite universe of discourse: an ordered list of distinct point labels.
class universe {
 public:
  explicit universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) fail_parse("bad_input", "universe must be non-empty");
    for (int i = 0; i < size(); ++i) {
      const auto& s = labels_[static_cast<std::size_t>(i)];
      if (s.empty()) fail_parse("bad_input", "universe labels must be non-empty");
      if (!index_.emplace(s, i).second)
        fail_parse("bad_input", "duplicate universe label '" + s + "'");
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }

  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label; raises "unknown_label" if absent.
  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) fail_parse("unknown_label", "unknown universe point '" + label + "'");
    return it->second;
  }

  bool contains(const std::string& label) const { return index_.count(label) != 0; }

  friend bool operator==(const universe& a, const universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using universe_ptr = std::shared_ptr<const universe>;

inline universe_ptr make_universe(std::vector<std::string> labels) {
  return std::make_shared<const universe>(std::move(labels));
}

/// Convenience universe {x1, ..., xn}.
inline universe_ptr default_universe(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return make_universe(std::move(labels));
}

/// An L-fuzzy set: one lattice value per universe point.
template <residuated_lattice L>
struct fuzzy_set {
  universe_ptr u;
  std::vector<value_t<L>> a;

  value_t<L> operator()(int i) const { return a.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(a.size()); }
};

template <residuated_lattice L>
bool same_universe(const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  if (x.u == y.u) return true;
  return x.u && y.u && *x.u == *y.u;
}

template <residuated_lattice L>
void require_same_universe(const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  if (!same_universe(x, y))
    fail_domain("universe_mismatch", "operands live on different universes");
}

/// Check that a raw value belongs to the carrier ([0,1] for unit-interval
/// lattices, a valid index for finite ones); raises "foreign_value".
template <residuated_lattice L>
void require_in_carrier(const L& l, value_t<L> v) {
  if constexpr (std::is_same_v<value_t<L>, double>) {
    if (!(v >= 0.0 && v <= 1.0))
      fail_domain("foreign_value", "value " + std::to_string(v) + " lies outside [0,1]");
  } else {
    if (v < l.bottom() || v > l.top())
      fail_domain("foreign_value", "carrier index " + std::to_string(v) + " out of range");
  }
}

/// Build a fuzzy set after validating length and carrier membership.
template <residuated_lattice L>
fuzzy_set<L> make_set(const L& l, universe_ptr u, std::vector<value_t<L>> values) {
  if (!u) fail_internal("bad_input", "null universe");
  if (static_cast<int>(values.size()) != u->size())
    fail_parse("dimension_mismatch", "set has " + std::to_string(values.size()) +
                                         " values but the universe has " + std::to_string(u->size()) +
                                         " points");
  for (auto v : values) require_in_carrier(l, v);
  return fuzzy_set<L>{std::move(u), std::move(values)};
}

/// Constant set.
template <residuated_lattice L>
fuzzy_set<L> constant_set(const L& l, universe_ptr u, value_t<L> v) {
  require_in_carrier(l, v);
  int n = u->size();
  return fuzzy_set<L>{std::move(u), std::vector<value_t<L>>(static_cast<std::size_t>(n), v)};
}

template <residuated_lattice L>
fuzzy_set<L> empty_set(const L& l, universe_ptr u) {
  return constant_set(l, std::move(u), l.bottom());
}

template <residuated_lattice L>
fuzzy_set<L> full_set(const L& l, universe_ptr u) {
  return constant_set(l, std::move(u), l.top());
}

/// Characteristic set of a crisp subset of points (by index).
template <residuated_lattice L>
fuzzy_set<L> characteristic(const L& l, universe_ptr u, const std::vector<int>& points) {
  auto out = empty_set(l, u);
  for (int i : points) {
    if (i < 0 || i >= u->size())
      fail_parse("unknown_label", "point index " + std::to_string(i) + " out of range");
    out.a[static_cast<std::size_t>(i)] = l.top();
  }
  return out;
}

/// Characteristic set of the complement of {point}.
template <residuated_lattice L>
fuzzy_set<L> co_singleton(const L& l, universe_ptr u, int point) {
  auto out = full_set(l, u);
  if (point < 0 || point >= u->size())
    fail_parse("unknown_label", "point index " + std::to_string(point) + " out of range");
  out.a[static_cast<std::size_t>(point)] = l.bottom();
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise and scalar operations
// ---------------------------------------------------------------------------

template <residuated_lattice L, class F>
fuzzy_set<L> zip_with(const fuzzy_set<L>& x, const fuzzy_set<L>& y, F&& f) {
  require_same_universe(x, y);
  fuzzy_set<L> out{x.u, x.a};
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = f(x.a[i], y.a[i]);
  return out;
}

template <residuated_lattice L>
fuzzy_set<L> pointwise_meet(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  return zip_with(x, y, [&](auto a, auto b) { return l.meet(a, b); });
}

template <residuated_lattice L>
fuzzy_set<L> pointwise_join(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  return zip_with(x, y, [&](auto a, auto b) { return l.join(a, b); });
}

template <residuated_lattice L>
fuzzy_set<L> pointwise_tnorm(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  return zip_with(x, y, [&](auto a, auto b) { return l.tnorm(a, b); });
}

template <residuated_lattice L>
fuzzy_set<L> pointwise_implication(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  return zip_with(x, y, [&](auto a, auto b) { return l.implication(a, b); });
}

/// alpha (x) X, pointwise.
template <residuated_lattice L>
fuzzy_set<L> scalar_tnorm(const L& l, value_t<L> alpha, const fuzzy_set<L>& x) {
  fuzzy_set<L> out{x.u, x.a};
  for (auto& v : out.a) v = l.tnorm(alpha, v);
  return out;
}

/// alpha -> X, pointwise.
template <residuated_lattice L>
fuzzy_set<L> scalar_implication(const L& l, value_t<L> alpha, const fuzzy_set<L>& x) {
  fuzzy_set<L> out{x.u, x.a};
  for (auto& v : out.a) v = l.implication(alpha, v);
  return out;
}

/// X -> alpha, pointwise (used by the duality checks).
template <residuated_lattice L>
fuzzy_set<L> implication_scalar(const L& l, const fuzzy_set<L>& x, value_t<L> alpha) {
  fuzzy_set<L> out{x.u, x.a};
  for (auto& v : out.a) v = l.implication(v, alpha);
  return out;
}

/// neg X = X -> 0, pointwise.
template <residuated_lattice L>
fuzzy_set<L> complement_set(const L& l, const fuzzy_set<L>& x) {
  return implication_scalar(l, x, l.bottom());
}

template <residuated_lattice L>
bool set_leq(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  require_same_universe(x, y);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!l.leq(x.a[i], y.a[i])) return false;
  return true;
}

template <residuated_lattice L>
bool set_eq(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  require_same_universe(x, y);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!l.eq(x.a[i], y.a[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Fold measures
// ---------------------------------------------------------------------------

/// S(A,B) = /\_x (A(x) -> B(x)): the degree to which A is contained in B.
template <residuated_lattice L>
value_t<L> subsethood(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  require_same_universe(x, y);
  value_t<L> acc = l.top();
  for (std::size_t i = 0; i < x.a.size(); ++i) acc = l.meet(acc, l.implication(x.a[i], y.a[i]));
  return acc;
}

/// N(A,B) = \/_x (A(x) (x) B(x)): the degree to which A and B overlap.
template <residuated_lattice L>
value_t<L> overlap(const L& l, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  require_same_universe(x, y);
  value_t<L> acc = l.bottom();
  for (std::size_t i = 0; i < x.a.size(); ++i) acc = l.join(acc, l.tnorm(x.a[i], y.a[i]));
  return acc;
}

/// S_b(A,B) = beta -> S(A,B).
template <residuated_lattice L>
value_t<L> subsethood_beta(const L& l, value_t<L> beta, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  return l.implication(beta, subsethood(l, x, y));
}

/// N_b(A,B) = N(A,B) (x) beta.
template <residuated_lattice L>
value_t<L> overlap_beta(const L& l, value_t<L> beta, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  return l.tnorm(overlap(l, x, y), beta);
}

/// A <=_beta B  iff  beta <= S(A,B).
template <residuated_lattice L>
bool le_beta(const L& l, value_t<L> beta, const fuzzy_set<L>& x, const fuzzy_set<L>& y) {
  return l.leq(beta, subsethood(l, x, y));
}

}  // namespace lrough

#endif  // LROUGH_FUZZY_SET_HPP
