// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Complete residuated lattices L = (L, meet, join, tnorm, ->, 0, 1).
//
// A residuated lattice is a bounded lattice carrying a commutative monoid
// structure (tnorm, with unit 1) that is adjoint to an implication:
//
//     tnorm(a, b) <= c   iff   b <= implication(a, c)        (adjunction)
//
// Negation is derived: neg(a) = implication(a, 0).  Two structural flags
// matter for several theorems downstream:
//
//  - "regular":  neg(neg(a)) = a for every a (double negation involutive);
//  - "heyting":  tnorm coincides with meet.
//
// Four implementations are provided:
//
//   godel_lattice        [0,1], tnorm = min                  (heyting)
//   lukasiewicz_lattice  [0,1], tnorm = max(a+b-1, 0)        (regular)
//   product_lattice      [0,1], tnorm = a*b
//   finite_lattice       explicit finite carrier with user-supplied tnorm
//                        and implication tables, validated at construction
//
// The three unit-interval lattices compare values up to a tolerance `tol`
// so that chained arithmetic (Lukasiewicz sums, products) does not leak
// floating point noise into order decisions.

#ifndef LROUGH_LATTICE_HPP
#define LROUGH_LATTICE_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lrough/error.hpp"

namespace lrough {

/// Minimal interface every lattice type implements.  `value_type` is the
/// carrier representation: `double` for the unit-interval lattices, `int`
/// (an index into the carrier) for finite tables.
template <class L>
concept residuated_lattice =
    std::copy_constructible<L> &&
    requires(const L& l, typename L::value_type a) {
      { l.bottom() } -> std::convertible_to<typename L::value_type>;
      { l.top() } -> std::convertible_to<typename L::value_type>;
      { l.tnorm(a, a) } -> std::convertible_to<typename L::value_type>;
      { l.implication(a, a) } -> std::convertible_to<typename L::value_type>;
      { l.meet(a, a) } -> std::convertible_to<typename L::value_type>;
      { l.join(a, a) } -> std::convertible_to<typename L::value_type>;
      { l.leq(a, a) } -> std::convertible_to<bool>;
      { l.eq(a, a) } -> std::convertible_to<bool>;
    };

/// Lattices whose carrier can be enumerated (size() elements, represented
/// as indices 0 .. size()-1 in ascending-name order with 0 = bottom).
template <class L>
concept finite_residuated_lattice =
    residuated_lattice<L> && requires(const L& l) {
      { l.size() } -> std::convertible_to<int>;
      { l.name_of(0) } -> std::convertible_to<std::string>;
    };

template <residuated_lattice L>
using value_t = typename L::value_type;

/// neg(a) = a -> 0.
template <residuated_lattice L>
value_t<L> negation(const L& l, value_t<L> a) {
  return l.implication(a, l.bottom());
}

// ---------------------------------------------------------------------------
// Unit-interval lattices
// ---------------------------------------------------------------------------

/// Goedel structure on [0,1]: tnorm = min, implication(a,b) = 1 if a <= b
/// else b.  Heyting (tnorm == meet), not regular (neg is the 0/1 step map).
struct godel_lattice {
  using value_type = double;
  double tol = 1e-9;

  double bottom() const { return 0.0; }
  double top() const { return 1.0; }
  bool leq(double a, double b) const { return a <= b + tol; }
  bool eq(double a, double b) const { return std::fabs(a - b) <= tol; }
  double meet(double a, double b) const { return std::min(a, b); }
  double join(double a, double b) const { return std::max(a, b); }
  double tnorm(double a, double b) const { return std::min(a, b); }
  double implication(double a, double b) const { return leq(a, b) ? 1.0 : b; }

  static constexpr bool is_regular() { return false; }
  static constexpr bool is_heyting() { return true; }
  static constexpr const char* kind() { return "godel"; }
};

/// Lukasiewicz structure on [0,1]: tnorm = max(a+b-1, 0), implication =
/// min(1-a+b, 1).  Regular (neg(a) = 1-a is involutive), not Heyting.
struct lukasiewicz_lattice {
  using value_type = double;
  double tol = 1e-9;

  double bottom() const { return 0.0; }
  double top() const { return 1.0; }
  bool leq(double a, double b) const { return a <= b + tol; }
  bool eq(double a, double b) const { return std::fabs(a - b) <= tol; }
  double meet(double a, double b) const { return std::min(a, b); }
  double join(double a, double b) const { return std::max(a, b); }
  double tnorm(double a, double b) const { return std::max(a + b - 1.0, 0.0); }
  double implication(double a, double b) const { return std::min(1.0 - a + b, 1.0); }

  static constexpr bool is_regular() { return true; }
  static constexpr bool is_heyting() { return false; }
  static constexpr const char* kind() { return "lukasiewicz"; }
};

/// Product structure on [0,1]: tnorm = a*b, implication(a,b) = 1 if a <= b
/// else b/a.  Neither regular nor Heyting.
struct product_lattice {
  using value_type = double;
  double tol = 1e-9;

  double bottom() const { return 0.0; }
  double top() const { return 1.0; }
  bool leq(double a, double b) const { return a <= b + tol; }
  bool eq(double a, double b) const { return std::fabs(a - b) <= tol; }
  double meet(double a, double b) const { return std::min(a, b); }
  double join(double a, double b) const { return std::max(a, b); }
  double tnorm(double a, double b) const { return a * b; }
  double implication(double a, double b) const {
    // !leq(a, b) implies a > b + tol >= tol > 0, so the division is safe.
    return leq(a, b) ? 1.0 : b / a;
  }

  static constexpr bool is_regular() { return false; }
  static constexpr bool is_heyting() { return false; }
  static constexpr const char* kind() { return "product"; }
};

// ---------------------------------------------------------------------------
// Finite table-driven lattices
// ---------------------------------------------------------------------------

/// A finite residuated lattice given by its carrier (element names, bottom
/// first and top last) and full tnorm / implication tables.  Values are
/// carrier indices.  Construction derives the lattice order from the
/// implication table via  a <= b  iff  a -> b = 1,  then verifies that the
/// data really is a residuated lattice:
///
///  - the derived order is a partial order with 0 least and 1 greatest,
///    and every pair has a meet and a join;
///  - tnorm is commutative, associative, has unit 1, and distributes over
///    binary joins;
///  - tnorm and implication are adjoint.
///
/// Violations raise domain errors with codes "bad_carrier" (naming/shape
/// problems) or "table_not_residuated" (algebraic failures).
class finite_lattice {
 public:
  using value_type = int;

  /// Maximum carrier size accepted (keeps validation and the exhaustive
  /// verification tools comfortably cheap).
  static constexpr int max_size = 64;

  finite_lattice(std::vector<std::string> names,
                 std::vector<std::vector<int>> tnorm_table,
                 std::vector<std::vector<int>> impl_table)
      : names_(std::move(names)) {
    n_ = static_cast<int>(names_.size());
    if (n_ < 2 || n_ > max_size)
      fail_domain("bad_carrier", "carrier must have between 2 and " +
                                     std::to_string(max_size) + " elements, got " +
                                     std::to_string(n_));
    for (int i = 0; i < n_; ++i) {
      if (names_[i].empty()) fail_domain("bad_carrier", "carrier element names must be non-empty");
      for (int j = i + 1; j < n_; ++j)
        if (names_[i] == names_[j])
          fail_domain("bad_carrier", "duplicate carrier element '" + names_[i] + "'");
    }
    check_table(tnorm_table, "tnorm");
    check_table(impl_table, "implication");
    tnorm_ = flatten(tnorm_table);
    impl_ = flatten(impl_table);

    derive_order();
    derive_meet_join();
    check_monoid();
    check_adjoint();

    regular_ = true;
    for (int a = 0; a < n_ && regular_; ++a)
      regular_ = (implication(implication(a, 0), 0) == a);
    heyting_ = true;
    for (int a = 0; a < n_ && heyting_; ++a)
      for (int b = 0; b < n_ && heyting_; ++b)
        heyting_ = (tnorm(a, b) == meet(a, b));
  }

  /// The n-element chain 0 < a < b < ... < 1 with tnorm = meet = min.
  /// (For n = 2 this is the Boolean lattice.)
  static finite_lattice chain(int n) {
    if (n < 2 || n > max_size)
      fail_domain("bad_carrier", "chain size must be between 2 and " +
                                     std::to_string(max_size) + ", got " + std::to_string(n));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    names.front() = "0";
    names.back() = "1";
    for (int i = 1; i + 1 < n; ++i) {
      if (n <= 27) {
        names[static_cast<std::size_t>(i)] = std::string(1, static_cast<char>('a' + i - 1));
      } else {
        names[static_cast<std::size_t>(i)] = "m" + std::to_string(i);
      }
    }
    std::vector<std::vector<int>> tn(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::vector<int>> im(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        tn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a, b);
        im[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a <= b) ? n - 1 : b;
      }
    return finite_lattice(std::move(names), std::move(tn), std::move(im));
  }

  int size() const { return n_; }

  const std::string& name_of(int v) const {
    if (v < 0 || v >= n_)
      fail_internal("foreign_value", "carrier index " + std::to_string(v) + " out of range");
    return names_[static_cast<std::size_t>(v)];
  }

  /// Index of a named element; raises "foreign_value" if unknown.
  int index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
      if (names_[static_cast<std::size_t>(i)] == name) return i;
    fail_domain("foreign_value", "'" + name + "' is not a carrier element");
  }

  int bottom() const { return 0; }
  int top() const { return n_ - 1; }
  bool leq(int a, int b) const { return leq_[flat(a, b)]; }
  bool eq(int a, int b) const { return a == b; }
  int meet(int a, int b) const { return meet_[flat(a, b)]; }
  int join(int a, int b) const { return join_[flat(a, b)]; }
  int tnorm(int a, int b) const { return tnorm_[flat(a, b)]; }
  int implication(int a, int b) const { return impl_[flat(a, b)]; }

  bool is_regular() const { return regular_; }
  bool is_heyting() const { return heyting_; }
  static constexpr const char* kind() { return "finite"; }

  const std::vector<std::string>& names() const { return names_; }

 private:
  std::size_t flat(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      fail_internal("foreign_value", "carrier index out of range");
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  void check_table(const std::vector<std::vector<int>>& t, const char* what) const {
    if (static_cast<int>(t.size()) != n_)
      fail_domain("bad_carrier", std::string(what) + " table must have " + std::to_string(n_) + " rows");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n_)
        fail_domain("bad_carrier", std::string(what) + " table rows must have " + std::to_string(n_) + " entries");
      for (int v : row)
        if (v < 0 || v >= n_)
          fail_domain("bad_carrier", std::string(what) + " table entry out of carrier range");
    }
  }

  std::vector<int> flatten(const std::vector<std::vector<int>>& t) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  void derive_order() {
    leq_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), false);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        leq_[flat(a, b)] = (impl_[flat(a, b)] == n_ - 1);
    for (int a = 0; a < n_; ++a)
      if (!leq_[flat(a, a)])
        fail_domain("table_not_residuated", "induced order is not reflexive at '" + names_[static_cast<std::size_t>(a)] + "'");
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (a != b && leq_[flat(a, b)] && leq_[flat(b, a)])
          fail_domain("table_not_residuated", "induced order is not antisymmetric between '" +
                                                  names_[static_cast<std::size_t>(a)] + "' and '" +
                                                  names_[static_cast<std::size_t>(b)] + "'");
        for (int c = 0; c < n_; ++c)
          if (leq_[flat(a, b)] && leq_[flat(b, c)] && !leq_[flat(a, c)])
            fail_domain("table_not_residuated", "induced order is not transitive");
      }
    for (int a = 0; a < n_; ++a) {
      if (!leq_[flat(0, a)])
        fail_domain("bad_carrier", "first carrier element must be the least element");
      if (!leq_[flat(a, n_ - 1)])
        fail_domain("bad_carrier", "last carrier element must be the greatest element");
    }
  }

  void derive_meet_join() {
    meet_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    join_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int m = -1;
        for (int c = 0; c < n_; ++c) {
          if (!(leq_[flat(c, a)] && leq_[flat(c, b)])) continue;
          if (m < 0 || leq_[flat(m, c)]) {
            // candidate greatest lower bound so far
            m = c;
          }
        }
        // m is a maximal lower bound; verify it dominates every lower bound.
        for (int c = 0; c < n_; ++c)
          if (leq_[flat(c, a)] && leq_[flat(c, b)] && !leq_[flat(c, m)])
            fail_domain("table_not_residuated", "elements '" + names_[static_cast<std::size_t>(a)] +
                                                    "' and '" + names_[static_cast<std::size_t>(b)] +
                                                    "' have no meet");
        meet_[flat(a, b)] = m;

        int j = -1;
        for (int c = 0; c < n_; ++c) {
          if (!(leq_[flat(a, c)] && leq_[flat(b, c)])) continue;
          if (j < 0 || leq_[flat(c, j)]) j = c;
        }
        for (int c = 0; c < n_; ++c)
          if (leq_[flat(a, c)] && leq_[flat(b, c)] && !leq_[flat(j, c)])
            fail_domain("table_not_residuated", "elements '" + names_[static_cast<std::size_t>(a)] +
                                                    "' and '" + names_[static_cast<std::size_t>(b)] +
                                                    "' have no join");
        join_[flat(a, b)] = j;
      }
  }

  void check_monoid() const {
    for (int a = 0; a < n_; ++a) {
      if (tnorm_[flat(a, n_ - 1)] != a || tnorm_[flat(n_ - 1, a)] != a)
        fail_domain("table_not_residuated", "top is not a tnorm unit at '" + names_[static_cast<std::size_t>(a)] + "'");
      for (int b = 0; b < n_; ++b) {
        if (tnorm_[flat(a, b)] != tnorm_[flat(b, a)])
          fail_domain("table_not_residuated", "tnorm is not commutative");
        for (int c = 0; c < n_; ++c) {
          if (tnorm_[flat(tnorm_[flat(a, b)], c)] != tnorm_[flat(a, tnorm_[flat(b, c)])])
            fail_domain("table_not_residuated", "tnorm is not associative");
          // distributivity over binary joins (with adjunction this is what
          // makes the implication the full residuum on a finite lattice)
          if (tnorm_[flat(a, join_[flat(b, c)])] !=
              join_[flat(tnorm_[flat(a, b)], tnorm_[flat(a, c)])])
            fail_domain("table_not_residuated", "tnorm does not distribute over joins");
        }
      }
    }
  }

  void check_adjoint() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) {
          bool lhs = leq_[flat(tnorm_[flat(a, b)], c)];
          bool rhs = leq_[flat(b, impl_[flat(a, c)])];
          if (lhs != rhs)
            fail_domain("table_not_residuated",
                        "tnorm and implication are not adjoint at (" + names_[static_cast<std::size_t>(a)] +
                            ", " + names_[static_cast<std::size_t>(b)] + ", " + names_[static_cast<std::size_t>(c)] + ")");
        }
  }

  std::vector<std::string> names_;
  int n_ = 0;
  std::vector<int> tnorm_, impl_, meet_, join_;
  std::vector<bool> leq_;
  bool regular_ = false, heyting_ = false;
};

// Uniform structural queries across all lattice types.
inline bool regular(const godel_lattice&) { return godel_lattice::is_regular(); }
inline bool regular(const lukasiewicz_lattice&) { return lukasiewicz_lattice::is_regular(); }
inline bool regular(const product_lattice&) { return product_lattice::is_regular(); }
inline bool regular(const finite_lattice& l) { return l.is_regular(); }
inline bool heyting(const godel_lattice&) { return godel_lattice::is_heyting(); }
inline bool heyting(const lukasiewicz_lattice&) { return lukasiewicz_lattice::is_heyting(); }
inline bool heyting(const product_lattice&) { return product_lattice::is_heyting(); }
inline bool heyting(const finite_lattice& l) { return l.is_heyting(); }

// ---------------------------------------------------------------------------
// Runtime-selected lattices
// ---------------------------------------------------------------------------

/// Plain-data description of a lattice, as it appears in input files.
///
///   kind = "godel" | "lukasiewicz" | "product"   (unit interval; `tolerance`)
///   kind = "finite_chain"                        (`n` elements)
///   kind = "table"  (`carrier` + `tnorm` / `implication` tables by name)
struct lattice_descriptor {
  std::string kind;
  double tolerance = 1e-9;
  int n = 0;
  std::vector<std::string> carrier;
  std::vector<std::vector<std::string>> tnorm;
  std::vector<std::vector<std::string>> implication;
};

using lattice = std::variant<godel_lattice, lukasiewicz_lattice, product_lattice, finite_lattice>;

/// Construct a lattice from a descriptor.  Raises parse errors for unknown
/// kinds or malformed tables and domain errors for tables that fail the
/// residuated-lattice checks.
inline lattice build_lattice(const lattice_descriptor& d) {
  if (d.kind == "godel") return godel_lattice{d.tolerance};
  if (d.kind == "lukasiewicz") return lukasiewicz_lattice{d.tolerance};
  if (d.kind == "product") return product_lattice{d.tolerance};
  if (d.kind == "finite_chain") return finite_lattice::chain(d.n);
  if (d.kind == "table") {
    if (d.carrier.empty()) fail_parse("bad_input", "table lattice requires a carrier");
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(d.carrier.size()); ++i) {
      if (!idx.emplace(d.carrier[static_cast<std::size_t>(i)], i).second)
        fail_domain("bad_carrier", "duplicate carrier element '" + d.carrier[static_cast<std::size_t>(i)] + "'");
    }
    auto to_indices = [&](const std::vector<std::vector<std::string>>& t, const char* what) {
      if (t.size() != d.carrier.size())
        fail_parse("bad_input", std::string(what) + " table must have one row per carrier element");
      std::vector<std::vector<int>> out;
      out.reserve(t.size());
      for (const auto& row : t) {
        if (row.size() != d.carrier.size())
          fail_parse("bad_input", std::string(what) + " table rows must match the carrier size");
        std::vector<int> r;
        r.reserve(row.size());
        for (const auto& name : row) {
          auto it = idx.find(name);
          if (it == idx.end())
            fail_domain("foreign_value", "'" + name + "' is not a carrier element");
          r.push_back(it->second);
        }
        out.push_back(std::move(r));
      }
      return out;
    };
    return finite_lattice(d.carrier, to_indices(d.tnorm, "tnorm"), to_indices(d.implication, "implication"));
  }
  fail_parse("bad_input", "unknown lattice kind '" + d.kind + "'");
}

/// Human-readable kind of a runtime lattice.
inline std::string lattice_kind(const lattice& l) {
  return std::visit([](const auto& x) { return std::string(x.kind()); }, l);
}

}  // namespace lrough

#endif  // LROUGH_LATTICE_HPP
