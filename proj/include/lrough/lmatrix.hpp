// Copyright (c) 2026 the lrough authors. MIT license; see LICENSE.
//
// Lattice-valued matrices and the two triangle products that replace the
// (+, *) pair of ordinary linear algebra:
//
//   tri  (A, B):  C[i][j] = /\_k ( A[i][k] -> B[k][j] )
//   btri (A, B):  D[i][j] = \/_k ( A[i][k] (x) B[k][j] )
//
// Scalar variants operate entrywise without materializing constant
// matrices:  tri(beta, B)[i][j] = beta -> B[i][j]  and
// btri(B, beta)[i][j] = B[i][j] (x) beta  (tnorm is commutative, so a left
// scalar form of btri would coincide with the right one).
//
// The bridge to coverings:  m_covering stacks the members column-wise
// (rows = points, columns = members), m_set is the one-column matrix of a
// fuzzy set, and  tri(m_covering, transpose(m_covering))  reproduces the
// neighborhood relation R(x, y) = /\_i (C_i(x) -> C_i(y)).

#ifndef LROUGH_LMATRIX_HPP
#define LROUGH_LMATRIX_HPP

#include <string>
#include <utility>
#include <vector>

#include "lrough/covering.hpp"
#include "lrough/error.hpp"
#include "lrough/fuzzy_set.hpp"
#include "lrough/lattice.hpp"

namespace lrough {

/// Dense row-major matrix over a lattice carrier.
template <residuated_lattice L>
class lmatrix {
 public:
  lmatrix() = default;

  lmatrix(int rows, int cols, value_t<L> fill)
      : rows_(rows), cols_(cols),
        v_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows <= 0 || cols <= 0)
      fail_parse("dimension_mismatch", "matrix dimensions must be positive");
  }

  static lmatrix from_rows(const std::vector<std::vector<value_t<L>>>& rows) {
    if (rows.empty() || rows.front().empty())
      fail_parse("dimension_mismatch", "matrix must be non-empty");
    lmatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
              rows.front().front());
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols())
        fail_parse("dimension_mismatch", "matrix rows must have equal length");
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  value_t<L> at(int i, int j) const { return v_[idx(i, j)]; }
  value_t<L>& at(int i, int j) { return v_[idx(i, j)]; }

  friend lmatrix transpose(const lmatrix& a) {
    lmatrix t(a.cols_, a.rows_, a.v_.empty() ? value_t<L>{} : a.v_.front());
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) t.at(j, i) = a.at(i, j);
    return t;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      fail_internal("dimension_mismatch", "matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<value_t<L>> v_;
};

namespace detail {
template <residuated_lattice L>
void require_composable(const lmatrix<L>& a, const lmatrix<L>& b) {
  if (a.cols() != b.rows())
    fail_parse("dimension_mismatch",
               "cannot compose a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                   " matrix with a " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                   " matrix");
}
}  // namespace detail

/// tri(A, B)[i][j] = /\_k (A[i][k] -> B[k][j]).
template <residuated_lattice L>
lmatrix<L> tri(const L& l, const lmatrix<L>& a, const lmatrix<L>& b) {
  detail::require_composable(a, b);
  lmatrix<L> c(a.rows(), b.cols(), l.top());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const value_t<L> aik = a.at(i, k);
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = l.meet(c.at(i, j), l.implication(aik, b.at(k, j)));
    }
  return c;
}

/// btri(A, B)[i][j] = \/_k (A[i][k] (x) B[k][j]).
template <residuated_lattice L>
lmatrix<L> btri(const L& l, const lmatrix<L>& a, const lmatrix<L>& b) {
  detail::require_composable(a, b);
  lmatrix<L> c(a.rows(), b.cols(), l.bottom());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const value_t<L> aik = a.at(i, k);
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = l.join(c.at(i, j), l.tnorm(aik, b.at(k, j)));
    }
  return c;
}

/// tri(beta, B)[i][j] = beta -> B[i][j].
template <residuated_lattice L>
lmatrix<L> tri(const L& l, value_t<L> beta, const lmatrix<L>& b) {
  lmatrix<L> c = b;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c.at(i, j) = l.implication(beta, c.at(i, j));
  return c;
}

/// btri(B, beta)[i][j] = B[i][j] (x) beta.
template <residuated_lattice L>
lmatrix<L> btri(const L& l, const lmatrix<L>& b, value_t<L> beta) {
  lmatrix<L> c = b;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c.at(i, j) = l.tnorm(c.at(i, j), beta);
  return c;
}

/// btri(beta, B) = btri(B, beta) (tnorm is commutative).
template <residuated_lattice L>
lmatrix<L> btri(const L& l, value_t<L> beta, const lmatrix<L>& b) {
  return btri(l, b, beta);
}

/// Points-by-members matrix of a covering: M[x][i] = C_i(x).
template <residuated_lattice L>
lmatrix<L> m_covering(const L& l, const beta_covering<L>& c) {
  lmatrix<L> m(c.points(), c.size(), l.bottom());
  for (int x = 0; x < c.points(); ++x)
    for (int i = 0; i < c.size(); ++i) m.at(x, i) = c.member(i)[static_cast<std::size_t>(x)];
  return m;
}

/// One-column matrix of a fuzzy set.
template <residuated_lattice L>
lmatrix<L> m_set(const L& l, const fuzzy_set<L>& x) {
  lmatrix<L> m(x.size(), 1, l.bottom());
  for (int i = 0; i < x.size(); ++i) m.at(i, 0) = x.a[static_cast<std::size_t>(i)];
  return m;
}

/// Read a one-column matrix back as a fuzzy set on `u`.
template <residuated_lattice L>
fuzzy_set<L> to_set(const L&, universe_ptr u, const lmatrix<L>& m) {
  if (m.cols() != 1 || m.rows() != u->size())
    fail_internal("dimension_mismatch", "expected a one-column matrix matching the universe");
  fuzzy_set<L> out{std::move(u), std::vector<value_t<L>>(static_cast<std::size_t>(m.rows()))};
  for (int i = 0; i < m.rows(); ++i) out.a[static_cast<std::size_t>(i)] = m.at(i, 0);
  return out;
}

/// Neighborhood relation as a matrix: tri(M_C, transpose(M_C)).
/// Coincides with beta_covering::relation().
template <residuated_lattice L>
lmatrix<L> relation_matrix(const L& l, const beta_covering<L>& c) {
  lmatrix<L> mc = m_covering(l, c);
  return tri(l, mc, transpose(mc));
}

/// Symmetric overlap relation as a matrix: btri(M_C, transpose(M_C)).
template <residuated_lattice L>
lmatrix<L> sym_relation_matrix(const L& l, const beta_covering<L>& c) {
  lmatrix<L> mc = m_covering(l, c);
  return btri(l, mc, transpose(mc));
}

/// Relation table -> matrix.
template <residuated_lattice L>
lmatrix<L> to_matrix(const L& l, const relation_table<L>& r) {
  lmatrix<L> m(r.n, r.n, l.bottom());
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) m.at(x, y) = r.at(x, y);
  return m;
}

}  // namespace lrough

#endif  // LROUGH_LMATRIX_HPP
