#pragma once

#include <utility>
#include <vector>

#include "alphadet/eigen_support.hpp"
#include "alphadet/errors.hpp"
#include "alphadet/polynomial.hpp"

namespace alphadet {

// Reduced row echelon form in place; returns the pivot column of each pivot
// row in order. Exact arithmetic, first-nonzero pivoting.
inline std::vector<int> rref_in_place(RationalMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (int c = col; c < cols; ++c) m(row, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (int c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(RationalMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

// Basis of the right kernel {x : m x = 0}, rows of the result in reduced
// echelon form (canonical for the subspace).
inline RationalMatrix kernel_basis(RationalMatrix m) {
  const int cols = static_cast<int>(m.cols());
  const std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  const int dim = cols - static_cast<int>(pivots.size());
  RationalMatrix basis = RationalMatrix::Zero(dim, cols);
  int k = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(k, free) = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(k, pivots[r]) = -m(static_cast<int>(r), free);
    ++k;
  }
  rref_in_place(basis);  // canonicalize the basis of the subspace
  return basis;
}

// Exact inverse; throws consistency_error if singular.
inline RationalMatrix inverse(const RationalMatrix& m) {
  const int n = static_cast<int>(m.rows());
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  auto pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw consistency_error("matrix not invertible");
  return aug.rightCols(n);
}

inline RationalMatrix evaluate_at(const PolyMatrix& m, const Rational& alpha0) {
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(alpha0);
  return out;
}

// Rank of m(alpha0) over Q by exact Gaussian elimination.
inline int rank_at(const PolyMatrix& m, const Rational& alpha0) {
  return rank(evaluate_at(m, alpha0));
}

// Rank over the fraction field Q(alpha) by fraction-free (Bareiss-style)
// elimination with full pivoting; pivots prefer low-degree entries to slow
// coefficient growth.
inline int generic_rank(PolyMatrix m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int rank = 0;
  AlphaPoly prev_pivot(1);
  while (true) {
    int pr = -1, pc = -1;
    for (int r = rank; r < rows; ++r) {
      for (int c = rank; c < cols; ++c) {
        if (m(r, c).is_zero()) continue;
        if (pr < 0 || m(r, c).degree() < m(pr, pc).degree()) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    if (pr != rank) m.row(pr).swap(m.row(rank));
    if (pc != rank) m.col(pc).swap(m.col(rank));
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = rank + 1; c < cols; ++c) {
        m(r, c) = exact_divide(m(rank, rank) * m(r, c) - m(r, rank) * m(rank, c),
                               prev_pivot);
      }
      m(r, rank) = AlphaPoly();
    }
    prev_pivot = m(rank, rank);
    ++rank;
    if (rank == rows || rank == cols) break;
  }
  return rank;
}

// Determinant of a square polynomial matrix, fraction-free Bareiss.
inline AlphaPoly poly_det(PolyMatrix m) {
  const int n = static_cast<int>(m.rows());
  if (n != static_cast<int>(m.cols())) throw std::invalid_argument("not square");
  if (n == 0) return AlphaPoly(1);
  AlphaPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m(r, k).is_zero()) {
          p = r;
          break;
        }
      if (p < 0) return AlphaPoly();
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c)
        m(r, c) = exact_divide(m(k, k) * m(r, c) - m(r, k) * m(k, c), prev);
      m(r, k) = AlphaPoly();
    }
    prev = m(k, k);
  }
  AlphaPoly det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

// Monic squarefree polynomial vanishing exactly where the rank of m drops
// below its generic rank r: squarefree part of gcd of all r x r minors.
// Returns 1 when r = 0 (the locus is empty).
inline AlphaPoly critical_alphas(const PolyMatrix& m) {
  const int r = generic_rank(m);
  if (r == 0) return AlphaPoly(1);
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());

  std::vector<std::vector<int>> row_sets, col_sets;
  auto enumerate = [&](int total, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      out.push_back(idx);
      int i = r - 1;
      while (i >= 0 && idx[i] == total - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  enumerate(rows, row_sets);
  enumerate(cols, col_sets);
  const long long work =
      static_cast<long long>(row_sets.size()) * static_cast<long long>(col_sets.size());
  if (work > guard_limit(100000))
    throw guard_error("size guard exceeded: too many minors for critical locus");

  AlphaPoly g;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      PolyMatrix sub(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub(i, j) = m(rs[i], cs[j]);
      AlphaPoly minor = poly_det(std::move(sub));
      if (minor.is_zero()) continue;
      g = g.is_zero() ? minor : poly_gcd(g, minor);
      if (g.degree() == 0) return AlphaPoly(1);
    }
  }
  if (g.is_zero())
    throw consistency_error("all minors vanish at generic rank");  // unreachable
  return squarefree_part(g);
}

// Characteristic polynomial det(t*I - m) by the Faddeev-LeVerrier recursion;
// divisions are by integers only, exact over Q[alpha].
inline BivarPoly char_poly(const PolyMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n != static_cast<int>(m.cols())) throw std::invalid_argument("not square");
  std::vector<AlphaPoly> c(n + 1);
  c[n] = AlphaPoly(1);
  PolyMatrix aux = PolyMatrix::Constant(n, n, AlphaPoly());
  for (int i = 0; i < n; ++i) aux(i, i) = AlphaPoly(1);
  for (int k = 1; k <= n; ++k) {
    PolyMatrix am = m * aux;
    AlphaPoly tr;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -(tr * Rational(1, k));
    if (k < n) {
      aux = std::move(am);
      for (int i = 0; i < n; ++i) aux(i, i) += c[n - k];
    }
  }
  return BivarPoly(std::move(c));
}

inline AlphaPoly trace(const PolyMatrix& m) {
  AlphaPoly tr;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) tr += m(i, i);
  return tr;
}

}  // namespace alphadet
