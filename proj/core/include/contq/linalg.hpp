#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contq/errors.hpp"
#include "contq/matrix.hpp"

namespace contq {

/// In-place reduced row echelon form with leftmost-pivot tie-breaking
/// (first nonzero row in each candidate column). Returns pivot column
/// indices in increasing order. Deterministic by construction.
template <class F>
std::vector<int> rref_inplace(const F& f, Mat<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    auto piv_inv = f.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), piv_inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      auto c = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(const F& f, const Mat<F>& m) {
  Mat<F> c = m;
  return static_cast<int>(rref_inplace(f, c).size());
}

/// Columns form the reduced kernel basis: one column per free variable,
/// with a unit at the free coordinate.
template <class F>
Mat<F> kernel(const F& f, const Mat<F>& m) {
  Mat<F> r = m;
  auto pivots = rref_inplace(f, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  int k = m.cols - static_cast<int>(pivots.size());
  Mat<F> ker(m.cols, k, f);
  int col = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    ker.at(free, col) = f.one();
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      ker.at(pivots[pi], col) = f.neg(r.at(static_cast<int>(pi), free));
    ++col;
  }
  return ker;
}

/// Particular solution X of A X = B (free variables set to zero), or
/// nullopt when the system is inconsistent. Unique when A has full
/// column rank.
template <class F>
std::optional<Mat<F>> solve(const F& f, const Mat<F>& A, const Mat<F>& B) {
  assert(A.rows == B.rows);
  Mat<F> aug = hstack(f, A, B);
  auto pivots = rref_inplace(f, aug);
  for (int p : pivots)
    if (p >= A.cols) return std::nullopt;
  Mat<F> X(A.cols, B.cols, f);
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < B.cols; ++j)
      X.at(pivots[pi], j) = aug.at(static_cast<int>(pi), A.cols + j);
  return X;
}

/// Kernel of a map out of a two-summand domain K^m (+) K^n, presented by
/// the inclusion of a reduced basis. The two projection blocks are the
/// rows belonging to each summand.
template <class F>
struct KernelPresentation {
  int m = 0;  ///< dimension of the first summand
  int n = 0;  ///< dimension of the second summand
  Mat<F> inclusion;  ///< (m+n) x k, columns are a kernel basis

  int dim() const { return inclusion.cols; }
  Mat<F> proj_first(const F& f) const { return submatrix_rows(f, inclusion, 0, m); }
  Mat<F> proj_second(const F& f) const { return submatrix_rows(f, inclusion, m, n); }
};

template <class F>
KernelPresentation<F> kernel_basis(const F& f, const Mat<F>& d, int m, int n) {
  assert(d.cols == m + n);
  return KernelPresentation<F>{m, n, kernel(f, d)};
}

/// Cokernel K^rows / col(d), presented by a surjection onto coset
/// representatives (the non-pivot coordinates of the column space).
template <class F>
struct CokernelPresentation {
  int ambient = 0;
  Mat<F> projection;  ///< q x ambient, full row rank, projection * d = 0

  int dim() const { return projection.rows; }
};

template <class F>
CokernelPresentation<F> cokernel_basis(const F& f, const Mat<F>& d) {
  Mat<F> e = transpose(f, d);
  auto pivots = rref_inplace(f, e);  // nonzero rows span col(d)
  std::vector<bool> is_pivot(d.rows, false);
  for (int p : pivots) is_pivot[p] = true;
  int q = d.rows - static_cast<int>(pivots.size());
  Mat<F> P(q, d.rows, f);
  int out = 0;
  for (int i = 0; i < d.rows; ++i) {
    if (is_pivot[i]) continue;
    P.at(out, i) = f.one();
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      P.at(out, pivots[pi]) = f.neg(e.at(static_cast<int>(pi), i));
    ++out;
  }
  // P * d = 0: each column of d reduces to zero against the echelon basis.
  return CokernelPresentation<F>{d.rows, P};
}

/// Unique L with incl2 * L = blockmap * incl1. Errors with NotInvariant
/// when the block map does not carry ker1 into ker2.
template <class F>
Mat<F> induced_on_kernels(const F& f, const KernelPresentation<F>& k1,
                          const KernelPresentation<F>& k2, const Mat<F>& blockmap) {
  assert(blockmap.cols == k1.m + k1.n && blockmap.rows == k2.m + k2.n);
  Mat<F> rhs = matmul(f, blockmap, k1.inclusion);
  auto L = solve(f, k2.inclusion, rhs);
  if (!L)
    throw error(errc::not_invariant,
                "block map does not carry the first kernel into the second");
  return *L;
}

/// Unique L with L * proj1 = proj2 * blockmap. Errors with NotInvariant
/// when the block map does not respect the images being quotiented.
template <class F>
Mat<F> induced_on_cokernels(const F& f, const CokernelPresentation<F>& c1,
                            const CokernelPresentation<F>& c2, const Mat<F>& blockmap) {
  assert(blockmap.cols == c1.ambient && blockmap.rows == c2.ambient);
  Mat<F> rhs = transpose(f, matmul(f, c2.projection, blockmap));
  auto Lt = solve(f, transpose(f, c1.projection), rhs);
  if (!Lt)
    throw error(errc::not_invariant,
                "block map does not respect the quotiented images");
  return transpose(f, *Lt);
}

/// Pullback of the cospan A: K^a -> K^z <- K^b :B, presented as the kernel
/// of (A | -B) with its two projections.
template <class F>
KernelPresentation<F> pullback(const F& f, const Mat<F>& A, const Mat<F>& B) {
  assert(A.rows == B.rows);
  return kernel_basis(f, hstack(f, A, mneg(f, B)), A.cols, B.cols);
}

/// Pushout of the span K^a <- K^z -> K^b, presented as the cokernel of
/// (U; -V) inside K^a (+) K^b.
template <class F>
CokernelPresentation<F> pushout(const F& f, const Mat<F>& U, const Mat<F>& V) {
  assert(U.cols == V.cols);
  return cokernel_basis(f, vstack(f, U, mneg(f, V)));
}

}  // namespace contq
