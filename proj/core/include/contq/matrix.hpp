#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "contq/fields.hpp"

namespace contq {

/// Dense row-major matrix over an exact field F. Dimensions may be zero;
/// a 0xN or Nx0 matrix is a legitimate (empty) linear map.
template <class F>
struct Mat {
  using Elem = typename F::Elem;

  int rows = 0;
  int cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(int r, int c, const F& f) : rows(r), cols(c), a(size_t(r) * c, f.zero()) {}

  Elem& at(int i, int j) {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return a[size_t(i) * cols + j];
  }
  const Elem& at(int i, int j) const {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return a[size_t(i) * cols + j];
  }

  static Mat identity(int n, const F& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  static Mat zero(int r, int c, const F& f) { return Mat(r, c, f); }

  bool is_zero(const F& f) const {
    for (const auto& e : a)
      if (!f.is_zero(e)) return false;
    return true;
  }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  std::string str(const F& f) const {
    std::string s = "[";
    for (int i = 0; i < rows; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < cols; ++j) s += (j ? "," : "") + f.str(at(i, j));
    }
    return s + "]";
  }
};

template <class F>
Mat<F> matmul(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.cols == y.rows);
  Mat<F> r(x.rows, y.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const auto& xik = x.at(i, k);
      if (f.is_zero(xik)) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(xik, y.at(k, j)));
    }
  return r;
}

template <class F>
Mat<F> madd(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.same_shape(y));
  Mat<F> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
  return r;
}

template <class F>
Mat<F> msub(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.same_shape(y));
  Mat<F> r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(r.a[i], y.a[i]);
  return r;
}

template <class F>
Mat<F> mneg(const F& f, const Mat<F>& x) {
  Mat<F> r = x;
  for (auto& e : r.a) e = f.neg(e);
  return r;
}

template <class F>
Mat<F> transpose(const F& f, const Mat<F>& x) {
  Mat<F> r(x.cols, x.rows, f);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

/// [x | y]
template <class F>
Mat<F> hstack(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.rows == y.rows);
  Mat<F> r(x.rows, x.cols + y.cols, f);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

/// [x; y]
template <class F>
Mat<F> vstack(const F& f, const Mat<F>& x, const Mat<F>& y) {
  assert(x.cols == y.cols);
  Mat<F> r(x.rows + y.rows, x.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

template <class F>
Mat<F> block_diag(const F& f, const Mat<F>& x, const Mat<F>& y) {
  Mat<F> r(x.rows + y.rows, x.cols + y.cols, f);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
  return r;
}

template <class F>
Mat<F> submatrix_rows(const F& f, const Mat<F>& x, int row0, int nrows) {
  assert(row0 >= 0 && row0 + nrows <= x.rows);
  Mat<F> r(nrows, x.cols, f);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(row0 + i, j);
  return r;
}

}  // namespace contq
