#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "contq/bar.hpp"
#include "contq/linalg.hpp"
#include "contq/quiver.hpp"

namespace contq {

/// One adjacency between a point cell and a neighboring open cell, oriented
/// by the quiver: `from` and `to` are cell indices, the stored matrix has
/// shape dims[to] x dims[from].
struct Adjacency {
  int from = 0;
  int to = 0;
};

/// Orientation of the adjacency at cut j. side=0 is the adjacency between
/// open cell 2j and point cell 2j+1, side=1 between 2j+1 and 2j+2.
inline Adjacency adjacency_cells(const Quiver& q, const CellPartition& part,
                                 int j, int side) {
  int open_cell = side == 0 ? 2 * j : 2 * j + 2;
  int point_cell = 2 * j + 1;
  // The open cell lies inside one quiver segment.
  Rational rep_coord = part.representative(open_cell);
  Dir d = q.dir_at(rep_coord);
  bool toward_point = (side == 0) == (d == Dir::ascending);
  if (toward_point) return Adjacency{open_cell, point_cell};
  return Adjacency{point_cell, open_cell};
}

/// A finitely presented pointwise finite-dimensional representation:
/// piecewise constant on a cell partition, with one structure matrix per
/// adjacent cell pair (direction dictated by the quiver orientation).
template <class F>
struct Rep {
  Quiver quiver;
  F field;
  CellPartition part;
  std::vector<int> dims;
  std::vector<Mat<F>> maps_side0;  ///< per cut: open 2j <-> point 2j+1
  std::vector<Mat<F>> maps_side1;  ///< per cut: point 2j+1 <-> open 2j+2

  int cells() const { return part.cell_count(); }
  int dim_of_cell(int c) const { return dims[c]; }

  Adjacency adjacency(int j, int side) const {
    return adjacency_cells(quiver, part, j, side);
  }
  const Mat<F>& adj_map(int j, int side) const {
    return side == 0 ? maps_side0[j] : maps_side1[j];
  }
  Mat<F>& adj_map(int j, int side) {
    return side == 0 ? maps_side0[j] : maps_side1[j];
  }

  friend bool operator==(const Rep& x, const Rep& y) {
    return x.quiver == y.quiver && x.field.spec() == y.field.spec() &&
           x.part == y.part && x.dims == y.dims &&
           x.maps_side0 == y.maps_side0 && x.maps_side1 == y.maps_side1;
  }
};

template <class F>
Rep<F> zero_rep(const Quiver& q, const F& field) {
  Rep<F> v;
  v.quiver = q;
  v.field = field;
  v.part = CellPartition(q.breakpoints);
  v.dims.assign(v.cells(), 0);
  int m = static_cast<int>(v.part.cuts.size());
  v.maps_side0.assign(m, Mat<F>(0, 0, field));
  v.maps_side1.assign(m, Mat<F>(0, 0, field));
  return v;
}

template <class F>
Rep<F> interval_module(const Quiver& q, const Bar& b, const F& field) {
  std::vector<Rational> cuts = q.breakpoints;
  if (b.lo) cuts.push_back(*b.lo);
  if (b.hi) cuts.push_back(*b.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Rep<F> v;
  v.quiver = q;
  v.field = field;
  v.part = CellPartition(std::move(cuts));
  v.dims.resize(v.cells());
  for (int c = 0; c < v.cells(); ++c) v.dims[c] = v.part.cell_in_bar(c, b) ? 1 : 0;
  int m = static_cast<int>(v.part.cuts.size());
  for (int j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side) {
      Adjacency adj = v.adjacency(j, side);
      Mat<F> mat(v.dims[adj.to], v.dims[adj.from], field);
      if (v.dims[adj.to] == 1 && v.dims[adj.from] == 1) mat.at(0, 0) = field.one();
      (side == 0 ? v.maps_side0 : v.maps_side1).push_back(std::move(mat));
    }
  return v;
}

template <class F>
std::vector<std::string> validate_rep(const Rep<F>& v) {
  std::vector<std::string> out;
  for (const Rational& bp : v.quiver.breakpoints)
    if (!std::binary_search(v.part.cuts.begin(), v.part.cuts.end(), bp))
      out.push_back("partition misses breakpoint " + bp.str());
  if (static_cast<int>(v.dims.size()) != v.cells())
    out.push_back("dims count != cell count");
  for (int d : v.dims)
    if (d < 0) out.push_back("negative dimension");
  size_t m = v.part.cuts.size();
  if (v.maps_side0.size() != m || v.maps_side1.size() != m) {
    out.push_back("adjacency map count != cut count");
    return out;
  }
  for (size_t j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side) {
      Adjacency adj = v.adjacency(static_cast<int>(j), side);
      const Mat<F>& mat = v.adj_map(static_cast<int>(j), side);
      if (mat.rows != v.dims[adj.to] || mat.cols != v.dims[adj.from])
        out.push_back("map at cut " + v.part.cuts[j].str() + " side " +
                      std::to_string(side) + " has shape " +
                      std::to_string(mat.rows) + "x" + std::to_string(mat.cols) +
                      ", cells demand " + std::to_string(v.dims[adj.to]) + "x" +
                      std::to_string(v.dims[adj.from]));
    }
  return out;
}

template <class F>
int dim_at(const Rep<F>& v, const Rational& x) {
  return v.dims[v.part.cell_of(x)];
}

/// Composite of stored adjacency matrices along the chain between two cells.
/// All crossed adjacencies must be oriented in the direction of travel.
template <class F>
Mat<F> compose_cells(const Rep<F>& v, int from_cell, int to_cell) {
  if (from_cell == to_cell) return Mat<F>::identity(v.dims[from_cell], v.field);
  int step = from_cell < to_cell ? 1 : -1;
  Mat<F> acc = Mat<F>::identity(v.dims[from_cell], v.field);
  for (int c = from_cell; c != to_cell; c += step) {
    // adjacency between cells c and c+step
    int lo = std::min(c, c + step);
    int j = lo / 2;
    int side = lo % 2;
    Adjacency adj = v.adjacency(j, side);
    int expect_from = c, expect_to = c + step;
    if (adj.from != expect_from || adj.to != expect_to)
      throw error(errc::incomparable, "structure maps do not flow this way");
    acc = matmul(v.field, v.adj_map(j, side), acc);
  }
  return acc;
}

template <class F>
Mat<F> map_along(const Rep<F>& v, const Rational& x, const Rational& y) {
  auto ord = comparable(v.quiver, x, y);
  if (!ord || !(ord->first == x && ord->second == y))
    throw error(errc::incomparable, x.str() + " does not precede " + y.str());
  return compose_cells(v, v.part.cell_of(x), v.part.cell_of(y));
}

/// Same representation on a finer partition; inserted maps are identities.
template <class F>
Rep<F> refine_partition(const Rep<F>& v, const std::vector<Rational>& extra) {
  std::vector<Rational> cuts = v.part.cuts;
  cuts.insert(cuts.end(), extra.begin(), extra.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts == v.part.cuts) return v;

  Rep<F> r;
  r.quiver = v.quiver;
  r.field = v.field;
  r.part = CellPartition(std::move(cuts));
  r.dims.resize(r.cells());
  for (int c = 0; c < r.cells(); ++c)
    r.dims[c] = v.dims[v.part.cell_of(r.part.representative(c))];
  size_t m = r.part.cuts.size();
  for (size_t j = 0; j < m; ++j) {
    const Rational& cut = r.part.cuts[j];
    auto it = std::lower_bound(v.part.cuts.begin(), v.part.cuts.end(), cut);
    bool old_cut = it != v.part.cuts.end() && *it == cut;
    for (int side = 0; side < 2; ++side) {
      Mat<F> mat;
      if (old_cut) {
        int old_j = static_cast<int>(it - v.part.cuts.begin());
        mat = v.adj_map(old_j, side);
      } else {
        int d = v.dims[v.part.cell_of(cut)];
        mat = Mat<F>::identity(d, v.field);
      }
      (side == 0 ? r.maps_side0 : r.maps_side1).push_back(std::move(mat));
    }
  }
  return r;
}

template <class F>
Rep<F> direct_sum(const Rep<F>& a, const Rep<F>& b) {
  if (!(a.quiver == b.quiver)) throw error(errc::quiver_mismatch, "direct_sum");
  if (!(a.field.spec() == b.field.spec()))
    throw error(errc::field_mismatch, "direct_sum");
  CellPartition common = merge_partitions(a.part, b.part);
  Rep<F> ra = refine_partition(a, common.cuts);
  Rep<F> rb = refine_partition(b, common.cuts);
  Rep<F> r;
  r.quiver = a.quiver;
  r.field = a.field;
  r.part = common;
  r.dims.resize(r.cells());
  for (int c = 0; c < r.cells(); ++c) r.dims[c] = ra.dims[c] + rb.dims[c];
  size_t m = common.cuts.size();
  for (size_t j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side)
      (side == 0 ? r.maps_side0 : r.maps_side1)
          .push_back(block_diag(r.field, ra.adj_map(static_cast<int>(j), side),
                                rb.adj_map(static_cast<int>(j), side)));
  return r;
}

/// Direct sum of interval modules, in the given bar order.
template <class F>
Rep<F> sum_of_intervals(const Quiver& q, const std::vector<Bar>& bars,
                        const F& field) {
  Rep<F> acc = zero_rep(q, field);
  for (const Bar& b : bars) acc = direct_sum(acc, interval_module(q, b, field));
  return acc;
}

}  // namespace contq
