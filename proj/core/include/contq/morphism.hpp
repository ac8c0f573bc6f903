#pragma once

#include <vector>

#include "contq/rep.hpp"

namespace contq {

/// A morphism of representations: one component matrix per cell of a
/// partition shared by source and target.
template <class F>
struct Morphism {
  Rep<F> source;
  Rep<F> target;
  std::vector<Mat<F>> comps;
};

template <class F>
Morphism<F> identity_morphism(const Rep<F>& v) {
  Morphism<F> f{v, v, {}};
  for (int c = 0; c < v.cells(); ++c)
    f.comps.push_back(Mat<F>::identity(v.dims[c], v.field));
  return f;
}

template <class F>
Morphism<F> zero_morphism(const Rep<F>& v, const Rep<F>& w) {
  CellPartition common = merge_partitions(v.part, w.part);
  Morphism<F> f{refine_partition(v, common.cuts), refine_partition(w, common.cuts), {}};
  for (int c = 0; c < f.source.cells(); ++c)
    f.comps.push_back(Mat<F>(f.target.dims[c], f.source.dims[c], v.field));
  return f;
}

template <class F>
std::vector<std::string> validate_morphism(const Morphism<F>& f) {
  std::vector<std::string> out;
  const F& field = f.source.field;
  if (!(f.source.part == f.target.part)) {
    out.push_back("source/target partitions differ");
    return out;
  }
  if (static_cast<int>(f.comps.size()) != f.source.cells()) {
    out.push_back("component count != cell count");
    return out;
  }
  for (int c = 0; c < f.source.cells(); ++c)
    if (f.comps[c].rows != f.target.dims[c] || f.comps[c].cols != f.source.dims[c])
      out.push_back("component shape mismatch at cell " + std::to_string(c));
  if (!out.empty()) return out;
  size_t m = f.source.part.cuts.size();
  for (size_t j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side) {
      Adjacency adj = f.source.adjacency(static_cast<int>(j), side);
      Mat<F> lhs = matmul(field, f.comps[adj.to],
                          f.source.adj_map(static_cast<int>(j), side));
      Mat<F> rhs = matmul(field, f.target.adj_map(static_cast<int>(j), side),
                          f.comps[adj.from]);
      if (!(lhs == rhs))
        out.push_back("naturality fails at cut " + f.source.part.cuts[j].str() +
                      " side " + std::to_string(side));
    }
  return out;
}

/// g after f. Partitions are merged as needed.
template <class F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
  const F& field = f.source.field;
  CellPartition common = merge_partitions(merge_partitions(f.source.part, g.source.part),
                                          g.target.part);
  Morphism<F> r{refine_partition(f.source, common.cuts),
                refine_partition(g.target, common.cuts),
                {}};
  for (int c = 0; c < r.source.cells(); ++c) {
    Rational x = common.representative(c);
    const Mat<F>& fc = f.comps[f.source.part.cell_of(x)];
    const Mat<F>& gc = g.comps[g.source.part.cell_of(x)];
    r.comps.push_back(matmul(field, gc, fc));
  }
  return r;
}

/// Componentwise equality after refining to a common partition.
template <class F>
bool morphism_eq(const Morphism<F>& f, const Morphism<F>& g) {
  CellPartition common = merge_partitions(merge_partitions(f.source.part, g.source.part),
                                          merge_partitions(f.target.part, g.target.part));
  for (int c = 0; c < common.cell_count(); ++c) {
    Rational r = common.representative(c);
    if (!(f.comps[f.source.part.cell_of(r)] == g.comps[g.source.part.cell_of(r)]))
      return false;
  }
  return true;
}

/// Basis of Hom(v, w): the kernel of the stacked naturality constraints.
template <class F>
std::vector<Morphism<F>> hom_space(const Rep<F>& v, const Rep<F>& w) {
  if (!(v.quiver == w.quiver)) throw error(errc::quiver_mismatch, "hom_space");
  if (!(v.field.spec() == w.field.spec()))
    throw error(errc::field_mismatch, "hom_space");
  const F& field = v.field;
  CellPartition common = merge_partitions(v.part, w.part);
  Rep<F> a = refine_partition(v, common.cuts);
  Rep<F> b = refine_partition(w, common.cuts);
  int n = a.cells();

  std::vector<int> offset(n + 1, 0);
  for (int c = 0; c < n; ++c) offset[c + 1] = offset[c] + a.dims[c] * b.dims[c];
  int unknowns = offset[n];

  int eqs = 0;
  size_t m = common.cuts.size();
  for (size_t j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side) {
      Adjacency adj = a.adjacency(static_cast<int>(j), side);
      eqs += b.dims[adj.to] * a.dims[adj.from];
    }

  // unknown f_c[i][k] at offset[c] + i*a.dims[c] + k
  Mat<F> sys(eqs, unknowns, field);
  int row = 0;
  for (size_t j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side) {
      int jj = static_cast<int>(j);
      Adjacency adj = a.adjacency(jj, side);
      const Mat<F>& Mv = a.adj_map(jj, side);
      const Mat<F>& Mw = b.adj_map(jj, side);
      for (int i = 0; i < b.dims[adj.to]; ++i)
        for (int k = 0; k < a.dims[adj.from]; ++k) {
          // sum_t f_to[i][t] Mv[t][k] - sum_t Mw[i][t] f_from[t][k] = 0
          for (int t = 0; t < a.dims[adj.to]; ++t)
            sys.at(row, offset[adj.to] + i * a.dims[adj.to] + t) =
                field.add(sys.at(row, offset[adj.to] + i * a.dims[adj.to] + t),
                          Mv.at(t, k));
          for (int t = 0; t < b.dims[adj.from]; ++t)
            sys.at(row, offset[adj.from] + t * a.dims[adj.from] + k) =
                field.sub(sys.at(row, offset[adj.from] + t * a.dims[adj.from] + k),
                          Mw.at(i, t));
          ++row;
        }
    }

  Mat<F> ker = kernel(field, sys);
  std::vector<Morphism<F>> basis;
  for (int col = 0; col < ker.cols; ++col) {
    Morphism<F> f{a, b, {}};
    for (int c = 0; c < n; ++c) {
      Mat<F> comp(b.dims[c], a.dims[c], field);
      for (int i = 0; i < b.dims[c]; ++i)
        for (int k = 0; k < a.dims[c]; ++k)
          comp.at(i, k) = ker.at(offset[c] + i * a.dims[c] + k, col);
      f.comps.push_back(std::move(comp));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace contq
