#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "contq/rep.hpp"

namespace contq {

/// Multiset of bars with multiplicities, canonically sorted. The complete
/// isomorphism invariant for these representations.
struct Barcode {
  std::vector<std::pair<Bar, int>> bars;

  void add(const Bar& b, int mult = 1) {
    for (auto& e : bars)
      if (e.first == b) {
        e.second += mult;
        return;
      }
    bars.emplace_back(b, mult);
  }
  void canonicalize() {
    std::sort(bars.begin(), bars.end(),
              [](const auto& x, const auto& y) { return bar_less(x.first, y.first); });
  }
  int total() const {
    int t = 0;
    for (const auto& e : bars) t += e.second;
    return t;
  }
  std::vector<Bar> expand() const {
    std::vector<Bar> out;
    for (const auto& e : bars)
      for (int i = 0; i < e.second; ++i) out.push_back(e.first);
    return out;
  }
  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < bars.size(); ++i) {
      if (i) s += ", ";
      s += bars[i].first.str();
      if (bars[i].second != 1) s += " x" + std::to_string(bars[i].second);
    }
    return s + "}";
  }
  friend bool operator==(const Barcode&, const Barcode&) = default;
};

inline Barcode to_barcode(std::vector<Bar> bars) {
  Barcode bc;
  for (const Bar& b : bars) bc.add(b);
  bc.canonicalize();
  return bc;
}

/// Rank of the canonical map from the limit to the colimit of the
/// restriction to the cell range [lo_cell, hi_cell].
template <class F>
int generalized_rank(const Rep<F>& v, int lo_cell, int hi_cell) {
  const F& f = v.field;
  int n = hi_cell - lo_cell + 1;
  std::vector<int> offset(n + 1, 0);
  for (int c = 0; c < n; ++c) offset[c + 1] = offset[c] + v.dims[lo_cell + c];
  int total = offset[n];
  if (total == 0) return 0;

  struct Edge {
    int from, to;  // relative cell indices
    const Mat<F>* m;
  };
  std::vector<Edge> edges;
  for (int c = lo_cell; c < hi_cell; ++c) {
    int lo = c;
    int j = lo / 2, side = lo % 2;
    Adjacency adj = v.adjacency(j, side);
    edges.push_back(Edge{adj.from - lo_cell, adj.to - lo_cell, &v.adj_map(j, side)});
  }

  // limit: tuples with v_to = M v_from for every edge
  int eq_rows = 0;
  for (const Edge& e : edges) eq_rows += v.dims[lo_cell + e.to];
  Mat<F> constraints(eq_rows, total, f);
  int row = 0;
  for (const Edge& e : edges) {
    int dt = v.dims[lo_cell + e.to], df = v.dims[lo_cell + e.from];
    for (int i = 0; i < dt; ++i) {
      constraints.at(row + i, offset[e.to] + i) = f.one();
      for (int k = 0; k < df; ++k)
        constraints.at(row + i, offset[e.from] + k) =
            f.sub(constraints.at(row + i, offset[e.from] + k), e.m->at(i, k));
    }
    row += dt;
  }
  Mat<F> lim = kernel(f, constraints);
  if (lim.cols == 0) return 0;

  // colimit: quotient of the direct sum by iota_from(x) - iota_to(Mx)
  int rel_cols = 0;
  for (const Edge& e : edges) rel_cols += v.dims[lo_cell + e.from];
  Mat<F> rel(total, rel_cols, f);
  int col = 0;
  for (const Edge& e : edges) {
    int dt = v.dims[lo_cell + e.to], df = v.dims[lo_cell + e.from];
    for (int k = 0; k < df; ++k) {
      rel.at(offset[e.from] + k, col + k) = f.one();
      for (int i = 0; i < dt; ++i)
        rel.at(offset[e.to] + i, col + k) = f.sub(rel.at(offset[e.to] + i, col + k),
                                                  e.m->at(i, k));
    }
    col += df;
  }
  CokernelPresentation<F> colim = cokernel_basis(f, rel);

  // canonical map: evaluate a section at any one cell (all agree in the
  // colimit); rank of the composite
  Mat<F> canonical = matmul(f, colim.projection, lim);
  return rank(f, canonical);
}

/// Interval decomposition by inclusion-exclusion of generalized ranks.
template <class F>
Barcode decompose(const Rep<F>& v) {
  {
    auto bad = validate_rep(v);
    if (!bad.empty())
      throw error(errc::decomposition_mismatch, "invalid input: " + bad.front());
  }
  const F& f = v.field;
  int n = v.cells();
  // r[i][j] for i <= j; bars only start/end where dims are positive.
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      bool possible = true;
      for (int c = i; c <= j; ++c)
        if (v.dims[c] == 0) {
          possible = false;
          break;
        }
      r[i][j] = possible ? generalized_rank(v, i, j) : 0;
    }
  auto rr = [&](int i, int j) {
    if (i < 0 || j >= n || i > j) return 0;
    return r[i][j];
  };
  Barcode bc;
  std::vector<int> check_dims(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int mult = rr(i, j) - rr(i - 1, j) - rr(i, j + 1) + rr(i - 1, j + 1);
      if (mult < 0)
        throw error(errc::decomposition_mismatch,
                    "negative multiplicity on cell range [" + std::to_string(i) +
                        "," + std::to_string(j) + "]");
      if (mult == 0) continue;
      bc.add(v.part.range_to_bar(i, j), mult);
      for (int c = i; c <= j; ++c) check_dims[c] += mult;
    }
  (void)f;
  if (check_dims != v.dims)
    throw error(errc::decomposition_mismatch,
                "bar multiplicities do not reproduce the dimension vector");
  bc.canonicalize();
  return bc;
}

template <class F>
Rep<F> rebuild(const Quiver& q, const Barcode& bc, const F& field) {
  return sum_of_intervals(q, bc.expand(), field);
}

template <class F>
bool is_isomorphic(const Rep<F>& v, const Rep<F>& w) {
  if (!(v.quiver == w.quiver)) throw error(errc::quiver_mismatch, "is_isomorphic");
  return decompose(v) == decompose(w);
}

}  // namespace contq
