#pragma once

#include <random>

#include "contq/barcode.hpp"
#include "contq/morphism.hpp"

namespace contq {

/// Deterministic bounded draw (std::uniform_int_distribution is not
/// byte-stable across standard libraries).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}
inline std::int64_t draw_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}
inline bool draw_bool(std::mt19937_64& rng) { return (rng() & 1) != 0; }

struct RepBudget {
  int max_bars = 4;
  int max_cuts = 8;       ///< total partition cuts (breakpoints + endpoints)
  int max_dim = 6;        ///< per-cell dimension bound
  int grid_den = 2;       ///< endpoint grid denominator
  std::int64_t pad = 2;   ///< grid extends this far beyond the breakpoints
  bool allow_infinite = true;
};

/// Random coordinate on the grid spanned by the quiver breakpoints.
inline Rational random_grid_coord(const Quiver& q, const RepBudget& budget,
                                  std::mt19937_64& rng) {
  Rational lo = q.breakpoints.front() - Rational(budget.pad);
  Rational hi = q.breakpoints.back() + Rational(budget.pad);
  std::int64_t den = budget.grid_den;
  std::int64_t nlo = (lo.num * den) / lo.den;
  std::int64_t nhi = (hi.num * den) / hi.den;
  return Rational(draw_range(rng, nlo, nhi), den);
}

inline Bar random_bar(const Quiver& q, const RepBudget& budget, std::mt19937_64& rng) {
  std::optional<Rational> lo, hi;
  if (!budget.allow_infinite || draw(rng, 8) != 0) lo = random_grid_coord(q, budget, rng);
  if (!budget.allow_infinite || draw(rng, 8) != 0) hi = random_grid_coord(q, budget, rng);
  if (lo && hi && *hi < *lo) std::swap(*lo, *hi);
  bool lc = draw_bool(rng), hc = draw_bool(rng);
  if (lo && hi && *lo == *hi) lc = hc = true;
  return Bar::make(lo, hi, lc, hc);
}

/// Random multiset of bars honoring the cut and dimension budgets.
inline std::vector<Bar> random_bars(const Quiver& q, const RepBudget& budget,
                                    std::mt19937_64& rng) {
  std::vector<Bar> bars;
  int want = static_cast<int>(draw(rng, budget.max_bars + 1));
  for (int attempt = 0; attempt < 4 * budget.max_bars + 8 &&
                        static_cast<int>(bars.size()) < want;
       ++attempt) {
    Bar b = random_bar(q, budget, rng);
    std::vector<Rational> cuts = q.breakpoints;
    for (const Bar& e : bars) {
      if (e.lo) cuts.push_back(*e.lo);
      if (e.hi) cuts.push_back(*e.hi);
    }
    if (b.lo) cuts.push_back(*b.lo);
    if (b.hi) cuts.push_back(*b.hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (static_cast<int>(cuts.size()) > budget.max_cuts) continue;
    CellPartition part{cuts};
    bool dims_ok = true;
    for (int c = 0; c < part.cell_count() && dims_ok; ++c) {
      int d = part.cell_in_bar(c, b) ? 1 : 0;
      for (const Bar& e : bars) d += part.cell_in_bar(c, e) ? 1 : 0;
      if (d > budget.max_dim) dims_ok = false;
    }
    if (!dims_ok) continue;
    bars.push_back(b);
  }
  return bars;
}

template <class F>
Mat<F> random_invertible(const F& f, int n, std::mt19937_64& rng) {
  Mat<F> L = Mat<F>::identity(n, f);
  Mat<F> U = Mat<F>::identity(n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j) L.at(i, j) = f.from_int(draw_range(rng, -2, 2));
      if (i < j) U.at(i, j) = f.from_int(draw_range(rng, -2, 2));
    }
  Mat<F> D = Mat<F>::identity(n, f);
  for (int i = 0; i < n; ++i) {
    typename F::Elem e = f.zero();
    while (f.is_zero(e)) {
      std::int64_t u = draw_range(rng, 1, 3);
      e = f.from_int(draw_bool(rng) ? u : -u);
    }
    D.at(i, i) = e;
  }
  return matmul(f, matmul(f, L, D), U);
}

/// Conjugate every cell by an invertible change of basis; the result is a
/// different presentation of the same isomorphism class.
template <class F>
Rep<F> conjugate_rep(const Rep<F>& v, std::mt19937_64& rng) {
  const F& f = v.field;
  std::vector<Mat<F>> g, ginv;
  for (int c = 0; c < v.cells(); ++c) {
    Mat<F> gc = random_invertible(f, v.dims[c], rng);
    auto inv = solve(f, gc, Mat<F>::identity(v.dims[c], f));
    if (!inv) throw error(errc::schema_error, "conjugation matrix not invertible");
    g.push_back(std::move(gc));
    ginv.push_back(std::move(*inv));
  }
  Rep<F> r = v;
  size_t m = v.part.cuts.size();
  for (size_t j = 0; j < m; ++j)
    for (int side = 0; side < 2; ++side) {
      Adjacency adj = v.adjacency(static_cast<int>(j), side);
      if (!g[adj.to].same_shape(Mat<F>::identity(v.dims[adj.to], f)) ||
          !ginv[adj.from].same_shape(Mat<F>::identity(v.dims[adj.from], f)))
        throw error(errc::schema_error, "conjugation shape mismatch");
      r.adj_map(static_cast<int>(j), side) =
          matmul(f, g[adj.to],
                 matmul(f, v.adj_map(static_cast<int>(j), side), ginv[adj.from]));
    }
  return r;
}

/// Deterministic-in-seed random representation: a planted random barcode
/// re-expressed through random per-cell changes of basis.
template <class F>
Rep<F> random_rep(const Quiver& q, const RepBudget& budget, std::uint64_t seed,
                  const F& field) {
  std::mt19937_64 rng(seed);
  std::vector<Bar> bars = random_bars(q, budget, rng);
  Rep<F> v = sum_of_intervals(q, bars, field);
  return conjugate_rep(v, rng);
}

}  // namespace contq
