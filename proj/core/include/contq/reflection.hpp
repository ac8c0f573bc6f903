#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contq/barcode.hpp"
#include "contq/morphism.hpp"
#include "contq/random.hpp"

namespace contq {

/// Value assigned at the reflected extremal point. `symmetric` is the
/// two-sided kernel/cokernel over both window boundaries; `paper_b`
/// evaluates the one-sided region formula at the degenerate point and is
/// kept only to reproduce the recorded round-trip breakage.
enum class SPrimeValue { symmetric, paper_b };

struct ReflectionConventions {
  SPrimeValue sprime = SPrimeValue::symmetric;
  ReflOrientation orientation = ReflOrientation::source;
};

struct ReflectionContext {
  int k = 0;
  bool plus = true;  ///< true: pivot is a sink (S+); false: a source (S-)
  Rational left, pivot, right, pivot_mirror;
  Quiver source_quiver, target_quiver;
  ReflectionConventions conv;

  Rational mirror(const Rational& x) const { return left + right - x; }
};

inline ReflectionContext make_reflection_context(const Quiver& q, int k, bool plus,
                                                 ReflectionConventions conv = {}) {
  if (k < 0 || k >= q.size())
    throw error(errc::schema_error, "breakpoint index out of range");
  PointClass pc = classify_point(q, k);
  if (plus && pc != PointClass::sink)
    throw error(errc::not_sink, "S+ needs a sink at index " + std::to_string(k));
  if (!plus && pc != PointClass::source)
    throw error(errc::not_source, "S- needs a source at index " + std::to_string(k));
  if (k == 0 || k + 1 >= q.size())
    throw error(errc::no_neighbor, "reflection needs both neighbor breakpoints");
  ReflectionContext ctx;
  ctx.k = k;
  ctx.plus = plus;
  ctx.left = q.breakpoints[k - 1];
  ctx.pivot = q.breakpoints[k];
  ctx.right = q.breakpoints[k + 1];
  ctx.pivot_mirror = ctx.left + ctx.right - ctx.pivot;
  ctx.source_quiver = q;
  ctx.target_quiver = reflect_quiver(q, k, conv.orientation);
  ctx.conv = conv;
  return ctx;
}

template <class F>
struct MembershipWitness {
  bool member = false;
  Mat<F> matrix;
  int rank = 0;
  int required = 0;
};

/// D1' = (V(S_{k-1},S_k) | -V(S_{k+1},S_k)) surjective.
template <class F>
MembershipWitness<F> in_overline_rep(const Rep<F>& v, int k) {
  ReflectionContext ctx = make_reflection_context(v.quiver, k, true);
  Mat<F> A = map_along(v, ctx.left, ctx.pivot);
  Mat<F> C = map_along(v, ctx.right, ctx.pivot);
  Mat<F> d = hstack(v.field, A, mneg(v.field, C));
  int r = rank(v.field, d);
  return MembershipWitness<F>{r == d.rows, d, r, d.rows};
}

/// D2' = (W(S'_k,S_{k+1}); -W(S'_k,S_{k-1})) injective.
template <class F>
MembershipWitness<F> in_underline_rep(const Rep<F>& w, int k) {
  ReflectionContext ctx = make_reflection_context(w.quiver, k, false);
  Mat<F> C = map_along(w, ctx.pivot, ctx.right);
  Mat<F> A = map_along(w, ctx.pivot, ctx.left);
  Mat<F> d = vstack(w.field, C, mneg(w.field, A));
  int r = rank(w.field, d);
  return MembershipWitness<F>{r == d.cols, d, r, d.cols};
}

/// Pointwise profile of the reflected representation: per-cell dimensions
/// on the reflected line together with the defining kernel (S+) or
/// cokernel (S-) presentations on window cells. This is the oracle every
/// assembled reflection is checked against.
template <class F>
struct DimProfile {
  CellPartition partition;  ///< of the reflected line
  std::vector<int> dims;
  struct Window {
    Mat<F> defining;
    int src1 = -1;  ///< input cell of the first summand
    int src2 = -1;  ///< input cell of the second summand
    KernelPresentation<F> ker;
    CokernelPresentation<F> coker;
  };
  std::vector<std::optional<Window>> window;  ///< per reflected cell
  std::vector<int> outside_src;               ///< input cell, or -1 for window cells
};

namespace detail {

/// Reflected partition: cuts outside the open window are kept, cuts inside
/// are mirrored (the pivot mirrors onto the reflected pivot).
inline CellPartition reflect_partition(const CellPartition& part,
                                       const ReflectionContext& ctx) {
  std::vector<Rational> cuts;
  for (const Rational& t : part.cuts) {
    if (t <= ctx.left || t >= ctx.right)
      cuts.push_back(t);
    else
      cuts.push_back(ctx.mirror(t));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return CellPartition(std::move(cuts));
}

}  // namespace detail

template <class F>
DimProfile<F> reflect_dims_plus(const Rep<F>& v, int k,
                                ReflectionConventions conv = {}) {
  ReflectionContext ctx = make_reflection_context(v.quiver, k, true, conv);
  const F& f = v.field;
  DimProfile<F> dp;
  dp.partition = detail::reflect_partition(v.part, ctx);
  int n = dp.partition.cell_count();
  dp.dims.assign(n, 0);
  dp.window.assign(n, std::nullopt);
  dp.outside_src.assign(n, -1);

  int cell_a = v.part.cell_of(ctx.left);
  int cell_b = v.part.cell_of(ctx.pivot);
  int cell_c = v.part.cell_of(ctx.right);
  Mat<F> A_ab = compose_cells(v, cell_a, cell_b);
  Mat<F> A_cb = compose_cells(v, cell_c, cell_b);

  for (int x = 0; x < n; ++x) {
    Rational r = dp.partition.representative(x);
    if (r <= ctx.left || r >= ctx.right) {
      int src = v.part.cell_of(r);
      dp.outside_src[x] = src;
      dp.dims[x] = v.dims[src];
      continue;
    }
    typename DimProfile<F>::Window win;
    if (r == ctx.pivot_mirror) {
      if (conv.sprime == SPrimeValue::symmetric) {
        win.src1 = cell_a;
        win.src2 = cell_c;
        win.defining = hstack(f, A_ab, mneg(f, A_cb));
      } else {
        win.src1 = cell_b;
        win.src2 = cell_c;
        win.defining =
            hstack(f, Mat<F>::identity(v.dims[cell_b], f), mneg(f, A_cb));
      }
    } else if (r < ctx.pivot_mirror) {
      int src_m = v.part.cell_of(ctx.mirror(r));
      win.src1 = cell_a;
      win.src2 = src_m;
      win.defining = hstack(f, A_ab, mneg(f, compose_cells(v, src_m, cell_b)));
    } else {
      int src_m = v.part.cell_of(ctx.mirror(r));
      win.src1 = src_m;
      win.src2 = cell_c;
      win.defining =
          hstack(f, compose_cells(v, src_m, cell_b), mneg(f, A_cb));
    }
    win.ker = kernel_basis(f, win.defining, v.dims[win.src1], v.dims[win.src2]);
    dp.dims[x] = win.ker.dim();
    dp.window[x] = std::move(win);
  }
  return dp;
}

template <class F>
DimProfile<F> reflect_dims_minus(const Rep<F>& w, int k,
                                 ReflectionConventions conv = {}) {
  ReflectionContext ctx = make_reflection_context(w.quiver, k, false, conv);
  const F& f = w.field;
  DimProfile<F> dp;
  dp.partition = detail::reflect_partition(w.part, ctx);
  int n = dp.partition.cell_count();
  dp.dims.assign(n, 0);
  dp.window.assign(n, std::nullopt);
  dp.outside_src.assign(n, -1);

  int cell_a = w.part.cell_of(ctx.left);
  int cell_bp = w.part.cell_of(ctx.pivot);
  int cell_c = w.part.cell_of(ctx.right);
  Mat<F> B_a = compose_cells(w, cell_bp, cell_a);
  Mat<F> B_c = compose_cells(w, cell_bp, cell_c);

  for (int x = 0; x < n; ++x) {
    Rational r = dp.partition.representative(x);
    if (r <= ctx.left || r >= ctx.right) {
      int src = w.part.cell_of(r);
      dp.outside_src[x] = src;
      dp.dims[x] = w.dims[src];
      continue;
    }
    typename DimProfile<F>::Window win;
    if (r == ctx.pivot_mirror) {
      if (conv.sprime == SPrimeValue::symmetric) {
        win.src1 = cell_a;
        win.src2 = cell_c;
        win.defining = vstack(f, B_a, mneg(f, B_c));
      } else {
        win.src1 = cell_c;
        win.src2 = cell_bp;
        win.defining =
            vstack(f, B_c, mneg(f, Mat<F>::identity(w.dims[cell_bp], f)));
      }
    } else if (r < ctx.pivot_mirror) {
      // target cell left of the sink; its mirror sits right of the source
      int src_m = w.part.cell_of(ctx.mirror(r));
      win.src1 = src_m;
      win.src2 = cell_a;
      win.defining = vstack(f, compose_cells(w, cell_bp, src_m), mneg(f, B_a));
    } else {
      int src_m = w.part.cell_of(ctx.mirror(r));
      win.src1 = cell_c;
      win.src2 = src_m;
      win.defining = vstack(f, B_c, mneg(f, compose_cells(w, cell_bp, src_m)));
    }
    win.coker = cokernel_basis(f, win.defining);
    dp.dims[x] = win.coker.dim();
    dp.window[x] = std::move(win);
  }
  return dp;
}

namespace detail {

/// Canonical connecting map between two adjacent reflected cells, in
/// whichever direction it exists; nullopt when no canonical map exists
/// (splits are forced there). `x < y` as cell indices of dp.partition.
template <class F>
std::optional<Mat<F>> canonical_seam_plus(const Rep<F>& v, const DimProfile<F>& dp,
                                          const ReflectionContext& ctx, int x, int y) {
  const F& f = v.field;
  const auto& P = dp.partition;
  Rational rx = P.representative(x), ry = P.representative(y);
  bool x_in = dp.window[x].has_value(), y_in = dp.window[y].has_value();
  if (!x_in && !y_in) return std::nullopt;  // outside pairs carry over
  auto mirror_cell = [&](const Rational& r) { return v.part.cell_of(ctx.mirror(r)); };

  if (!x_in) {  // x = {left boundary} point cell, y in the left half
    return dp.window[y]->ker.proj_first(f);  // V'(y) -> V(S_{k-1})
  }
  if (!y_in) {  // y = {right boundary} point cell, x in the right half
    return dp.window[x]->ker.proj_second(f);  // V'(x) -> V(S_{k+1})
  }
  const auto& wx = *dp.window[x];
  const auto& wy = *dp.window[y];
  bool x_is_pivot = P.is_point(x) && P.point(x) == ctx.pivot_mirror;
  bool y_is_pivot = P.is_point(y) && P.point(y) == ctx.pivot_mirror;
  if (y_is_pivot) {
    // x in the left half; canonical map flows out of the pivot: K_y -> K_x
    if (ctx.conv.sprime == SPrimeValue::paper_b) return std::nullopt;
    Mat<F> mid = block_diag(f, Mat<F>::identity(v.dims[wx.src1], f),
                            compose_cells(v, wy.src2, wx.src2));
    return induced_on_kernels(f, wy.ker, wx.ker, mid);
  }
  if (x_is_pivot) {
    // y in the right half
    if (ctx.conv.sprime == SPrimeValue::paper_b) {
      // only the toward-pivot map exists: K_y -> K_{b'}
      Mat<F> mid = block_diag(f, compose_cells(v, wy.src1, wx.src1),
                              Mat<F>::identity(v.dims[wx.src2], f));
      return induced_on_kernels(f, wy.ker, wx.ker, mid);
    }
    Mat<F> mid = block_diag(f, compose_cells(v, wx.src1, wy.src1),
                            Mat<F>::identity(v.dims[wy.src2], f));
    return induced_on_kernels(f, wx.ker, wy.ker, mid);
  }
  if (ry < ctx.pivot_mirror) {
    // both strictly inside the left half: toward-pivot map K_x -> K_y
    Mat<F> mid = block_diag(f, Mat<F>::identity(v.dims[wx.src1], f),
                            compose_cells(v, mirror_cell(rx), mirror_cell(ry)));
    return induced_on_kernels(f, wx.ker, wy.ker, mid);
  }
  // both strictly inside the right half: toward-pivot map K_y -> K_x
  Mat<F> mid = block_diag(f, compose_cells(v, mirror_cell(ry), mirror_cell(rx)),
                          Mat<F>::identity(v.dims[wx.src2], f));
  return induced_on_kernels(f, wy.ker, wx.ker, mid);
}

template <class F>
std::optional<Mat<F>> canonical_seam_minus(const Rep<F>& w, const DimProfile<F>& dp,
                                           const ReflectionContext& ctx, int x, int y) {
  const F& f = w.field;
  const auto& P = dp.partition;
  Rational rx = P.representative(x), ry = P.representative(y);
  bool x_in = dp.window[x].has_value(), y_in = dp.window[y].has_value();
  if (!x_in && !y_in) return std::nullopt;
  int amb1, amb2;

  if (!x_in) {  // x = {left boundary}: U(a) -> U(y), the a-summand coset map
    const auto& wy = *dp.window[y];
    amb1 = w.dims[wy.src1];
    amb2 = w.dims[wy.src2];
    Mat<F> cols(wy.coker.dim(), amb2, f);
    for (int i = 0; i < cols.rows; ++i)
      for (int j = 0; j < amb2; ++j) cols.at(i, j) = wy.coker.projection.at(i, amb1 + j);
    return cols;
  }
  if (!y_in) {  // y = {right boundary}: U(c) -> U(x), the c-summand coset map
    const auto& wx = *dp.window[x];
    amb1 = w.dims[wx.src1];
    Mat<F> cols(wx.coker.dim(), amb1, f);
    for (int i = 0; i < cols.rows; ++i)
      for (int j = 0; j < amb1; ++j) cols.at(i, j) = wx.coker.projection.at(i, j);
    return cols;
  }
  const auto& wx = *dp.window[x];
  const auto& wy = *dp.window[y];
  bool x_is_pivot = P.is_point(x) && P.point(x) == ctx.pivot_mirror;
  bool y_is_pivot = P.is_point(y) && P.point(y) == ctx.pivot_mirror;
  auto mirror_cell = [&](const Rational& r) { return w.part.cell_of(ctx.mirror(r)); };
  if (y_is_pivot) {
    // x in the left half; canonical into-the-sink map U(x) -> U(b)
    if (ctx.conv.sprime == SPrimeValue::paper_b) return std::nullopt;
    // ambient (W(mirror x) (+) W(a)) -> (W(a) (+) W(c))
    Mat<F> up = hstack(f, Mat<F>(w.dims[wy.src1], w.dims[wx.src1], f),
                       Mat<F>::identity(w.dims[wy.src1], f));
    Mat<F> low = hstack(f, compose_cells(w, wx.src1, wy.src2),
                        Mat<F>(w.dims[wy.src2], w.dims[wx.src2], f));
    return induced_on_cokernels(f, wx.coker, wy.coker, vstack(f, up, low));
  }
  if (x_is_pivot) {
    // y in the right half; canonical into-the-sink map U(y) -> U(b)
    if (ctx.conv.sprime == SPrimeValue::paper_b) return std::nullopt;
    // ambient (W(c) (+) W(mirror y)) -> (W(a) (+) W(c))
    Mat<F> up = hstack(f, Mat<F>(w.dims[wx.src1], w.dims[wy.src1], f),
                       compose_cells(w, wy.src2, wx.src1));
    Mat<F> low = hstack(f, Mat<F>::identity(w.dims[wx.src2], f),
                        Mat<F>(w.dims[wx.src2], w.dims[wy.src2], f));
    return induced_on_cokernels(f, wy.coker, wx.coker, vstack(f, up, low));
  }
  if (ry < ctx.pivot_mirror) {
    // both strictly inside the left half: away-from-sink map U(y) -> U(x)
    Mat<F> mid = block_diag(f, compose_cells(w, mirror_cell(ry), mirror_cell(rx)),
                            Mat<F>::identity(w.dims[wx.src2], f));
    return induced_on_cokernels(f, wy.coker, wx.coker, mid);
  }
  // both strictly inside the right half: away-from-sink map U(x) -> U(y)
  Mat<F> mid = block_diag(f, Mat<F>::identity(w.dims[wx.src1], f),
                          compose_cells(w, mirror_cell(rx), mirror_cell(ry)));
  return induced_on_cokernels(f, wx.coker, wy.coker, mid);
}

template <class F>
std::vector<Bar> emit_bars(const Rep<F>& input, const DimProfile<F>& dp,
                           const ReflectionContext& ctx, bool plus) {
  const auto& P = dp.partition;
  int n = P.cell_count();
  for (int c = 0; c < n; ++c)
    if (dp.dims[c] > 1)
      throw error(errc::paper_inconsistency,
                  "interval transform produced a cell of dimension > 1");
  std::vector<Bar> out;
  int c = 0;
  while (c < n) {
    if (dp.dims[c] == 0) {
      ++c;
      continue;
    }
    int first = c;
    while (c + 1 < n && dp.dims[c + 1] == 1) {
      bool glue;
      bool x_in = dp.window[c].has_value(), y_in = dp.window[c + 1].has_value();
      if (!x_in && !y_in) {
        glue = true;  // outside the window the input bar carries over intact
      } else {
        std::optional<Mat<F>> m =
            plus ? canonical_seam_plus(input, dp, ctx, c, c + 1)
                 : canonical_seam_minus(input, dp, ctx, c, c + 1);
        glue = m.has_value() && !m->is_zero(input.field);
      }
      if (!glue) break;
      ++c;
    }
    out.push_back(P.range_to_bar(first, c));
    ++c;
  }
  return out;
}

}  // namespace detail

/// Closed-form action of S+ on a single interval module: pointwise kernel
/// dimensions, with splits/joins decided by the canonical maps.
template <class F>
std::vector<Bar> transform_interval_plus(const Bar& b, const Quiver& q, int k,
                                         const F& field,
                                         ReflectionConventions conv = {}) {
  Rep<F> v = interval_module(q, b, field);
  ReflectionContext ctx = make_reflection_context(q, k, true, conv);
  DimProfile<F> dp = reflect_dims_plus(v, k, conv);
  return detail::emit_bars(v, dp, ctx, true);
}

template <class F>
std::vector<Bar> transform_interval_minus(const Bar& b, const Quiver& q, int k,
                                          const F& field,
                                          ReflectionConventions conv = {}) {
  Rep<F> w = interval_module(q, b, field);
  ReflectionContext ctx = make_reflection_context(q, k, false, conv);
  DimProfile<F> dp = reflect_dims_minus(w, k, conv);
  return detail::emit_bars(w, dp, ctx, false);
}

/// A reflected representation together with its (output bar, origin bar)
/// bookkeeping, in the exact order the rebuilt cells are indexed by.
template <class F>
struct TaggedReflection {
  Rep<F> rep;
  std::vector<Bar> input_bars;                ///< canonical barcode expansion
  std::vector<std::pair<Bar, int>> outputs;   ///< sorted (bar, origin index)
};

namespace detail {

template <class F>
TaggedReflection<F> reflect_tagged(const Rep<F>& v, int k, bool plus,
                                   ReflectionConventions conv) {
  ReflectionContext ctx = make_reflection_context(v.quiver, k, plus, conv);
  {
    auto bad = validate_rep(v);
    if (!bad.empty())
      throw error(errc::schema_error, "invalid representation: " + bad.front());
  }
  TaggedReflection<F> t;
  t.input_bars = decompose(v).expand();
  for (size_t i = 0; i < t.input_bars.size(); ++i) {
    std::vector<Bar> bars =
        plus ? transform_interval_plus(t.input_bars[i], v.quiver, k, v.field, conv)
             : transform_interval_minus(t.input_bars[i], v.quiver, k, v.field, conv);
    for (const Bar& ob : bars) t.outputs.emplace_back(ob, static_cast<int>(i));
  }
  std::stable_sort(t.outputs.begin(), t.outputs.end(),
                   [](const auto& x, const auto& y) {
                     if (bar_less(x.first, y.first)) return true;
                     if (bar_less(y.first, x.first)) return false;
                     return x.second < y.second;
                   });
  std::vector<Bar> bars;
  for (const auto& e : t.outputs) bars.push_back(e.first);
  t.rep = sum_of_intervals(ctx.target_quiver, bars, v.field);

  // Pointwise verification against the kernel/cokernel oracle.
  DimProfile<F> dp = plus ? reflect_dims_plus(v, k, conv)
                          : reflect_dims_minus(v, k, conv);
  for (int c = 0; c < dp.partition.cell_count(); ++c) {
    int got = dim_at(t.rep, dp.partition.representative(c));
    if (got != dp.dims[c])
      throw error(errc::paper_inconsistency,
                  "assembled dimension " + std::to_string(got) + " at cell " +
                      dp.partition.representative(c).str() + " disagrees with the pointwise value " +
                      std::to_string(dp.dims[c]));
  }
  return t;
}

}  // namespace detail

/// S+ on objects: decompose, transform each bar, rebuild over the reflected
/// quiver, and verify the result against the pointwise kernel oracle.
template <class F>
Rep<F> reflect_plus(const Rep<F>& v, int k, ReflectionConventions conv = {}) {
  TaggedReflection<F> t = detail::reflect_tagged(v, k, true, conv);
  if (conv.orientation == ReflOrientation::source &&
      conv.sprime == SPrimeValue::symmetric &&
      in_overline_rep(v, k).member && !in_underline_rep(t.rep, k).member)
    throw error(errc::paper_inconsistency,
                "image of an admissible representation fails the injectivity test");
  return t.rep;
}

template <class F>
Rep<F> reflect_minus(const Rep<F>& w, int k, ReflectionConventions conv = {}) {
  TaggedReflection<F> t = detail::reflect_tagged(w, k, false, conv);
  if (conv.orientation == ReflOrientation::source &&
      conv.sprime == SPrimeValue::symmetric &&
      in_underline_rep(w, k).member && !in_overline_rep(t.rep, k).member)
    throw error(errc::paper_inconsistency,
                "image of an admissible representation fails the surjectivity test");
  return t.rep;
}

}  // namespace contq
