#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contq/errors.hpp"
#include "contq/rational.hpp"

namespace contq {

/// An interval on the line with endpoint-closedness flags. A missing
/// endpoint means the bar runs to -inf / +inf on that side.
struct Bar {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Bar closed(Rational l, Rational h) { return Bar{l, h, true, true}; }
  static Bar make(std::optional<Rational> l, std::optional<Rational> h,
                  bool lc, bool hc);
  static Bar point(Rational x) { return Bar{x, x, true, true}; }

  bool contains(const Rational& x) const;
  bool is_point() const { return lo && hi && *lo == *hi; }

  std::string str() const;

  friend bool operator==(const Bar&, const Bar&) = default;
};

/// Canonical order: by lo (-inf first, closed before open at equal value),
/// then hi (+inf last, open before closed at equal value).
bool bar_less(const Bar& a, const Bar& b);

/// Finite decomposition of the line into points and open intervals on
/// which representations are constant. Cells are indexed left to right:
/// 0 = (-inf, c0), 1 = {c0}, 2 = (c0, c1), ..., 2m = (c_{m-1}, +inf).
struct CellPartition {
  std::vector<Rational> cuts;  ///< strictly increasing

  CellPartition() = default;
  explicit CellPartition(std::vector<Rational> cs);

  int cell_count() const { return 2 * static_cast<int>(cuts.size()) + 1; }
  bool is_point(int cell) const { return cell % 2 == 1; }
  const Rational& point(int cell) const { return cuts[(cell - 1) / 2]; }

  /// Bounds of an open cell; nullopt = infinite on that side.
  std::optional<Rational> open_lo(int cell) const;
  std::optional<Rational> open_hi(int cell) const;

  int cell_of(const Rational& x) const;

  /// A coordinate inside the cell (the point itself, the midpoint, or one
  /// unit into a ray).
  Rational representative(int cell) const;

  /// Whole-cell membership in a bar; exact provided the partition cuts
  /// include the bar's finite endpoints.
  bool cell_in_bar(int cell, const Bar& b) const;

  /// The bar spanned by the cell range [first, last].
  Bar range_to_bar(int first, int last) const;

  friend bool operator==(const CellPartition&, const CellPartition&) = default;
};

/// Union of cut sets.
CellPartition merge_partitions(const CellPartition& a, const CellPartition& b);

}  // namespace contq
