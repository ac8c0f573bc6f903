#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contq/errors.hpp"
#include "contq/rational.hpp"

namespace contq {

/// Orientation of one maximal segment between consecutive breakpoints.
/// ascending: structure maps flow toward larger coordinates.
enum class Dir { ascending, descending };

enum class PointClass { sink, source, flow_left, flow_right };

/// A continuous type-A quiver with finitely many breakpoints: the real
/// line, a strictly increasing breakpoint set, and one direction per
/// complementary segment (breakpoints+1 of them, rays included).
struct Quiver {
  std::vector<Rational> breakpoints;
  std::vector<Dir> dirs;

  Quiver() = default;
  Quiver(std::vector<Rational> bps, std::vector<Dir> ds);

  int size() const { return static_cast<int>(breakpoints.size()); }

  /// Direction of the segment containing x. For x a breakpoint this is the
  /// segment to its right; use segment_left/right at breakpoints instead.
  Dir dir_at(const Rational& x) const;
  Dir segment_left(int i) const { return dirs[i]; }
  Dir segment_right(int i) const { return dirs[i + 1]; }

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

PointClass classify_point(const Quiver& q, int i);

/// (lo, hi) with lo ⪯ hi when the closed interval between x and y is
/// oriented monotonically from one to the other; empty if incomparable.
std::optional<std::pair<Rational, Rational>> comparable(const Quiver& q,
                                                        const Rational& x,
                                                        const Rational& y);

/// x' = S_{k-1} + S_{k+1} - x; requires both neighbors and x inside the
/// closed window.
Rational mirror_map(const Quiver& q, int k, const Rational& x);

enum class ReflOrientation { source, sink };

/// σ_k: replace the extremal breakpoint S_k by its mirror S'_k and reverse
/// orientation inside the window so S'_k becomes the opposite extremal kind.
/// `orient` selects the reading of the reflected orientation: `source`
/// (the default; a reflected sink becomes a source) or the alternate `sink`
/// reading kept for errata reproduction.
Quiver reflect_quiver(const Quiver& q, int k,
                      ReflOrientation orient = ReflOrientation::source);

/// Warnings only (breakpoints with no orientation change are legal).
std::vector<std::string> validate_quiver(const Quiver& q);

}  // namespace contq
