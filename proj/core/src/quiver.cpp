#include "contq/quiver.hpp"

#include <algorithm>

namespace contq {

Quiver::Quiver(std::vector<Rational> bps, std::vector<Dir> ds)
    : breakpoints(std::move(bps)), dirs(std::move(ds)) {
  for (size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i]))
      throw error(errc::schema_error, "breakpoints not strictly increasing");
  if (dirs.size() != breakpoints.size() + 1)
    throw error(errc::schema_error, "need breakpoints+1 segment directions");
}

Dir Quiver::dir_at(const Rational& x) const {
  size_t i = std::upper_bound(breakpoints.begin(), breakpoints.end(), x) -
             breakpoints.begin();
  return dirs[i];
}

PointClass classify_point(const Quiver& q, int i) {
  if (i < 0 || i >= q.size())
    throw error(errc::schema_error, "breakpoint index out of range");
  Dir l = q.segment_left(i), r = q.segment_right(i);
  if (l == Dir::ascending && r == Dir::descending) return PointClass::sink;
  if (l == Dir::descending && r == Dir::ascending) return PointClass::source;
  return l == Dir::ascending ? PointClass::flow_right : PointClass::flow_left;
}

std::optional<std::pair<Rational, Rational>> comparable(const Quiver& q,
                                                        const Rational& x,
                                                        const Rational& y) {
  if (x == y) return std::make_pair(x, y);
  Rational lo = std::min(x, y), hi = std::max(x, y);
  // Segments meeting the open interval (lo, hi): indices first..last.
  size_t first = std::upper_bound(q.breakpoints.begin(), q.breakpoints.end(), lo) -
                 q.breakpoints.begin();
  size_t last = std::lower_bound(q.breakpoints.begin(), q.breakpoints.end(), hi) -
                q.breakpoints.begin();
  Dir d = q.dirs[first];
  for (size_t i = first; i <= last; ++i)
    if (q.dirs[i] != d) return std::nullopt;
  if (d == Dir::ascending) return std::make_pair(lo, hi);
  return std::make_pair(hi, lo);
}

Rational mirror_map(const Quiver& q, int k, const Rational& x) {
  if (k <= 0 || k + 1 >= q.size())
    throw error(errc::no_neighbor, "mirror needs both neighbor breakpoints");
  const Rational& a = q.breakpoints[k - 1];
  const Rational& c = q.breakpoints[k + 1];
  if (x < a || x > c) throw error(errc::out_of_window, "x outside [S_{k-1}, S_{k+1}]");
  return a + c - x;
}

Quiver reflect_quiver(const Quiver& q, int k, ReflOrientation orient) {
  if (k <= 0 || k + 1 >= q.size())
    throw error(errc::no_neighbor, "reflection needs both neighbor breakpoints");
  PointClass pc = classify_point(q, k);
  if (pc != PointClass::sink && pc != PointClass::source)
    throw error(errc::not_extremal, "reflection point must be a sink or a source");
  Quiver r = q;
  r.breakpoints[k] = q.breakpoints[k - 1] + q.breakpoints[k + 1] - q.breakpoints[k];
  bool make_source = (pc == PointClass::sink);
  if (orient == ReflOrientation::sink) make_source = !make_source;
  if (make_source) {
    r.dirs[k] = Dir::descending;
    r.dirs[k + 1] = Dir::ascending;
  } else {
    r.dirs[k] = Dir::ascending;
    r.dirs[k + 1] = Dir::descending;
  }
  return r;
}

std::vector<std::string> validate_quiver(const Quiver& q) {
  std::vector<std::string> warnings;
  for (int i = 0; i < q.size(); ++i) {
    PointClass pc = classify_point(q, i);
    if (pc == PointClass::flow_left || pc == PointClass::flow_right)
      warnings.push_back("breakpoint " + std::to_string(i) + " at " +
                         q.breakpoints[i].str() + " has no orientation change");
  }
  return warnings;
}

}  // namespace contq
