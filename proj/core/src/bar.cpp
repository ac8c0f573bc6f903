#include "contq/bar.hpp"

#include <algorithm>

namespace contq {

Bar Bar::make(std::optional<Rational> l, std::optional<Rational> h, bool lc,
              bool hc) {
  Bar b{l, h, l ? lc : true, h ? hc : true};
  if (b.lo && b.hi) {
    if (*b.lo > *b.hi || (*b.lo == *b.hi && !(b.lo_closed && b.hi_closed)))
      throw error(errc::schema_error, "empty bar " + b.str());
  }
  return b;
}

bool Bar::contains(const Rational& x) const {
  if (lo) {
    if (x < *lo) return false;
    if (x == *lo && !lo_closed) return false;
  }
  if (hi) {
    if (x > *hi) return false;
    if (x == *hi && !hi_closed) return false;
  }
  return true;
}

std::string Bar::str() const {
  std::string s = lo ? (lo_closed ? "[" : "(") + lo->str() : "(-inf";
  s += ", ";
  s += hi ? hi->str() + (hi_closed ? "]" : ")") : "+inf)";
  return s;
}

bool bar_less(const Bar& a, const Bar& b) {
  // lo: -inf first; at equal value closed starts earlier.
  if (a.lo.has_value() != b.lo.has_value()) return !a.lo.has_value();
  if (a.lo && *a.lo != *b.lo) return *a.lo < *b.lo;
  if (a.lo && a.lo_closed != b.lo_closed) return a.lo_closed;
  // hi: finite before +inf; at equal value open ends earlier.
  if (a.hi.has_value() != b.hi.has_value()) return a.hi.has_value();
  if (a.hi && *a.hi != *b.hi) return *a.hi < *b.hi;
  if (a.hi && a.hi_closed != b.hi_closed) return !a.hi_closed;
  return false;
}

CellPartition::CellPartition(std::vector<Rational> cs) : cuts(std::move(cs)) {
  for (size_t i = 1; i < cuts.size(); ++i)
    if (!(cuts[i - 1] < cuts[i]))
      throw error(errc::schema_error, "cuts not strictly increasing");
}

std::optional<Rational> CellPartition::open_lo(int cell) const {
  if (is_point(cell)) return point(cell);
  int i = cell / 2;
  if (i == 0) return std::nullopt;
  return cuts[i - 1];
}

std::optional<Rational> CellPartition::open_hi(int cell) const {
  if (is_point(cell)) return point(cell);
  int i = cell / 2;
  if (i == static_cast<int>(cuts.size())) return std::nullopt;
  return cuts[i];
}

int CellPartition::cell_of(const Rational& x) const {
  int lo = std::lower_bound(cuts.begin(), cuts.end(), x) - cuts.begin();
  if (lo < static_cast<int>(cuts.size()) && cuts[lo] == x) return 2 * lo + 1;
  return 2 * lo;
}

Rational CellPartition::representative(int cell) const {
  if (is_point(cell)) return point(cell);
  auto l = open_lo(cell), h = open_hi(cell);
  if (l && h) return midpoint(*l, *h);
  if (l) return *l + Rational(1);
  if (h) return *h - Rational(1);
  return Rational(0);
}

bool CellPartition::cell_in_bar(int cell, const Bar& b) const {
  return b.contains(representative(cell));
}

Bar CellPartition::range_to_bar(int first, int last) const {
  Bar b;
  if (first == 0) {
    b.lo = std::nullopt;
  } else if (is_point(first)) {
    b.lo = point(first);
    b.lo_closed = true;
  } else {
    b.lo = cuts[first / 2 - 1];
    b.lo_closed = false;
  }
  if (last == cell_count() - 1) {
    b.hi = std::nullopt;
  } else if (is_point(last)) {
    b.hi = point(last);
    b.hi_closed = true;
  } else {
    b.hi = cuts[last / 2];
    b.hi_closed = false;
  }
  return b;
}

CellPartition merge_partitions(const CellPartition& a, const CellPartition& b) {
  std::vector<Rational> cs = a.cuts;
  cs.insert(cs.end(), b.cuts.begin(), b.cuts.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return CellPartition(std::move(cs));
}

}  // namespace contq
