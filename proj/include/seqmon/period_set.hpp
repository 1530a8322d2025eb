// ============================================================================
// seqmon/period_set.hpp — Canonical sets of open rational time periods
// ============================================================================
//
// A point-free behavior is represented by the set of maximal periods on
// which it holds: a sorted list of open periods (s,e) with exact rational
// endpoints.  Boundary points do not exist in this model, so overlapping
// *and abutting* periods merge ((a,b) u (b,c) = (a,c)); canonical form has
// e_i < s_{i+1} strictly.  Only the last period may be right-unbounded.
// ============================================================================

#ifndef SEQMON_PERIOD_SET_HPP
#define SEQMON_PERIOD_SET_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmon/rational.hpp"

namespace seqmon {

struct Period {
  Rational begin;
  Rational end;             // meaningful only when !unbounded
  bool unbounded = false;   // right end is +inf

  friend bool operator==(const Period& a, const Period& b) {
    if (a.unbounded != b.unbounded) return false;
    return a.begin == b.begin && (a.unbounded || a.end == b.end);
  }
};

inline Period period(Rational begin, Rational end) { return Period{begin, end, false}; }
inline Period period_unbounded(Rational begin) { return Period{begin, Rational(0), true}; }

class PeriodSet {
 public:
  PeriodSet() = default;
  PeriodSet(std::initializer_list<Period> list) {
    for (const auto& p : list) add(p);
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<Period>& periods() const { return items_; }
  void clear() { items_.clear(); }

  /// Inserts one period, merging overlaps and abutments.
  void add(const Period& p) {
    if (!p.unbounded && !(p.begin < p.end)) {
      if (p.begin == p.end) return;  // empty interior
      throw std::invalid_argument("PeriodSet::add: begin > end");
    }
    // Fast path: at or beyond the back (the monitor inserts left to right).
    if (items_.empty() || (bounded_end(items_.back()) && items_.back().end < p.begin)) {
      items_.push_back(p);
      return;
    }
    auto first = std::lower_bound(items_.begin(), items_.end(), p,
                                  [](const Period& it, const Period& v) {
                                    return bounded_end(it) && it.end < v.begin;
                                  });
    auto last = first;
    Period merged = p;
    while (last != items_.end() && (p.unbounded || last->begin <= p.end)) {
      if (last->begin < merged.begin) merged.begin = last->begin;
      if (last->unbounded) merged.unbounded = true;
      else if (!merged.unbounded && merged.end < last->end) merged.end = last->end;
      ++last;
    }
    if (first == last) {
      items_.insert(first, merged);
    } else {
      *first = merged;
      items_.erase(first + 1, last);
    }
  }

  PeriodSet unite(const PeriodSet& other) const {
    PeriodSet out;
    std::size_t i = 0, j = 0;
    while (i < items_.size() || j < other.items_.size()) {
      const Period* next;
      if (j == other.items_.size() ||
          (i < items_.size() && items_[i].begin <= other.items_[j].begin))
        next = &items_[i++];
      else
        next = &other.items_[j++];
      out.append_merge(*next);
    }
    return out;
  }

  PeriodSet intersect(const PeriodSet& other) const {
    PeriodSet out;
    std::size_t i = 0, j = 0;
    while (i < items_.size() && j < other.items_.size()) {
      const Period& a = items_[i];
      const Period& b = other.items_[j];
      Rational lo = a.begin > b.begin ? a.begin : b.begin;
      bool unb = a.unbounded && b.unbounded;
      Rational hi(0);
      if (!unb) {
        if (a.unbounded) hi = b.end;
        else if (b.unbounded) hi = a.end;
        else hi = a.end < b.end ? a.end : b.end;
      }
      if (unb)
        out.items_.push_back(period_unbounded(lo));
      else if (lo < hi)
        out.items_.push_back(period(lo, hi));
      // advance whichever ends first
      if (a.unbounded) ++j;
      else if (b.unbounded) ++i;
      else if (a.end < b.end) ++i;
      else if (b.end < a.end) ++j;
      else { ++i; ++j; }
    }
    return out;
  }

  /// Maximal periods of span minus this set.  All elements must lie inside
  /// the span.
  PeriodSet complement_within(const Period& span) const {
    PeriodSet out;
    Rational cursor = span.begin;
    for (const Period& p : items_) {
      if (p.begin < span.begin || (!span.unbounded && (p.unbounded || span.end < p.end)))
        throw std::invalid_argument("PeriodSet::complement_within: element outside span");
      if (cursor < p.begin) out.items_.push_back(period(cursor, p.begin));
      if (p.unbounded) return out;
      cursor = p.end;
    }
    if (span.unbounded)
      out.items_.push_back(period_unbounded(cursor));
    else if (cursor < span.end)
      out.items_.push_back(period(cursor, span.end));
    return out;
  }

  /// Intersects in place with the open tail (t, +inf).
  void intersect_tail(const Rational& t) {
    std::size_t drop = 0;
    while (drop < items_.size() && bounded_end(items_[drop]) && items_[drop].end <= t) ++drop;
    if (drop > 0) items_.erase(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(drop));
    if (!items_.empty() && items_.front().begin < t) items_.front().begin = t;
  }

  /// The subset lying inside the bounded open period (lo, hi).
  PeriodSet clip(const Rational& lo, const Rational& hi) const {
    PeriodSet out;
    for (const Period& p : items_) {
      if (!p.unbounded && p.end <= lo) continue;
      if (p.begin >= hi) break;
      Rational b = p.begin > lo ? p.begin : lo;
      Rational e = (p.unbounded || p.end > hi) ? hi : p.end;
      if (b < e) out.items_.push_back(period(b, e));
    }
    return out;
  }

  /// True iff the open period (lo, hi) is contained in one element.
  bool covers(const Rational& lo, const Rational& hi) const {
    for (const Period& p : items_) {
      if (p.begin > lo) return false;
      if (p.unbounded || p.end >= hi) return true;
    }
    return false;
  }

  bool contains_point(const Rational& t) const {
    for (const Period& p : items_) {
      if (t <= p.begin) return false;
      if (p.unbounded || t < p.end) return true;
    }
    return false;
  }

  friend bool operator==(const PeriodSet& a, const PeriodSet& b) { return a.items_ == b.items_; }
  friend bool operator!=(const PeriodSet& a, const PeriodSet& b) { return !(a == b); }

  /// Textual form used in debug output and golden tests:
  /// {(s1,e1),(s2,e2),...}, "inf" allowed as the last end.
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i != 0) out += ",";
      out += "(" + items_[i].begin.to_string() + ",";
      out += items_[i].unbounded ? "inf" : items_[i].end.to_string();
      out += ")";
    }
    return out + "}";
  }

 private:
  static bool bounded_end(const Period& p) { return !p.unbounded; }

  // Appends a period known to start at or after every stored begin.
  void append_merge(const Period& p) {
    if (!p.unbounded && !(p.begin < p.end)) return;
    if (items_.empty() || (bounded_end(items_.back()) && items_.back().end < p.begin)) {
      items_.push_back(p);
      return;
    }
    Period& back = items_.back();
    if (back.unbounded) return;
    if (p.unbounded) {
      back.unbounded = true;
    } else if (back.end < p.end) {
      back.end = p.end;
    }
  }

  std::vector<Period> items_;  // sorted, disjoint, non-abutting
};

}  // namespace seqmon

#endif  // SEQMON_PERIOD_SET_HPP
