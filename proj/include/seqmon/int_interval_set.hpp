// ============================================================================
// seqmon/int_interval_set.hpp — Canonical sets of integers as intervals
// ============================================================================
//
// The timed state of a discrete monitor node is a set of future time points,
// held symbolically as a sorted list of disjoint closed integer intervals
// [a,b].  Canonical form: strictly increasing and non-adjacent (b_i + 1 <
// a_{i+1}); adjacent intervals are merged, so equal sets always have equal
// representations.  Only the last interval may have an infinite right end.
//
// The monitor's access pattern is: insert windows whose endpoints grow with
// the step counter (amortized O(1) suffix merge at the back), and prune
// expired points from the front.  Removal at the front is done with a head
// offset so that per-step cost stays independent of the trace length.
// ============================================================================

#ifndef SEQMON_INT_INTERVAL_SET_HPP
#define SEQMON_INT_INTERVAL_SET_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqmon {

struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // kIntervalInf for an unbounded right end

  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

inline constexpr std::int64_t kIntervalInf = std::numeric_limits<std::int64_t>::max();

class IntIntervalSet {
 public:
  IntIntervalSet() = default;

  bool empty() const { return head_ == items_.size(); }
  std::size_t size() const { return items_.size() - head_; }

  /// Canonical view, front to back.
  std::vector<IntInterval> intervals() const {
    return {items_.begin() + static_cast<std::ptrdiff_t>(head_), items_.end()};
  }

  void clear() {
    items_.clear();
    head_ = 0;
  }

  /// Inserts [lo, hi] and restores canonical form.
  void add(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("IntIntervalSet::add: lo > hi");
    if (!empty() && items_.back().hi == kIntervalInf && lo >= items_.back().lo) return;
    // Fast path: extends or follows the last interval (the monitor's case).
    if (empty() || lo > upper_bound_exclusive(items_.back())) {
      items_.push_back({lo, hi});
      return;
    }
    if (lo >= items_.back().lo) {
      if (hi > items_.back().hi || hi == kIntervalInf) items_.back().hi = hi;
      return;
    }
    // General insertion: locate the first interval touching [lo, hi].
    auto first = std::lower_bound(
        items_.begin() + static_cast<std::ptrdiff_t>(head_), items_.end(), lo,
        [](const IntInterval& it, std::int64_t v) { return upper_bound_exclusive(it) < v; });
    auto last = first;
    std::int64_t new_lo = lo;
    std::int64_t new_hi = hi;
    while (last != items_.end() && last->lo <= upper_bound_exclusive({lo, hi})) {
      new_lo = std::min(new_lo, last->lo);
      new_hi = (last->hi == kIntervalInf || new_hi == kIntervalInf) ? kIntervalInf
                                                                    : std::max(new_hi, last->hi);
      ++last;
    }
    if (first == last) {
      items_.insert(first, {new_lo, new_hi});
    } else {
      *first = {new_lo, new_hi};
      items_.erase(first + 1, last);
    }
  }

  /// Intersects with [k, +inf): drops expired points from the front.
  void prune_below(std::int64_t k) {
    while (head_ < items_.size() && items_[head_].hi != kIntervalInf && items_[head_].hi < k) ++head_;
    if (head_ < items_.size() && items_[head_].lo < k) items_[head_].lo = k;
    if (head_ > items_.size() / 2 && head_ > 16) {
      items_.erase(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(head_));
      head_ = 0;
    }
  }

  bool contains(std::int64_t k) const {
    auto it = std::upper_bound(items_.begin() + static_cast<std::ptrdiff_t>(head_), items_.end(), k,
                               [](std::int64_t v, const IntInterval& iv) { return v < iv.lo; });
    if (it == items_.begin() + static_cast<std::ptrdiff_t>(head_)) return false;
    --it;
    return it->hi == kIntervalInf || k <= it->hi;
  }

  friend bool operator==(const IntIntervalSet& a, const IntIntervalSet& b) {
    if (a.size() != b.size()) return false;
    return std::equal(a.items_.begin() + static_cast<std::ptrdiff_t>(a.head_), a.items_.end(),
                      b.items_.begin() + static_cast<std::ptrdiff_t>(b.head_));
  }
  friend bool operator!=(const IntIntervalSet& a, const IntIntervalSet& b) { return !(a == b); }

  std::string to_string() const {
    if (empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = head_; i < items_.size(); ++i) {
      if (i != head_) out += ",";
      if (items_[i].hi == kIntervalInf)
        out += "[" + std::to_string(items_[i].lo) + ",inf]";
      else if (items_[i].lo == items_[i].hi)
        out += "{" + std::to_string(items_[i].lo) + "}";
      else
        out += "[" + std::to_string(items_[i].lo) + "," + std::to_string(items_[i].hi) + "]";
    }
    return out + "}";
  }

  static IntIntervalSet of(std::initializer_list<IntInterval> list) {
    IntIntervalSet s;
    for (const auto& iv : list) s.add(iv.lo, iv.hi);
    return s;
  }

 private:
  // Largest value adjacent-mergeable with the interval ([1,3] absorbs lo=4).
  static std::int64_t upper_bound_exclusive(const IntInterval& iv) {
    return iv.hi == kIntervalInf ? kIntervalInf : iv.hi + 1;
  }

  std::vector<IntInterval> items_;
  std::size_t head_ = 0;
};

}  // namespace seqmon

#endif  // SEQMON_INT_INTERVAL_SET_HPP
