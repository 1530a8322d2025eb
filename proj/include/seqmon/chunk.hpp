// ============================================================================
// seqmon/chunk.hpp — Finite fragments of point-free behaviors
// ============================================================================
//
// A chunk is the unit of incremental dense-time input: a span tiled exactly
// by valued segments.  Segmentation is observational, not semantic — a chunk
// may carry stuttering cuts, and the values of its columns need not be
// constant across the whole span.
// ============================================================================

#ifndef SEQMON_CHUNK_HPP
#define SEQMON_CHUNK_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmon/period_set.hpp"
#include "seqmon/rational.hpp"

namespace seqmon {

/// One operand-constant piece produced by synchronization.
struct Segment {
  Rational begin;
  Rational end;
  bool left = false;
  bool right = false;

  friend bool operator==(const Segment&, const Segment&) = default;
};

class Chunk {
 public:
  Chunk(Rational span_begin, std::vector<std::string> columns)
      : begin_(std::move(span_begin)), columns_(std::move(columns)) {}

  /// Appends a segment reaching up to `end` with the given column values.
  void push_segment(Rational end, std::vector<char> values) {
    if (values.size() != columns_.size())
      throw std::invalid_argument("Chunk::push_segment: value arity mismatch");
    const Rational& prev = cuts_.empty() ? begin_ : cuts_.back();
    if (!(prev < end)) throw std::invalid_argument("Chunk::push_segment: non-increasing cut");
    cuts_.push_back(std::move(end));
    rows_.push_back(std::move(values));
  }

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t segment_count() const { return cuts_.size(); }
  const Rational& span_begin() const { return begin_; }
  const Rational& span_end() const {
    if (cuts_.empty()) throw std::logic_error("Chunk: empty span");
    return cuts_.back();
  }
  const Rational& cut(std::size_t i) const { return cuts_[i]; }
  const Rational& segment_begin(std::size_t i) const { return i == 0 ? begin_ : cuts_[i - 1]; }
  bool value(std::size_t segment, std::size_t column) const {
    return rows_[segment][column] != 0;
  }

  int column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
      if (columns_[i] == name) return static_cast<int>(i);
    return -1;
  }

  /// Maximal true periods of one column (stutters merge on the way out).
  PeriodSet column_periods(std::size_t column) const {
    PeriodSet out;
    for (std::size_t i = 0; i < cuts_.size(); ++i)
      if (value(i, column)) out.add(period(segment_begin(i), cuts_[i]));
    return out;
  }

 private:
  Rational begin_;
  std::vector<std::string> columns_;
  std::vector<Rational> cuts_;             // segment right endpoints; back() is the span end
  std::vector<std::vector<char>> rows_;    // per segment, aligned with columns
};

/// Coalesces adjacent segments with equal value vectors.  The represented
/// value function is unchanged.
inline Chunk merge_stutter(const Chunk& c) {
  Chunk out(c.span_begin(), c.columns());
  const std::size_t cols = c.columns().size();
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    std::vector<char> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = c.value(i, j) ? 1 : 0;
    std::size_t k = i;
    while (k + 1 < c.segment_count()) {
      bool same = true;
      for (std::size_t j = 0; j < cols && same; ++j) same = c.value(k + 1, j) == c.value(i, j);
      if (!same) break;
      ++k;
    }
    out.push_segment(c.cut(k), std::move(row));
    i = k;
  }
  return out;
}

/// Divides two single-column chunks over a common span into pieces on which
/// both values are constant.  Piece boundaries are exactly the union of both
/// chunks' boundaries.
inline std::vector<Segment> synchronize(const Chunk& a, const Chunk& b) {
  if (a.columns().size() != 1 || b.columns().size() != 1)
    throw std::invalid_argument("synchronize: expects single-column chunks");
  if (a.span_begin() != b.span_begin() || a.span_end() != b.span_end())
    throw std::invalid_argument("synchronize: span mismatch");
  std::vector<Segment> out;
  std::size_t i = 0, j = 0;
  Rational cursor = a.span_begin();
  while (i < a.segment_count() && j < b.segment_count()) {
    const Rational& ea = a.cut(i);
    const Rational& eb = b.cut(j);
    const Rational& end = ea < eb ? ea : eb;
    out.push_back({cursor, end, a.value(i, 0), b.value(j, 0)});
    cursor = end;
    if (ea <= end) ++i;
    if (eb <= end) ++j;
  }
  return out;
}

/// Segmentation of two period sets over a span at their value changes.
/// Used by the dense timed-since node, whose operands arrive as maximal
/// period sets rather than raw chunks.
inline std::vector<Segment> synchronize_periods(const PeriodSet& a, const PeriodSet& b,
                                                const Rational& span_begin,
                                                const Rational& span_end) {
  std::vector<Rational> cuts;
  auto collect = [&](const PeriodSet& s) {
    for (const Period& p : s.periods()) {
      if (span_begin < p.begin && p.begin < span_end) cuts.push_back(p.begin);
      if (!p.unbounded && span_begin < p.end && p.end < span_end) cuts.push_back(p.end);
    }
  };
  collect(a);
  collect(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(span_end);

  std::vector<Segment> out;
  out.reserve(cuts.size());
  Rational cursor = span_begin;
  for (const Rational& end : cuts) {
    out.push_back({cursor, end, a.covers(cursor, end), b.covers(cursor, end)});
    cursor = end;
  }
  return out;
}

}  // namespace seqmon

#endif  // SEQMON_CHUNK_HPP
