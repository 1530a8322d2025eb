// ============================================================================
// seqmon/trace_io.hpp — CSV trace formats
// ============================================================================
//
// Discrete traces: a header row of proposition names, then one row of 0/1
// values per step; the step index is implicit and starts at 1.
//
// Dense traces: header `time,p1,...`; a row `t,v...` states that the values
// hold on the period (previous_time, t), with previous_time initialized to
// the configured origin t0.  Timestamps must be strictly increasing.
// ============================================================================

#ifndef SEQMON_TRACE_IO_HPP
#define SEQMON_TRACE_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmon/rational.hpp"

namespace seqmon {

class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string field = line.substr(start, comma == std::string::npos ? comma : comma - start);
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    out.push_back(std::move(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline char parse_bit(const std::string& field, std::size_t line) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw TraceError(line, "expected 0 or 1, got '" + field + "'");
}

}  // namespace detail

/// Header + rows of a discrete trace.
class DiscreteCsvReader {
 public:
  explicit DiscreteCsvReader(std::istream& in) : in_(in) {
    std::string header;
    if (!std::getline(in_, header)) throw TraceError(1, "missing header row");
    columns_ = detail::split_csv(header);
    if (columns_.empty() || columns_[0].empty()) throw TraceError(1, "empty header row");
    line_ = 1;
  }

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t line() const { return line_; }

  /// Reads the next row into `row` (resized to the column count); false at
  /// end of input.
  bool next(std::vector<char>& row) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (text.empty() || text == "\r") continue;
      auto fields = detail::split_csv(text);
      if (fields.size() != columns_.size())
        throw TraceError(line_, "expected " + std::to_string(columns_.size()) + " fields, got " +
                                    std::to_string(fields.size()));
      row.resize(columns_.size());
      for (std::size_t i = 0; i < fields.size(); ++i) row[i] = detail::parse_bit(fields[i], line_);
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  std::vector<std::string> columns_;
  std::size_t line_ = 1;
};

/// Header + rows of a dense trace; enforces strictly increasing timestamps.
class DenseCsvReader {
 public:
  DenseCsvReader(std::istream& in, Rational t0) : in_(in), previous_(std::move(t0)) {
    std::string header;
    if (!std::getline(in_, header)) throw TraceError(1, "missing header row");
    auto fields = detail::split_csv(header);
    if (fields.size() < 2 || fields[0] != "time")
      throw TraceError(1, "dense header must be time,<prop>,...");
    columns_.assign(fields.begin() + 1, fields.end());
    line_ = 1;
  }

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t line() const { return line_; }

  /// Reads the next row: the values hold on (begin, end).  False at EOF.
  bool next(Rational& begin, Rational& end, std::vector<char>& row) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (text.empty() || text == "\r") continue;
      auto fields = detail::split_csv(text);
      if (fields.size() != columns_.size() + 1)
        throw TraceError(line_, "expected " + std::to_string(columns_.size() + 1) +
                                    " fields, got " + std::to_string(fields.size()));
      Rational t;
      try {
        t = Rational::from_decimal(fields[0]);
      } catch (const std::invalid_argument& e) {
        throw TraceError(line_, e.what());
      }
      if (!(previous_ < t))
        throw TraceError(line_, "non-monotone timestamp " + t.to_string() + " (previous " +
                                    previous_.to_string() + ")");
      row.resize(columns_.size());
      for (std::size_t i = 0; i < columns_.size(); ++i)
        row[i] = detail::parse_bit(fields[i + 1], line_);
      begin = previous_;
      end = t;
      previous_ = t;
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  std::vector<std::string> columns_;
  Rational previous_;
  std::size_t line_ = 1;
};

}  // namespace seqmon

#endif  // SEQMON_TRACE_IO_HPP
