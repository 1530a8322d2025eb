// ============================================================================
// seqmon/parser.hpp — Concrete syntax for past-time metric temporal formulas
// ============================================================================
//
// Grammar (EBNF):
//
//   formula := impl
//   impl    := or ("->" impl)?
//   or      := and (("||" | "or") and)*
//   and     := since (("&&" | "and") since)*
//   since   := unary ("since" bound? unary)?
//   unary   := ("!" | "not" | "pre" | "once" bound? | "historically" bound?) unary | atom
//   atom    := "true" | "false" | ident | "(" formula ")"
//   bound   := "[" number ":" (number | "inf") "]"
//
// Precedence: unary > since > and > or > "->".  `since` is non-associative;
// nesting requires parentheses.  "->" associates to the right.
//
// Bounds are nonnegative decimals; discrete mode additionally requires them
// to be integers.  `pre` is accepted in both modes here (the dense compiler
// rejects it later).
// ============================================================================

#ifndef SEQMON_PARSER_HPP
#define SEQMON_PARSER_HPP

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>

#include "seqmon/formula.hpp"

namespace seqmon {

enum class TimeModel { Discrete, Dense };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  /// 1-based character offset of the offending token.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class FormulaParser {
 public:
  FormulaParser(std::string text, TimeModel model) : text_(std::move(text)), model_(model) {}

  Formula parse() {
    if (text_.find_first_not_of(" \t\r\n") == std::string::npos)
      throw ParseError(1, "empty formula");
    Formula f = parse_implication();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_ + 1, "expected end of input");
    return f;
  }

 private:
  Formula parse_implication() {
    Formula lhs = parse_or();
    skip_space();
    if (match_symbol("->")) return Formula::implication(std::move(lhs), parse_implication());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (true) {
      skip_space();
      if (match_symbol("||") || match_keyword("or"))
        lhs = Formula::disjunction(std::move(lhs), parse_and());
      else
        return lhs;
    }
  }

  Formula parse_and() {
    Formula lhs = parse_since();
    while (true) {
      skip_space();
      if (match_symbol("&&") || match_keyword("and"))
        lhs = Formula::conjunction(std::move(lhs), parse_since());
      else
        return lhs;
    }
  }

  Formula parse_since() {
    Formula lhs = parse_unary();
    skip_space();
    if (match_keyword("since")) {
      std::optional<Bound> bnd = parse_optional_bound();
      Formula rhs = parse_unary();
      return Formula::since(std::move(lhs), std::move(rhs), std::move(bnd));
    }
    return lhs;
  }

  Formula parse_unary() {
    skip_space();
    if (match_symbol("!") || match_keyword("not")) return Formula::negation(parse_unary());
    if (match_keyword("pre")) return Formula::previously(parse_unary());
    if (match_keyword("once")) {
      std::optional<Bound> bnd = parse_optional_bound();
      return Formula::once(parse_unary(), std::move(bnd));
    }
    if (match_keyword("historically")) {
      std::optional<Bound> bnd = parse_optional_bound();
      return Formula::historically(parse_unary(), std::move(bnd));
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_space();
    if (match_symbol("(")) {
      Formula f = parse_implication();
      skip_space();
      if (!match_symbol(")")) throw ParseError(pos_ + 1, "expected ')'");
      return f;
    }
    if (match_keyword("true")) return Formula::top();
    if (match_keyword("false")) return Formula::bottom();
    std::size_t start = pos_;
    std::string name = take_identifier();
    if (name.empty()) throw ParseError(pos_ + 1, "expected a proposition, constant, or '('");
    if (is_reserved(name))
      throw ParseError(start + 1, "unexpected keyword '" + name + "'");
    return Formula::prop(std::move(name));
  }

  std::optional<Bound> parse_optional_bound() {
    skip_space();
    if (!match_symbol("[")) return std::nullopt;
    std::size_t lower_pos = pos_;
    Rational lower = parse_number();
    skip_space();
    if (!match_symbol(":")) throw ParseError(pos_ + 1, "expected ':' in bound");
    skip_space();
    Bound b;
    if (match_keyword("inf")) {
      b = bound_unbounded(std::move(lower));
    } else {
      std::size_t upper_pos = pos_;
      Rational upper = parse_number();
      if (upper < lower) throw ParseError(upper_pos + 1, "bound lower exceeds upper");
      b = bound(std::move(lower), std::move(upper));
      (void)lower_pos;
    }
    skip_space();
    if (!match_symbol("]")) throw ParseError(pos_ + 1, "expected ']'");
    return b;
  }

  Rational parse_number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ == start) throw ParseError(pos_ + 1, "expected a number");
    std::string lit = text_.substr(start, pos_ - start);
    if (model_ == TimeModel::Discrete && lit.find('.') != std::string::npos)
      throw ParseError(start + 1, "non-integer bound in discrete mode");
    try {
      return Rational::from_decimal(lit);
    } catch (const std::invalid_argument& e) {
      throw ParseError(start + 1, e.what());
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool match_symbol(const std::string& sym) {
    skip_space();
    if (text_.compare(pos_, sym.size(), sym) == 0) {
      pos_ += sym.size();
      return true;
    }
    return false;
  }

  // Keywords must not run into identifier characters ("oncex" is an ident).
  bool match_keyword(const std::string& kw) {
    skip_space();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    std::size_t after = pos_ + kw.size();
    if (after < text_.size()) {
      char c = text_[after];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
    }
    pos_ = after;
    return true;
  }

  std::string take_identifier() {
    std::size_t start = pos_;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ < text_.size() && head(text_[pos_])) {
      ++pos_;
      while (pos_ < text_.size() && tail(text_[pos_])) ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  static bool is_reserved(const std::string& name) {
    return name == "true" || name == "false" || name == "not" || name == "and" ||
           name == "or" || name == "pre" || name == "since" || name == "once" ||
           name == "historically" || name == "inf";
  }

  std::string text_;
  TimeModel model_;
  std::size_t pos_ = 0;
};

/// Parses the given formula text under the discrete or dense time model.
inline Formula parse(const std::string& text, TimeModel model) {
  return FormulaParser(text, model).parse();
}

}  // namespace seqmon

#endif  // SEQMON_PARSER_HPP
