// ============================================================================
// seqmon/formula.hpp — Past-time metric temporal formulas
// ============================================================================
//
// Formulas are immutable trees shared through shared_ptr handles; a Formula
// value is cheap to copy and safe to share across threads.  Structural
// deduplication happens later, when a formula is laid out as a subformula
// DAG for compilation (see dag.hpp).
//
// Timing bounds are surface syntax `[a:b]` / `[a:inf]`.  An absent bound
// means untimed and is interpreted as [0,inf); constructors normalize an
// explicit [0:inf] to the untimed form so the two spellings are one value.
// Bound endpoints are closed on the discrete timeline and open on the dense
// one; the interpretation belongs to the engines, not to the syntax.
// ============================================================================

#ifndef SEQMON_FORMULA_HPP
#define SEQMON_FORMULA_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "seqmon/rational.hpp"

namespace seqmon {

enum class FormulaKind {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Pre,
  Since,
  Once,
  Historically,
};

struct Bound {
  Rational lower;
  Rational upper;            // meaningful only when !upper_infinite
  bool upper_infinite = false;

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.upper_infinite != b.upper_infinite) return false;
    return a.lower == b.lower && (a.upper_infinite || a.upper == b.upper);
  }

  std::string to_string() const {
    return "[" + lower.to_string() + ":" + (upper_infinite ? "inf" : upper.to_string()) + "]";
  }
};

inline Bound bound(Rational lower, Rational upper) { return Bound{std::move(lower), std::move(upper), false}; }
inline Bound bound_unbounded(Rational lower) { return Bound{std::move(lower), Rational(0), true}; }

inline bool valid_proposition_name(const std::string& name) {
  if (name.empty()) return false;
  auto head = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(name[0])) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!tail(name[i])) return false;
  return true;
}

class Formula {
 public:
  static Formula top() { return build(FormulaKind::True, {}, std::nullopt, nullptr, nullptr); }
  static Formula bottom() { return build(FormulaKind::False, {}, std::nullopt, nullptr, nullptr); }

  static Formula prop(std::string name) {
    if (!valid_proposition_name(name))
      throw std::invalid_argument("Formula: invalid proposition name '" + name + "'");
    return build(FormulaKind::Prop, std::move(name), std::nullopt, nullptr, nullptr);
  }

  static Formula negation(Formula f) {
    return build(FormulaKind::Not, {}, std::nullopt, f.node_, nullptr);
  }
  static Formula previously(Formula f) {
    return build(FormulaKind::Pre, {}, std::nullopt, f.node_, nullptr);
  }

  static Formula conjunction(Formula a, Formula b) {
    return build(FormulaKind::And, {}, std::nullopt, a.node_, b.node_);
  }
  static Formula disjunction(Formula a, Formula b) {
    return build(FormulaKind::Or, {}, std::nullopt, a.node_, b.node_);
  }
  static Formula implication(Formula a, Formula b) {
    return build(FormulaKind::Implies, {}, std::nullopt, a.node_, b.node_);
  }

  static Formula since(Formula a, Formula b, std::optional<Bound> bnd = std::nullopt) {
    return build(FormulaKind::Since, {}, normalize_bound(std::move(bnd)), a.node_, b.node_);
  }
  static Formula once(Formula a, std::optional<Bound> bnd = std::nullopt) {
    return build(FormulaKind::Once, {}, normalize_bound(std::move(bnd)), a.node_, nullptr);
  }
  static Formula historically(Formula a, std::optional<Bound> bnd = std::nullopt) {
    return build(FormulaKind::Historically, {}, normalize_bound(std::move(bnd)), a.node_, nullptr);
  }

  FormulaKind kind() const { return node_->kind; }
  const std::string& prop_name() const { return node_->name; }
  const std::optional<Bound>& time_bound() const { return node_->bnd; }
  bool is_timed() const { return node_->bnd.has_value(); }

  std::size_t arity() const {
    switch (node_->kind) {
      case FormulaKind::True:
      case FormulaKind::False:
      case FormulaKind::Prop:
        return 0;
      case FormulaKind::Not:
      case FormulaKind::Pre:
      case FormulaKind::Once:
      case FormulaKind::Historically:
        return 1;
      default:
        return 2;
    }
  }

  Formula child(std::size_t i) const {
    if (i >= arity()) throw std::out_of_range("Formula::child");
    return Formula(i == 0 ? node_->left : node_->right);
  }

  /// Number of syntax-tree nodes.
  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity(); ++i) n += child(i).size();
    return n;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind || a.node_->name != b.node_->name ||
        a.node_->bnd != b.node_->bnd)
      return false;
    std::size_t n = a.arity();
    if (n != b.arity()) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (!(a.child(i) == b.child(i))) return false;
    return true;
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  /// Concrete syntax, re-parseable with parse().  Parentheses are emitted
  /// only where precedence requires them.
  std::string to_string() const { return print(Level::Implication); }

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::optional<Bound> bnd;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula build(FormulaKind kind, std::string name, std::optional<Bound> bnd,
                       std::shared_ptr<const Node> left, std::shared_ptr<const Node> right) {
    return Formula(std::make_shared<const Node>(
        Node{kind, std::move(name), std::move(bnd), std::move(left), std::move(right)}));
  }

  static std::optional<Bound> normalize_bound(std::optional<Bound> bnd) {
    if (bnd) {
      if (bnd->lower.is_negative())
        throw std::invalid_argument("Formula: negative time bound");
      if (!bnd->upper_infinite && bnd->upper < bnd->lower)
        throw std::invalid_argument("Formula: bound lower > upper");
      if (bnd->upper_infinite && bnd->lower.is_zero()) return std::nullopt;  // [0:inf] == untimed
    }
    return bnd;
  }

  // Precedence levels, loosest first.
  enum class Level { Implication, Or, And, Since, Unary };

  std::string print(Level ctx) const {
    auto wrap = [&](Level mine, const std::string& body) {
      return static_cast<int>(mine) < static_cast<int>(ctx) ? "(" + body + ")" : body;
    };
    const Node& n = *node_;
    switch (n.kind) {
      case FormulaKind::True: return "true";
      case FormulaKind::False: return "false";
      case FormulaKind::Prop: return n.name;
      case FormulaKind::Not: return wrap(Level::Unary, "!" + child(0).print(Level::Unary));
      case FormulaKind::Pre: return wrap(Level::Unary, "pre " + child(0).print(Level::Unary));
      case FormulaKind::Once:
        return wrap(Level::Unary, "once" + (n.bnd ? n.bnd->to_string() : "") + " " +
                                      child(0).print(Level::Unary));
      case FormulaKind::Historically:
        return wrap(Level::Unary, "historically" + (n.bnd ? n.bnd->to_string() : "") + " " +
                                      child(0).print(Level::Unary));
      case FormulaKind::Since:
        // non-associative: both operands print at unary level
        return wrap(Level::Since, child(0).print(Level::Unary) + " since" +
                                      (n.bnd ? n.bnd->to_string() : "") + " " +
                                      child(1).print(Level::Unary));
      case FormulaKind::And:
        // left-associative chains stay flat; a right-nested child needs parens
        return wrap(Level::And,
                    child(0).print(Level::And) + " && " + child(1).print(Level::Since));
      case FormulaKind::Or:
        return wrap(Level::Or, child(0).print(Level::Or) + " || " + child(1).print(Level::And));
      case FormulaKind::Implies:
        // right-associative
        return wrap(Level::Implication,
                    child(0).print(Level::Or) + " -> " + child(1).print(Level::Implication));
    }
    return {};
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace seqmon

#endif  // SEQMON_FORMULA_HPP
