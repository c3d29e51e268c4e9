#pragma once

// Terms over {δ, ⊕, ¬, constants, variables} plus sugar for the derived
// connectives. δ takes an eventually constant argument sequence written
// delta(p1, ..., pk; tail), denoting (p1, ..., pk, tail, tail, ...).

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvdelta/carrier.hpp"

namespace mvdelta {

enum class TermKind {
  kVar,
  kConst,
  kNeg,
  kOplus,
  kDelta,
  // sugar
  kOdot,
  kOminus,
  kDist,
  kJoin,
  kMeet,
  kHalf,
  kHalfN,
  kNFold,
};

class Term {
 public:
  static Term var(std::string name);
  static Term constant(Q01 value);
  static Term neg(Term t);
  static Term oplus(Term l, Term r);
  static Term delta(std::vector<Term> prefix, Term tail);
  static Term odot(Term l, Term r);
  static Term ominus(Term l, Term r);
  static Term dist(Term l, Term r);
  static Term join(Term l, Term r);
  static Term meet(Term l, Term r);
  static Term half(Term t);
  static Term halfn(unsigned n, Term t);
  static Term nfold(unsigned n, Term t);

  static Term zero() { return constant(Q01::zero()); }
  static Term one() { return constant(Q01::one()); }

  TermKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Q01& value() const { return node_->value; }
  unsigned count() const { return node_->count; }
  /// Operands; for kDelta the prefix followed by the tail.
  const std::vector<Term>& children() const { return node_->children; }
  std::size_t delta_prefix_size() const { return node_->children.size() - 1; }
  const Term& delta_tail() const { return node_->children.back(); }

  bool is_core() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    TermKind kind;
    std::string name;
    Q01 value;
    unsigned count = 0;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(TermKind kind, std::vector<Term> children, unsigned count = 0);

  std::shared_ptr<const Node> node_;
};

/// Eventually constant δ argument sequence (prefix..., tail, tail, ...).
struct EvSeq {
  std::vector<Term> prefix;
  Term tail;

  /// i-th element, 1-based.
  const Term& at(std::size_t i) const { return i <= prefix.size() ? prefix[i - 1] : tail; }
  /// Drops the first element.
  EvSeq shift() const;
  /// Prepends an element.
  EvSeq cons(Term head) const;
  Term apply() const { return Term::delta(prefix, tail); }
};

/// Syntax error with 1-based line and column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Term parse_term(std::string_view text);
/// Canonical rendering; parse_term(print_term(t)) == t.
std::string print_term(const Term& t);

enum class Relation { kEq, kLeq };

struct Equation {
  Term lhs;
  Relation rel;
  Term rhs;
};

/// Parses "<term> = <term>" or "<term> <= <term>".
Equation parse_equation(std::string_view text);
std::string print_equation(const Equation& e);

std::set<std::string> free_vars(const Term& t);

/// Rewrites sugar into {Var, Const, Neg, Oplus, Delta}.
Term expand(const Term& t);

class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::invalid_argument("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

using Assignment = std::map<std::string, Value>;

/// Structural evaluation. Throws UnboundVariable or DeltaUnsupported.
Value evaluate(const Term& t, const Assignment& assign, const Carrier& carrier);

}  // namespace mvdelta
