#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pint/structures.hpp"

namespace pint {

enum class Conn : uint8_t { Atom, Not, And, Or, Imp, Iff, Exists, Forall };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Two-sorted first-order formulas over the relation vocabulary. Atoms apply
// a relation symbol to two variables; quantifiers carry the bound sort.
struct Formula {
  Conn kind;
  Rel rel = Rel::pp4;       // Atom
  std::string lhs, rhs;     // Atom argument variables
  FormulaPtr a, b;          // Not uses a; binary connectives use a, b
  std::string var;          // quantifiers
  Sort sort = Sort::Point;  // quantifiers

  static FormulaPtr atom(Rel r, std::string l, std::string rr);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr binary(Conn c, FormulaPtr l, FormulaPtr r);
  static FormulaPtr quantifier(Conn c, std::string v, Sort s, FormulaPtr body);
};

bool structurally_equal(const FormulaPtr& f, const FormulaPtr& g);

struct ParseError {
  enum class Kind { Syntax, UnknownRelation, SortMismatch, UnboundVariable };
  Kind kind;
  size_t pos;  // byte offset into the input
  std::string message;
};

struct ParseResult {
  FormulaPtr formula;  // null on error
  std::optional<ParseError> error;
  // Bindings synthesized for element literals (eval mode only).
  std::vector<std::pair<std::string, Element>> literals;

  explicit operator bool() const { return formula != nullptr; }
};

struct ParseOptions {
  // Sorts of variables that may occur free. Anything else unbound errors.
  std::map<std::string, Sort> free_sorts;
  // Accept element literals (integers and [a,b]) as atom arguments,
  // returning synthesized variable bindings in ParseResult::literals.
  bool allow_elements = false;
};

// Grammar: atoms `rel(v,w)`; connectives `~  &  |  ->  <->` with that
// precedence order (highest first), `->` right-associative, `&`/`|`/`<->`
// left-associative; quantifiers `all v:s.` / `ex v:s.` with s in {p,i} and
// maximal-right scope; parentheses override.
ParseResult parse_formula(std::string_view text, const ParseOptions& opts = {});

// Canonical single-line text; parse(print(f)) is structurally identical to f.
std::string print_formula(const FormulaPtr& f);

// Free variables with their sorts, in first-occurrence order.
std::vector<std::pair<std::string, Sort>> free_variables(const FormulaPtr& f);

using Env = std::map<std::string, Element>;

// Truth over a finite chain; quantifiers range over the chain's points or
// intervals. Free variables must be bound in env to elements of the chain.
bool eval_finite(const FormulaPtr& f, const FiniteChain& chain, const Env& env);

// Order-reversal dual: each atom's symbol is replaced by its dual action
// (R+ symbols keep their name and swap arguments when symmetric-non-self;
// reversible symbols reverse; other vocabulary maps to its dual symbol).
FormulaPtr dual_transform(const FormulaPtr& f);

// Renames free occurrences of `from` to `to` (capture-aware: occurrences
// under a binder of the same name are untouched).
FormulaPtr rename_free(const FormulaPtr& f, const std::string& from,
                       const std::string& to);

// Swaps free occurrences of a and b.
FormulaPtr swap_free(const FormulaPtr& f, const std::string& a,
                     const std::string& b);

}  // namespace pint
