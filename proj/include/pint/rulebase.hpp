#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pint/decide.hpp"
#include "pint/formulas.hpp"
#include "pint/relations.hpp"

namespace pint {

// A derivation rule: within class `cls`, the premises jointly define the
// target. Rules may carry an explicit defining formula (free variables x
// and y, sorts per the target symbol); formula-less rules participate in
// closure computation only.
struct Rule {
  std::string id;
  ClassTag cls = ClassTag::Lin;
  ExplicitSet premises;
  Rel target = Rel::pp4;
  std::string formula_text;  // empty when absent
  FormulaPtr formula;        // parsed body, null when absent
  std::string src;
  bool derived = false;  // added by expand_symmetry
};

struct RuleDiagnostic {
  int line = 0;
  std::string message;
};

struct Rulebase {
  std::vector<Rule> rules;
  std::vector<RuleDiagnostic> errors;
  bool ok() const { return errors.empty(); }
};

// Line-oriented rule file:
//   rule <id> class=<lin|den|dis|unb> premises=<r1,r2,...> target=<r>
//        [formula="<body>"] src="<text>"
// `#` starts a comment line; blank lines are skipped. Duplicate ids and
// malformed fields yield per-line diagnostics.
Rulebase parse_rulebase(std::string_view text);

// Adds the order-reversal image of every rule: premises via symmetric_set,
// a reversible target becomes its reverse, and the formula (when present)
// is dualized, with x and y swapped when the target is symmetric but not
// self-symmetric. Derived ids carry a "~sym" suffix. Idempotent: images
// that already exist (same class, premises, target) or that equal their
// source are not added.
void expand_symmetry(Rulebase& rb);

// The rule's verification query: all x. all y. (body <-> target(x,y)).
// Requires a formula.
FormulaPtr rule_query(const Rule& r);

}  // namespace pint
