#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pint/formulas.hpp"
#include "pint/rat.hpp"

namespace pint {

// Complete first-order point theories used by the decision procedures.
enum class PointTheory : uint8_t {
  DloOpen,             // dense, no endpoints            (rationals)
  DloLeft,             // dense, least element only      ([0, inf) ∩ Q)
  DloRight,            // dense, greatest element only   ((-inf, 0] ∩ Q)
  DloClosed,           // dense, both endpoints          ([0, 1] ∩ Q)
  DiscreteUnbounded,   // discrete, no endpoints         (integers)
};

bool theory_dense(PointTheory t);
bool theory_has_min(PointTheory t);
bool theory_has_max(PointTheory t);
std::string_view theory_name(PointTheory t);

// One-sorted point formulas in the language of the order, with the
// endpoint constants and (for the discrete theory) integer offsets on
// terms: literals are `s < t` or `s = t` with s, t of the form
// v + off | MIN + off | MAX + off.
struct LTerm {
  enum class Kind : uint8_t { Var, Min, Max };
  Kind kind = Kind::Var;
  int var = -1;
  long long off = 0;

  static LTerm mkvar(int v, long long off = 0) { return {Kind::Var, v, off}; }
  static LTerm min() { return {Kind::Min, -1, 0}; }
  static LTerm max() { return {Kind::Max, -1, 0}; }
  bool operator==(const LTerm&) const = default;
  auto operator<=>(const LTerm&) const = default;
};

struct Lit {
  bool eq = false;  // false: s < t, true: s = t
  LTerm s, t;
  bool operator==(const Lit&) const = default;
  auto operator<=>(const Lit&) const = default;
};

enum class PConn : uint8_t {
  Lit, True, False, Not, And, Or, Imp, Iff, Exists, Forall,
};

struct PFormula;
using PFormulaPtr = std::shared_ptr<const PFormula>;

struct PFormula {
  PConn kind;
  Lit lit;          // Lit
  PFormulaPtr a, b; // Not uses a; binaries a,b; quantifiers a
  int var = -1;     // quantifiers

  static PFormulaPtr literal(Lit l);
  static PFormulaPtr constant(bool truth);
  static PFormulaPtr negation(PFormulaPtr f);
  static PFormulaPtr binary(PConn c, PFormulaPtr l, PFormulaPtr r);
  static PFormulaPtr quantifier(PConn c, int var, PFormulaPtr body);
};

// Two-sorted to point translation: each interval variable y becomes a pair
// (y_l, y_r) guarded by y_l < y_r at its binder; atoms expand into their
// region constraints. Free variables are allocated point variables too
// (intervals unguarded; callers add guards as needed).
struct Translation {
  PFormulaPtr formula;
  std::map<std::string, int> point_vars;
  std::map<std::string, std::pair<int, int>> interval_vars;
  std::vector<std::string> var_names;  // by point-variable id
  int var_count = 0;
};
Translation translate(const FormulaPtr& f);

// Exact truth of a closed point formula over the theory, by quantifier
// elimination (dense and discrete variants selected by the theory).
bool qe_decide(const PFormulaPtr& sentence, PointTheory t);

// Truth of a closed point formula by recursive test-point evaluation.
bool eval_testpoints(const PFormulaPtr& sentence, PointTheory t);

// Satisfying assignment for the leading existential block of `sentence`
// (inner structure evaluated by test points), smallest values first.
// Values are rationals; integral over the discrete theory.
std::optional<std::map<int, Rat>> find_witness(const PFormulaPtr& sentence,
                                               PointTheory t);

enum class ClassTag : uint8_t { Lin, Den, Dis, Unb };
std::optional<ClassTag> class_from_name(std::string_view name);
std::string_view class_name(ClassTag c);

// A representative structure: a finite chain or an infinite point theory.
struct TheorySpec {
  bool is_chain = false;
  int chain_n = 0;
  PointTheory theory = PointTheory::DloOpen;

  static TheorySpec chain(int n) { return {true, n, PointTheory::DloOpen}; }
  static TheorySpec infinite(PointTheory t) { return {false, 0, t}; }
  std::string name() const;
};

// Representatives checked per class. Den's six exhaust the elementary
// equivalence classes of dense orders, so Den verdicts are absolute
// (VALID); the other classes report VALID_ON_REPRESENTATIVES.
std::vector<TheorySpec> class_representatives(ClassTag c);
bool class_complete(ClassTag c);

struct DecideOutcome {
  bool valid = false;
  std::string verdict;         // VALID | VALID_ON_REPRESENTATIVES | INVALID
  std::string failing_theory;  // set when invalid
  std::string witness;         // "x=[0,1] y=[1,2]"; may be empty
};

// Decides the universally-closed sentence over one representative,
// producing a countermodel assignment for the closure's variables when
// invalid. `sentence` must be a chain of universal quantifiers over a body.
DecideOutcome decide_over(const FormulaPtr& sentence, const TheorySpec& spec);

// Decides over every representative of the class; stops at the first
// failing representative.
DecideOutcome decide_sentence(const FormulaPtr& sentence, ClassTag cls);

}  // namespace pint
