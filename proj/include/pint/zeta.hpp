#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pint/rat.hpp"
#include "pint/relations.hpp"
#include "pint/rulebase.hpp"

namespace pint {

// Base orders the catalog maps act on.
enum class OrderKind : uint8_t { QQ, ZZ, QQ01 };
std::optional<OrderKind> order_from_name(std::string_view name);
std::string_view order_name(OrderKind k);
bool order_contains(OrderKind k, const Rat& v);
// Classes of linear orders the base order belongs to (soundness link).
std::vector<ClassTag> order_classes(OrderKind k);

// Affine expression ca*a + cb*b + c0 over the input coordinates (points
// use `a` only; intervals expose left `a` and right `b`).
struct Aff {
  Rat ca, cb, c0;
  Rat eval(const Rat& a, const Rat& b) const { return ca * a + cb * b + c0; }
};

enum class CmpOp : uint8_t { Eq, Lt, Gt, Le, Ge };

struct ZGuard {
  bool always = true;
  Aff lhs, rhs;
  CmpOp op = CmpOp::Eq;
  bool eval(const Rat& a, const Rat& b) const;
};

// A point or interval with rational coordinates (interval: a < b).
struct QElem {
  Sort sort = Sort::Point;
  Rat a, b;

  static QElem point(Rat v) { return {Sort::Point, v, v}; }
  static QElem interval(Rat l, Rat r) { return {Sort::Interval, l, r}; }
  bool operator==(const QElem&) const = default;
  bool operator<(const QElem& o) const;
  std::string to_string() const;
  static std::optional<QElem> parse(std::string_view text);
};

bool holds_q(Rel r, const QElem& x, const QElem& y);

// Guarded affine map: overrides take precedence; otherwise the unique
// matching piece applies.
struct GuardedAffineMap {
  struct Piece {
    ZGuard guard;
    Aff out_l, out_r;  // points use out_l only
  };
  std::vector<Piece> pieces;
  std::vector<std::pair<QElem, QElem>> overrides;

  // Image when exactly one override or piece applies.
  std::optional<QElem> apply(const QElem& x) const;
  // Number of applicable overrides/pieces (coverage check).
  int matches(const QElem& x) const;
};

struct BreakWitness {
  Rel rel = Rel::pp4;
  QElem x, y;    // pre-image pair
  QElem fx, fy;  // chosen images (must lie in ζ(x), ζ(y))
};

// An executable truth-preserving relation ζ between two copies of the base
// order: a bijection given by guarded affine maps (with declared inverses)
// united with finitely many extra pairs.
struct ZetaSpec {
  std::string id;
  OrderKind order = OrderKind::QQ;  // domain = codomain
  GuardedAffineMap point_map, point_inv;
  GuardedAffineMap interval_map, interval_inv;
  std::vector<std::pair<QElem, QElem>> point_extras, interval_extras;
  ExplicitSet respects;
  std::vector<BreakWitness> breaks;
  bool expect_pass = true;
  bool deviates = false;  // corrected relative to its source construction

  // All images of x under ζ (bijection image plus extras).
  std::vector<QElem> images(const QElem& x) const;
  ExplicitSet breaks_set() const;
};

struct ZetaCatalog {
  std::vector<ZetaSpec> specs;
  std::vector<RuleDiagnostic> errors;
  bool ok() const { return errors.empty(); }
};

// Line-oriented catalog format (one block per spec):
//   zeta <id> order=<QQ|ZZ|QQ01> expect=<pass|fail> [deviates]
//   point piece guard="<lin cmp>" out="<affine>"
//   point override pre="<elem>" out="<elem>"
//   point extra pre="<elem>" out="<elem>"
//   point inv piece|override ...
//   interval piece guard="..." out="[<affine>,<affine>]"
//   interval override|extra|inv ... as above
//   respects <r1,r2,...>
//   break <rel> x="<elem>" y="<elem>" fx="<elem>" fy="<elem>"
//   end
ZetaCatalog parse_zeta_catalog(std::string_view text);

struct ZetaCheck {
  std::string name;
  bool pass = true;
  std::string detail;  // offending tuple on failure
};

struct ZetaReport {
  std::string id;
  bool pass = true;  // all checks pass
  std::vector<ZetaCheck> checks;
};

// Property-based verification: (a) round-trips of the bijection component
// on a deterministic grid, seeded random samples, and the catalog's own
// special values; (b) for every respected relation, the biconditional over
// sampled pairs and every image combination; (c) every break witness
// violates its biconditional; (d) guard coverage: every sampled element is
// matched by exactly one override-or-piece of each map. When a rulebase is
// supplied, also (e) the soundness link: no applicable rule has premises
// within `respects` and target within `breaks`.
ZetaReport verify_zeta(const ZetaSpec& spec, long long samples,
                       uint64_t seed, const Rulebase* rules = nullptr);

}  // namespace pint
