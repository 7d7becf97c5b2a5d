#include "pint/decide.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pint {

bool theory_dense(PointTheory t) { return t != PointTheory::DiscreteUnbounded; }

bool theory_has_min(PointTheory t) {
  return t == PointTheory::DloLeft || t == PointTheory::DloClosed;
}

bool theory_has_max(PointTheory t) {
  return t == PointTheory::DloRight || t == PointTheory::DloClosed;
}

std::string_view theory_name(PointTheory t) {
  switch (t) {
    case PointTheory::DloOpen: return "dlo-open";
    case PointTheory::DloLeft: return "dlo-left";
    case PointTheory::DloRight: return "dlo-right";
    case PointTheory::DloClosed: return "dlo-closed";
    case PointTheory::DiscreteUnbounded: return "discrete-unbounded";
  }
  return "";
}

PFormulaPtr PFormula::literal(Lit l) {
  auto f = std::make_shared<PFormula>();
  f->kind = PConn::Lit;
  f->lit = l;
  return f;
}

PFormulaPtr PFormula::constant(bool truth) {
  auto f = std::make_shared<PFormula>();
  f->kind = truth ? PConn::True : PConn::False;
  return f;
}

PFormulaPtr PFormula::negation(PFormulaPtr g) {
  auto f = std::make_shared<PFormula>();
  f->kind = PConn::Not;
  f->a = std::move(g);
  return f;
}

PFormulaPtr PFormula::binary(PConn c, PFormulaPtr l, PFormulaPtr r) {
  auto f = std::make_shared<PFormula>();
  f->kind = c;
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}

PFormulaPtr PFormula::quantifier(PConn c, int var, PFormulaPtr body) {
  auto f = std::make_shared<PFormula>();
  f->kind = c;
  f->var = var;
  f->a = std::move(body);
  return f;
}

// ---------------------------------------------------------------------------
// Translation
// ---------------------------------------------------------------------------

namespace {

PFormulaPtr plt(LTerm s, LTerm t) { return PFormula::literal({false, s, t}); }
PFormulaPtr peq(LTerm s, LTerm t) { return PFormula::literal({true, s, t}); }
PFormulaPtr pand(PFormulaPtr a, PFormulaPtr b) {
  return PFormula::binary(PConn::And, std::move(a), std::move(b));
}

struct Translator {
  std::map<std::string, int> free_points;
  std::map<std::string, std::pair<int, int>> free_intervals;
  std::vector<std::string> names;
  // scope of bound variables, innermost last: name -> (sort, l, r)
  struct Binding {
    std::string name;
    Sort sort;
    int l, r;
  };
  std::vector<Binding> scope;

  int fresh(const std::string& n) {
    names.push_back(n);
    return int(names.size()) - 1;
  }

  // Resolves a variable to its point-term(s): points give (id, id).
  std::pair<int, int> resolve(const std::string& name, Sort sort) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name) return {it->l, it->r};
    if (sort == Sort::Point) {
      auto it = free_points.find(name);
      if (it == free_points.end()) {
        int id = fresh(name);
        it = free_points.emplace(name, id).first;
      }
      return {it->second, it->second};
    }
    auto it = free_intervals.find(name);
    if (it == free_intervals.end()) {
      int l = fresh(name + "#l");
      int r = fresh(name + "#r");
      it = free_intervals.emplace(name, std::make_pair(l, r)).first;
    }
    return it->second;
  }

  // Region constraint: point term c lies in region k of interval (a,b).
  PFormulaPtr interval_digit(int a, int b, int c, int k) {
    LTerm ta = LTerm::mkvar(a), tb = LTerm::mkvar(b), tc = LTerm::mkvar(c);
    switch (k) {
      case 0: return plt(tc, ta);
      case 1: return peq(tc, ta);
      case 2: return pand(plt(ta, tc), plt(tc, tb));
      case 3: return peq(tc, tb);
      default: return plt(tb, tc);
    }
  }

  // Region constraint: point term d lies in region k of point c.
  PFormulaPtr point_digit(int c, int d, int k) {
    LTerm tc = LTerm::mkvar(c), td = LTerm::mkvar(d);
    switch (k) {
      case 0: return plt(td, tc);
      case 2: return peq(td, tc);
      default: return plt(tc, td);
    }
  }

  PFormulaPtr atom(Rel r, const std::string& xs, const std::string& ys) {
    auto [xl, xr] = resolve(xs, left_sort(r));
    auto [yl, yr] = resolve(ys, right_sort(r));
    std::string n(rel_name(r));
    if (n == "lt") n = "pp4";
    else if (n == "eqp") n = "pp2";
    else if (n == "gtp") n = "pp0";
    else if (n == "eqi") n = "ii13";
    int k1 = n[2] - '0';
    int k2 = n.size() > 3 ? n[3] - '0' : -1;
    std::string kind = n.substr(0, 2);
    if (kind == "pp") return point_digit(xl, yl, k1);
    if (kind == "ip") return interval_digit(xl, xr, yl, k1);
    if (kind == "pi")
      return pand(point_digit(xl, yl, k1), point_digit(xl, yr, k2));
    return pand(interval_digit(xl, xr, yl, k1),
                interval_digit(xl, xr, yr, k2));
  }

  PFormulaPtr rec(const FormulaPtr& f) {
    switch (f->kind) {
      case Conn::Atom:
        return atom(f->rel, f->lhs, f->rhs);
      case Conn::Not:
        return PFormula::negation(rec(f->a));
      case Conn::And:
        return PFormula::binary(PConn::And, rec(f->a), rec(f->b));
      case Conn::Or:
        return PFormula::binary(PConn::Or, rec(f->a), rec(f->b));
      case Conn::Imp:
        return PFormula::binary(PConn::Imp, rec(f->a), rec(f->b));
      case Conn::Iff:
        return PFormula::binary(PConn::Iff, rec(f->a), rec(f->b));
      case Conn::Exists:
      case Conn::Forall: {
        bool ex = f->kind == Conn::Exists;
        if (f->sort == Sort::Point) {
          int id = fresh(f->var);
          scope.push_back({f->var, Sort::Point, id, id});
          auto body = rec(f->a);
          scope.pop_back();
          return PFormula::quantifier(ex ? PConn::Exists : PConn::Forall, id,
                                      body);
        }
        int l = fresh(f->var + "#l");
        int r = fresh(f->var + "#r");
        scope.push_back({f->var, Sort::Interval, l, r});
        auto body = rec(f->a);
        scope.pop_back();
        auto guard = plt(LTerm::mkvar(l), LTerm::mkvar(r));
        auto inner = ex ? pand(guard, body)
                        : PFormula::binary(PConn::Imp, guard, body);
        return PFormula::quantifier(
            ex ? PConn::Exists : PConn::Forall, l,
            PFormula::quantifier(ex ? PConn::Exists : PConn::Forall, r, inner));
      }
    }
    return nullptr;
  }
};

}  // namespace

Translation translate(const FormulaPtr& f) {
  Translator tr;
  auto out = tr.rec(f);
  return {out, tr.free_points, tr.free_intervals, tr.names,
          int(tr.names.size())};
}

// ---------------------------------------------------------------------------
// Quantifier elimination
// ---------------------------------------------------------------------------

namespace {

struct QCtx {
  PointTheory th;
  bool dense, has_min, has_max;
  explicit QCtx(PointTheory t)
      : th(t), dense(theory_dense(t)), has_min(theory_has_min(t)),
        has_max(theory_has_max(t)) {}
};

enum class LitVal { False, True, Keep };

// Folds ground-decidable literals; canonicalizes the rest so equal
// constraints share one spelling: the left offset moves onto the right
// term, and an equality puts the smaller base term first.
LitVal lit_simplify(Lit& l, const QCtx& c) {
  l.t.off -= l.s.off;
  l.s.off = 0;
  bool same_base = l.s.kind == l.t.kind &&
                   (l.s.kind != LTerm::Kind::Var || l.s.var == l.t.var);
  if (same_base) {
    if (l.eq) return l.t.off == 0 ? LitVal::True : LitVal::False;
    return 0 < l.t.off ? LitVal::True : LitVal::False;
  }
  if (l.eq) {
    if ((l.s.kind == LTerm::Kind::Min && l.t.kind == LTerm::Kind::Max) ||
        (l.s.kind == LTerm::Kind::Max && l.t.kind == LTerm::Kind::Min))
      return LitVal::False;
    if (l.t < l.s) {
      std::swap(l.s, l.t);
      l.t.off -= l.s.off;
      l.s.off = 0;
    }
    return LitVal::Keep;
  }
  if (l.t.kind == LTerm::Kind::Min) return LitVal::False;  // s < MIN
  if (l.s.kind == LTerm::Kind::Max) return LitVal::False;  // MAX < t
  if (l.s.kind == LTerm::Kind::Min && l.t.kind == LTerm::Kind::Max)
    return LitVal::True;
  return LitVal::Keep;
}

// ---------------------------------------------------------------------------
// Quantifier elimination by test-point substitution.
//
// Over each supported infinite order, an existential point quantifier can be
// replaced by a finite disjunction of instances of its body at virtual
// points: below every term (the least element when the order has one), at
// each term the variable is compared against, and -- in dense orders -- at a
// point immediately above each such term.  Over the discrete unbounded order
// the unit neighbourhood of each term replaces the "immediately above"
// points.  Universal quantifiers dualize through negation, which stays at
// the formula level, so no normal-form conversion is ever needed.
//
// Formula nodes are hash-consed so the substitution instances share their
// unchanged parts, and constant folding collapses instances as they arise.
// ---------------------------------------------------------------------------

class QeEngine {
 public:
  explicit QeEngine(const QCtx& c)
      : ctx(c),
        tru(PFormula::constant(true)),
        fls(PFormula::constant(false)) {}

  // Bottom-up elimination: every quantifier sees a quantifier-free body.
  PFormulaPtr eliminate(const PFormulaPtr& f) {
    switch (f->kind) {
      case PConn::Lit:
        return lit(f->lit);
      case PConn::True:
        return tru;
      case PConn::False:
        return fls;
      case PConn::Not:
        return lnot(eliminate(f->a));
      case PConn::And:
        return land(eliminate(f->a), eliminate(f->b));
      case PConn::Or:
        return lor(eliminate(f->a), eliminate(f->b));
      case PConn::Imp:
        return lor(lnot(eliminate(f->a)), eliminate(f->b));
      case PConn::Iff: {
        auto a = eliminate(f->a), b = eliminate(f->b);
        return land(lor(lnot(a), b), lor(lnot(b), a));
      }
      case PConn::Exists:
        return exists(f->var, eliminate(f->a));
      case PConn::Forall:
        return lnot(exists(f->var, lnot(eliminate(f->a))));
    }
    return nullptr;
  }

 private:
  // A virtual point: below every term, exactly at a term, or (dense orders
  // only) in the gap immediately above a term.
  struct VPoint {
    enum class K { BelowAll, At, Above } k = K::BelowAll;
    LTerm t;
    auto operator<=>(const VPoint&) const = default;
  };

  struct NodeKey {
    PConn kind = PConn::True;
    const PFormula* a = nullptr;
    const PFormula* b = nullptr;
    Lit lit;
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    size_t operator()(const NodeKey& k) const {
      uint64_t h = 1469598103934665603ull;
      auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
      };
      mix(uint64_t(k.kind));
      mix(uintptr_t(k.a));
      mix(uintptr_t(k.b));
      mix(k.lit.eq);
      mix(uint64_t(k.lit.s.kind) * 131 + uint64_t(uint32_t(k.lit.s.var)));
      mix(uint64_t(k.lit.s.off));
      mix(uint64_t(k.lit.t.kind) * 131 + uint64_t(uint32_t(k.lit.t.var)));
      mix(uint64_t(k.lit.t.off));
      return size_t(h);
    }
  };

  const QCtx& ctx;
  PFormulaPtr tru, fls;
  std::unordered_map<NodeKey, PFormulaPtr, NodeKeyHash> pool;

  PFormulaPtr intern(PConn kind, PFormulaPtr a, PFormulaPtr b,
                     const Lit& l = {}) {
    NodeKey key{kind, a.get(), b.get(), l};
    auto [it, fresh] = pool.try_emplace(key, nullptr);
    if (!fresh) return it->second;
    it->second = kind == PConn::Lit ? PFormula::literal(l)
                 : kind == PConn::Not
                     ? PFormula::negation(std::move(a))
                     : PFormula::binary(kind, std::move(a), std::move(b));
    return it->second;
  }

  PFormulaPtr lit(Lit l) {
    switch (lit_simplify(l, ctx)) {
      case LitVal::True:
        return tru;
      case LitVal::False:
        return fls;
      case LitVal::Keep:
        break;
    }
    return intern(PConn::Lit, nullptr, nullptr, l);
  }

  // Negation normal form: the engine keeps every formula a positive
  // And/Or combination of atoms, so negation rewrites atoms and dualizes
  // connectives.  Memoized per node (both directions) to stay linear.
  std::unordered_map<const PFormula*, PFormulaPtr> negmemo;

  PFormulaPtr lnot(const PFormulaPtr& a) {
    if (a->kind == PConn::True) return fls;
    if (a->kind == PConn::False) return tru;
    if (auto it = negmemo.find(a.get()); it != negmemo.end())
      return it->second;
    PFormulaPtr r;
    switch (a->kind) {
      case PConn::Lit: {
        const Lit& l = a->lit;
        if (l.eq)  // not (s = t): s < t or t < s
          r = lor(lit({false, l.s, l.t}), lit({false, l.t, l.s}));
        else if (ctx.dense)  // not (s < t): t < s or s = t
          r = lor(lit({false, l.t, l.s}), lit({true, l.s, l.t}));
        else {  // discrete: not (s < t): t < s + 1
          LTerm u = l.s;
          u.off += 1;
          r = lit({false, l.t, u});
        }
        break;
      }
      case PConn::And:
        r = lor(lnot(a->a), lnot(a->b));
        break;
      case PConn::Or:
        r = land(lnot(a->a), lnot(a->b));
        break;
      default:
        throw std::logic_error("lnot: unexpected connective");
    }
    negmemo.emplace(a.get(), r);
    negmemo.emplace(r.get(), a);
    return r;
  }

  // a entails b (or contradicts it) for canonicalized literal nodes.
  enum class LitRel { None, Implies, Excludes };
  static LitRel lit_rel(const PFormulaPtr& x, const PFormulaPtr& y) {
    if (x->kind != PConn::Lit || y->kind != PConn::Lit) return LitRel::None;
    const Lit &a = x->lit, &b = y->lit;
    bool same = a.s.kind == b.s.kind && a.s.var == b.s.var &&
                a.t.kind == b.t.kind && a.t.var == b.t.var;
    bool swapped = a.s.kind == b.t.kind && a.s.var == b.t.var &&
                   a.t.kind == b.s.kind && a.t.var == b.s.var;
    if (!same && !swapped) return LitRel::None;
    // after lit_simplify both have s.off == 0: compare via t offsets
    long long k = a.t.off, m = swapped ? -b.t.off : b.t.off;
    if (a.eq && b.eq) return k == m ? LitRel::Implies : LitRel::Excludes;
    if (a.eq) {  // s = t+k  vs  s < t+m  (or t+m < s when swapped)
      bool lt = swapped ? (m < k) : (k < m);
      return lt ? LitRel::Implies : LitRel::Excludes;
    }
    if (b.eq) return LitRel::None;  // a strict cannot imply an equality
    if (same) return k <= m ? LitRel::Implies : LitRel::None;
    // s < t+k  vs  t < s+m' : both cannot hold when k + m' <= 0
    return k + b.t.off <= 0 ? LitRel::Excludes : LitRel::None;
  }

  static bool same_base(const LTerm& x, const LTerm& y) {
    return x.kind == y.kind && (x.kind != LTerm::Kind::Var || x.var == y.var);
  }

  // Endpoint entailments: every point sits in [MIN, MAX], so a comparison
  // with any term bounds the term against the ends of the order.
  static LitRel lit_rel_ends(const PFormulaPtr& x, const PFormulaPtr& y) {
    LitRel r = lit_rel(x, y);
    if (r != LitRel::None || x->kind != PConn::Lit || y->kind != PConn::Lit)
      return r;
    const Lit &a = x->lit, &b = y->lit;
    if (b.eq) return LitRel::None;
    long long k = a.t.off, m = b.t.off;
    // a = s ? t+k entails b = MIN < t+m since MIN <= s  (strict: m >= k)
    if (b.s.kind == LTerm::Kind::Min && same_base(b.t, a.t) &&
        (a.eq ? m > k : m >= k))
      return LitRel::Implies;
    // a = s ? t+k entails b = s < MAX+m since t <= MAX
    if (b.t.kind == LTerm::Kind::Max && same_base(b.s, a.s) &&
        (a.eq ? m > k : m >= k))
      return LitRel::Implies;
    return LitRel::None;
  }

  // s < t+k  |  t < s+m  covers every point of a total order iff k+m > 0;
  // a strict endpoint bound plus the matching equality also covers, since
  // no point lies beyond MIN or MAX.
  static bool covers_end(const Lit& st, const Lit& eq) {
    if (st.eq || !eq.eq) return false;
    long long k = st.t.off, m = eq.t.off;
    // MIN < t+k  |  t = MIN+m   (every t >= MIN)
    if (st.s.kind == LTerm::Kind::Min && eq.t.kind == LTerm::Kind::Min &&
        same_base(st.t, eq.s) && (k > 0 || (k == 0 && m == 0)))
      return true;
    // t < MAX+k  |  t = MAX+m   (every t <= MAX)
    if (st.t.kind == LTerm::Kind::Max && eq.t.kind == LTerm::Kind::Max &&
        same_base(st.s, eq.s) && (k > 0 || (k == 0 && m == 0)))
      return true;
    return false;
  }

  static bool lit_covers(const PFormulaPtr& x, const PFormulaPtr& y) {
    if (x->kind != PConn::Lit || y->kind != PConn::Lit) return false;
    const Lit &a = x->lit, &b = y->lit;
    if (covers_end(a, b) || covers_end(b, a)) return true;
    if (a.eq || b.eq) return false;
    bool swapped = a.s.kind == b.t.kind && a.s.var == b.t.var &&
                   a.t.kind == b.s.kind && a.t.var == b.s.var;
    return swapped && a.t.off + b.t.off > 0;
  }

  static bool absorbs(const PFormulaPtr& whole, PConn inner,
                      const PFormulaPtr& part) {
    return whole->kind == inner && (whole->a == part || whole->b == part);
  }

  struct PropKey {
    const PFormula* c;
    const PFormula* f;
    bool conj;
    bool operator==(const PropKey&) const = default;
  };
  struct PropKeyHash {
    size_t operator()(const PropKey& k) const {
      uint64_t h = uintptr_t(k.c) * 0x9e3779b97f4a7c15ull;
      h ^= uintptr_t(k.f) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return size_t(h ^ uint64_t(k.conj));
    }
  };
  std::unordered_map<PropKey, PFormulaPtr, PropKeyHash> propmemo;

  // Rewrites f under a sibling literal context c: inside a conjunction with
  // c, atoms c entails become true and atoms it excludes become false;
  // inside a disjunction, atoms entailing c become false and atoms that
  // complete c to the whole order become true.  Branches then fold away.
  PFormulaPtr prop(const PFormulaPtr& c, const PFormulaPtr& f, bool conj) {
    if (f->kind == PConn::Lit) {
      if (conj) {
        switch (lit_rel_ends(c, f)) {
          case LitRel::Implies:
            return tru;
          case LitRel::Excludes:
            return fls;
          case LitRel::None:
            return f;
        }
      }
      if (lit_rel_ends(f, c) == LitRel::Implies) return fls;
      if (lit_covers(c, f)) return tru;
      return f;
    }
    if (f->kind != PConn::And && f->kind != PConn::Or) return f;
    PropKey k{c.get(), f.get(), conj};
    if (auto it = propmemo.find(k); it != propmemo.end()) return it->second;
    PFormulaPtr a = prop(c, f->a, conj), b = prop(c, f->b, conj);
    PFormulaPtr r = a == f->a && b == f->b ? f
                    : f->kind == PConn::And ? land(std::move(a), std::move(b))
                                            : lor(std::move(a), std::move(b));
    propmemo.emplace(k, r);
    return r;
  }

  PFormulaPtr land(PFormulaPtr a, PFormulaPtr b) {
    if (a->kind == PConn::False || b->kind == PConn::False) return fls;
    if (a->kind == PConn::True) return b;
    if (b->kind == PConn::True) return a;
    if (a == b) return a;
    if (absorbs(a, PConn::Or, b)) return b;  // (b | x) & b == b
    if (absorbs(b, PConn::Or, a)) return a;
    switch (lit_rel_ends(a, b)) {
      case LitRel::Implies: return a;       // a & b == a when a entails b
      case LitRel::Excludes: return fls;
      case LitRel::None: break;
    }
    switch (lit_rel_ends(b, a)) {
      case LitRel::Implies: return b;
      case LitRel::Excludes: return fls;
      case LitRel::None: break;
    }
    if (a->kind == PConn::Lit) {
      if (PFormulaPtr b2 = prop(a, b, true); b2 != b)
        return land(std::move(a), std::move(b2));
    }
    if (b->kind == PConn::Lit) {
      if (PFormulaPtr a2 = prop(b, a, true); a2 != a)
        return land(std::move(a2), std::move(b));
    }
    if (b.get() < a.get()) std::swap(a, b);  // commutative: one spelling
    return intern(PConn::And, std::move(a), std::move(b));
  }

  PFormulaPtr lor(PFormulaPtr a, PFormulaPtr b) {
    if (a->kind == PConn::True || b->kind == PConn::True) return tru;
    if (a->kind == PConn::False) return b;
    if (b->kind == PConn::False) return a;
    if (a == b) return a;
    if (absorbs(a, PConn::And, b)) return b;  // (b & x) | b == b
    if (absorbs(b, PConn::And, a)) return a;
    if (lit_rel_ends(a, b) == LitRel::Implies) return b;  // a | b == b
    if (lit_rel_ends(b, a) == LitRel::Implies) return a;
    if (lit_covers(a, b)) return tru;  // the pair exhausts the order
    if (a->kind == PConn::Lit) {
      if (PFormulaPtr b2 = prop(a, b, false); b2 != b)
        return lor(std::move(a), std::move(b2));
    }
    if (b->kind == PConn::Lit) {
      if (PFormulaPtr a2 = prop(b, a, false); a2 != a)
        return lor(std::move(a2), std::move(b));
    }
    if (b.get() < a.get()) std::swap(a, b);
    return intern(PConn::Or, std::move(a), std::move(b));
  }

  // Whether v occurs beneath f, memoized so substitution and miniscoping
  // can skip whole v-free subtrees.
  bool has_v(const PFormulaPtr& f, int v,
             std::unordered_map<const PFormula*, char>& hasv) {
    if (auto it = hasv.find(f.get()); it != hasv.end()) return it->second;
    bool h = false;
    if (f->kind == PConn::Lit) {
      const Lit& l = f->lit;
      h = (l.s.kind == LTerm::Kind::Var && l.s.var == v) ||
          (l.t.kind == LTerm::Kind::Var && l.t.var == v);
    } else {
      if (f->a) h = has_v(f->a, v, hasv);
      if (f->b) h = has_v(f->b, v, hasv) || h;
    }
    hasv.emplace(f.get(), char(h));
    return h;
  }

  // Lower-bound atoms on v, normalized so the atom reads  term <> v.  In a
  // formula positive in its atoms, only these can open a satisfying region
  // from below, so only they contribute substitution points.
  void bounds(const PFormulaPtr& f, int v,
              std::unordered_map<const PFormula*, char>& hasv,
              std::unordered_set<const PFormula*>& vis,
              std::vector<LTerm>& eqs, std::vector<LTerm>& lows) {
    if (!has_v(f, v, hasv) || !vis.insert(f.get()).second) return;
    if (f->kind == PConn::Lit) {
      const Lit& l = f->lit;
      bool sv = l.s.kind == LTerm::Kind::Var && l.s.var == v;
      bool tv = l.t.kind == LTerm::Kind::Var && l.t.var == v;
      if (sv != tv) {
        LTerm w = sv ? l.t : l.s;
        w.off -= (sv ? l.s : l.t).off;  // v + a <> w  ==  v <> w - a
        if (l.eq)
          eqs.push_back(w);
        else if (tv)  // w < v: a strict lower bound
          lows.push_back(w);
      }
      return;
    }
    if (f->a) bounds(f->a, v, hasv, vis, eqs, lows);
    if (f->b) bounds(f->b, v, hasv, vis, eqs, lows);
  }

  PFormulaPtr subst_lit(const Lit& l, int v, const VPoint& p) {
    bool sv = l.s.kind == LTerm::Kind::Var && l.s.var == v;
    bool tv = l.t.kind == LTerm::Kind::Var && l.t.var == v;
    if (sv == tv) return lit(l);
    if (p.k == VPoint::K::BelowAll) {
      if (l.eq) return fls;
      return sv ? tru : fls;  // v < w holds below all terms; w < v fails
    }
    LTerm w = sv ? l.t : l.s;
    w.off -= (sv ? l.s : l.t).off;
    if (p.k == VPoint::K::At)
      return sv ? lit({l.eq, p.t, w}) : lit({l.eq, w, p.t});
    // p is the gap immediately above p.t: no term of the body lies between.
    if (l.eq) return fls;
    if (sv) return lit({false, p.t, w});  // (t + eps) < w  iff  t < w
    return lor(lit({false, w, p.t}), lit({true, w, p.t}));  // w <= t
  }

  PFormulaPtr subst(const PFormulaPtr& f, int v, const VPoint& p,
                    const std::unordered_map<const PFormula*, char>& hasv,
                    std::unordered_map<const PFormula*, PFormulaPtr>& memo) {
    switch (f->kind) {
      case PConn::True:
      case PConn::False:
        return f;
      default:
        break;
    }
    if (auto h = hasv.find(f.get()); h == hasv.end() || !h->second)
      return f;  // v does not occur below here
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    PFormulaPtr r;
    switch (f->kind) {
      case PConn::Lit:
        r = subst_lit(f->lit, v, p);
        break;
      case PConn::And:
        r = land(subst(f->a, v, p, hasv, memo),
                 subst(f->b, v, p, hasv, memo));
        break;
      case PConn::Or:
        r = lor(subst(f->a, v, p, hasv, memo),
                subst(f->b, v, p, hasv, memo));
        break;
      default:
        throw std::logic_error("subst: unexpected connective");
    }
    memo.emplace(f.get(), r);
    return r;
  }

  // Existential elimination with miniscoping: the quantifier distributes
  // over disjunctions and drops past v-free conjuncts, so substitution only
  // ever runs on subtrees whose atoms actually constrain v.
  PFormulaPtr exists(int v, const PFormulaPtr& body) {
    std::unordered_map<const PFormula*, char> hasv;
    std::unordered_map<const PFormula*, PFormulaPtr> done;
    return exists_rec(v, body, hasv, done);
  }

  PFormulaPtr exists_rec(
      int v, const PFormulaPtr& f,
      std::unordered_map<const PFormula*, char>& hasv,
      std::unordered_map<const PFormula*, PFormulaPtr>& done) {
    if (f->kind == PConn::True || f->kind == PConn::False) return f;
    if (!has_v(f, v, hasv)) return f;
    if (auto it = done.find(f.get()); it != done.end()) return it->second;
    PFormulaPtr r;
    if (f->kind == PConn::Or) {
      r = lor(exists_rec(v, f->a, hasv, done),
              exists_rec(v, f->b, hasv, done));
    } else if (f->kind == PConn::And && !hasv.at(f->a.get())) {
      r = land(f->a, exists_rec(v, f->b, hasv, done));
    } else if (f->kind == PConn::And && !hasv.at(f->b.get())) {
      r = land(exists_rec(v, f->a, hasv, done), f->b);
    } else {
      r = exists_base(v, f, hasv);
    }
    done.emplace(f.get(), r);
    return r;
  }

  PFormulaPtr exists_base(int v, const PFormulaPtr& body,
                          std::unordered_map<const PFormula*, char>& hasv) {
    std::vector<LTerm> eqs, lows;
    {
      std::unordered_set<const PFormula*> vis;
      bounds(body, v, hasv, vis, eqs, lows);
    }
    for (auto* seq : {&eqs, &lows}) {
      std::sort(seq->begin(), seq->end());
      seq->erase(std::unique(seq->begin(), seq->end()), seq->end());
    }
    std::vector<VPoint> cands;
    if (ctx.dense) {
      if (ctx.has_min) {
        cands.push_back({VPoint::K::At, LTerm::min()});
        cands.push_back({VPoint::K::Above, LTerm::min()});
      } else {
        cands.push_back({VPoint::K::BelowAll, {}});
      }
      for (const LTerm& t : eqs) cands.push_back({VPoint::K::At, t});
      for (const LTerm& t : lows) cands.push_back({VPoint::K::Above, t});
    } else {
      cands.push_back({VPoint::K::BelowAll, {}});
      for (const LTerm& t : eqs) cands.push_back({VPoint::K::At, t});
      for (LTerm t : lows) {
        t.off += 1;  // least point above a strict lower bound
        cands.push_back({VPoint::K::At, t});
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    PFormulaPtr out = fls;
    for (const VPoint& p : cands) {
      std::unordered_map<const PFormula*, PFormulaPtr> memo;
      PFormulaPtr inst = subst(body, v, p, hasv, memo);
      // A gap point exists only when something lies above its base term.
      if (p.k == VPoint::K::Above && ctx.has_max)
        inst = land(std::move(inst), lit({false, p.t, LTerm::max()}));
      out = lor(std::move(out), std::move(inst));
      if (out->kind == PConn::True) break;
    }
    return out;
  }
};

PFormulaPtr qe_rec(const PFormulaPtr& f, const QCtx& ctx) {
  return QeEngine(ctx).eliminate(f);
}

bool eval_ground_rec(const PFormulaPtr& f, const QCtx& ctx,
                     std::unordered_map<const PFormula*, int>& memo);

bool eval_ground(const PFormulaPtr& f, const QCtx& ctx) {
  std::unordered_map<const PFormula*, int> memo;
  return eval_ground_rec(f, ctx, memo);
}

bool eval_ground_rec(const PFormulaPtr& f, const QCtx& ctx,
                     std::unordered_map<const PFormula*, int>& memo) {
  if (auto it = memo.find(f.get()); it != memo.end()) return it->second != 0;
  bool r = false;
  switch (f->kind) {
    case PConn::True: r = true; break;
    case PConn::False: r = false; break;
    case PConn::Lit: {
      Lit l = f->lit;
      switch (lit_simplify(l, ctx)) {
        case LitVal::True: r = true; break;
        case LitVal::False: r = false; break;
        case LitVal::Keep:
          throw std::logic_error("eval_ground: non-ground literal");
      }
      break;
    }
    case PConn::Not: r = !eval_ground_rec(f->a, ctx, memo); break;
    case PConn::And:
      r = eval_ground_rec(f->a, ctx, memo) && eval_ground_rec(f->b, ctx, memo);
      break;
    case PConn::Or:
      r = eval_ground_rec(f->a, ctx, memo) || eval_ground_rec(f->b, ctx, memo);
      break;
    case PConn::Imp:
      r = !eval_ground_rec(f->a, ctx, memo) || eval_ground_rec(f->b, ctx, memo);
      break;
    case PConn::Iff:
      r = eval_ground_rec(f->a, ctx, memo) == eval_ground_rec(f->b, ctx, memo);
      break;
    default:
      throw std::logic_error("eval_ground: residual quantifier");
  }
  memo.emplace(f.get(), int(r));
  return r;
}

}  // namespace

bool qe_decide(const PFormulaPtr& sentence, PointTheory t) {
  QCtx ctx(t);
  return eval_ground(qe_rec(sentence, ctx), ctx);
}

// ---------------------------------------------------------------------------
// Test-point evaluation
// ---------------------------------------------------------------------------

namespace {

int quantifier_depth(const PFormulaPtr& f) {
  switch (f->kind) {
    case PConn::Lit:
    case PConn::True:
    case PConn::False:
      return 0;
    case PConn::Not:
      return quantifier_depth(f->a);
    case PConn::Exists:
    case PConn::Forall:
      return 1 + quantifier_depth(f->a);
    default:
      return std::max(quantifier_depth(f->a), quantifier_depth(f->b));
  }
}

long long max_offset(const PFormulaPtr& f) {
  switch (f->kind) {
    case PConn::Lit:
      return std::max(std::abs(f->lit.s.off), std::abs(f->lit.t.off));
    case PConn::True:
    case PConn::False:
      return 0;
    case PConn::Not:
    case PConn::Exists:
    case PConn::Forall:
      return max_offset(f->a);
    default:
      return std::max(max_offset(f->a), max_offset(f->b));
  }
}

using PEnv = std::map<int, Rat>;

Rat term_value(const LTerm& t, const PEnv& env, PointTheory th) {
  switch (t.kind) {
    case LTerm::Kind::Var:
      return env.at(t.var) + t.off;
    case LTerm::Kind::Min:
      return Rat(0) + t.off;  // DloLeft and DloClosed both start at 0
    case LTerm::Kind::Max:
      return (th == PointTheory::DloClosed ? Rat(1) : Rat(0)) + t.off;
  }
  return Rat(0);
}

bool lit_eval(const Lit& l, const PEnv& env, PointTheory th) {
  Rat a = term_value(l.s, env, th), b = term_value(l.t, env, th);
  return l.eq ? a == b : a < b;
}

std::vector<Rat> test_candidates(const PEnv& env, PointTheory th,
                                 int remaining_depth, long long F) {
  std::set<Rat> s;
  for (const auto& [v, val] : env) s.insert(val);
  if (theory_dense(th)) {
    if (theory_has_min(th)) s.insert(Rat(0));
    if (theory_has_max(th)) s.insert(th == PointTheory::DloClosed ? Rat(1) : Rat(0));
    if (s.empty()) return {Rat(0)};
    std::vector<Rat> pts(s.begin(), s.end());
    std::vector<Rat> out = pts;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
      out.push_back((pts[i] + pts[i + 1]) / 2);
    if (!theory_has_min(th)) out.push_back(pts.front() - 1);
    if (!theory_has_max(th)) out.push_back(pts.back() + 1);
    return out;
  }
  if (s.empty()) return {Rat(0)};
  long long D = (1 + F) << std::min(remaining_depth, 20);
  std::set<Rat> out;
  for (const Rat& e : s)
    for (long long d = -D; d <= D; ++d) out.insert(e + d);
  out.insert(*s.begin() - D - 1);
  out.insert(*s.rbegin() + D + 1);
  return {out.begin(), out.end()};
}

bool tp_eval(const PFormulaPtr& f, PEnv& env, PointTheory th, long long F) {
  switch (f->kind) {
    case PConn::Lit: return lit_eval(f->lit, env, th);
    case PConn::True: return true;
    case PConn::False: return false;
    case PConn::Not: return !tp_eval(f->a, env, th, F);
    case PConn::And: return tp_eval(f->a, env, th, F) && tp_eval(f->b, env, th, F);
    case PConn::Or: return tp_eval(f->a, env, th, F) || tp_eval(f->b, env, th, F);
    case PConn::Imp: return !tp_eval(f->a, env, th, F) || tp_eval(f->b, env, th, F);
    case PConn::Iff: return tp_eval(f->a, env, th, F) == tp_eval(f->b, env, th, F);
    case PConn::Exists:
    case PConn::Forall: {
      bool want = f->kind == PConn::Exists;
      int depth = 1 + quantifier_depth(f->a);
      for (const Rat& c : test_candidates(env, th, depth, F)) {
        env[f->var] = c;
        bool r = tp_eval(f->a, env, th, F);
        env.erase(f->var);
        if (r == want) return want;
      }
      return !want;
    }
  }
  return false;
}

}  // namespace

bool eval_testpoints(const PFormulaPtr& sentence, PointTheory t) {
  PEnv env;
  return tp_eval(sentence, env, t, max_offset(sentence));
}

// ---------------------------------------------------------------------------
// Witness search
// ---------------------------------------------------------------------------

namespace {

bool qf_quantifier_free(const PFormulaPtr& f) {
  switch (f->kind) {
    case PConn::Lit:
    case PConn::True:
    case PConn::False:
      return true;
    case PConn::Not:
      return qf_quantifier_free(f->a);
    case PConn::Exists:
    case PConn::Forall:
      return false;
    default:
      return qf_quantifier_free(f->a) && qf_quantifier_free(f->b);
  }
}

// Splits a translated existential prefix ∃v1..(guard ∧ (∃v2.. ...)) into
// quantified vars, quantifier-free guards, and the remaining core.
void collect_block(const PFormulaPtr& f, std::vector<int>& vars,
                   std::vector<PFormulaPtr>& guards, PFormulaPtr& core) {
  if (f->kind == PConn::Exists) {
    vars.push_back(f->var);
    collect_block(f->a, vars, guards, core);
    return;
  }
  if (f->kind == PConn::And) {
    if (qf_quantifier_free(f->a) && !qf_quantifier_free(f->b)) {
      guards.push_back(f->a);
      collect_block(f->b, vars, guards, core);
      return;
    }
    if (qf_quantifier_free(f->b) && !qf_quantifier_free(f->a)) {
      guards.push_back(f->b);
      collect_block(f->a, vars, guards, core);
      return;
    }
  }
  core = f;
}

bool qf_eval(const PFormulaPtr& f, const PEnv& env, PointTheory th) {
  switch (f->kind) {
    case PConn::Lit: return lit_eval(f->lit, env, th);
    case PConn::True: return true;
    case PConn::False: return false;
    case PConn::Not: return !qf_eval(f->a, env, th);
    case PConn::And: return qf_eval(f->a, env, th) && qf_eval(f->b, env, th);
    case PConn::Or: return qf_eval(f->a, env, th) || qf_eval(f->b, env, th);
    case PConn::Imp: return !qf_eval(f->a, env, th) || qf_eval(f->b, env, th);
    case PConn::Iff: return qf_eval(f->a, env, th) == qf_eval(f->b, env, th);
    default: throw std::logic_error("qf_eval: quantifier");
  }
}

// Truth of `core` under env, decided exactly: existentially close the env
// variables, pinning their order type (dense) or exact differences
// (discrete), then run quantifier elimination.
bool eval_pinned(const PFormulaPtr& core, const PEnv& env, PointTheory th) {
  std::vector<std::pair<Rat, int>> items;
  for (const auto& [v, val] : env) items.emplace_back(val, v);
  std::sort(items.begin(), items.end());
  PFormulaPtr pins = PFormula::constant(true);
  if (theory_dense(th)) {
    for (size_t i = 0; i + 1 < items.size(); ++i) {
      LTerm a = LTerm::mkvar(items[i].second);
      LTerm b = LTerm::mkvar(items[i + 1].second);
      pins = pand(pins, items[i].first == items[i + 1].first ? peq(a, b)
                                                             : plt(a, b));
    }
    auto edge = [&](const Rat& val, int v) {
      if (theory_has_min(th)) {
        LTerm t = LTerm::mkvar(v);
        pins = pand(pins, val == 0 ? peq(t, LTerm::min())
                                   : plt(LTerm::min(), t));
      }
      if (theory_has_max(th)) {
        Rat mx = th == PointTheory::DloClosed ? 1 : 0;
        LTerm t = LTerm::mkvar(v);
        pins = pand(pins, val == mx ? peq(t, LTerm::max())
                                    : plt(t, LTerm::max()));
      }
    };
    for (const auto& [val, v] : items) edge(val, v);
  } else {
    for (size_t i = 1; i < items.size(); ++i) {
      Rat diff = items[i].first - items[0].first;
      long long d = (long long)numerator(diff).convert_to<long long>();
      LTerm anchor = LTerm::mkvar(items[0].second, d);
      pins = pand(pins, peq(LTerm::mkvar(items[i].second), anchor));
    }
  }
  PFormulaPtr closed = pand(pins, core);
  for (const auto& [val, v] : items)
    closed = PFormula::quantifier(PConn::Exists, v, closed);
  return qe_decide(closed, th);
}

std::vector<Rat> witness_grid(PointTheory th, int K) {
  std::vector<Rat> vals;
  switch (th) {
    case PointTheory::DiscreteUnbounded:
      for (int k = -K; k <= K; ++k) vals.push_back(k);
      break;
    case PointTheory::DloOpen:
      for (int k = -2 * K; k <= 2 * K; ++k) vals.push_back(Rat(k) / 2);
      break;
    case PointTheory::DloLeft:
      for (int k = 0; k <= 2 * K; ++k) vals.push_back(Rat(k) / 2);
      break;
    case PointTheory::DloRight:
      for (int k = -2 * K; k <= 0; ++k) vals.push_back(Rat(k) / 2);
      break;
    case PointTheory::DloClosed:
      for (int k = 0; k <= 2 * K; ++k) vals.push_back(Rat(k) / Rat(2 * K));
      break;
  }
  std::sort(vals.begin(), vals.end(), [](const Rat& a, const Rat& b) {
    Rat aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
    return aa < ab || (aa == ab && a < b);
  });
  return vals;
}

bool witness_dfs(const std::vector<int>& vars, size_t i,
                 const std::vector<PFormulaPtr>& guards,
                 const PFormulaPtr& core, const std::vector<Rat>& grid,
                 PEnv& env, PointTheory th) {
  if (i == vars.size()) {
    for (const auto& g : guards)
      if (!qf_eval(g, env, th)) return false;
    return eval_pinned(core, env, th);
  }
  for (const Rat& v : grid) {
    env[vars[i]] = v;
    if (witness_dfs(vars, i + 1, guards, core, grid, env, th)) return true;
  }
  env.erase(vars[i]);
  return false;
}

}  // namespace

std::optional<std::map<int, Rat>> find_witness(const PFormulaPtr& sentence,
                                               PointTheory t) {
  std::vector<int> vars;
  std::vector<PFormulaPtr> guards;
  PFormulaPtr core = sentence;
  collect_block(sentence, vars, guards, core);
  if (vars.empty())
    return qe_decide(sentence, t) ? std::optional<PEnv>(PEnv{}) : std::nullopt;
  for (int K : {3, 6}) {
    PEnv env;
    auto grid = witness_grid(t, K);
    if (witness_dfs(vars, 0, guards, core, grid, env, t)) return env;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Class-level decisions
// ---------------------------------------------------------------------------

std::optional<ClassTag> class_from_name(std::string_view name) {
  if (name == "lin") return ClassTag::Lin;
  if (name == "den") return ClassTag::Den;
  if (name == "dis") return ClassTag::Dis;
  if (name == "unb") return ClassTag::Unb;
  return std::nullopt;
}

std::string_view class_name(ClassTag c) {
  switch (c) {
    case ClassTag::Lin: return "lin";
    case ClassTag::Den: return "den";
    case ClassTag::Dis: return "dis";
    case ClassTag::Unb: return "unb";
  }
  return "";
}

std::string TheorySpec::name() const {
  if (is_chain) return "chain" + std::to_string(chain_n);
  return std::string(theory_name(theory));
}

std::vector<TheorySpec> class_representatives(ClassTag c) {
  std::vector<TheorySpec> out;
  auto chains = [&](int upto) {
    for (int n = 0; n <= upto; ++n) out.push_back(TheorySpec::chain(n));
  };
  switch (c) {
    case ClassTag::Den:
      chains(1);
      out.push_back(TheorySpec::infinite(PointTheory::DloOpen));
      out.push_back(TheorySpec::infinite(PointTheory::DloLeft));
      out.push_back(TheorySpec::infinite(PointTheory::DloRight));
      out.push_back(TheorySpec::infinite(PointTheory::DloClosed));
      break;
    case ClassTag::Unb:
      out.push_back(TheorySpec::infinite(PointTheory::DloOpen));
      out.push_back(TheorySpec::infinite(PointTheory::DiscreteUnbounded));
      break;
    case ClassTag::Lin:
      chains(6);
      out.push_back(TheorySpec::infinite(PointTheory::DloOpen));
      out.push_back(TheorySpec::infinite(PointTheory::DiscreteUnbounded));
      break;
    case ClassTag::Dis:
      chains(6);
      out.push_back(TheorySpec::infinite(PointTheory::DiscreteUnbounded));
      break;
  }
  return out;
}

bool class_complete(ClassTag c) { return c == ClassTag::Den; }

namespace {

// ¬∀x∀y.φ presented as ∃x∃y.¬φ so the witness search sees a leading block.
FormulaPtr negate_closure(const FormulaPtr& f) {
  if (f->kind == Conn::Forall)
    return Formula::quantifier(Conn::Exists, f->var, f->sort,
                               negate_closure(f->a));
  return Formula::negation(f);
}

std::optional<Env> chain_counter(const FormulaPtr& f, const FiniteChain& chain,
                                 Env env) {
  if (f->kind == Conn::Forall) {
    for (const Element& el : chain.elements(f->sort)) {
      env[f->var] = el;
      if (auto r = chain_counter(f->a, chain, env)) return r;
    }
    return std::nullopt;
  }
  if (!eval_finite(f, chain, env)) return env;
  return std::nullopt;
}

std::string format_chain_witness(const Env& env) {
  std::string out;
  for (const auto& [name, el] : env) {
    if (!out.empty()) out += ' ';
    out += name + "=" + el.to_string();
  }
  return out;
}

std::string format_point_witness(const std::map<int, Rat>& w,
                                 const std::vector<std::string>& names) {
  // Reassemble interval variables from their "v#l"/"v#r" point halves.
  std::map<std::string, std::pair<std::optional<Rat>, std::optional<Rat>>> iv;
  std::map<std::string, Rat> pv;
  for (const auto& [id, val] : w) {
    const std::string& n = names[id];
    auto hash = n.find('#');
    if (hash == std::string::npos) {
      pv[n] = val;
    } else if (n.substr(hash) == "#l") {
      iv[n.substr(0, hash)].first = val;
    } else {
      iv[n.substr(0, hash)].second = val;
    }
  }
  std::map<std::string, std::string> parts;
  for (const auto& [n, val] : pv) parts[n] = n + "=" + rat_to_string(val);
  for (const auto& [n, lr] : iv)
    parts[n] = n + "=[" + rat_to_string(lr.first.value_or(0)) + "," +
               rat_to_string(lr.second.value_or(0)) + "]";
  std::string out;
  for (const auto& [n, s] : parts) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

DecideOutcome decide_over(const FormulaPtr& sentence, const TheorySpec& spec) {
  if (spec.is_chain) {
    FiniteChain chain{spec.chain_n};
    if (eval_finite(sentence, chain, {})) return {true, "VALID", "", ""};
    auto env = chain_counter(sentence, chain, {});
    return {false, "INVALID", spec.name(),
            env ? format_chain_witness(*env) : ""};
  }
  Translation tr = translate(sentence);
  if (qe_decide(tr.formula, spec.theory)) return {true, "VALID", "", ""};
  Translation neg = translate(negate_closure(sentence));
  auto w = find_witness(neg.formula, spec.theory);
  return {false, "INVALID", spec.name(),
          w ? format_point_witness(*w, neg.var_names) : ""};
}

DecideOutcome decide_sentence(const FormulaPtr& sentence, ClassTag cls) {
  for (const TheorySpec& spec : class_representatives(cls)) {
    DecideOutcome o = decide_over(sentence, spec);
    if (!o.valid) return o;
  }
  return {true,
          class_complete(cls) ? "VALID" : "VALID_ON_REPRESENTATIVES", "", ""};
}

}  // namespace pint
