#include "pint/zeta.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pint/lineio.hpp"
#include "pint/structures.hpp"

namespace pint {

// --------------------------------------------------------------------------
// Rational helpers
// --------------------------------------------------------------------------

std::string rat_to_string(const Rat& r) {
  using boost::multiprecision::cpp_int;
  cpp_int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_parse(std::string_view text) {
  text = lineio::trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational");
  size_t slash = text.find('/');
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty()) return false;
    return s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  using boost::multiprecision::cpp_int;
  if (slash == std::string_view::npos) {
    if (!is_int(text))
      throw std::invalid_argument("bad rational: " + std::string(text));
    return Rat(cpp_int(std::string(text)));
  }
  std::string_view num = lineio::trim(text.substr(0, slash));
  std::string_view den = lineio::trim(text.substr(slash + 1));
  if (!is_int(num) || !is_int(den) || den == "0")
    throw std::invalid_argument("bad rational: " + std::string(text));
  return Rat(cpp_int(std::string(num)), cpp_int(std::string(den)));
}

// --------------------------------------------------------------------------
// Orders and elements
// --------------------------------------------------------------------------

std::optional<OrderKind> order_from_name(std::string_view name) {
  if (name == "QQ") return OrderKind::QQ;
  if (name == "ZZ") return OrderKind::ZZ;
  if (name == "QQ01") return OrderKind::QQ01;
  return std::nullopt;
}

std::string_view order_name(OrderKind k) {
  switch (k) {
    case OrderKind::QQ: return "QQ";
    case OrderKind::ZZ: return "ZZ";
    case OrderKind::QQ01: return "QQ01";
  }
  return "";
}

bool order_contains(OrderKind k, const Rat& v) {
  switch (k) {
    case OrderKind::QQ: return true;
    case OrderKind::ZZ: return denominator(v) == 1;
    case OrderKind::QQ01: return v >= 0 && v <= 1;
  }
  return false;
}

std::vector<ClassTag> order_classes(OrderKind k) {
  switch (k) {
    case OrderKind::QQ: return {ClassTag::Lin, ClassTag::Den, ClassTag::Unb};
    case OrderKind::ZZ: return {ClassTag::Lin, ClassTag::Dis, ClassTag::Unb};
    case OrderKind::QQ01: return {ClassTag::Lin, ClassTag::Den};
  }
  return {};
}

bool ZGuard::eval(const Rat& a, const Rat& b) const {
  if (always) return true;
  Rat l = lhs.eval(a, b), r = rhs.eval(a, b);
  switch (op) {
    case CmpOp::Eq: return l == r;
    case CmpOp::Lt: return l < r;
    case CmpOp::Gt: return l > r;
    case CmpOp::Le: return l <= r;
    case CmpOp::Ge: return l >= r;
  }
  return false;
}

bool QElem::operator<(const QElem& o) const {
  if (sort != o.sort) return sort < o.sort;
  if (a != o.a) return a < o.a;
  return b < o.b;
}

std::string QElem::to_string() const {
  if (sort == Sort::Point) return rat_to_string(a);
  return "[" + rat_to_string(a) + "," + rat_to_string(b) + "]";
}

std::optional<QElem> QElem::parse(std::string_view text) {
  text = lineio::trim(text);
  try {
    if (!text.empty() && text.front() == '[') {
      if (text.back() != ']') return std::nullopt;
      std::string_view inner = text.substr(1, text.size() - 2);
      size_t comma = inner.find(',');
      if (comma == std::string_view::npos) return std::nullopt;
      Rat l = rat_parse(inner.substr(0, comma));
      Rat r = rat_parse(inner.substr(comma + 1));
      if (!(l < r)) return std::nullopt;
      return QElem::interval(l, r);
    }
    return QElem::point(rat_parse(text));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool holds_q(Rel r, const QElem& x, const QElem& y) {
  if (left_sort(r) != x.sort || right_sort(r) != y.sort)
    throw SortError("sort mismatch: " + std::string(rel_name(r)) + "(" +
                    x.to_string() + ", " + y.to_string() + ")");
  return holds_regions<Rat>(r, x.sort == Sort::Interval, x.a, x.b,
                            y.sort == Sort::Interval, y.a, y.b);
}

// --------------------------------------------------------------------------
// Affine expression / guard parsing
// --------------------------------------------------------------------------

namespace {

// sum  := ['-'] prod (('+'|'-') prod)*
// prod := atom ('/' uint)*
// atom := uint [var] | var | '(' sum ')'
struct AffParser {
  std::string_view s;
  size_t i = 0;
  std::string err;

  void skip() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  bool fail(std::string m) {
    if (err.empty()) err = std::move(m);
    return false;
  }

  bool parse_uint(Rat& out) {
    skip();
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) return fail("expected number");
    out = Rat(boost::multiprecision::cpp_int(std::string(s.substr(start, i - start))));
    return true;
  }

  bool parse_atom(Aff& out) {
    skip();
    out = {};
    if (i < s.size() && s[i] == '(') {
      ++i;
      if (!parse_sum(out)) return false;
      skip();
      if (i >= s.size() || s[i] != ')') return fail("expected )");
      ++i;
      return true;
    }
    if (i < s.size() && (s[i] == 'a' || s[i] == 'b')) {
      (s[i] == 'a' ? out.ca : out.cb) = 1;
      ++i;
      return true;
    }
    Rat c;
    if (!parse_uint(c)) return false;
    skip();
    if (i < s.size() && (s[i] == 'a' || s[i] == 'b')) {
      (s[i] == 'a' ? out.ca : out.cb) = c;
      ++i;
    } else {
      out.c0 = c;
    }
    return true;
  }

  bool parse_prod(Aff& out) {
    if (!parse_atom(out)) return false;
    skip();
    while (i < s.size() && s[i] == '/') {
      ++i;
      Rat d;
      if (!parse_uint(d)) return false;
      if (d == 0) return fail("division by zero");
      out.ca /= d;
      out.cb /= d;
      out.c0 /= d;
      skip();
    }
    return true;
  }

  bool parse_sum(Aff& out) {
    skip();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (!parse_prod(out)) return false;
    if (neg) {
      out.ca = -out.ca;
      out.cb = -out.cb;
      out.c0 = -out.c0;
    }
    skip();
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      bool minus = s[i] == '-';
      ++i;
      Aff rhs;
      if (!parse_prod(rhs)) return false;
      if (minus) {
        out.ca -= rhs.ca;
        out.cb -= rhs.cb;
        out.c0 -= rhs.c0;
      } else {
        out.ca += rhs.ca;
        out.cb += rhs.cb;
        out.c0 += rhs.c0;
      }
      skip();
    }
    return true;
  }
};

std::optional<Aff> parse_aff(std::string_view text, std::string& err) {
  AffParser p{text};
  Aff out;
  if (!p.parse_sum(out) || (p.skip(), p.i != p.s.size())) {
    err = p.err.empty() ? "trailing input in expression" : p.err;
    return std::nullopt;
  }
  return out;
}

std::optional<ZGuard> parse_guard(std::string_view text, std::string& err) {
  text = lineio::trim(text);
  if (text == "true") return ZGuard{};
  for (std::string_view opname : {"<=", ">=", "=", "<", ">"}) {
    size_t pos = text.find(opname);
    if (pos == std::string_view::npos) continue;
    auto lhs = parse_aff(text.substr(0, pos), err);
    if (!lhs) return std::nullopt;
    auto rhs = parse_aff(text.substr(pos + opname.size()), err);
    if (!rhs) return std::nullopt;
    ZGuard g;
    g.always = false;
    g.lhs = *lhs;
    g.rhs = *rhs;
    g.op = opname == "=" ? CmpOp::Eq
         : opname == "<" ? CmpOp::Lt
         : opname == ">" ? CmpOp::Gt
         : opname == "<=" ? CmpOp::Le
                          : CmpOp::Ge;
    return g;
  }
  err = "guard needs a comparison or `true`";
  return std::nullopt;
}

// Interval output "[<aff>,<aff>]" or point output "<aff>".
std::optional<std::pair<Aff, Aff>> parse_out(std::string_view text,
                                             bool interval,
                                             std::string& err) {
  text = lineio::trim(text);
  if (!interval) {
    auto a = parse_aff(text, err);
    if (!a) return std::nullopt;
    return std::make_pair(*a, Aff{});
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    err = "interval output must be [expr,expr]";
    return std::nullopt;
  }
  std::string_view inner = text.substr(1, text.size() - 2);
  // split on the top-level comma (no nested brackets inside)
  int depth = 0;
  size_t comma = std::string_view::npos;
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (inner[i] == ',' && depth == 0) {
      comma = i;
      break;
    }
  }
  if (comma == std::string_view::npos) {
    err = "interval output must be [expr,expr]";
    return std::nullopt;
  }
  auto l = parse_aff(inner.substr(0, comma), err);
  if (!l) return std::nullopt;
  auto r = parse_aff(inner.substr(comma + 1), err);
  if (!r) return std::nullopt;
  return std::make_pair(*l, *r);
}

}  // namespace

// --------------------------------------------------------------------------
// Map application
// --------------------------------------------------------------------------

int GuardedAffineMap::matches(const QElem& x) const {
  int over = 0;
  for (const auto& [pre, out] : overrides)
    if (pre == x) ++over;
  if (over > 0) return over;
  int hit = 0;
  for (const Piece& p : pieces)
    if (p.guard.eval(x.a, x.b)) ++hit;
  return hit;
}

std::optional<QElem> GuardedAffineMap::apply(const QElem& x) const {
  for (const auto& [pre, out] : overrides)
    if (pre == x) return out;
  for (const Piece& p : pieces) {
    if (!p.guard.eval(x.a, x.b)) continue;
    if (x.sort == Sort::Point) return QElem::point(p.out_l.eval(x.a, x.b));
    return QElem::interval(p.out_l.eval(x.a, x.b), p.out_r.eval(x.a, x.b));
  }
  return std::nullopt;
}

std::vector<QElem> ZetaSpec::images(const QElem& x) const {
  std::vector<QElem> out;
  const auto& map = x.sort == Sort::Point ? point_map : interval_map;
  const auto& extras = x.sort == Sort::Point ? point_extras : interval_extras;
  if (auto img = map.apply(x)) out.push_back(*img);
  for (const auto& [pre, im] : extras)
    if (pre == x) out.push_back(im);
  return out;
}

ExplicitSet ZetaSpec::breaks_set() const {
  ExplicitSet s;
  for (const BreakWitness& w : breaks) s.add(w.rel);
  return s;
}

// --------------------------------------------------------------------------
// Catalog parsing
// --------------------------------------------------------------------------

ZetaCatalog parse_zeta_catalog(std::string_view text) {
  using lineio::split_field;
  ZetaCatalog cat;
  std::set<std::string> ids;
  std::optional<ZetaSpec> cur;

  lineio::for_each_line(text, [&](int line_no, std::string_view line) {
    auto fail = [&](std::string msg) {
      cat.errors.push_back({line_no, std::move(msg)});
    };
    std::string terr;
    auto toks = lineio::tokenize(line, terr);
    if (!toks || toks->empty()) {
      if (!toks) fail(terr);
      return;
    }
    const std::string& head = (*toks)[0];

    if (head == "zeta") {
      if (cur) {
        fail("zeta block not closed before new block");
        cur.reset();
      }
      if (toks->size() < 2) {
        fail("zeta needs an id");
        return;
      }
      ZetaSpec spec;
      spec.id = (*toks)[1];
      if (!ids.insert(spec.id).second) {
        fail("duplicate zeta id: " + spec.id);
        return;
      }
      bool ok = true;
      for (size_t i = 2; i < toks->size(); ++i) {
        if ((*toks)[i] == "deviates") {
          spec.deviates = true;
          continue;
        }
        std::string key, value;
        if (!split_field((*toks)[i], key, value)) {
          fail("malformed field: " + (*toks)[i]);
          ok = false;
          break;
        }
        if (key == "order") {
          auto o = order_from_name(value);
          if (!o) {
            fail("unknown order: " + value);
            ok = false;
            break;
          }
          spec.order = *o;
        } else if (key == "expect") {
          if (value != "pass" && value != "fail") {
            fail("expect must be pass or fail");
            ok = false;
            break;
          }
          spec.expect_pass = value == "pass";
        } else {
          fail("unknown field: " + key);
          ok = false;
          break;
        }
      }
      if (ok) cur = std::move(spec);
      return;
    }

    if (!cur) {
      fail("directive outside zeta block: " + head);
      return;
    }

    if (head == "end") {
      if ((cur->respects & cur->breaks_set()) != ExplicitSet()) {
        fail("respects and breaks overlap in " + cur->id);
      } else {
        cat.specs.push_back(std::move(*cur));
      }
      cur.reset();
      return;
    }

    if (head == "respects") {
      if (toks->size() != 2) {
        fail("respects needs one relation list");
        return;
      }
      auto s = ExplicitSet::parse((*toks)[1]);
      if (!s) {
        fail("unparseable relation list: " + (*toks)[1]);
        return;
      }
      cur->respects = *s;
      return;
    }

    if (head == "break") {
      if (toks->size() < 2) {
        fail("break needs a relation");
        return;
      }
      auto rel = rel_from_name((*toks)[1]);
      if (!rel || !explicit_bit(*rel)) {
        fail("unknown break relation: " + (*toks)[1]);
        return;
      }
      BreakWitness w;
      w.rel = *rel;
      bool have[4] = {false, false, false, false};
      for (size_t i = 2; i < toks->size(); ++i) {
        std::string key, value;
        if (!split_field((*toks)[i], key, value)) {
          fail("malformed field: " + (*toks)[i]);
          return;
        }
        auto e = QElem::parse(value);
        if (!e) {
          fail("bad element: " + value);
          return;
        }
        if (key == "x") w.x = *e, have[0] = true;
        else if (key == "y") w.y = *e, have[1] = true;
        else if (key == "fx") w.fx = *e, have[2] = true;
        else if (key == "fy") w.fy = *e, have[3] = true;
        else {
          fail("unknown field: " + key);
          return;
        }
      }
      if (!have[0] || !have[1] || !have[2] || !have[3]) {
        fail("break needs x, y, fx, fy");
        return;
      }
      cur->breaks.push_back(std::move(w));
      return;
    }

    if (head == "point" || head == "interval") {
      bool interval = head == "interval";
      size_t i = 1;
      bool inv = false;
      if (i < toks->size() && (*toks)[i] == "inv") {
        inv = true;
        ++i;
      }
      if (i >= toks->size()) {
        fail("missing map directive");
        return;
      }
      std::string what = (*toks)[i++];
      GuardedAffineMap& map =
          interval ? (inv ? cur->interval_inv : cur->interval_map)
                   : (inv ? cur->point_inv : cur->point_map);
      std::map<std::string, std::string> fields;
      for (; i < toks->size(); ++i) {
        std::string key, value;
        if (!split_field((*toks)[i], key, value)) {
          fail("malformed field: " + (*toks)[i]);
          return;
        }
        fields[key] = value;
      }
      if (what == "piece") {
        if (!fields.count("guard") || !fields.count("out")) {
          fail("piece needs guard= and out=");
          return;
        }
        std::string err;
        auto g = parse_guard(fields["guard"], err);
        if (!g) {
          fail("bad guard: " + err);
          return;
        }
        auto out = parse_out(fields["out"], interval, err);
        if (!out) {
          fail("bad out: " + err);
          return;
        }
        map.pieces.push_back({*g, out->first, out->second});
        return;
      }
      if (what == "override" || what == "extra") {
        if (inv && what == "extra") {
          fail("extras belong to the forward relation only");
          return;
        }
        if (!fields.count("pre") || !fields.count("out")) {
          fail(what + " needs pre= and out=");
          return;
        }
        auto pre = QElem::parse(fields["pre"]);
        auto out = QElem::parse(fields["out"]);
        if (!pre || !out) {
          fail("bad element in " + what);
          return;
        }
        Sort want = interval ? Sort::Interval : Sort::Point;
        if (pre->sort != want || out->sort != want) {
          fail(what + ": element sort does not match map");
          return;
        }
        if (what == "override") {
          map.overrides.emplace_back(*pre, *out);
        } else {
          (interval ? cur->interval_extras : cur->point_extras)
              .emplace_back(*pre, *out);
        }
        return;
      }
      fail("unknown map directive: " + what);
      return;
    }

    fail("unknown directive: " + head);
  });
  if (cur) cat.errors.push_back({0, "unterminated zeta block: " + cur->id});
  return cat;
}

// --------------------------------------------------------------------------
// Verification
// --------------------------------------------------------------------------

namespace {

struct CheckRow {
  std::vector<ZetaCheck>* checks;
  size_t idx;
  void fail(const std::string& detail) {
    ZetaCheck& row = (*checks)[idx];
    if (!row.pass) return;
    row.pass = false;
    row.detail = detail;
  }
};

class Sampler {
 public:
  Sampler(OrderKind k, uint64_t seed) : kind_(k), rng_(seed) {}

  Rat point() {
    switch (kind_) {
      case OrderKind::ZZ:
        return Rat(int_in(-50, 50));
      case OrderKind::QQ: {
        long long den = int_in(1, 12);
        return Rat(int_in(-60, 60), den);
      }
      case OrderKind::QQ01: {
        long long den = int_in(1, 12);
        return Rat(int_in(0, den), den);
      }
    }
    return Rat(0);
  }

  std::pair<Rat, Rat> interval() {
    while (true) {
      Rat a = point(), b = point();
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      return {a, b};
    }
  }

 private:
  long long int_in(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  OrderKind kind_;
  std::mt19937_64 rng_;
};

std::vector<Rat> point_grid(OrderKind k) {
  std::set<Rat> s;
  if (k == OrderKind::ZZ) {
    for (int i = -20; i <= 20; ++i) s.insert(Rat(i));
  } else {
    for (int q = 1; q <= 6; ++q)
      for (int p = -20; p <= 20; ++p) {
        Rat v(p, q);
        if (k == OrderKind::QQ01 && !(v >= 0 && v <= 1)) continue;
        s.insert(v);
      }
  }
  return {s.begin(), s.end()};
}

std::vector<std::pair<Rat, Rat>> interval_grid(OrderKind k) {
  std::set<Rat> s;
  if (k == OrderKind::ZZ) {
    for (int i = -6; i <= 6; ++i) s.insert(Rat(i));
  } else {
    for (int q = 1; q <= 3; ++q)
      for (int p = -6; p <= 6; ++p) {
        Rat v(p, q);
        if (k == OrderKind::QQ01 && !(v >= 0 && v <= 1)) continue;
        s.insert(v);
      }
  }
  std::vector<Rat> pts(s.begin(), s.end());
  std::vector<std::pair<Rat, Rat>> out;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      out.emplace_back(pts[i], pts[j]);
  return out;
}

}  // namespace

ZetaReport verify_zeta(const ZetaSpec& spec, long long samples, uint64_t seed,
                       const Rulebase* rules) {
  ZetaReport rep;
  rep.id = spec.id;
  auto add_row = [&](std::string name) {
    rep.checks.push_back({std::move(name), true, ""});
    return CheckRow{&rep.checks, rep.checks.size() - 1};
  };

  // --- element pools ----------------------------------------------------
  std::set<QElem> points, intervals;
  for (const Rat& v : point_grid(spec.order)) points.insert(QElem::point(v));
  for (const auto& [l, r] : interval_grid(spec.order))
    intervals.insert(QElem::interval(l, r));
  auto add_special = [&](const QElem& e) {
    if (e.sort == Sort::Point) points.insert(e);
    else if (e.a < e.b) intervals.insert(e);
  };
  for (const auto& m : {spec.point_map, spec.point_inv, spec.interval_map,
                        spec.interval_inv})
    for (const auto& [pre, out] : m.overrides) {
      add_special(pre);
      add_special(out);
    }
  for (const auto& [pre, out] : spec.point_extras) {
    add_special(pre);
    add_special(out);
  }
  for (const auto& [pre, out] : spec.interval_extras) {
    add_special(pre);
    add_special(out);
  }
  for (const BreakWitness& w : spec.breaks) {
    add_special(w.x);
    add_special(w.y);
    add_special(w.fx);
    add_special(w.fy);
  }

  Sampler sampler(spec.order, seed);
  long long rt_budget = std::max<long long>(64, samples / 4);
  std::vector<QElem> point_pool(points.begin(), points.end());
  std::vector<QElem> interval_pool(intervals.begin(), intervals.end());
  for (long long i = 0; i < rt_budget; ++i)
    point_pool.push_back(QElem::point(sampler.point()));
  for (long long i = 0; i < rt_budget; ++i) {
    auto [l, r] = sampler.interval();
    interval_pool.push_back(QElem::interval(l, r));
  }

  // --- round-trip, coverage, domain --------------------------------------
  auto check_bijection = [&](const GuardedAffineMap& fwd,
                             const GuardedAffineMap& inv,
                             const std::vector<QElem>& pool,
                             const std::string& label) {
    auto rt = add_row("round-trip " + label);
    auto cov = add_row("coverage " + label);
    auto dom = add_row("domain " + label);
    auto in_domain = [&](const QElem& e) {
      if (!order_contains(spec.order, e.a)) return false;
      if (e.sort == Sort::Interval)
        return order_contains(spec.order, e.b) && e.a < e.b;
      return true;
    };
    for (const QElem& e : pool) {
      if (fwd.matches(e) != 1)
        cov.fail("forward map matches " + std::to_string(fwd.matches(e)) +
                 " cases at " + e.to_string());
      if (inv.matches(e) != 1)
        cov.fail("inverse map matches " + std::to_string(inv.matches(e)) +
                 " cases at " + e.to_string());
      auto img = fwd.apply(e);
      if (img) {
        if (!in_domain(*img))
          dom.fail("image " + img->to_string() + " of " + e.to_string() +
                   " leaves the order");
        auto back = inv.apply(*img);
        if (!back || !(*back == e))
          rt.fail("inv(map(" + e.to_string() + ")) = " +
                  (back ? back->to_string() : "<none>") + " != " +
                  e.to_string());
      }
      auto pre = inv.apply(e);
      if (pre) {
        if (!in_domain(*pre))
          dom.fail("preimage " + pre->to_string() + " of " + e.to_string() +
                   " leaves the order");
        auto fwd_again = fwd.apply(*pre);
        if (!fwd_again || !(*fwd_again == e))
          rt.fail("map(inv(" + e.to_string() + ")) = " +
                  (fwd_again ? fwd_again->to_string() : "<none>") + " != " +
                  e.to_string());
      }
    }
  };
  check_bijection(spec.point_map, spec.point_inv, point_pool, "point");
  check_bijection(spec.interval_map, spec.interval_inv, interval_pool,
                  "interval");

  // --- respects -----------------------------------------------------------
  std::vector<Rel> resp = spec.respects.members();
  long long per_rel =
      resp.empty() ? 0
                   : std::max<long long>(128, samples / 2 / (long long)resp.size());
  for (Rel r : resp) {
    auto row = add_row("respects " + std::string(rel_name(r)));
    auto pick = [&](Sort s) -> QElem {
      if (s == Sort::Point) return QElem::point(sampler.point());
      auto [l, rr] = sampler.interval();
      return QElem::interval(l, rr);
    };
    auto check_pair = [&](const QElem& x, const QElem& y) {
      bool pre = holds_q(r, x, y);
      for (const QElem& fx : spec.images(x))
        for (const QElem& fy : spec.images(y))
          if (holds_q(r, fx, fy) != pre)
            row.fail(std::string(rel_name(r)) + "(" + x.to_string() + "," +
                     y.to_string() + ")=" + (pre ? "T" : "F") + " but " +
                     std::string(rel_name(r)) + "(" + fx.to_string() + "," +
                     fy.to_string() + ")=" + (pre ? "F" : "T"));
    };
    // deterministic: a strided cross product over the pools
    const auto& lp = left_sort(r) == Sort::Point ? point_pool : interval_pool;
    const auto& rp = right_sort(r) == Sort::Point ? point_pool : interval_pool;
    size_t ln = std::min<size_t>(lp.size(), 40), rn = std::min<size_t>(rp.size(), 40);
    for (size_t i = 0; i < ln; ++i)
      for (size_t j = 0; j < rn; ++j)
        check_pair(lp[i * lp.size() / ln], rp[j * rp.size() / rn]);
    for (long long i = 0; i < per_rel; ++i)
      check_pair(pick(left_sort(r)), pick(right_sort(r)));
  }

  // --- breaks ---------------------------------------------------------------
  for (const BreakWitness& w : spec.breaks) {
    auto row = add_row("break " + std::string(rel_name(w.rel)));
    auto contains = [](const std::vector<QElem>& v, const QElem& e) {
      return std::find(v.begin(), v.end(), e) != v.end();
    };
    if (left_sort(w.rel) != w.x.sort || right_sort(w.rel) != w.y.sort) {
      row.fail("witness sorts do not match " + std::string(rel_name(w.rel)));
      continue;
    }
    if (!contains(spec.images(w.x), w.fx)) {
      row.fail("fx=" + w.fx.to_string() + " is not an image of " +
               w.x.to_string());
      continue;
    }
    if (!contains(spec.images(w.y), w.fy)) {
      row.fail("fy=" + w.fy.to_string() + " is not an image of " +
               w.y.to_string());
      continue;
    }
    if (holds_q(w.rel, w.x, w.y) == holds_q(w.rel, w.fx, w.fy))
      row.fail("biconditional not violated at (" + w.x.to_string() + "," +
               w.y.to_string() + ") -> (" + w.fx.to_string() + "," +
               w.fy.to_string() + ")");
  }

  // --- soundness link ---------------------------------------------------------
  if (rules) {
    auto row = add_row("soundness-link");
    ExplicitSet broken = spec.breaks_set();
    auto classes = order_classes(spec.order);
    for (const Rule& rule : rules->rules) {
      if (std::find(classes.begin(), classes.end(), rule.cls) == classes.end())
        continue;
      if (rule.premises.subset_of(spec.respects) && broken.contains(rule.target))
        row.fail("rule " + rule.id + " derives " +
                 std::string(rel_name(rule.target)) +
                 " from respected premises");
    }
  }

  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const ZetaCheck& c) { return c.pass; });
  return rep;
}

}  // namespace pint
