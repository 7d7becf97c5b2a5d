#include "pint/rulebase.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pint/lineio.hpp"

namespace pint {

Rulebase parse_rulebase(std::string_view text) {
  using lineio::split_field;
  Rulebase rb;
  std::set<std::string> seen_ids;
  lineio::for_each_line(text, [&](int line_no, std::string_view line) {
    auto fail = [&](std::string msg) {
      rb.errors.push_back({line_no, std::move(msg)});
    };
    std::string terr;
    auto toks = lineio::tokenize(line, terr);
    if (!toks) {
      fail(terr);
      return;
    }
    if (toks->size() < 2 || (*toks)[0] != "rule") {
      fail("expected: rule <id> class=... premises=... target=... src=...");
      return;
    }
    Rule r;
    r.id = (*toks)[1];
    bool have_class = false, have_premises = false, have_target = false,
         have_src = false, bad = false;
    for (size_t i = 2; i < toks->size(); ++i) {
      std::string key, value;
      if (!split_field((*toks)[i], key, value)) {
        fail("malformed field: " + (*toks)[i]);
        bad = true;
        break;
      }
      if (key == "class") {
        auto c = class_from_name(value);
        if (!c) {
          fail("unknown class: " + value);
          bad = true;
          break;
        }
        r.cls = *c;
        have_class = true;
      } else if (key == "premises") {
        auto s = ExplicitSet::parse(value);
        if (!s) {
          fail("unparseable premises: " + value);
          bad = true;
          break;
        }
        r.premises = *s;
        have_premises = true;
      } else if (key == "target") {
        auto rel = rel_from_name(value);
        if (!rel || !explicit_bit(*rel)) {
          fail("unknown target relation: " + value);
          bad = true;
          break;
        }
        r.target = *rel;
        have_target = true;
      } else if (key == "formula") {
        r.formula_text = value;
      } else if (key == "src") {
        r.src = value;
        have_src = true;
      } else {
        fail("unknown field: " + key);
        bad = true;
        break;
      }
    }
    if (bad) return;
    if (!have_class || !have_premises || !have_target || !have_src) {
      fail("missing required field (class, premises, target, src)");
      return;
    }
    if (!seen_ids.insert(r.id).second) {
      fail("duplicate rule id: " + r.id);
      return;
    }
    if (!r.formula_text.empty()) {
      ParseOptions opts;
      opts.free_sorts = {{"x", left_sort(r.target)},
                         {"y", right_sort(r.target)}};
      auto res = parse_formula(r.formula_text, opts);
      if (!res) {
        std::ostringstream os;
        os << "formula error in rule " << r.id << ": " << res.error->message
           << " (column " << res.error->pos + 1 << ")";
        fail(os.str());
        return;
      }
      r.formula = res.formula;
    }
    r.derived = r.id.size() >= 4 && r.id.ends_with("~sym");
    rb.rules.push_back(std::move(r));
  });
  return rb;
}

void expand_symmetry(Rulebase& rb) {
  std::set<std::tuple<ClassTag, uint16_t, Rel>> existing;
  for (const Rule& r : rb.rules)
    existing.insert({r.cls, r.premises.mask(), r.target});
  std::vector<Rule> added;
  for (const Rule& r : rb.rules) {
    ExplicitSet sp = symmetric_set(r.premises);
    Rel st = is_reversible(r.target) ? reverse(r.target) : r.target;
    if (sp == r.premises && st == r.target) continue;  // self-image
    if (!existing.insert({r.cls, sp.mask(), st}).second) continue;
    Rule s = r;
    s.id = r.id + "~sym";
    s.premises = sp;
    s.target = st;
    s.derived = true;
    if (r.formula) {
      FormulaPtr g = dual_transform(r.formula);
      if (!is_reversible(r.target) && !is_self_symmetric(r.target))
        g = swap_free(g, "x", "y");
      s.formula = g;
      s.formula_text = print_formula(g);
    }
    added.push_back(std::move(s));
  }
  for (Rule& r : added) rb.rules.push_back(std::move(r));
}

FormulaPtr rule_query(const Rule& r) {
  if (!r.formula) throw std::logic_error("rule_query: rule has no formula");
  FormulaPtr target = Formula::atom(r.target, "x", "y");
  FormulaPtr body = Formula::binary(Conn::Iff, r.formula, target);
  body = Formula::quantifier(Conn::Forall, "y", right_sort(r.target), body);
  return Formula::quantifier(Conn::Forall, "x", left_sort(r.target), body);
}

}  // namespace pint
