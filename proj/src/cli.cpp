#include "pint/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pint/closure.hpp"
#include "pint/data.hpp"
#include "pint/decide.hpp"
#include "pint/formulas.hpp"
#include "pint/relations.hpp"
#include "pint/rulebase.hpp"
#include "pint/tables.hpp"
#include "pint/zeta.hpp"

namespace pint {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resolves a data reference: an existing file path wins, then bundled data.
std::string load_ref(const std::string& ref) {
  if (std::filesystem::exists(ref)) {
    std::ifstream in(ref, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string_view bundled = embedded_data(ref);
  if (!bundled.empty()) return std::string(bundled);
  throw UsageError("no such file or bundled data: " + ref);
}

Rulebase load_rulebase(const std::string& ref) {
  Rulebase rb = parse_rulebase(load_ref(ref));
  if (!rb.ok()) {
    std::string msg = "rulebase diagnostics:";
    for (const auto& d : rb.errors)
      msg += "\n  line " + std::to_string(d.line) + ": " + d.message;
    throw UsageError(msg);
  }
  expand_symmetry(rb);
  return rb;
}

ClassTag parse_class(const std::string& name) {
  auto c = class_from_name(name);
  if (!c) throw UsageError("unknown class: " + name);
  return *c;
}

Vocab parse_vocab(const std::string& name) {
  auto v = vocab_from_name(name);
  if (!v) throw UsageError("unknown vocabulary: " + name);
  return *v;
}

Rel parse_rel(const std::string& name) {
  auto r = rel_from_name(name);
  if (!r) throw UsageError("unknown relation: " + name);
  return *r;
}

Rel parse_explicit_rel(const std::string& name) {
  Rel r = parse_rel(name);
  if (!explicit_bit(r))
    throw UsageError("relation is not explicit (R+): " + name);
  return r;
}

std::map<std::string, Sort> parse_free_sorts(const std::string& spec) {
  std::map<std::string, Sort> out;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string item = spec.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw UsageError("free variable spec needs name:sort, got: " + item);
    std::string name = item.substr(0, colon), sort = item.substr(colon + 1);
    if (sort == "p") out[name] = Sort::Point;
    else if (sort == "i") out[name] = Sort::Interval;
    else throw UsageError("sort must be p or i: " + item);
  }
  return out;
}

FormulaPtr parse_or_throw(const std::string& text, const ParseOptions& opts) {
  auto res = parse_formula(text, opts);
  if (!res)
    throw UsageError("parse error at column " +
                     std::to_string(res.error->pos + 1) + ": " +
                     res.error->message);
  return res.formula;
}

int cmd_relations_list(bool tsv) {
  for (int i = 0; i < 26; ++i) {
    Rel r = Rel(i);
    auto bit = explicit_bit(r);
    std::string bit_s = bit ? std::to_string(*bit) : "-";
    auto sort_s = [](Sort s) { return s == Sort::Point ? "point" : "interval"; };
    if (tsv) {
      std::cout << rel_name(r) << '\t' << sort_s(left_sort(r)) << '\t'
                << sort_s(right_sort(r)) << '\t' << rel_name(inverse(r))
                << '\t' << bit_s << '\n';
    } else {
      std::ostringstream os;
      os << rel_name(r);
      std::cout << os.str() << std::string(8 - os.str().size(), ' ')
                << sort_s(left_sort(r)) << " x " << sort_s(right_sort(r))
                << "  inverse=" << rel_name(inverse(r)) << "  bit=" << bit_s
                << '\n';
    }
  }
  return 0;
}

int cmd_relations_inverse(const std::string& name) {
  std::cout << rel_name(inverse(parse_rel(name))) << '\n';
  return 0;
}

int cmd_relations_dual(const std::string& name, bool tsv) {
  Rel r = parse_rel(name);
  const char* sep = tsv ? "\t" : " ";
  if (explicit_bit(r)) {
    DualAction a = dual_symbol_action(r);
    std::cout << rel_name(a.symbol) << sep
              << (a.swap_args ? "swap" : "keep") << '\n';
  } else {
    std::cout << rel_name(dual_symbol(r)) << '\n';
  }
  return 0;
}

int cmd_parse(const std::string& text, const std::string& free_spec) {
  ParseOptions opts;
  opts.free_sorts = parse_free_sorts(free_spec);
  std::cout << print_formula(parse_or_throw(text, opts)) << '\n';
  return 0;
}

int cmd_eval(const std::string& text, int chain_n,
             const std::string& free_spec) {
  ParseOptions opts;
  opts.free_sorts = parse_free_sorts(free_spec);
  opts.allow_elements = true;
  auto res = parse_formula(text, opts);
  if (!res)
    throw UsageError("parse error at column " +
                     std::to_string(res.error->pos + 1) + ": " +
                     res.error->message);
  FiniteChain chain{chain_n};
  Env env;
  for (const auto& [var, elem] : res.literals) {
    if (!chain.contains(elem))
      throw UsageError("element " + elem.to_string() +
                       " lies outside chain of size " +
                       std::to_string(chain_n));
    env[var] = elem;
  }
  std::cout << (eval_finite(res.formula, chain, env) ? "true" : "false")
            << '\n';
  return 0;
}

std::string decide_line(const std::string& id, const DecideOutcome& o) {
  std::string line = id + " " + o.verdict;
  if (!o.valid) {
    line += " " + o.failing_theory;
    if (!o.witness.empty()) line += " " + o.witness;
  }
  return line;
}

int cmd_decide(const std::string& rulebase_ref, const std::string& cls_name,
               const std::string& id, const std::string& formula,
               const std::string& target_name) {
  if (id.empty() == (formula.empty() || target_name.empty()))
    throw UsageError("decide needs either --id or --formula with --target");
  Rule rule;
  if (!id.empty()) {
    Rulebase rb = load_rulebase(rulebase_ref);
    auto it = std::find_if(rb.rules.begin(), rb.rules.end(),
                           [&](const Rule& r) { return r.id == id; });
    if (it == rb.rules.end()) throw UsageError("no rule with id: " + id);
    if (!it->formula) throw UsageError("rule has no formula: " + id);
    rule = *it;
  } else {
    rule.id = "query";
    rule.target = parse_explicit_rel(target_name);
    ParseOptions opts;
    opts.free_sorts = {{"x", left_sort(rule.target)},
                       {"y", right_sort(rule.target)}};
    rule.formula = parse_or_throw(formula, opts);
    rule.cls = ClassTag::Lin;
  }
  ClassTag cls = cls_name.empty() ? rule.cls : parse_class(cls_name);
  DecideOutcome o = decide_sentence(rule_query(rule), cls);
  std::cout << decide_line(rule.id, o) << '\n';
  return o.valid ? 0 : 1;
}

int cmd_check_rules(const std::string& rulebase_ref,
                    const std::string& cls_name) {
  Rulebase rb = load_rulebase(rulebase_ref);
  std::optional<ClassTag> only;
  if (!cls_name.empty()) only = parse_class(cls_name);
  bool any_invalid = false;
  for (const Rule& r : rb.rules) {
    if (!r.formula) continue;
    if (only && r.cls != *only) continue;
    DecideOutcome o = decide_sentence(rule_query(r), r.cls);
    if (!o.valid) any_invalid = true;
    std::cout << decide_line(r.id, o) << '\n';
  }
  return any_invalid ? 1 : 0;
}

int cmd_closure(const std::string& rulebase_ref, const std::string& cls_name,
                const std::string& set_text) {
  auto s = ExplicitSet::parse(set_text);
  if (!s) throw UsageError("unparseable relation set: " + set_text);
  Rulebase rb = load_rulebase(rulebase_ref);
  ClosureEngine eng(rb);
  std::cout << eng.closure(parse_class(cls_name), *s).to_string() << '\n';
  return 0;
}

void print_family(const std::string& label,
                  const std::vector<ExplicitSet>& sets, bool tsv) {
  const char* sep = tsv ? "\t" : ": ";
  for (const ExplicitSet& s : sets)
    std::cout << label << sep << s.to_string() << '\n';
}

int cmd_spectrum(const std::string& rulebase_ref, const std::string& cls_name,
                 const std::string& target_name, const std::string& vocab_name,
                 const std::string& mode, bool tsv) {
  Rel target = parse_explicit_rel(target_name);
  Rulebase rb = load_rulebase(rulebase_ref);
  ClosureEngine eng(rb);
  Spectrum sp = spectrum(eng, parse_class(cls_name), target,
                         parse_vocab(vocab_name));
  std::string label(rel_name(target));
  if (mode == "mcs" || mode == "both") {
    if (mode == "both") std::cout << "# mcs\n";
    print_family(label, sp.mcs, tsv);
  }
  if (mode == "mis" || mode == "both") {
    if (mode == "both") std::cout << "# mis\n";
    print_family(label, sp.mis, tsv);
  }
  if (mode != "mcs" && mode != "mis" && mode != "both")
    throw UsageError("spectrum mode must be mcs, mis or both");
  return 0;
}

int cmd_harvest(const std::string& rulebase_ref, const std::string& cls_name,
                const std::string& vocab_name, bool tsv) {
  Rulebase rb = load_rulebase(rulebase_ref);
  ClosureEngine eng(rb);
  Harvest h = harvest(eng, parse_class(cls_name), parse_vocab(vocab_name));
  print_family("mcs", h.minimal_generating, tsv);
  print_family("mis", h.maximal_non, tsv);
  return 0;
}

int cmd_diff_tables(const std::string& rulebase_ref,
                    const std::string& cls_name,
                    const std::string& expected_ref, const std::string& mode,
                    const std::string& vocab_name, bool tsv) {
  ExpectedTable expected = parse_expected_table(load_ref(expected_ref));
  if (!expected.ok()) {
    std::string msg = "expected-table diagnostics:";
    for (const auto& d : expected.errors)
      msg += "\n  line " + std::to_string(d.line) + ": " + d.message;
    throw UsageError(msg);
  }
  Rulebase rb = load_rulebase(rulebase_ref);
  ClosureEngine eng(rb);
  ClassTag cls = parse_class(cls_name);
  Vocab vocab = parse_vocab(vocab_name);

  std::map<std::string, std::vector<ExplicitSet>> computed;
  if (mode == "harvest") {
    Harvest h = harvest(eng, cls, vocab);
    computed["mcs"] = h.minimal_generating;
    computed["mis"] = h.maximal_non;
  } else if (mode == "mcs" || mode == "mis") {
    for (const ExpectedEntry& e : expected.entries) {
      if (computed.count(e.target)) continue;
      Rel r = parse_explicit_rel(e.target);
      Spectrum sp = spectrum(eng, cls, r, vocab);
      computed[e.target] = mode == "mcs" ? sp.mcs : sp.mis;
    }
  } else {
    throw UsageError("diff-tables mode must be mcs, mis or harvest");
  }
  DiffReport rep = diff_tables(computed, expected);
  std::cout << rep.to_text(tsv);
  return rep.clean() ? 0 : 1;
}

int cmd_verify_zeta(const std::string& catalog_ref,
                    const std::string& rulebase_ref, const std::string& id,
                    bool all, long long samples, uint64_t seed) {
  if (id.empty() == !all)
    throw UsageError("verify-zeta needs exactly one of --id or --all");
  ZetaCatalog cat = parse_zeta_catalog(load_ref(catalog_ref));
  if (!cat.ok()) {
    std::string msg = "catalog diagnostics:";
    for (const auto& d : cat.errors)
      msg += "\n  line " + std::to_string(d.line) + ": " + d.message;
    throw UsageError(msg);
  }
  Rulebase rb = load_rulebase(rulebase_ref);
  bool outcome_ok = true;
  for (const ZetaSpec& spec : cat.specs) {
    if (!all && spec.id != id) continue;
    ZetaReport rep = verify_zeta(spec, samples, seed, &rb);
    std::cout << rep.id << ' ' << (rep.pass ? "PASS" : "FAIL");
    if (rep.pass != spec.expect_pass) {
      outcome_ok = false;
      std::cout << " (unexpected)";
    } else if (!spec.expect_pass) {
      std::cout << " (expected)";
    }
    std::cout << '\n';
    for (const ZetaCheck& c : rep.checks) {
      if (c.pass && all) continue;  // summary only in batch mode
      std::cout << "  " << c.name << ": " << (c.pass ? "ok" : c.detail)
                << '\n';
    }
  }
  if (!all) {
    bool found = std::any_of(cat.specs.begin(), cat.specs.end(),
                             [&](const ZetaSpec& s) { return s.id == id; });
    if (!found) throw UsageError("no zeta spec with id: " + id);
  }
  return outcome_ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"verification workbench for point/interval relation "
               "definability over linear orders"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  std::string rulebase_ref = "data/rulebase.rules";
  std::string catalog_ref = "data/zeta.catalog";
  std::string cls_name, target_name, set_text, id, formula_text, free_spec,
      expected_ref;
  std::string vocab_name = "all", mode = "both";
  int chain_n = 0;
  long long samples = 100000;
  uint64_t seed = 7;
  bool all = false;

  // relations
  auto* rel_cmd = app.add_subcommand("relations", "relation vocabulary");
  rel_cmd->require_subcommand(1);
  rel_cmd->add_subcommand("list", "list all 26 symbols");
  auto* inv_cmd = rel_cmd->add_subcommand("inverse", "inverse of a symbol");
  inv_cmd->add_option("name", target_name, "relation name")->required();
  auto* dual_cmd =
      rel_cmd->add_subcommand("dual", "order-reversal dual of a symbol");
  dual_cmd->add_option("name", set_text, "relation name")->required();

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "parse and reprint a formula");
  parse_cmd->add_option("--formula", formula_text, "formula text")->required();
  parse_cmd->add_option("--free", free_spec,
                        "free variable sorts, e.g. x:i,y:p");

  // eval
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a sentence over a finite chain");
  eval_cmd->add_option("--formula", formula_text, "formula text")->required();
  eval_cmd->add_option("--chain", chain_n, "chain size")->required();
  eval_cmd->add_option("--free", free_spec, "free variable sorts");

  // decide
  auto* decide_cmd =
      app.add_subcommand("decide", "decide a definability query");
  decide_cmd->add_option("--class", cls_name, "lin|den|dis|unb");
  decide_cmd->add_option("--id", id, "rule id from the rulebase");
  decide_cmd->add_option("--formula", formula_text, "defining body");
  decide_cmd->add_option("--target", target_name, "target relation");
  decide_cmd->add_option("--rulebase", rulebase_ref, "rule file");

  // check-rules
  auto* check_cmd =
      app.add_subcommand("check-rules", "decide every formula-bearing rule");
  check_cmd->add_option("--rulebase", rulebase_ref, "rule file");
  check_cmd->add_option("--class", cls_name, "restrict to one class");

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "definability closure");
  closure_cmd->add_option("--class", cls_name, "lin|den|dis|unb")->required();
  closure_cmd->add_option("--set", set_text, "relation set")->required();
  closure_cmd->add_option("--rulebase", rulebase_ref, "rule file");

  // spectrum
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "mcs/mis families of a target");
  spectrum_cmd->add_option("--class", cls_name, "lin|den|dis|unb")->required();
  spectrum_cmd->add_option("--target", target_name, "target relation")
      ->required();
  spectrum_cmd->add_option("--vocab", vocab_name, "all|iplus|mplus");
  spectrum_cmd->add_option("--mode", mode, "mcs|mis|both");
  spectrum_cmd->add_option("--rulebase", rulebase_ref, "rule file");

  // harvest
  auto* harvest_cmd =
      app.add_subcommand("harvest", "generating-set enumeration");
  harvest_cmd->add_option("--class", cls_name, "lin|den|dis|unb")->required();
  harvest_cmd->add_option("--vocab", vocab_name, "all|iplus|mplus");
  harvest_cmd->add_option("--rulebase", rulebase_ref, "rule file");

  // diff-tables
  auto* diff_cmd =
      app.add_subcommand("diff-tables", "compare computed vs expected tables");
  diff_cmd->add_option("--class", cls_name, "lin|den|dis|unb")->required();
  diff_cmd->add_option("--expected", expected_ref, "expected table file")
      ->required();
  diff_cmd->add_option("--mode", mode, "mcs|mis|harvest")->required();
  diff_cmd->add_option("--vocab", vocab_name, "all|iplus|mplus");
  diff_cmd->add_option("--rulebase", rulebase_ref, "rule file");

  // verify-zeta
  auto* zeta_cmd =
      app.add_subcommand("verify-zeta", "verify counterexample catalog");
  zeta_cmd->add_option("--id", id, "catalog entry id");
  zeta_cmd->add_flag("--all", all, "verify every entry");
  zeta_cmd->add_option("--samples", samples, "random sample count");
  zeta_cmd->add_option("--seed", seed, "random seed");
  zeta_cmd->add_option("--catalog", catalog_ref, "catalog file");
  zeta_cmd->add_option("--rulebase", rulebase_ref, "rule file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  bool tsv = format == "tsv";
  try {
    if (rel_cmd->parsed()) {
      if (rel_cmd->get_subcommand("list")->parsed())
        return cmd_relations_list(tsv);
      if (inv_cmd->parsed()) return cmd_relations_inverse(target_name);
      return cmd_relations_dual(set_text, tsv);
    }
    if (parse_cmd->parsed()) return cmd_parse(formula_text, free_spec);
    if (eval_cmd->parsed()) return cmd_eval(formula_text, chain_n, free_spec);
    if (decide_cmd->parsed())
      return cmd_decide(rulebase_ref, cls_name, id, formula_text, target_name);
    if (check_cmd->parsed()) return cmd_check_rules(rulebase_ref, cls_name);
    if (closure_cmd->parsed())
      return cmd_closure(rulebase_ref, cls_name, set_text);
    if (spectrum_cmd->parsed())
      return cmd_spectrum(rulebase_ref, cls_name, target_name, vocab_name,
                          mode, tsv);
    if (harvest_cmd->parsed())
      return cmd_harvest(rulebase_ref, cls_name, vocab_name, tsv);
    if (diff_cmd->parsed())
      return cmd_diff_tables(rulebase_ref, cls_name, expected_ref, mode,
                             vocab_name, tsv);
    if (zeta_cmd->parsed())
      return cmd_verify_zeta(catalog_ref, rulebase_ref, id, all, samples,
                             seed);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pint
