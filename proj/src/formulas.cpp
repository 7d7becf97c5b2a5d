#include "pint/formulas.hpp"

#include <algorithm>
#include <cctype>

namespace pint {

FormulaPtr Formula::atom(Rel r, std::string l, std::string rr) {
  auto f = std::make_shared<Formula>();
  f->kind = Conn::Atom;
  f->rel = r;
  f->lhs = std::move(l);
  f->rhs = std::move(rr);
  return f;
}

FormulaPtr Formula::negation(FormulaPtr g) {
  auto f = std::make_shared<Formula>();
  f->kind = Conn::Not;
  f->a = std::move(g);
  return f;
}

FormulaPtr Formula::binary(Conn c, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = c;
  f->a = std::move(l);
  f->b = std::move(r);
  return f;
}

FormulaPtr Formula::quantifier(Conn c, std::string v, Sort s, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = c;
  f->var = std::move(v);
  f->sort = s;
  f->a = std::move(body);
  return f;
}

bool structurally_equal(const FormulaPtr& f, const FormulaPtr& g) {
  if (f == g) return true;
  if (!f || !g || f->kind != g->kind) return false;
  switch (f->kind) {
    case Conn::Atom:
      return f->rel == g->rel && f->lhs == g->lhs && f->rhs == g->rhs;
    case Conn::Not:
      return structurally_equal(f->a, g->a);
    case Conn::Exists:
    case Conn::Forall:
      return f->var == g->var && f->sort == g->sort &&
             structurally_equal(f->a, g->a);
    default:
      return structurally_equal(f->a, g->a) && structurally_equal(f->b, g->b);
  }
}

namespace {

enum class Tok {
  Ident, Int, LParen, RParen, LBracket, RBracket, Comma, Dot, Colon,
  Not, And, Or, Imp, Iff, End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  std::string_view src;
  size_t pos = 0;
  std::optional<ParseError> error;

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    size_t at = pos;
    if (pos >= src.size()) return {Tok::End, "", at};
    char c = src[pos];
    auto one = [&](Tok k) { ++pos; return Token{k, std::string(1, c), at}; };
    switch (c) {
      case '(': return one(Tok::LParen);
      case ')': return one(Tok::RParen);
      case '[': return one(Tok::LBracket);
      case ']': return one(Tok::RBracket);
      case ',': return one(Tok::Comma);
      case '.': return one(Tok::Dot);
      case ':': return one(Tok::Colon);
      case '~': return one(Tok::Not);
      case '&': return one(Tok::And);
      case '|': return one(Tok::Or);
      default: break;
    }
    if (src.substr(pos, 3) == "<->") { pos += 3; return {Tok::Iff, "<->", at}; }
    if (src.substr(pos, 2) == "->") { pos += 2; return {Tok::Imp, "->", at}; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t s = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      return {Tok::Ident, std::string(src.substr(s, pos - s)), at};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos + 1 < src.size() &&
         std::isdigit(static_cast<unsigned char>(src[pos + 1])))) {
      size_t s = pos;
      if (c == '-') ++pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      return {Tok::Int, std::string(src.substr(s, pos - s)), at};
    }
    error = ParseError{ParseError::Kind::Syntax, at,
                       "unexpected character '" + std::string(1, c) + "'"};
    ++pos;
    return {Tok::End, "", at};
  }
};

struct Parser {
  Lexer lex;
  Token tok;
  const ParseOptions& opts;
  std::optional<ParseError> error;
  std::vector<std::pair<std::string, Sort>> scope;  // innermost last
  std::vector<std::pair<std::string, Element>> literals;
  int next_literal = 0;

  explicit Parser(std::string_view text, const ParseOptions& o)
      : lex{text}, opts(o) {
    advance();
  }

  void advance() {
    tok = lex.next();
    if (lex.error && !error) error = lex.error;
  }

  void fail(ParseError::Kind kind, size_t pos, std::string msg) {
    if (!error) error = ParseError{kind, pos, std::move(msg)};
  }

  bool expect(Tok k, const char* what) {
    if (error) return false;
    if (tok.kind != k) {
      fail(ParseError::Kind::Syntax, tok.pos,
           std::string("expected ") + what);
      return false;
    }
    advance();
    return true;
  }

  std::optional<Sort> lookup(const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    if (auto it = opts.free_sorts.find(name); it != opts.free_sorts.end())
      return it->second;
    return std::nullopt;
  }

  // iff level, lowest precedence; left-associative
  FormulaPtr parse_iff() {
    auto f = parse_imp();
    while (!error && tok.kind == Tok::Iff) {
      advance();
      auto g = parse_imp();
      if (error) return nullptr;
      f = Formula::binary(Conn::Iff, f, g);
    }
    return error ? nullptr : f;
  }

  FormulaPtr parse_imp() {
    auto f = parse_or();
    if (!error && tok.kind == Tok::Imp) {
      advance();
      auto g = parse_imp();  // right-associative
      if (error) return nullptr;
      f = Formula::binary(Conn::Imp, f, g);
    }
    return error ? nullptr : f;
  }

  FormulaPtr parse_or() {
    auto f = parse_and();
    while (!error && tok.kind == Tok::Or) {
      advance();
      auto g = parse_and();
      if (error) return nullptr;
      f = Formula::binary(Conn::Or, f, g);
    }
    return error ? nullptr : f;
  }

  FormulaPtr parse_and() {
    auto f = parse_unary();
    while (!error && tok.kind == Tok::And) {
      advance();
      auto g = parse_unary();
      if (error) return nullptr;
      f = Formula::binary(Conn::And, f, g);
    }
    return error ? nullptr : f;
  }

  FormulaPtr parse_unary() {
    if (error) return nullptr;
    if (tok.kind == Tok::Not) {
      advance();
      auto f = parse_unary();
      return error ? nullptr : Formula::negation(f);
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (error) return nullptr;
    if (tok.kind == Tok::LParen) {
      advance();
      auto f = parse_iff();
      if (!expect(Tok::RParen, "')'")) return nullptr;
      return f;
    }
    if (tok.kind == Tok::Ident && (tok.text == "all" || tok.text == "ex"))
      return parse_quantifier();
    if (tok.kind == Tok::Ident) return parse_atom();
    fail(ParseError::Kind::Syntax, tok.pos, "expected a formula");
    return nullptr;
  }

  FormulaPtr parse_quantifier() {
    Conn c = tok.text == "all" ? Conn::Forall : Conn::Exists;
    advance();
    if (tok.kind != Tok::Ident) {
      fail(ParseError::Kind::Syntax, tok.pos, "expected a variable name");
      return nullptr;
    }
    std::string var = tok.text;
    advance();
    if (!expect(Tok::Colon, "':'")) return nullptr;
    if (tok.kind != Tok::Ident || (tok.text != "p" && tok.text != "i")) {
      fail(ParseError::Kind::Syntax, tok.pos, "expected sort 'p' or 'i'");
      return nullptr;
    }
    Sort s = tok.text == "p" ? Sort::Point : Sort::Interval;
    advance();
    if (!expect(Tok::Dot, "'.'")) return nullptr;
    scope.emplace_back(var, s);
    auto body = parse_iff();  // maximal-right scope
    scope.pop_back();
    return error ? nullptr : Formula::quantifier(c, var, s, body);
  }

  // An atom argument: a variable, or (eval mode) an element literal.
  // Returns the variable name and its sort.
  std::optional<std::pair<std::string, Sort>> parse_arg() {
    if (opts.allow_elements && tok.kind == Tok::Int) {
      long long v = std::stoll(tok.text);
      advance();
      std::string name = "$e" + std::to_string(next_literal++);
      literals.emplace_back(name, Element::point(v));
      return {{name, Sort::Point}};
    }
    if (opts.allow_elements && tok.kind == Tok::LBracket) {
      advance();
      if (tok.kind != Tok::Int) {
        fail(ParseError::Kind::Syntax, tok.pos, "expected an integer endpoint");
        return std::nullopt;
      }
      long long l = std::stoll(tok.text);
      advance();
      if (!expect(Tok::Comma, "','")) return std::nullopt;
      if (tok.kind != Tok::Int) {
        fail(ParseError::Kind::Syntax, tok.pos, "expected an integer endpoint");
        return std::nullopt;
      }
      long long r = std::stoll(tok.text);
      advance();
      if (!expect(Tok::RBracket, "']'")) return std::nullopt;
      std::string name = "$e" + std::to_string(next_literal++);
      literals.emplace_back(name, Element::interval(l, r));
      return {{name, Sort::Interval}};
    }
    if (tok.kind != Tok::Ident) {
      fail(ParseError::Kind::Syntax, tok.pos, "expected a variable");
      return std::nullopt;
    }
    std::string name = tok.text;
    size_t at = tok.pos;
    advance();
    auto s = lookup(name);
    if (!s) {
      fail(ParseError::Kind::UnboundVariable, at,
           "unbound variable '" + name + "'");
      return std::nullopt;
    }
    return {{name, *s}};
  }

  FormulaPtr parse_atom() {
    std::string rel = tok.text;
    size_t at = tok.pos;
    advance();
    auto r = rel_from_name(rel);
    if (!r) {
      fail(ParseError::Kind::UnknownRelation, at,
           "unknown relation '" + rel + "'");
      return nullptr;
    }
    if (!expect(Tok::LParen, "'('")) return nullptr;
    auto x = parse_arg();
    if (!x) return nullptr;
    if (!expect(Tok::Comma, "','")) return nullptr;
    auto y = parse_arg();
    if (!y) return nullptr;
    if (!expect(Tok::RParen, "')'")) return nullptr;
    auto sort_name = [](Sort s) { return s == Sort::Point ? "point" : "interval"; };
    std::string atom_text =
        rel + "(" + x->first + "," + y->first + ")";
    if (x->second != left_sort(*r)) {
      fail(ParseError::Kind::SortMismatch, at,
           "sort error in atom " + atom_text + ": argument 1 has sort " +
               sort_name(x->second) + ", expected " +
               sort_name(left_sort(*r)));
      return nullptr;
    }
    if (y->second != right_sort(*r)) {
      fail(ParseError::Kind::SortMismatch, at,
           "sort error in atom " + atom_text + ": argument 2 has sort " +
               sort_name(y->second) + ", expected " +
               sort_name(right_sort(*r)));
      return nullptr;
    }
    return Formula::atom(*r, x->first, y->first);
  }
};

bool needs_parens_as_operand(const FormulaPtr& f) {
  switch (f->kind) {
    case Conn::Atom:
    case Conn::Not:
      return false;
    default:
      return true;
  }
}

void print_rec(const FormulaPtr& f, std::string& out);

void print_operand(const FormulaPtr& f, std::string& out) {
  if (needs_parens_as_operand(f)) {
    out += '(';
    print_rec(f, out);
    out += ')';
  } else {
    print_rec(f, out);
  }
}

void print_rec(const FormulaPtr& f, std::string& out) {
  switch (f->kind) {
    case Conn::Atom:
      out += rel_name(f->rel);
      out += '(';
      out += f->lhs;
      out += ',';
      out += f->rhs;
      out += ')';
      return;
    case Conn::Not:
      out += '~';
      print_operand(f->a, out);
      return;
    case Conn::And:
    case Conn::Or:
    case Conn::Imp:
    case Conn::Iff: {
      const char* op = f->kind == Conn::And   ? " & "
                       : f->kind == Conn::Or  ? " | "
                       : f->kind == Conn::Imp ? " -> "
                                              : " <-> ";
      print_operand(f->a, out);
      out += op;
      print_operand(f->b, out);
      return;
    }
    case Conn::Exists:
    case Conn::Forall:
      out += f->kind == Conn::Exists ? "ex " : "all ";
      out += f->var;
      out += ':';
      out += f->sort == Sort::Point ? 'p' : 'i';
      out += ". ";
      print_rec(f->a, out);
      return;
  }
}

void free_vars_rec(const FormulaPtr& f, std::vector<std::string>& bound,
                   std::vector<std::pair<std::string, Sort>>& out,
                   std::map<std::string, Sort>& seen) {
  switch (f->kind) {
    case Conn::Atom: {
      for (const auto& v : {f->lhs, f->rhs}) {
        if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
        if (seen.count(v)) continue;
        Sort s = v == f->lhs ? left_sort(f->rel) : right_sort(f->rel);
        seen[v] = s;
        out.emplace_back(v, s);
      }
      return;
    }
    case Conn::Not:
      free_vars_rec(f->a, bound, out, seen);
      return;
    case Conn::Exists:
    case Conn::Forall:
      bound.push_back(f->var);
      free_vars_rec(f->a, bound, out, seen);
      bound.pop_back();
      return;
    default:
      free_vars_rec(f->a, bound, out, seen);
      free_vars_rec(f->b, bound, out, seen);
      return;
  }
}

}  // namespace

ParseResult parse_formula(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  auto f = p.parse_iff();
  if (!p.error && p.tok.kind != Tok::End)
    p.fail(ParseError::Kind::Syntax, p.tok.pos, "unexpected trailing input");
  if (p.error) return {nullptr, p.error, {}};
  return {f, std::nullopt, std::move(p.literals)};
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

std::vector<std::pair<std::string, Sort>> free_variables(const FormulaPtr& f) {
  std::vector<std::string> bound;
  std::vector<std::pair<std::string, Sort>> out;
  std::map<std::string, Sort> seen;
  free_vars_rec(f, bound, out, seen);
  return out;
}

bool eval_finite(const FormulaPtr& f, const FiniteChain& chain, const Env& env) {
  switch (f->kind) {
    case Conn::Atom: {
      auto x = env.find(f->lhs);
      auto y = env.find(f->rhs);
      if (x == env.end() || y == env.end())
        throw std::runtime_error("eval_finite: unbound variable");
      return holds(f->rel, x->second, y->second);
    }
    case Conn::Not:
      return !eval_finite(f->a, chain, env);
    case Conn::And:
      return eval_finite(f->a, chain, env) && eval_finite(f->b, chain, env);
    case Conn::Or:
      return eval_finite(f->a, chain, env) || eval_finite(f->b, chain, env);
    case Conn::Imp:
      return !eval_finite(f->a, chain, env) || eval_finite(f->b, chain, env);
    case Conn::Iff:
      return eval_finite(f->a, chain, env) == eval_finite(f->b, chain, env);
    case Conn::Exists:
    case Conn::Forall: {
      bool want = f->kind == Conn::Exists;
      Env e2 = env;
      for (const Element& el : chain.elements(f->sort)) {
        e2[f->var] = el;
        if (eval_finite(f->a, chain, e2) == want) return want;
      }
      return !want;
    }
  }
  return false;
}

FormulaPtr dual_transform(const FormulaPtr& f) {
  switch (f->kind) {
    case Conn::Atom: {
      if (explicit_bit(f->rel)) {
        DualAction act = dual_symbol_action(f->rel);
        return act.swap_args ? Formula::atom(act.symbol, f->rhs, f->lhs)
                             : Formula::atom(act.symbol, f->lhs, f->rhs);
      }
      return Formula::atom(dual_symbol(f->rel), f->lhs, f->rhs);
    }
    case Conn::Not:
      return Formula::negation(dual_transform(f->a));
    case Conn::Exists:
    case Conn::Forall:
      return Formula::quantifier(f->kind, f->var, f->sort, dual_transform(f->a));
    default:
      return Formula::binary(f->kind, dual_transform(f->a), dual_transform(f->b));
  }
}

namespace {

FormulaPtr rename_rec(const FormulaPtr& f, const std::string& from,
                      const std::string& to) {
  switch (f->kind) {
    case Conn::Atom: {
      std::string l = f->lhs == from ? to : f->lhs;
      std::string r = f->rhs == from ? to : f->rhs;
      if (l == f->lhs && r == f->rhs) return f;
      return Formula::atom(f->rel, l, r);
    }
    case Conn::Not: {
      auto a = rename_rec(f->a, from, to);
      return a == f->a ? f : Formula::negation(a);
    }
    case Conn::Exists:
    case Conn::Forall: {
      if (f->var == from) return f;  // shadowed
      auto a = rename_rec(f->a, from, to);
      return a == f->a ? f : Formula::quantifier(f->kind, f->var, f->sort, a);
    }
    default: {
      auto a = rename_rec(f->a, from, to);
      auto b = rename_rec(f->b, from, to);
      return a == f->a && b == f->b ? f : Formula::binary(f->kind, a, b);
    }
  }
}

}  // namespace

FormulaPtr rename_free(const FormulaPtr& f, const std::string& from,
                       const std::string& to) {
  return rename_rec(f, from, to);
}

FormulaPtr swap_free(const FormulaPtr& f, const std::string& a,
                     const std::string& b) {
  std::string tmp = "$swap";
  return rename_rec(rename_rec(rename_rec(f, a, tmp), b, a), tmp, b);
}

}  // namespace pint
