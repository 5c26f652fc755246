#include "balg/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace balg {

std::string ParseError::message() const {
  std::ostringstream os;
  os << "parse error at offset " << offset;
  if (!expected.empty()) {
    os << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
  }
  if (!found.empty()) os << ", found " << found;
  return os.str();
}

const char* term_op_name(TermOp op) {
  switch (op) {
    case TermOp::Var: return "var";
    case TermOp::Zero: return "0";
    case TermOp::One: return "1";
    case TermOp::Neg: return "n";
    case TermOp::Tilde: return "t";
    case TermOp::Oplus: return "+";
    case TermOp::Mult: return "*";
    case TermOp::RDiv: return "/";
    case TermOp::LDiv: return "\\";
    case TermOp::Imp: return "->";
    case TermOp::Join: return "\\/";
    case TermOp::Meet: return "/\\";
  }
  return "?";
}

namespace {

enum class Tok {
  End, Ident, Zero, One, LParen, RParen,
  Plus, Star, Slash, Backslash, Arrow, Join, Meet,
  Eq, Le, And, Implies, Iff
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t offset = 0;
};

Result<std::vector<Token>, ParseError> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto two = [&](std::size_t k) { return s.substr(k, 2); };
  auto three = [&](std::size_t k) { return s.substr(k, 3); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (three(i) == "<=>") { out.push_back({Tok::Iff, "<=>", i}); i += 3; continue; }
    if (two(i) == "<=") { out.push_back({Tok::Le, "<=", i}); i += 2; continue; }
    if (two(i) == "=>") { out.push_back({Tok::Implies, "=>", i}); i += 2; continue; }
    if (two(i) == "->") { out.push_back({Tok::Arrow, "->", i}); i += 2; continue; }
    if (two(i) == "\\/") { out.push_back({Tok::Join, "\\/", i}); i += 2; continue; }
    if (two(i) == "/\\") { out.push_back({Tok::Meet, "/\\", i}); i += 2; continue; }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", i}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", i}); ++i; continue;
      case '+': out.push_back({Tok::Plus, "+", i}); ++i; continue;
      case '*': out.push_back({Tok::Star, "*", i}); ++i; continue;
      case '/': out.push_back({Tok::Slash, "/", i}); ++i; continue;
      case '\\': out.push_back({Tok::Backslash, "\\", i}); ++i; continue;
      case '=': out.push_back({Tok::Eq, "=", i}); ++i; continue;
      case '&': out.push_back({Tok::And, "&", i}); ++i; continue;
      default: break;
    }
    if (c == '0' || c == '1') {
      if (i + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 1])))
        return ParseError{i, std::string(1, c) + std::string(1, s[i + 1]),
                          {"'0'", "'1'", "operator"}};
      out.push_back({c == '0' ? Tok::Zero : Tok::One, std::string(1, c), i});
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    return ParseError{i, std::string(1, c), {"a term or formula token"}};
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

struct Parser {
  const std::vector<Token>& ts;
  std::size_t i = 0;
  ParseError err;
  bool failed = false;

  const Token& peek() const { return ts[i]; }
  const Token& get() { return ts[i++]; }

  template <typename T>
  std::optional<T> fail(std::size_t offset, std::string found,
                        std::vector<std::string> expected) {
    // keep the deepest error for reporting
    if (!failed || offset >= err.offset)
      err = ParseError{offset, std::move(found), std::move(expected)};
    failed = true;
    return std::nullopt;
  }

  std::optional<Term> parse_term() { return parse_arrow(); }

  std::optional<Term> parse_arrow() {
    auto lhs = parse_additive();
    if (!lhs) return std::nullopt;
    if (peek().kind == Tok::Arrow) {
      get();
      auto rhs = parse_arrow();  // right-associative
      if (!rhs) return std::nullopt;
      Term t{TermOp::Imp, -1, "", {}};
      t.args.push_back(std::move(*lhs));
      t.args.push_back(std::move(*rhs));
      return t;
    }
    return lhs;
  }

  std::optional<Term> parse_additive() {
    auto lhs = parse_multiplicative();
    if (!lhs) return std::nullopt;
    for (;;) {
      TermOp op;
      if (peek().kind == Tok::Plus) op = TermOp::Oplus;
      else if (peek().kind == Tok::Join) op = TermOp::Join;
      else if (peek().kind == Tok::Meet) op = TermOp::Meet;
      else return lhs;
      get();
      auto rhs = parse_multiplicative();
      if (!rhs) return std::nullopt;
      Term t{op, -1, "", {}};
      t.args.push_back(std::move(*lhs));
      t.args.push_back(std::move(*rhs));
      lhs = std::move(t);
    }
  }

  std::optional<Term> parse_multiplicative() {
    auto lhs = parse_primary();
    if (!lhs) return std::nullopt;
    for (;;) {
      TermOp op;
      if (peek().kind == Tok::Star) op = TermOp::Mult;
      else if (peek().kind == Tok::Slash) op = TermOp::RDiv;
      else if (peek().kind == Tok::Backslash) op = TermOp::LDiv;
      else return lhs;
      get();
      auto rhs = parse_primary();
      if (!rhs) return std::nullopt;
      Term t{op, -1, "", {}};
      t.args.push_back(std::move(*lhs));
      t.args.push_back(std::move(*rhs));
      lhs = std::move(t);
    }
  }

  std::optional<Term> parse_primary() {
    const Token& tk = peek();
    switch (tk.kind) {
      case Tok::Zero: get(); return Term{TermOp::Zero, -1, "", {}};
      case Tok::One: get(); return Term{TermOp::One, -1, "", {}};
      case Tok::LParen: {
        get();
        auto t = parse_term();
        if (!t) return std::nullopt;
        if (peek().kind != Tok::RParen)
          return fail<Term>(peek().offset, peek().text, {"')'"});
        get();
        return t;
      }
      case Tok::Ident: {
        if (tk.text == "n" || tk.text == "t") {
          get();
          if (peek().kind != Tok::LParen)
            return fail<Term>(peek().offset, peek().text,
                              {"'(' (n and t are unary operators, not names)"});
          get();
          auto arg = parse_term();
          if (!arg) return std::nullopt;
          if (peek().kind != Tok::RParen)
            return fail<Term>(peek().offset, peek().text, {"')'"});
          get();
          Term t{tk.text == "n" ? TermOp::Neg : TermOp::Tilde, -1, "", {}};
          t.args.push_back(std::move(*arg));
          return t;
        }
        get();
        return Term{TermOp::Var, -1, tk.text, {}};
      }
      default:
        return fail<Term>(tk.offset, tk.text, {"a term"});
    }
  }

  std::optional<Formula> parse_atom() {
    auto lhs = parse_term();
    if (!lhs) return std::nullopt;
    RelOp rel;
    if (peek().kind == Tok::Eq) rel = RelOp::Eq;
    else if (peek().kind == Tok::Le) rel = RelOp::Le;
    else return fail<Formula>(peek().offset, peek().text, {"'='", "'<='"});
    get();
    auto rhs = parse_term();
    if (!rhs) return std::nullopt;
    if (peek().kind == Tok::Eq || peek().kind == Tok::Le)
      return fail<Formula>(peek().offset, peek().text,
                           {"no chained relation (parenthesize each atom)"});
    Formula f;
    f.conn = Connective::None;
    f.atom = Atom{std::move(*lhs), rel, std::move(*rhs)};
    return f;
  }

  // A unit is a parenthesized formula or a bare atom. The bool reports
  // whether it was parenthesized: only parenthesized units may be joined
  // by connectives.
  std::optional<std::pair<Formula, bool>> parse_unit() {
    if (peek().kind == Tok::LParen) {
      // Could be a formula group or a term group; try the formula reading
      // and fall back.
      const std::size_t save = i;
      const bool saved_failed = failed;
      const ParseError saved_err = err;
      get();
      auto f = parse_formula_node();
      if (f && peek().kind == Tok::RParen) {
        get();
        const Tok k = peek().kind;
        if (k == Tok::And || k == Tok::Implies || k == Tok::Iff ||
            k == Tok::RParen || k == Tok::End)
          return std::make_pair(std::move(*f), true);
      }
      i = save;
      failed = saved_failed;
      err = saved_err;
    }
    auto a = parse_atom();
    if (!a) return std::nullopt;
    return std::make_pair(std::move(*a), false);
  }

  std::optional<Formula> parse_formula_node() {
    auto first = parse_unit();
    if (!first) return std::nullopt;
    const Tok k = peek().kind;
    if (k != Tok::And && k != Tok::Implies && k != Tok::Iff)
      return std::move(first->first);

    if (!first->second)
      return fail<Formula>(peek().offset, peek().text,
                           {"end of formula (atoms joined by connectives must be parenthesized)"});

    Connective conn = k == Tok::And ? Connective::And
                      : k == Tok::Implies ? Connective::Implies
                                          : Connective::Iff;
    Formula f;
    f.conn = conn;
    f.parts.push_back(std::move(first->first));
    while (peek().kind == k) {
      get();
      auto next = parse_unit();
      if (!next) return std::nullopt;
      if (!next->second)
        return fail<Formula>(peek().offset, peek().text,
                             {"parenthesized operand of a connective"});
      f.parts.push_back(std::move(next->first));
      if (conn != Connective::And) break;  // => and <=> are binary
    }
    const Tok after = peek().kind;
    if (after == Tok::And || after == Tok::Implies || after == Tok::Iff)
      return fail<Formula>(peek().offset, peek().text,
                           {"a single connective kind per level (parenthesize to mix)"});
    if (conn != Connective::And && f.parts.size() != 2)
      return fail<Formula>(peek().offset, peek().text, {"second operand"});
    return f;
  }
};

void collect_vars(const Term& t, std::vector<std::string>& names) {
  if (t.op == TermOp::Var) names.push_back(t.name);
  for (const auto& a : t.args) collect_vars(a, names);
}

void collect_vars(const Formula& f, std::vector<std::string>& names) {
  if (f.atom) {
    collect_vars(f.atom->lhs, names);
    collect_vars(f.atom->rhs, names);
  }
  for (const auto& p : f.parts) collect_vars(p, names);
}

void assign_var_indices(Term& t, const std::vector<std::string>& vars) {
  if (t.op == TermOp::Var)
    t.var = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), t.name) -
                             vars.begin());
  for (auto& a : t.args) assign_var_indices(a, vars);
}

void assign_var_indices(Formula& f, const std::vector<std::string>& vars) {
  if (f.atom) {
    assign_var_indices(f.atom->lhs, vars);
    assign_var_indices(f.atom->rhs, vars);
  }
  for (auto& p : f.parts) assign_var_indices(p, vars);
}

int precedence(TermOp op) {
  switch (op) {
    case TermOp::Imp: return 1;
    case TermOp::Oplus:
    case TermOp::Join:
    case TermOp::Meet: return 2;
    case TermOp::Mult:
    case TermOp::RDiv:
    case TermOp::LDiv: return 3;
    default: return 4;
  }
}

// Parenthesizes a child whenever precedence requires it, and also between
// different operators of equal precedence ("(x/y)*y", never "x/y*y").
void render(const Term& t, std::ostream& os, int parent_prec, TermOp parent_op,
            bool right_child) {
  const int prec = precedence(t.op);
  switch (t.op) {
    case TermOp::Var: os << t.name; return;
    case TermOp::Zero: os << "0"; return;
    case TermOp::One: os << "1"; return;
    case TermOp::Neg:
    case TermOp::Tilde:
      os << (t.op == TermOp::Neg ? "n(" : "t(");
      render(t.args[0], os, 0, t.op, false);
      os << ")";
      return;
    default: {
      bool parens = prec < parent_prec;
      if (prec == parent_prec) {
        if (t.op != parent_op)
          parens = true;
        else if (t.op == TermOp::Imp)
          parens = !right_child;  // right-associative
        else
          parens = right_child;  // left-associative
      }
      if (parens) os << "(";
      render(t.args[0], os, prec, t.op, false);
      os << term_op_name(t.op);
      render(t.args[1], os, prec, t.op, true);
      if (parens) os << ")";
      return;
    }
  }
}

}  // namespace

Result<Formula, ParseError> parse_formula(std::string_view text) {
  auto toks = lex(text);
  if (!toks) return toks.error();

  Parser p{toks.value(), 0, ParseError{}, false};
  auto f = p.parse_formula_node();
  if (f && p.peek().kind != Tok::End)
    p.fail<Formula>(p.peek().offset, p.peek().text, {"end of formula"});
  if (!f || p.peek().kind != Tok::End) return p.err;

  std::vector<std::string> names;
  collect_vars(*f, names);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  f->vars = names;
  assign_var_indices(*f, names);
  return std::move(*f);
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  render(t, os, 0, TermOp::Var, false);
  return os.str();
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  if (f.conn == Connective::None) {
    render(f.atom->lhs, os, 0, TermOp::Var, false);
    os << (f.atom->rel == RelOp::Eq ? " = " : " <= ");
    render(f.atom->rhs, os, 0, TermOp::Var, false);
    return os.str();
  }
  const char* conn = f.conn == Connective::And ? " & "
                     : f.conn == Connective::Implies ? " => "
                                                     : " <=> ";
  for (std::size_t i = 0; i < f.parts.size(); ++i) {
    if (i) os << conn;
    os << "(" << to_string(f.parts[i]) << ")";
  }
  return os.str();
}

}  // namespace balg
