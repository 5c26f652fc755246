#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balg/diagnostics.hpp"

namespace balg {

// Concrete syntax:
//   terms        0 1 x y ...   n(t)  t(t)   t+t  t*t  t/t  t\t  t->t  t\/t  t/\t
//   atoms        s = t   s <= t
//   formulas     atom | (F) & (F) & ... | (F) => (F) | (F) <=> (F)
// Precedence inside terms: n/t application, then * / \, then + \/ /\,
// then -> (right-associative). Relational atoms must be parenthesized when
// combined with a connective; chained relations are rejected.
enum class TermOp : std::uint8_t {
  Var, Zero, One, Neg, Tilde, Oplus, Mult, RDiv, LDiv, Imp, Join, Meet
};

struct Term {
  TermOp op = TermOp::Zero;
  int var = -1;             // index into Formula::vars when op == Var
  std::string name;         // variable spelling
  std::vector<Term> args;   // 1 for unary, 2 for binary
};

enum class RelOp : std::uint8_t { Eq, Le };

struct Atom {
  Term lhs;
  RelOp rel = RelOp::Eq;
  Term rhs;
};

enum class Connective : std::uint8_t { None, And, Implies, Iff };

struct Formula {
  Connective conn = Connective::None;  // None: a single atom
  std::optional<Atom> atom;
  std::vector<Formula> parts;
  std::vector<std::string> vars;  // sorted; Term::var indexes into this
};

struct ParseError {
  std::size_t offset = 0;
  std::string found;
  std::vector<std::string> expected;
  std::string message() const;
};

Result<Formula, ParseError> parse_formula(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

const char* term_op_name(TermOp op);

}  // namespace balg
