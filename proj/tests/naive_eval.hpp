#pragma once

// Reference evaluator: straight recursion over the syntax tree, no
// compilation step. check_formula must agree with it, verdict and witness.

#include <optional>
#include <stdexcept>
#include <vector>

#include "balg/formula.hpp"
#include "balg/laws.hpp"

namespace balg::test {

struct NaiveUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int naive_term(const Term& t, const ModelOps& m, const std::vector<int>& asg) {
  auto need_u = [&](const std::optional<std::vector<int>>& u) -> const std::vector<int>& {
    if (!u) throw NaiveUnsupported(term_op_name(t.op));
    return *u;
  };
  auto need_b = [&](const std::optional<Table>& b) -> const Table& {
    if (!b) throw NaiveUnsupported(term_op_name(t.op));
    return *b;
  };
  switch (t.op) {
    case TermOp::Var: return asg[t.var];
    case TermOp::Zero: return m.zero;
    case TermOp::One: return m.one;
    case TermOp::Neg: return need_u(m.neg)[naive_term(t.args[0], m, asg)];
    case TermOp::Tilde: return need_u(m.tilde)[naive_term(t.args[0], m, asg)];
    case TermOp::Oplus:
      return need_b(m.oplus)(naive_term(t.args[0], m, asg), naive_term(t.args[1], m, asg));
    case TermOp::Mult:
      return need_b(m.mult)(naive_term(t.args[0], m, asg), naive_term(t.args[1], m, asg));
    case TermOp::RDiv:
      return need_b(m.rdiv)(naive_term(t.args[0], m, asg), naive_term(t.args[1], m, asg));
    case TermOp::LDiv:
      return need_b(m.ldiv)(naive_term(t.args[0], m, asg), naive_term(t.args[1], m, asg));
    case TermOp::Imp:
      return need_b(m.imp)(naive_term(t.args[0], m, asg), naive_term(t.args[1], m, asg));
    case TermOp::Join:
      return need_b(m.join)(naive_term(t.args[0], m, asg), naive_term(t.args[1], m, asg));
    case TermOp::Meet:
      return need_b(m.meet)(naive_term(t.args[0], m, asg), naive_term(t.args[1], m, asg));
  }
  throw NaiveUnsupported("bad op");
}

inline bool naive_formula(const Formula& f, const ModelOps& m, const std::vector<int>& asg) {
  if (f.conn == Connective::None) {
    const int l = naive_term(f.atom->lhs, m, asg);
    const int r = naive_term(f.atom->rhs, m, asg);
    return f.atom->rel == RelOp::Eq ? l == r : m.leq(l, r) != 0;
  }
  if (f.conn == Connective::And) {
    for (const auto& p : f.parts)
      if (!naive_formula(p, m, asg)) return false;
    return true;
  }
  if (f.conn == Connective::Implies)
    return !naive_formula(f.parts[0], m, asg) || naive_formula(f.parts[1], m, asg);
  return naive_formula(f.parts[0], m, asg) == naive_formula(f.parts[1], m, asg);
}

// Recursive assignment enumeration, first variable outermost.
inline bool naive_check(const Formula& f, const ModelOps& m, std::vector<int>& asg,
                        std::size_t i, std::vector<int>& witness) {
  if (i == f.vars.size()) {
    if (naive_formula(f, m, asg)) return true;
    witness = asg;
    return false;
  }
  for (int v = 0; v < m.n; ++v) {
    asg[i] = v;
    if (!naive_check(f, m, asg, i + 1, witness)) return false;
  }
  return true;
}

struct NaiveVerdict {
  bool holds = true;
  std::vector<int> witness;
};

inline NaiveVerdict naive_check_formula(const Formula& f, const ModelOps& m) {
  NaiveVerdict v;
  std::vector<int> asg(f.vars.size(), 0);
  v.holds = naive_check(f, m, asg, 0, v.witness);
  return v;
}

}  // namespace balg::test
