#include "balg/laws.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace balg {

namespace {

Table derived_table(int n, auto&& fn) {
  Table t(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t(x, y) = fn(x, y);
  return t;
}

}  // namespace

ModelOps ops_for(const BasicAlgebraModel& a) {
  ModelOps m;
  m.n = a.n;
  m.cls = "basic";
  m.zero = 0;
  m.one = a.one();
  m.oplus = a.oplus;
  m.neg = a.neg;
  m.tilde = a.neg;  // ~x = x->0 = n(x)+0 = n(x)
  BoundedLattice l = basic_induced_order(a);
  m.leq = l.poset.leq;
  m.join = l.join;
  m.meet = l.meet;
  auto nn = [&](int x) { return a.neg[x]; };
  auto op = [&](int x, int y) { return a.oplus(x, y); };
  m.mult = derived_table(a.n, [&](int x, int y) { return nn(op(nn(x), nn(y))); });
  m.rdiv = derived_table(a.n, [&](int x, int y) { return op(x, nn(y)); });
  m.imp = derived_table(a.n, [&](int x, int y) { return op(nn(x), y); });
  return m;
}

ModelOps ops_for(const LeftResiduatedGroupoid& g) {
  ModelOps m;
  m.n = g.poset.n;
  m.cls = "lrpg";
  m.zero = g.poset.bottom;
  m.one = g.poset.top;
  m.leq = g.poset.leq;
  m.mult = g.mult;
  m.rdiv = g.res;
  std::vector<int> neg(m.n);
  for (int x = 0; x < m.n; ++x) neg[x] = g.neg(x);
  m.neg = neg;
  m.tilde = neg;  // ~x = x->0 = n(x)/n(0) = n(x)/1 = n(x)
  m.imp = derived_table(m.n, [&](int x, int y) { return g.res(neg[x], neg[y]); });
  m.oplus = derived_table(m.n, [&](int x, int y) { return neg[g.mult(neg[x], neg[y])]; });
  if (auto l = meets_joins(g.poset)) {
    m.join = l.value().join;
    m.meet = l.value().meet;
  }
  return m;
}

ModelOps ops_for(const ContrapositionalGroupoid& c) {
  ModelOps m;
  m.n = c.poset.n;
  m.cls = "cpg";
  m.zero = c.poset.bottom;
  m.one = c.poset.top;
  m.leq = c.poset.leq;
  m.mult = c.mult;
  m.imp = c.imp;
  std::vector<int> tld(m.n);
  for (int x = 0; x < m.n; ++x) tld[x] = c.tilde(x);
  m.tilde = tld;
  m.neg = tld;  // n(x) = 0/x = ~x in a contrapositional groupoid
  m.rdiv = derived_table(m.n, [&](int x, int y) { return c.imp(tld[x], tld[y]); });
  m.oplus = derived_table(m.n, [&](int x, int y) { return tld[c.mult(tld[x], tld[y])]; });
  if (auto l = meets_joins(c.poset)) {
    m.join = l.value().join;
    m.meet = l.value().meet;
  }
  return m;
}

ModelOps ops_for(const BoundedLattice& l) {
  ModelOps m;
  m.n = l.poset.n;
  m.cls = "lattice";
  m.zero = l.poset.bottom;
  m.one = l.poset.top;
  m.leq = l.poset.leq;
  m.join = l.join;
  m.meet = l.meet;
  return m;
}

ModelOps ops_for(const OrthoLattice& o) {
  ModelOps m = ops_for(o.lattice);
  m.cls = "ortho";
  m.neg = o.perp;
  m.tilde = o.perp;
  return m;
}

namespace {

// Compiled postfix program; evaluated with an explicit stack. The naive
// tree-walking evaluator in the tests is the independent cross-check.
struct Instr {
  enum class K { PushVar, PushConst, Unary, Binary } k;
  int arg = 0;                        // var index or constant value
  const std::vector<int>* un = nullptr;
  const Table* bin = nullptr;
};

struct CompiledAtom {
  std::vector<Instr> lhs, rhs;
  RelOp rel = RelOp::Eq;
};

struct CompiledNode {
  Connective conn = Connective::None;
  int atom = -1;
  std::vector<CompiledNode> parts;
};

struct Compiled {
  std::vector<CompiledAtom> atoms;
  CompiledNode root;
  int nvars = 0;

  // A program of k instructions never needs more than k stack slots.
  std::size_t max_stack() const {
    std::size_t m = 1;
    for (const auto& a : atoms) m = std::max({m, a.lhs.size(), a.rhs.size()});
    return m;
  }
};

std::optional<Diagnostic> compile_term(const Term& t, const ModelOps& m,
                                       std::vector<Instr>& out) {
  auto missing = [&](const char* op) {
    return Diagnostic{"SignatureMismatch", {},
                      std::string("operator ") + op + " is not available on class " + m.cls};
  };
  switch (t.op) {
    case TermOp::Var:
      out.push_back({Instr::K::PushVar, t.var, nullptr, nullptr});
      return std::nullopt;
    case TermOp::Zero:
      out.push_back({Instr::K::PushConst, m.zero, nullptr, nullptr});
      return std::nullopt;
    case TermOp::One:
      out.push_back({Instr::K::PushConst, m.one, nullptr, nullptr});
      return std::nullopt;
    case TermOp::Neg:
    case TermOp::Tilde: {
      const auto& u = t.op == TermOp::Neg ? m.neg : m.tilde;
      if (!u) return missing(term_op_name(t.op));
      if (auto d = compile_term(t.args[0], m, out)) return d;
      out.push_back({Instr::K::Unary, 0, &*u, nullptr});
      return std::nullopt;
    }
    default: {
      const std::optional<Table>* b = nullptr;
      switch (t.op) {
        case TermOp::Oplus: b = &m.oplus; break;
        case TermOp::Mult: b = &m.mult; break;
        case TermOp::RDiv: b = &m.rdiv; break;
        case TermOp::LDiv: b = &m.ldiv; break;
        case TermOp::Imp: b = &m.imp; break;
        case TermOp::Join: b = &m.join; break;
        case TermOp::Meet: b = &m.meet; break;
        default: break;
      }
      if (!b || !*b) return missing(term_op_name(t.op));
      if (auto d = compile_term(t.args[0], m, out)) return d;
      if (auto d = compile_term(t.args[1], m, out)) return d;
      out.push_back({Instr::K::Binary, 0, nullptr, &**b});
      return std::nullopt;
    }
  }
}

std::optional<Diagnostic> compile_node(const Formula& f, const ModelOps& m, Compiled& c,
                                       CompiledNode& node) {
  node.conn = f.conn;
  if (f.conn == Connective::None) {
    CompiledAtom a;
    a.rel = f.atom->rel;
    if (auto d = compile_term(f.atom->lhs, m, a.lhs)) return d;
    if (auto d = compile_term(f.atom->rhs, m, a.rhs)) return d;
    node.atom = static_cast<int>(c.atoms.size());
    c.atoms.push_back(std::move(a));
    return std::nullopt;
  }
  node.parts.resize(f.parts.size());
  for (std::size_t i = 0; i < f.parts.size(); ++i)
    if (auto d = compile_node(f.parts[i], m, c, node.parts[i])) return d;
  return std::nullopt;
}

int run_prog(const std::vector<Instr>& prog, const int* asg, int* stack) {
  int sp = 0;
  for (const auto& in : prog) {
    switch (in.k) {
      case Instr::K::PushVar: stack[sp++] = asg[in.arg]; break;
      case Instr::K::PushConst: stack[sp++] = in.arg; break;
      case Instr::K::Unary: stack[sp - 1] = (*in.un)[stack[sp - 1]]; break;
      case Instr::K::Binary:
        stack[sp - 2] = (*in.bin)(stack[sp - 2], stack[sp - 1]);
        --sp;
        break;
    }
  }
  return stack[0];
}

bool eval_node(const Compiled& c, const CompiledNode& node, const ModelOps& m,
               const int* asg, int* stack) {
  if (node.conn == Connective::None) {
    const auto& a = c.atoms[node.atom];
    const int l = run_prog(a.lhs, asg, stack);
    const int r = run_prog(a.rhs, asg, stack);
    return a.rel == RelOp::Eq ? l == r : m.leq(l, r) != 0;
  }
  switch (node.conn) {
    case Connective::And:
      for (const auto& p : node.parts)
        if (!eval_node(c, p, m, asg, stack)) return false;
      return true;
    case Connective::Implies:
      return !eval_node(c, node.parts[0], m, asg, stack) ||
             eval_node(c, node.parts[1], m, asg, stack);
    case Connective::Iff:
      return eval_node(c, node.parts[0], m, asg, stack) ==
             eval_node(c, node.parts[1], m, asg, stack);
    default:
      return true;
  }
}

}  // namespace

Result<Verdict> check_formula(const Formula& f, const ModelOps& m) {
  Compiled c;
  c.nvars = static_cast<int>(f.vars.size());
  if (auto d = compile_node(f, m, c, c.root)) return *d;

  Verdict v;
  v.var_names = f.vars;
  const int k = c.nvars;
  std::vector<int> asg(std::max(k, 1), 0);
  std::vector<int> stack_store(c.max_stack());
  int* stack = stack_store.data();

  if (k == 0) {
    if (!eval_node(c, c.root, m, asg.data(), stack)) {
      v.holds = false;
      v.witness = {};
    }
    return v;
  }
  // Odometer with the first variable most significant: assignments come in
  // lexicographic order, so the first witness is the lexicographic minimum.
  for (;;) {
    if (!eval_node(c, c.root, m, asg.data(), stack)) {
      v.holds = false;
      v.witness.assign(asg.begin(), asg.begin() + k);
      return v;
    }
    int i = k - 1;
    while (i >= 0 && asg[i] == m.n - 1) asg[i--] = 0;
    if (i < 0) break;
    ++asg[i];
  }
  return v;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& catalog_texts() {
  static const std::vector<std::pair<std::string, std::string>> texts = {
      {"div", "(x/y)*y = (y/x)*x"},
      {"jk", "x*y = n(n(x)/y)"},
      {"w", "(x->y)->y = (y->x)->x"},
      {"dneg", "n(n(x)) = x"},
      {"cap", "(n(x)/y <= n(z)) <=> (z <= x*y)"},
      {"lres", "(x*y <= z) <=> (x <= z/y)"},
      {"contraposition", "x/y = n(y)/n(x)"},
      {"skew_div", "(n(y)/n(x))*y = x /\\ y"},
      {"comm_mult", "x*y = y*x"},
      {"assoc_mult", "(x*y)*z = x*(y*z)"},
      {"comm_oplus", "x+y = y+x"},
      {"assoc_oplus", "(x+y)+z = x+(y+z)"},
      {"monotone", "(x <= y) => (z+x <= z+y)"},
      {"oml_quasi", "(x <= y) => (y+x = y)"},
      {"ba1", "x+0 = x"},
      {"ba2", "n(n(x)) = x"},
      {"ba3", "n(n(x)+y)+y = n(n(y)+x)+x"},
      {"ba4", "n(n(n(x+y)+y)+z)+(x+z) = n(0)"},
      {"lemma_a", "((x/y)*y <= x) & (x <= (x*y)/y)"},
      {"lemma_b", "(x <= y) <=> (y/x = 1)"},
      {"lemma_c", "(x <= y) => (x*z <= y*z)"},
      {"lemma_d", "x*y <= y"},
      {"lemma_e", "(x/x = 1) & (1/x = 1) & (x/1 = x)"},
      {"lemma_f", "(x <= y) => (x/z <= y/z)"},
      {"lemma_g", "(x*0 = 0) & (0*x = 0)"},
      {"lemma_h", "(x \\/ y)*z = (x*z) \\/ (y*z)"},
      {"lemma_i", "(x /\\ y)/z = (x/z) /\\ (y/z)"},
  };
  return texts;
}

const std::vector<std::pair<std::string, Formula>>& catalog_parsed() {
  static const std::vector<std::pair<std::string, Formula>> parsed = [] {
    std::vector<std::pair<std::string, Formula>> out;
    for (const auto& [name, text] : catalog_texts()) {
      auto f = parse_formula(text);
      if (!f)
        throw std::logic_error("catalog law " + name + " does not parse: " +
                               f.error().message());
      out.emplace_back(name, std::move(f).value());
    }
    return out;
  }();
  return parsed;
}

}  // namespace

Result<Formula> catalog_law(const std::string& name) {
  for (const auto& [n, f] : catalog_parsed())
    if (n == name) return f;
  return Diagnostic{"UnknownLaw", {}, "no law named '" + name + "' in the catalog"};
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : catalog_parsed()) out.push_back(n);
    return out;
  }();
  return names;
}

bool catalog_has(const std::string& name) {
  for (const auto& n : catalog_names())
    if (n == name) return true;
  return false;
}

Result<std::vector<std::pair<std::string, Formula>>, ParseError>
parse_law_file(std::string_view text) {
  std::vector<std::pair<std::string, Formula>> out;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a != std::string_view::npos) {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        return ParseError{pos, std::string(line), {"'name : formula' on line " + std::to_string(lineno)}};
      std::string name(line.substr(a, colon - a));
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
      auto f = parse_formula(line.substr(colon + 1));
      if (!f) {
        ParseError e = f.error();
        e.offset += pos + colon + 1;
        return e;
      }
      out.emplace_back(std::move(name), std::move(f).value());
    }
    pos = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

bool formula_uses_lattice_ops(const Formula& f) {
  struct {
    bool found = false;
    void walk(const Term& t) {
      if (t.op == TermOp::Join || t.op == TermOp::Meet) found = true;
      for (const auto& a : t.args) walk(a);
    }
    void walk(const Formula& g) {
      if (g.atom) {
        walk(g.atom->lhs);
        walk(g.atom->rhs);
      }
      for (const auto& p : g.parts) walk(p);
    }
  } w;
  w.walk(f);
  return w.found;
}

}  // namespace balg
