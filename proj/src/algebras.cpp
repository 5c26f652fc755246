#include "balg/algebras.hpp"

#include <sstream>
#include <stdexcept>

namespace balg {

namespace {

bool unary_in_range(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  for (int x : v)
    if (x < 0 || x >= n) return false;
  return true;
}

}  // namespace

const LemmaRuleReport::Entry& LemmaRuleReport::rule(char r) const {
  for (const auto& e : entries)
    if (e.rule == r) return e;
  throw std::out_of_range("no such lemma rule");
}

Result<BasicAlgebraModel> validate_basic_algebra(int n, const Table& oplus,
                                                 const std::vector<int>& neg) {
  if (n <= 0 || oplus.size() != n || !oplus.in_range() || !unary_in_range(neg, n))
    return Diagnostic{"BadTables", {}, "tables must be total on {0..n-1}"};

  auto op = [&](int x, int y) { return oplus(x, y); };
  auto nn = [&](int x) { return neg[x]; };
  const int one = nn(0);

  // (1) x + 0 = x
  for (int x = 0; x < n; ++x)
    if (op(x, 0) != x)
      return Diagnostic{"AxiomFailed", {1, x}, "x + 0 != x"};
  // (2) n(n(x)) = x
  for (int x = 0; x < n; ++x)
    if (nn(nn(x)) != x)
      return Diagnostic{"AxiomFailed", {2, x}, "n(n(x)) != x"};
  // (3) n(n(x)+y)+y = n(n(y)+x)+x
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (op(nn(op(nn(x), y)), y) != op(nn(op(nn(y), x)), x)) {
        std::ostringstream os;
        os << "sides " << op(nn(op(nn(x), y)), y) << " vs " << op(nn(op(nn(y), x)), x);
        return Diagnostic{"AxiomFailed", {3, x, y}, os.str()};
      }
  // (4) n(n(n(x+y)+y)+z)+(x+z) = 1
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int s = op(nn(op(nn(op(x, y)), y)), z);
        if (op(nn(s), op(x, z)) != one)
          return Diagnostic{"AxiomFailed", {4, x, y, z}, "left side differs from n(0)"};
      }

  // Redundant identities x+1 = 1 = 1+x follow from (1)-(4); failing here
  // would mean the axiom scan above is broken.
  for (int x = 0; x < n; ++x)
    if (op(x, one) != one || op(one, x) != one)
      throw std::logic_error("basic-algebra validator bug: x+1=1=1+x violated");

  BasicAlgebraModel a;
  a.n = n;
  a.oplus = oplus;
  a.neg = neg;
  return a;
}

BoundedLattice basic_induced_order(const BasicAlgebraModel& a) {
  const int n = a.n;
  const int one = a.one();
  Table leq(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      leq(x, y) = a.oplus(a.neg[x], y) == one ? 1 : 0;

  auto vp = validate_finite_poset(leq, 0, one);
  if (!vp) throw std::logic_error("induced order is not a bounded poset: " + vp.error().message());

  // (x -> y) -> y and n(n(x) v n(y)), then verified against bound scans.
  auto arrow = [&](int x, int y) { return a.oplus(a.neg[x], y); };
  BoundedLattice l;
  l.poset = vp.value();
  l.meet = Table(n);
  l.join = Table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int j = arrow(arrow(x, y), y);
      const int m = a.neg[arrow(arrow(a.neg[x], a.neg[y]), a.neg[y])];
      auto js = l.poset.join_of(x, y);
      auto ms = l.poset.meet_of(x, y);
      if (!js || *js != j || !ms || *ms != m)
        throw std::logic_error("induced lattice operations disagree with bound scan");
      l.join(x, y) = j;
      l.meet(x, y) = m;
    }
  return l;
}

Result<Table> residuum_from_mult(const FinitePoset& p, const Table& mult) {
  const int n = p.n;
  Table res(n);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) {
      std::vector<int> s;
      for (int x = 0; x < n; ++x)
        if (p.le(mult(x, y), z)) s.push_back(x);
      auto m = p.greatest(s);
      if (!m) {
        std::ostringstream os;
        os << "{x : x*y <= z} has maximal elements";
        for (int w : p.maximal_of(s)) os << " " << w;
        os << " but no greatest";
        return Diagnostic{"NoResiduum", {z, y}, os.str()};
      }
      res(z, y) = *m;
    }
  return res;
}

Result<LeftResiduatedGroupoid> validate_lrpg(const FinitePoset& p, const Table& mult,
                                             const Table& res) {
  const int n = p.n;
  if (mult.size() != n || res.size() != n || !mult.in_range() || !res.in_range())
    return Diagnostic{"BadTables", {}, "tables must be total on {0..n-1}"};

  const int one = p.top;
  for (int x = 0; x < n; ++x)
    if (mult(one, x) != x || mult(x, one) != x)
      return Diagnostic{"IdentityFailed", {x}, "1 is not a two-sided identity"};

  // (7): x*y <= z iff x <= z/y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p.le(mult(x, y), z) != p.le(x, res(z, y)))
          return Diagnostic{"ResiduationFailed", {x, y, z},
                            "x*y <= z and x <= z/y disagree"};

  // File-supplied tables are audited, not trusted: re-derive / and compare.
  // After a full (7) scan the two must agree, so a mismatch is our bug.
  auto derived = residuum_from_mult(p, mult);
  if (!derived || !(derived.value() == res))
    throw std::logic_error("residuation scan passed but derived residuum differs");

  LeftResiduatedGroupoid g;
  g.poset = p;
  g.mult = mult;
  g.res = res;
  return g;
}

Result<ContrapositionalGroupoid> validate_cpg(const FinitePoset& p, const Table& mult,
                                              const Table& imp) {
  const int n = p.n;
  if (mult.size() != n || imp.size() != n || !mult.in_range() || !imp.in_range())
    return Diagnostic{"BadTables", {}, "tables must be total on {0..n-1}"};

  const int one = p.top;
  for (int x = 0; x < n; ++x)
    if (mult(one, x) != x || mult(x, one) != x)
      return Diagnostic{"IdentityFailed", {x}, "1 is not a two-sided identity"};

  // (a) 1 -> x = x
  for (int x = 0; x < n; ++x)
    if (imp(one, x) != x)
      return Diagnostic{"ConditionAFailed", {x}, "1 -> x != x"};

  // (b) x*y <= z iff x <= ~z -> ~y, with ~u = u -> 0
  auto tld = [&](int u) { return imp(u, p.bottom); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p.le(mult(x, y), z) != p.le(x, imp(tld(z), tld(y))))
          return Diagnostic{"ConditionBFailed", {x, y, z},
                            "x*y <= z and x <= ~z -> ~y disagree"};

  ContrapositionalGroupoid c;
  c.poset = p;
  c.mult = mult;
  c.imp = imp;
  return c;
}

RightResiduum find_right_residuum(const LeftResiduatedGroupoid& g, int x, int z) {
  std::vector<int> s;
  for (int y = 0; y < g.poset.n; ++y)
    if (g.poset.le(g.mult(x, y), z)) s.push_back(y);
  RightResiduum r;
  if (auto m = g.poset.greatest(s)) {
    r.value = *m;
    return r;
  }
  r.maximal_elements = g.poset.maximal_of(s);
  return r;
}

namespace {

// Subsets of {0..n-1} of size 1..3, lexicographic.
template <typename F>
void for_each_small_subset(int n, F&& fn) {
  for (int a = 0; a < n; ++a) {
    if (!fn(std::vector<int>{a})) return;
    for (int b = a + 1; b < n; ++b) {
      if (!fn(std::vector<int>{a, b})) return;
      for (int c = b + 1; c < n; ++c)
        if (!fn(std::vector<int>{a, b, c})) return;
    }
  }
}

}  // namespace

LemmaRuleReport check_lemma_rules(const LeftResiduatedGroupoid& g) {
  const int n = g.poset.n;
  const int one = g.one();
  const auto& p = g.poset;
  auto mul = [&](int x, int y) { return g.mult(x, y); };
  auto div = [&](int z, int y) { return g.res(z, y); };

  LemmaRuleReport rep;
  auto add = [&](char rule, bool holds, std::vector<int> w) {
    rep.entries.push_back({rule, holds, std::move(w)});
  };

  // (a) (x/y)*y <= x <= (x*y)/y
  {
    bool holds = true;
    std::vector<int> w;
    for (int x = 0; x < n && holds; ++x)
      for (int y = 0; y < n; ++y)
        if (!p.le(mul(div(x, y), y), x) || !p.le(x, div(mul(x, y), y))) {
          holds = false;
          w = {x, y};
          break;
        }
    add('a', holds, w);
  }
  // (b) x <= y iff y/x = 1
  {
    bool holds = true;
    std::vector<int> w;
    for (int x = 0; x < n && holds; ++x)
      for (int y = 0; y < n; ++y)
        if (p.le(x, y) != (div(y, x) == one)) {
          holds = false;
          w = {x, y};
          break;
        }
    add('b', holds, w);
  }
  // (c) x <= y implies x*z <= y*z
  {
    bool holds = true;
    std::vector<int> w;
    for (int x = 0; x < n && holds; ++x)
      for (int y = 0; y < n && holds; ++y) {
        if (!p.le(x, y)) continue;
        for (int z = 0; z < n; ++z)
          if (!p.le(mul(x, z), mul(y, z))) {
            holds = false;
            w = {x, y, z};
            break;
          }
      }
    add('c', holds, w);
  }
  // (d) x*y <= y
  {
    bool holds = true;
    std::vector<int> w;
    for (int x = 0; x < n && holds; ++x)
      for (int y = 0; y < n; ++y)
        if (!p.le(mul(x, y), y)) {
          holds = false;
          w = {x, y};
          break;
        }
    add('d', holds, w);
  }
  // (e) x/x = 1/x = 1 and x/1 = x
  {
    bool holds = true;
    std::vector<int> w;
    for (int x = 0; x < n; ++x)
      if (div(x, x) != one || div(one, x) != one || div(x, one) != x) {
        holds = false;
        w = {x};
        break;
      }
    add('e', holds, w);
  }
  // (f) x <= y implies x/z <= y/z
  {
    bool holds = true;
    std::vector<int> w;
    for (int x = 0; x < n && holds; ++x)
      for (int y = 0; y < n && holds; ++y) {
        if (!p.le(x, y)) continue;
        for (int z = 0; z < n; ++z)
          if (!p.le(div(x, z), div(y, z))) {
            holds = false;
            w = {x, y, z};
            break;
          }
      }
    add('f', holds, w);
  }
  // (g) x*0 = 0 = 0*x
  {
    bool holds = true;
    std::vector<int> w;
    for (int x = 0; x < n; ++x)
      if (mul(x, p.bottom) != p.bottom || mul(p.bottom, x) != p.bottom) {
        holds = false;
        w = {x};
        break;
      }
    add('g', holds, w);
  }
  // (h) (v S)*y = v {s*y} whenever v S exists; S ranges over subsets of
  // size <= 3 (which covers all principal pairs).
  {
    bool holds = true;
    std::vector<int> w;
    for_each_small_subset(n, [&](const std::vector<int>& s) {
      std::vector<int> ub;
      for (int u = 0; u < n; ++u) {
        bool all = true;
        for (int x : s)
          if (!p.le(x, u)) all = false;
        if (all) ub.push_back(u);
      }
      auto j = p.least(ub);
      if (!j) return true;
      for (int y = 0; y < n; ++y) {
        std::vector<int> imgs;
        for (int x : s) imgs.push_back(mul(x, y));
        std::vector<int> ub2;
        for (int u = 0; u < n; ++u) {
          bool all = true;
          for (int v : imgs)
            if (!p.le(v, u)) all = false;
          if (all) ub2.push_back(u);
        }
        auto j2 = p.least(ub2);
        if (!j2 || mul(*j, y) != *j2) {
          holds = false;
          w = s;
          w.push_back(y);
          return false;
        }
      }
      return true;
    });
    add('h', holds, w);
  }
  // (i) (^ S)/y = ^ {s/y} whenever ^ S exists.
  {
    bool holds = true;
    std::vector<int> w;
    for_each_small_subset(n, [&](const std::vector<int>& s) {
      std::vector<int> lb;
      for (int u = 0; u < n; ++u) {
        bool all = true;
        for (int x : s)
          if (!p.le(u, x)) all = false;
        if (all) lb.push_back(u);
      }
      auto m = p.greatest(lb);
      if (!m) return true;
      for (int y = 0; y < n; ++y) {
        std::vector<int> imgs;
        for (int x : s) imgs.push_back(div(x, y));
        std::vector<int> lb2;
        for (int u = 0; u < n; ++u) {
          bool all = true;
          for (int v : imgs)
            if (!p.le(u, v)) all = false;
          if (all) lb2.push_back(u);
        }
        auto m2 = p.greatest(lb2);
        if (!m2 || div(*m, y) != *m2) {
          holds = false;
          w = s;
          w.push_back(y);
          return false;
        }
      }
      return true;
    });
    add('i', holds, w);
  }

  return rep;
}

}  // namespace balg
