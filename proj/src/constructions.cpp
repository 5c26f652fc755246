#include "balg/constructions.hpp"

#include <sstream>
#include <stdexcept>

#include "balg/laws.hpp"

namespace balg {

LeftResiduatedGroupoid groupoid_of_basic(const BasicAlgebraModel& a) {
  const int n = a.n;
  BoundedLattice l = basic_induced_order(a);
  Table mult(n), res(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mult(x, y) = a.neg[a.oplus(a.neg[x], a.neg[y])];
      res(x, y) = a.oplus(x, a.neg[y]);
    }
  auto g = validate_lrpg(l.poset, mult, res);
  if (!g) throw std::logic_error("G(A) failed validation: " + g.error().message());
  return std::move(g).value();
}

BasicTables basic_of_groupoid(const LeftResiduatedGroupoid& g) {
  const int n = g.poset.n;
  BasicTables t;
  t.n = n;
  t.neg.resize(n);
  for (int x = 0; x < n; ++x) t.neg[x] = g.neg(x);
  t.oplus = Table(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t.oplus(x, y) = t.neg[g.mult(t.neg[x], t.neg[y])];
  return t;
}

namespace {

Result<BasicAlgebraModel> finish_basic_from_family(const SectionInvolutionFamily& f,
                                                   const Table& oplus,
                                                   const std::vector<int>& neg) {
  auto a = validate_basic_algebra(f.lattice.poset.n, oplus, neg);
  if (!a)
    throw std::logic_error("family construction produced an invalid basic algebra: " +
                           a.error().message());

  // The induced sectional involutions must be the input family again.
  const auto& m = a.value();
  const int n = m.n;
  if (f.kind == SectionKind::Filters) {
    for (int s = 0; s < n; ++s)
      for (int x = 0; x < n; ++x)
        if (f.lattice.poset.le(s, x) && m.oplus(m.neg[x], s) != f.maps[s][x])
          throw std::logic_error("re-derived filter involutions differ from the input family");
  } else {
    for (int s = 0; s < n; ++s)
      for (int x = 0; x < n; ++x)
        if (f.lattice.poset.le(x, s) && m.neg[m.oplus(x, m.neg[s])] != f.maps[s][x])
          throw std::logic_error("re-derived ideal involutions differ from the input family");
  }
  return a;
}

}  // namespace

Result<BasicAlgebraModel> basic_from_filter_involutions(const SectionInvolutionFamily& f) {
  if (f.kind != SectionKind::Filters)
    return Diagnostic{"KindMismatch", {}, "filter family required"};
  if (auto d = validate_involution_family(f)) return *d;

  const int n = f.lattice.poset.n;
  std::vector<int> neg(n);
  for (int x = 0; x < n; ++x) neg[x] = f.maps[0][x];
  Table oplus(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      oplus(x, y) = f.maps[y][f.lattice.join(neg[x], y)];
  return finish_basic_from_family(f, oplus, neg);
}

Result<BasicAlgebraModel> basic_from_ideal_involutions(const SectionInvolutionFamily& f) {
  if (f.kind != SectionKind::Ideals)
    return Diagnostic{"KindMismatch", {}, "ideal family required"};
  if (auto d = validate_involution_family(f)) return *d;

  const int n = f.lattice.poset.n;
  const int top = f.lattice.poset.top;
  std::vector<int> neg(n);
  for (int x = 0; x < n; ++x) neg[x] = f.maps[top][x];
  Table oplus(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      oplus(x, y) = neg[f.maps[neg[y]][f.lattice.meet(x, neg[y])]];
  return finish_basic_from_family(f, oplus, neg);
}

Result<BasicAlgebraModel> basic_from_oml(const OrthoLattice& o) {
  if (!o.orthomodular) {
    Diagnostic d{"NotOrthomodular", {}, "the lattice is not orthomodular"};
    return d;
  }
  const int n = o.lattice.poset.n;
  Table oplus(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      oplus(x, y) = o.lattice.join(o.lattice.meet(x, o.perp[y]), y);
  auto a = validate_basic_algebra(n, oplus, o.perp);
  if (!a)
    throw std::logic_error("orthomodular construction produced an invalid basic algebra: " +
                           a.error().message());
  return a;
}

Result<ContrapositionalGroupoid> cpg_from_lrpg(const LeftResiduatedGroupoid& g) {
  const int n = g.poset.n;
  for (int x = 0; x < n; ++x)
    if (g.neg(g.neg(x)) != x)
      return Diagnostic{"DoubleNegationFails", {x}, "n(n(x)) != x"};

  Table imp(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      imp(x, y) = g.res(g.neg(x), g.neg(y));
  auto c = validate_cpg(g.poset, g.mult, imp);
  if (!c) throw std::logic_error("cpg conversion failed validation: " + c.error().message());
  return std::move(c).value();
}

LeftResiduatedGroupoid lrpg_from_cpg(const ContrapositionalGroupoid& c) {
  const int n = c.poset.n;
  Table res(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      res(x, y) = c.imp(c.tilde(x), c.tilde(y));
  auto g = validate_lrpg(c.poset, c.mult, res);
  if (!g) throw std::logic_error("lrpg conversion failed validation: " + g.error().message());
  return std::move(g).value();
}

namespace {

Result<Verdict> law_on(const ModelOps& ops, const char* name) {
  auto f = catalog_law(name);
  if (!f) throw std::logic_error("catalog misses law " + std::string(name));
  return check_formula(f.value(), ops);
}

Diagnostic hypotheses_fail(const char* law, const Verdict& v) {
  std::ostringstream os;
  os << "law " << law << " fails";
  return Diagnostic{"HypothesesFail", v.witness, os.str()};
}

}  // namespace

bool RoundtripReport::ok() const {
  switch (kind) {
    case Kind::Basic:
      return roundtrip_identity;
    case Kind::Groupoid:
      return (div_jk_hypotheses || dneg_w_hypotheses) && basic_candidate_valid &&
             roundtrip_identity && order_coincides;
    case Kind::Contrapositional:
      return roundtrip_identity;
  }
  return false;
}

std::string RoundtripReport::summary() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Basic:
      os << "basic algebra: G(A) built; A(G(A)) == A: " << (roundtrip_identity ? "yes" : "NO");
      break;
    case Kind::Groupoid:
      os << "hypotheses {div, jk}: " << (div_jk_hypotheses ? "hold" : "fail");
      if (div_jk_failure) os << " [" << div_jk_failure->message() << "]";
      os << "; hypotheses {dneg, w}: " << (dneg_w_hypotheses ? "hold" : "fail");
      if (dneg_w_failure) os << " [" << dneg_w_failure->message() << "]";
      if (div_jk_hypotheses || dneg_w_hypotheses) {
        os << "; A(G) valid: " << (basic_candidate_valid ? "yes" : "NO");
        if (basic_failure) os << " [" << basic_failure->message() << "]";
        os << "; G(A(G)) == G: " << (roundtrip_identity ? "yes" : "NO");
        os << "; orders coincide: " << (order_coincides ? "yes" : "NO");
      }
      break;
    case Kind::Contrapositional:
      os << "contrapositional groupoid: conversion round trip is "
         << (roundtrip_identity ? "the identity" : "NOT the identity");
      break;
  }
  return os.str();
}

RoundtripReport roundtrip_check(const BasicAlgebraModel& a) {
  RoundtripReport rep;
  rep.kind = RoundtripReport::Kind::Basic;

  LeftResiduatedGroupoid g = groupoid_of_basic(a);
  ModelOps ops = ops_for(g);
  // G(A) satisfies div, jk, dneg and w; anything else is a construction bug.
  for (const char* law : {"div", "jk", "dneg", "w"}) {
    auto v = law_on(ops, law);
    if (!v || !v.value().holds)
      throw std::logic_error(std::string("G(A) violates ") + law);
  }
  rep.div_jk_hypotheses = rep.dneg_w_hypotheses = true;

  BasicTables back = basic_of_groupoid(g);
  rep.basic_candidate_valid = true;
  rep.roundtrip_identity = back.oplus == a.oplus && back.neg == a.neg;
  rep.order_coincides = true;  // G(A) carries exactly the induced order
  return rep;
}

RoundtripReport roundtrip_check(const LeftResiduatedGroupoid& g) {
  RoundtripReport rep;
  rep.kind = RoundtripReport::Kind::Groupoid;
  ModelOps ops = ops_for(g);

  auto vdiv = law_on(ops, "div");
  auto vjk = law_on(ops, "jk");
  if (vdiv.value().holds && vjk.value().holds)
    rep.div_jk_hypotheses = true;
  else
    rep.div_jk_failure =
        hypotheses_fail(vdiv.value().holds ? "jk" : "div",
                        vdiv.value().holds ? vjk.value() : vdiv.value());

  auto vdneg = law_on(ops, "dneg");
  auto vw = law_on(ops, "w");
  if (vdneg.value().holds && vw.value().holds)
    rep.dneg_w_hypotheses = true;
  else
    rep.dneg_w_failure =
        hypotheses_fail(vdneg.value().holds ? "w" : "dneg",
                        vdneg.value().holds ? vw.value() : vdneg.value());

  if (!rep.div_jk_hypotheses && !rep.dneg_w_hypotheses) return rep;

  BasicTables t = basic_of_groupoid(g);
  auto a = validate_basic_algebra(t.n, t.oplus, t.neg);
  if (!a) {
    rep.basic_failure = a.error();
    return rep;
  }
  rep.basic_candidate_valid = true;

  LeftResiduatedGroupoid back = groupoid_of_basic(a.value());
  rep.order_coincides = back.poset.leq == g.poset.leq;
  rep.roundtrip_identity =
      rep.order_coincides && back.mult == g.mult && back.res == g.res;
  return rep;
}

RoundtripReport roundtrip_check(const ContrapositionalGroupoid& c) {
  RoundtripReport rep;
  rep.kind = RoundtripReport::Kind::Contrapositional;

  LeftResiduatedGroupoid g = lrpg_from_cpg(c);
  auto back = cpg_from_lrpg(g);
  if (!back) throw std::logic_error("lrpg from a cpg lost double negation");
  rep.roundtrip_identity =
      back.value().mult == c.mult && back.value().imp == c.imp;
  return rep;
}

}  // namespace balg
