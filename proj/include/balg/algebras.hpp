#pragma once

#include <optional>
#include <vector>

#include "balg/poset.hpp"

namespace balg {

// (A, +, n, 0) with 1 := n(0).
struct BasicAlgebraModel {
  int n = 0;
  Table oplus;
  std::vector<int> neg;

  int one() const { return neg[0]; }
};

// (G, <=, *, /, 0, 1): bounded poset, 1 a two-sided identity for *, and
// x*y <= z iff x <= z/y.
struct LeftResiduatedGroupoid {
  FinitePoset poset;
  Table mult;
  Table res;  // res(z, y) = z/y

  int one() const { return poset.top; }
  int neg(int x) const { return res(poset.bottom, x); }  // n(x) = 0/x
};

// (G, <=, *, ->, 0, 1) with 1->x = x and x*y <= z iff x <= ~z -> ~y,
// where ~x = x->0.
struct ContrapositionalGroupoid {
  FinitePoset poset;
  Table mult;
  Table imp;

  int tilde(int x) const { return imp(x, poset.bottom); }
};

// Axioms checked in order (1) x+0=x, (2) nnx=x, (3), (4); the diagnostic
// carries [axiom, assignment...]. The redundant identities x+1 = 1 = 1+x
// are asserted afterwards (they follow from (1)-(4); a failure there is a
// checker bug and throws).
Result<BasicAlgebraModel> validate_basic_algebra(int n, const Table& oplus,
                                                 const std::vector<int>& neg);

// x <= y iff n(x)+y = 1, with join/meet from (x->y)->y and (x/y)*y.
// Posethood and the lattice property are consequences of the axioms, so a
// failure here throws std::logic_error instead of returning a diagnostic.
BoundedLattice basic_induced_order(const BasicAlgebraModel& a);

// z/y = max{x : x*y <= z}; NoResiduum(z, y) when the set has no greatest
// element.
Result<Table> residuum_from_mult(const FinitePoset& p, const Table& mult);

Result<LeftResiduatedGroupoid> validate_lrpg(const FinitePoset& p, const Table& mult,
                                             const Table& res);

Result<ContrapositionalGroupoid> validate_cpg(const FinitePoset& p, const Table& mult,
                                              const Table& imp);

// max{y : x*y <= z}, or the maximal elements of that set when no greatest
// element exists ("none" is a valid answer, not an error).
struct RightResiduum {
  std::optional<int> value;
  std::vector<int> maximal_elements;
};
RightResiduum find_right_residuum(const LeftResiduatedGroupoid& g, int x, int z);

// The nine consequence rules (a)-(i) of the residuation law. (h) and (i)
// quantify over families; they are scanned over all subsets of size <= 3.
struct LemmaRuleReport {
  struct Entry {
    char rule = 'a';
    bool holds = true;
    std::vector<int> witness;
  };
  std::vector<Entry> entries;

  bool all_hold() const {
    for (const auto& e : entries)
      if (!e.holds) return false;
    return true;
  }
  const Entry& rule(char r) const;
};
LemmaRuleReport check_lemma_rules(const LeftResiduatedGroupoid& g);

}  // namespace balg
