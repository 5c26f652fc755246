#pragma once

// Shared test models, built by hand from their definitions.

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "balg/algebras.hpp"
#include "balg/involutions.hpp"
#include "balg/poset.hpp"

namespace balg::test {

inline Table table_from(std::initializer_list<std::initializer_list<int>> rows) {
  Table t(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) t(i, j++) = v;
    ++i;
  }
  return t;
}

// Reflexive-transitive closure of the cover list.
inline FinitePoset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  Table leq(n);
  for (int i = 0; i < n; ++i) leq(i, i) = 1;
  for (auto [x, y] : covers) leq(x, y) = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq(x, y))
          for (int z = 0; z < n; ++z)
            if (leq(y, z) && !leq(x, z)) {
              leq(x, z) = 1;
              changed = true;
            }
  }
  auto p = validate_finite_poset(leq, 0, n - 1);
  if (!p) throw std::logic_error("fixture poset invalid: " + p.error().message());
  return p.value();
}

inline FinitePoset chain_poset(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return poset_from_covers(n, covers);
}

inline BoundedLattice lattice_of(const FinitePoset& p) {
  auto l = meets_joins(p);
  if (!l) throw std::logic_error("fixture not a lattice");
  return l.value();
}

// 0 < a,b < 1 with a,b incomparable.
inline FinitePoset diamond_poset() { return poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// 0 < a,a',b,b' < 1, four incomparable atoms; perp swaps a<->a', b<->b'.
inline FinitePoset mo2_poset() {
  return poset_from_covers(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}
inline std::vector<int> mo2_perp() { return {5, 2, 1, 4, 3, 0}; }

// benzene: 0 < a < b < 1 and 0 < c < d < 1; perp reverses the hexagon.
inline FinitePoset o6_poset() {
  return poset_from_covers(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
}
inline std::vector<int> o6_perp() { return {5, 4, 3, 2, 1, 0}; }

// n-element Lukasiewicz chain: x+y = min(n-1, x+y), n(x) = n-1-x.
inline BasicAlgebraModel lukasiewicz_basic(int n) {
  Table oplus(n);
  std::vector<int> neg(n);
  for (int x = 0; x < n; ++x) {
    neg[x] = n - 1 - x;
    for (int y = 0; y < n; ++y) oplus(x, y) = std::min(n - 1, x + y);
  }
  auto a = validate_basic_algebra(n, oplus, neg);
  if (!a) throw std::logic_error("Lukasiewicz fixture invalid");
  return a.value();
}

// Boolean 2x2 as a basic algebra: + is join, n is complement.
inline BasicAlgebraModel boolean4_basic() {
  BoundedLattice l = lattice_of(diamond_poset());
  std::vector<int> neg = {3, 2, 1, 0};
  auto a = validate_basic_algebra(4, l.join, neg);
  if (!a) throw std::logic_error("boolean4 fixture invalid");
  return a.value();
}

// MO2 as a basic algebra: x+y = (x ^ perp(y)) v y, n = perp.
inline BasicAlgebraModel mo2_basic() {
  BoundedLattice l = lattice_of(mo2_poset());
  const auto perp = mo2_perp();
  Table oplus(6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) oplus(x, y) = l.join(l.meet(x, perp[y]), y);
  auto a = validate_basic_algebra(6, oplus, perp);
  if (!a) throw std::logic_error("mo2 fixture invalid");
  return a.value();
}

// The bundled 8-element groupoid, on the lattice with covers
// 0<a, 0<b, a<c, c<e, e<1, b<d, d<f, f<1, a<f; order 0,a,b,c,d,e,f,1.
inline FinitePoset example1_poset() {
  return poset_from_covers(
      8, {{0, 1}, {0, 2}, {1, 3}, {3, 5}, {5, 7}, {2, 4}, {4, 6}, {6, 7}, {1, 6}});
}

inline Table example1_mult() {
  return table_from({{0, 0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 2, 3, 0, 1},
                     {0, 0, 2, 3, 0, 0, 1, 2},
                     {0, 1, 0, 0, 4, 5, 2, 3},
                     {0, 0, 2, 3, 0, 1, 1, 4},
                     {0, 1, 0, 1, 4, 5, 4, 5},
                     {0, 0, 2, 3, 2, 3, 1, 6},
                     {0, 1, 2, 3, 4, 5, 6, 7}});
}

// Residuum table computed independently (bound scan over the order).
inline Table example1_res() {
  return table_from({{7, 6, 5, 3, 4, 2, 1, 0},
                     {7, 7, 5, 5, 4, 4, 6, 1},
                     {7, 6, 7, 3, 6, 2, 3, 2},
                     {7, 7, 5, 7, 4, 6, 6, 3},
                     {7, 6, 7, 3, 7, 2, 5, 4},
                     {7, 7, 5, 7, 4, 7, 6, 5},
                     {7, 7, 7, 5, 7, 4, 7, 6},
                     {7, 7, 7, 7, 7, 7, 7, 7}});
}

inline LeftResiduatedGroupoid example1_lrpg() {
  auto g = validate_lrpg(example1_poset(), example1_mult(), example1_res());
  if (!g) throw std::logic_error("example1 fixture invalid: " + g.error().message());
  return g.value();
}

// 3-chain with x*y = min(x,y) and z/y = 1 if y <= z else z.
inline LeftResiduatedGroupoid heyting3_lrpg() {
  FinitePoset p = chain_poset(3);
  Table mult(3), res(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      mult(x, y) = std::min(x, y);
      res(x, y) = y <= x ? 2 : x;
    }
  auto g = validate_lrpg(p, mult, res);
  if (!g) throw std::logic_error("heyting3 fixture invalid");
  return g.value();
}

// Kite lattice 0 < a < b,c < 1 carrying a double-negation groupoid even
// though the poset admits no antitone involution (it is not self-dual).
inline LeftResiduatedGroupoid kite_dneg_lrpg() {
  FinitePoset p = poset_from_covers(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  Table mult = table_from({{0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 1},
                           {0, 0, 1, 3, 2},
                           {0, 1, 2, 0, 3},
                           {0, 1, 2, 3, 4}});
  auto res = residuum_from_mult(p, mult);
  if (!res) throw std::logic_error("kite fixture has no residuum");
  auto g = validate_lrpg(p, mult, res.value());
  if (!g) throw std::logic_error("kite fixture invalid");
  return g.value();
}

inline ContrapositionalGroupoid l3_cpg() {
  FinitePoset p = chain_poset(3);
  Table mult(3), imp(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      mult(x, y) = std::max(0, x + y - 2);
      imp(x, y) = std::min(2, 2 - x + y);
    }
  auto c = validate_cpg(p, mult, imp);
  if (!c) throw std::logic_error("l3 cpg fixture invalid");
  return c.value();
}

// Filter involutions gamma_a(x) = perp(x) v a on MO2.
inline SectionInvolutionFamily mo2_filter_family() {
  SectionInvolutionFamily f;
  f.lattice = lattice_of(mo2_poset());
  f.kind = SectionKind::Filters;
  const auto perp = mo2_perp();
  f.maps.assign(6, std::vector<int>(6, -1));
  for (int a = 0; a < 6; ++a)
    for (int x = 0; x < 6; ++x)
      if (f.lattice.poset.le(a, x)) f.maps[a][x] = f.lattice.join(perp[x], a);
  return f;
}

}  // namespace balg::test
