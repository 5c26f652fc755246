#include "balg/poset.hpp"

#include <sstream>

namespace balg {

std::vector<int> FinitePoset::down_set(int a) const {
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (le(x, a)) out.push_back(x);
  return out;
}

std::vector<int> FinitePoset::up_set(int a) const {
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (le(a, x)) out.push_back(x);
  return out;
}

std::optional<int> FinitePoset::greatest(const std::vector<int>& s) const {
  for (int m : s) {
    bool all = true;
    for (int x : s)
      if (!le(x, m)) {
        all = false;
        break;
      }
    if (all) return m;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::least(const std::vector<int>& s) const {
  for (int m : s) {
    bool all = true;
    for (int x : s)
      if (!le(m, x)) {
        all = false;
        break;
      }
    if (all) return m;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::meet_of(int x, int y) const {
  std::vector<int> lb;
  for (int u = 0; u < n; ++u)
    if (le(u, x) && le(u, y)) lb.push_back(u);
  return greatest(lb);
}

std::optional<int> FinitePoset::join_of(int x, int y) const {
  std::vector<int> ub;
  for (int u = 0; u < n; ++u)
    if (le(x, u) && le(y, u)) ub.push_back(u);
  return least(ub);
}

std::vector<int> FinitePoset::maximal_of(const std::vector<int>& s) const {
  std::vector<int> out;
  for (int m : s) {
    bool dominated = false;
    for (int x : s)
      if (x != m && le(m, x)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !le(x, y)) continue;
      bool strictly_between = false;
      for (int z = 0; z < n; ++z)
        if (z != x && z != y && le(x, z) && le(z, y)) {
          strictly_between = true;
          break;
        }
      if (!strictly_between) out.emplace_back(x, y);
    }
  return out;
}

Result<FinitePoset> validate_finite_poset(const Table& leq, int bottom, int top) {
  const int n = leq.size();
  if (n <= 0)
    return Diagnostic{"EmptyUniverse", {}, "the relation table is empty"};
  if (bottom < 0 || bottom >= n || top < 0 || top >= n)
    return Diagnostic{"BoundsViolated", {bottom, top}, "bottom/top index out of range"};

  for (int x = 0; x < n; ++x)
    if (!leq(x, x))
      return Diagnostic{"NotReflexive", {x}, "x <= x fails"};

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && leq(x, y) && leq(y, x))
        return Diagnostic{"NotAntisymmetric", {x, y}, "x <= y and y <= x with x != y"};

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (leq(y, z) && !leq(x, z))
          return Diagnostic{"NotTransitive", {x, y, z}, "x <= y <= z but not x <= z"};
    }

  for (int x = 0; x < n; ++x)
    if (!leq(bottom, x) || !leq(x, top)) {
      std::ostringstream os;
      os << "element " << x << " not between bottom " << bottom << " and top " << top;
      return Diagnostic{"BoundsViolated", {x}, os.str()};
    }

  FinitePoset p;
  p.n = n;
  p.leq = leq;
  p.bottom = bottom;
  p.top = top;
  return p;
}

Result<BoundedLattice> meets_joins(const FinitePoset& p) {
  BoundedLattice l;
  l.poset = p;
  l.meet = Table(p.n);
  l.join = Table(p.n);
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      auto m = p.meet_of(x, y);
      if (!m) return Diagnostic{"NoMeet", {x, y}, "no greatest lower bound"};
      auto j = p.join_of(x, y);
      if (!j) return Diagnostic{"NoJoin", {x, y}, "no least upper bound"};
      l.meet(x, y) = *m;
      l.join(x, y) = *j;
    }
  return l;
}

}  // namespace balg
