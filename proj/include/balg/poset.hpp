#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "balg/diagnostics.hpp"
#include "balg/table.hpp"

namespace balg {

// Finite bounded poset on {0..n-1}. The order is stored as the full n x n
// relation so that le() is a table lookup; Hasse covers are derived on demand.
struct FinitePoset {
  int n = 0;
  Table leq;  // 0/1
  int bottom = 0;
  int top = 0;

  bool le(int x, int y) const { return leq(x, y) != 0; }

  std::vector<int> down_set(int a) const;
  std::vector<int> up_set(int a) const;

  // Greatest/least element of s under leq, if one exists.
  std::optional<int> greatest(const std::vector<int>& s) const;
  std::optional<int> least(const std::vector<int>& s) const;

  std::optional<int> meet_of(int x, int y) const;
  std::optional<int> join_of(int x, int y) const;

  // Maximal elements of s (no strictly greater element inside s).
  std::vector<int> maximal_of(const std::vector<int>& s) const;

  std::vector<std::pair<int, int>> covers() const;
};

struct BoundedLattice {
  FinitePoset poset;
  Table meet;
  Table join;
};

// Checks reflexivity, antisymmetry, transitivity and the bounds, in that
// order; reports the first violation in lexicographic witness order.
Result<FinitePoset> validate_finite_poset(const Table& leq, int bottom, int top);

// Computes meet/join tables by scanning bound sets, or reports the first
// pair with no greatest lower / least upper bound.
Result<BoundedLattice> meets_joins(const FinitePoset& p);

}  // namespace balg
