#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "balg/poset.hpp"

namespace balg {

enum class SectionKind { Filters, Ideals };

// A family of unary maps, one per element a: on the principal filter [a)
// when kind is Filters, on the principal ideal (a] when kind is Ideals.
// maps[a][x] is the image of x, or -1 when x lies outside the section.
struct SectionInvolutionFamily {
  BoundedLattice lattice;
  SectionKind kind = SectionKind::Filters;
  std::vector<std::vector<int>> maps;

  bool in_section(int a, int x) const {
    return kind == SectionKind::Filters ? lattice.poset.le(a, x)
                                        : lattice.poset.le(x, a);
  }
  std::vector<int> section(int a) const {
    return kind == SectionKind::Filters ? lattice.poset.up_set(a)
                                        : lattice.poset.down_set(a);
  }
  int apply(int a, int x) const { return maps[a][x]; }
};

// Confirms that each map sends its section into itself, is antitone on the
// section and is an involution there. First failing (a, x) pair wins.
std::optional<Diagnostic> validate_involution_family(const SectionInvolutionFamily& f);

// Filter family -> ideal family via delta_a(x) = g0(g_{g0(a)}(g0(x) v g0(a)))
// and the symmetric formula for the reverse direction. Dualizing twice gives
// back the original family.
Result<SectionInvolutionFamily> dualize_involution_family(const SectionInvolutionFamily& f);

struct OrthoLattice {
  BoundedLattice lattice;
  std::vector<int> perp;
  bool orthomodular = false;
};

struct OrthoReport {
  bool ortholattice = false;
  bool orthomodular = false;
  std::optional<Diagnostic> ortho_failure;
  std::optional<std::pair<int, int>> orthomodular_witness;  // x <= y, x v (x' ^ y) != y
};

OrthoReport validate_ortholattice(const BoundedLattice& lat, const std::vector<int>& perp);

// Requires the ortholattice laws; records the orthomodularity verdict.
Result<OrthoLattice> make_ortholattice(const BoundedLattice& lat, std::vector<int> perp);

// All antitone involutions of the induced sub-order on `section`
// (each returned as a full-size vector with -1 off the section).
std::vector<std::vector<int>> antitone_involutions_on(const FinitePoset& p,
                                                      const std::vector<int>& section);

bool admits_antitone_involution(const FinitePoset& p);

}  // namespace balg
