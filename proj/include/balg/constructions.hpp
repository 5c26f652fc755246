#pragma once

#include <optional>
#include <string>

#include "balg/algebras.hpp"
#include "balg/involutions.hpp"

namespace balg {

// Candidate basic-algebra tables. Deliberately unvalidated: the candidate
// produced from a groupoid can fail the axioms, and callers need to inspect
// exactly that case.
struct BasicTables {
  int n = 0;
  Table oplus;
  std::vector<int> neg;
};

// G(A): x*y = n(nx + ny), z/y = z + n(y), order induced by A.
LeftResiduatedGroupoid groupoid_of_basic(const BasicAlgebraModel& a);

// A(G): n(x) = 0/x, x+y = n(nx * ny). Never validated here.
BasicTables basic_of_groupoid(const LeftResiduatedGroupoid& g);

// From antitone involutions on principal filters: n(x) = g0(x),
// x+y = g_y(n(x) v y). The induced filter involutions equal the input family.
Result<BasicAlgebraModel> basic_from_filter_involutions(const SectionInvolutionFamily& f);

// From antitone involutions on principal ideals: n(x) = d1(x),
// x+y = n(d_{n(y)}(x ^ n(y))).
Result<BasicAlgebraModel> basic_from_ideal_involutions(const SectionInvolutionFamily& f);

// From an orthomodular lattice: n(x) = perp(x), x+y = (x ^ perp(y)) v y.
Result<BasicAlgebraModel> basic_from_oml(const OrthoLattice& o);

// x->y = n(x)/n(y); requires double negation in g.
Result<ContrapositionalGroupoid> cpg_from_lrpg(const LeftResiduatedGroupoid& g);

// x/y = ~x -> ~y; total on validated inputs.
LeftResiduatedGroupoid lrpg_from_cpg(const ContrapositionalGroupoid& c);

struct RoundtripReport {
  enum class Kind { Basic, Groupoid, Contrapositional };
  Kind kind = Kind::Basic;

  bool div_jk_hypotheses = false;  // div and jk
  bool dneg_w_hypotheses = false;  // dneg and w
  std::optional<Diagnostic> div_jk_failure;
  std::optional<Diagnostic> dneg_w_failure;

  bool basic_candidate_valid = false;
  std::optional<Diagnostic> basic_failure;
  bool roundtrip_identity = false;  // A(G(A)) == A resp. G(A(G)) == G, table for table
  bool order_coincides = false;     // induced order of A(G) equals G's order

  bool ok() const;
  std::string summary() const;
};

RoundtripReport roundtrip_check(const BasicAlgebraModel& a);
RoundtripReport roundtrip_check(const LeftResiduatedGroupoid& g);
// Proposition round trip: lrpg_from_cpg then cpg_from_lrpg is the identity.
RoundtripReport roundtrip_check(const ContrapositionalGroupoid& c);

}  // namespace balg
