#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balg/algebras.hpp"
#include "balg/formula.hpp"
#include "balg/involutions.hpp"

namespace balg {

// One finite model's operations, resolved for formula evaluation. Absent
// entries make the corresponding symbol a signature mismatch. Derived
// operations (e.g. n(x) = 0/x on groupoids, * / -> on basic algebras) are
// materialized as tables up front.
struct ModelOps {
  int n = 0;
  int zero = 0;
  int one = 0;
  Table leq;
  std::optional<Table> oplus, mult, rdiv, ldiv, imp, join, meet;
  std::optional<std::vector<int>> neg, tilde;
  std::string cls;
};

ModelOps ops_for(const BasicAlgebraModel& a);
ModelOps ops_for(const LeftResiduatedGroupoid& g);
ModelOps ops_for(const ContrapositionalGroupoid& c);
ModelOps ops_for(const BoundedLattice& l);
ModelOps ops_for(const OrthoLattice& o);

struct Verdict {
  bool holds = true;
  std::vector<int> witness;  // assignment for Formula::vars, lexicographic first
  std::vector<std::string> var_names;
};

// Exhaustive evaluation over all n^k assignments; deterministic first
// witness. SignatureMismatch(op) when the model lacks an operation.
Result<Verdict> check_formula(const Formula& f, const ModelOps& m);

// The named laws of the catalog (closed list). UnknownLaw otherwise.
Result<Formula> catalog_law(const std::string& name);
const std::vector<std::string>& catalog_names();
bool catalog_has(const std::string& name);

// Law files: one `name : formula` per line, '#' comments.
Result<std::vector<std::pair<std::string, Formula>>, ParseError>
parse_law_file(std::string_view text);

// True when the formula mentions \/ or /\ (such laws force a lattice).
bool formula_uses_lattice_ops(const Formula& f);

}  // namespace balg
