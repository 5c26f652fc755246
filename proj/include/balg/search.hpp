#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balg/algebras.hpp"
#include "balg/canonical.hpp"
#include "balg/formula.hpp"

namespace balg {

struct SearchSpec {
  enum class Class { Lrpg, Basic };

  int size = 0;
  Class cls = Class::Lrpg;
  std::vector<std::string> require;
  std::vector<std::string> forbid;
  std::optional<FinitePoset> fixed_poset;   // fixed-poset mode
  std::string poset_path;                   // unresolved file references from spec files
  std::string laws_path;
  long max_models = -1;                     // < 0: unlimited
  double budget_seconds = 600.0;
  int jobs = 1;
  // Law names are resolved against the catalog first, then against these.
  std::vector<std::pair<std::string, Formula>> extra_laws;
  // Leaf-only checking and no poset prefilters; exponential, test use only.
  bool debug_no_prune = false;
};

struct SearchCounts {
  long posets_enumerated = 0;
  long posets_searched = 0;
  long partial_prunes = 0;
  long leaves = 0;
  long emitted = 0;
};

struct FoundModel {
  LeftResiduatedGroupoid groupoid;
  std::optional<BasicAlgebraModel> basic;  // present for Class::Basic
  std::string canon;
};

struct SearchResult {
  std::vector<FoundModel> models;
  SearchCounts counts;
  bool exhausted = true;
  double seconds = 0.0;
};

// One representative per isomorphism class, deterministic order; bottom is
// index 0, top is n-1, and interior indices form a linear extension.
Result<std::vector<FinitePoset>> enumerate_bounded_posets(int n);

// Depth-first table filling, column by column, with structural propagation
// (identity, x*y <= y, right monotonicity, residuum existence per completed
// column), incremental div/dneg checks where required, isomorphism rejection
// via canonical forms, and post-hoc re-validation of every emitted model.
Result<SearchResult> search_models(const SearchSpec& spec);

// key=value spec files: size, class, require, forbid, limit, budget, jobs,
// poset (path to a lattice/poset model file).
Result<SearchSpec, std::string> parse_search_spec(std::string_view text);

}  // namespace balg
