#pragma once

#include <string>

#include "balg/algebras.hpp"

namespace balg {

// Lexicographic minimum, over all universe permutations fixing bottom and
// top, of the concatenated relation and operation tables. Equal canonical
// forms == isomorphic models.
std::string canonical_form(const BasicAlgebraModel& a);
std::string canonical_form(const LeftResiduatedGroupoid& g);
std::string canonical_form(const ContrapositionalGroupoid& c);

bool is_isomorphic(const BasicAlgebraModel& a, const BasicAlgebraModel& b);
bool is_isomorphic(const LeftResiduatedGroupoid& a, const LeftResiduatedGroupoid& b);
bool is_isomorphic(const ContrapositionalGroupoid& a, const ContrapositionalGroupoid& b);

// Short hex digest of a canonical form, for summaries.
std::string canonical_digest(const std::string& canon);

}  // namespace balg
