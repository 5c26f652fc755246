#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "balg/algebras.hpp"
#include "balg/constructions.hpp"
#include "balg/involutions.hpp"

namespace balg {

// Plain-text model files:
//   class <basic|lrpg|cpg|lattice|ortho|involutions>
//   size <n>
// followed by the class's sections, each a name line and then whitespace-
// separated integer rows: leq/mult/res/imp/oplus are n x n, neg/perp are one
// row of n, gamma/delta are n rows padded with -1 off the section. '#' starts
// a comment; sections may come in any order. Dumps use a fixed section order
// and single-space separators, so two dumps of one model are byte-identical.
enum class ModelClass { Basic, Lrpg, Cpg, Lattice, Ortho, Involutions };

const char* model_class_name(ModelClass c);
std::optional<ModelClass> model_class_from(std::string_view name);

struct RawModel {
  ModelClass cls = ModelClass::Basic;
  int n = 0;
  std::optional<Table> leq, mult, res, imp, oplus;
  std::optional<std::vector<int>> neg, perp;
  std::optional<std::vector<std::vector<int>>> gamma, delta;
};

struct IoError {
  int line = 0;
  std::string reason;
  std::string message() const;
};

using LoadedModel = std::variant<BasicAlgebraModel, LeftResiduatedGroupoid,
                                 ContrapositionalGroupoid, BoundedLattice,
                                 OrthoLattice, SectionInvolutionFamily>;

struct LoadError {
  std::optional<IoError> io;
  std::optional<Diagnostic> validation;
  std::string message() const;
};

Result<RawModel, IoError> parse_model_file(std::string_view text);
Result<RawModel, IoError> read_model_file(const std::string& path);

// Dispatches on the class and validates. Poset-backed classes must be in
// canonical labeling (bottom 0, top n-1); basic algebras must have n(0)=n-1.
Result<LoadedModel, Diagnostic> validate_raw(const RawModel& raw);

Result<LoadedModel, LoadError> load_model(const std::string& path);

std::string dump_model(const LoadedModel& m);
std::string dump_raw(const RawModel& raw);

RawModel to_raw(const LoadedModel& m);
RawModel to_raw(const BasicTables& t);  // possibly-invalid candidates

ModelClass class_of(const LoadedModel& m);

Result<bool, IoError> write_text_file(const std::string& path, std::string_view text);
Result<std::string, IoError> read_text_file(const std::string& path);

}  // namespace balg
