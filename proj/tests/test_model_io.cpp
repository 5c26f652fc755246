#include <doctest.h>

#include <filesystem>

#include "balg/constructions.hpp"
#include "balg/laws.hpp"
#include "balg/model_io.hpp"
#include "balg/search.hpp"
#include "fixtures.hpp"

using namespace balg;
using namespace balg::test;

namespace {

const char* kFixtures = BALG_FIXTURES_DIR;

std::vector<std::string> fixture_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(kFixtures))
    out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("all bundled fixtures load and validate") {
  auto files = fixture_files();
  CHECK(files.size() >= 13);
  for (const auto& f : files) {
    INFO(f);
    CHECK(load_model(f).ok());
  }
}

TEST_CASE("dump then load is the identity, and dumps are byte-stable") {
  for (const auto& f : fixture_files()) {
    INFO(f);
    auto original = read_text_file(f);
    REQUIRE(original.ok());
    auto m = load_model(f);
    REQUIRE(m.ok());
    const std::string once = dump_model(m.value());
    CHECK(once == original.value());
    CHECK(dump_model(m.value()) == once);
  }
}

TEST_CASE("dimension mismatches are parse errors") {
  std::string text = "class lrpg\nsize 8\nleq\n";
  for (int i = 0; i < 8; ++i) text += "1 1 1 1 1 1 1 1\n";
  text += "mult\n";
  for (int i = 0; i < 7; ++i) text += "0 0 0 0 0 0 0 0\n";  // 7x8: one row short
  text += "res\n";
  for (int i = 0; i < 8; ++i) text += "0 0 0 0 0 0 0 0\n";
  auto raw = parse_model_file(text);
  REQUIRE_FALSE(raw.ok());
  CHECK(raw.error().reason.find("mult") != std::string::npos);
}

TEST_CASE("header and section errors") {
  CHECK_FALSE(parse_model_file("size 2\nleq\n1 1\n0 1\n").ok());           // no class
  CHECK_FALSE(parse_model_file("class lattice\nleq\n1 1\n0 1\n").ok());   // no size
  CHECK_FALSE(parse_model_file("class nosuch\nsize 2\n").ok());
  CHECK_FALSE(parse_model_file("class lattice\nsize 2\nwat\n1 1\n").ok());
  // missing required section
  CHECK_FALSE(parse_model_file("class lrpg\nsize 2\nleq\n1 1\n0 1\n").ok());
  // foreign section for the class
  CHECK_FALSE(
      parse_model_file("class lattice\nsize 2\nleq\n1 1\n0 1\nneg\n1 0\n").ok());
  // involutions need exactly one of gamma/delta
  CHECK_FALSE(parse_model_file("class involutions\nsize 2\nleq\n1 1\n0 1\n").ok());
}

TEST_CASE("comments and section order do not matter for loading") {
  const char* text =
      "# a 2-chain, sections reversed\n"
      "class lrpg\n"
      "size 2\n"
      "res\n1 0\n1 1\n"
      "mult\n0 0\n0 1\n"
      "leq\n1 1\n0 1\n";
  auto m = parse_model_file(text);
  REQUIRE(m.ok());
  CHECK(validate_raw(m.value()).ok());
}

TEST_CASE("validation failures are forwarded on load") {
  // antisymmetry violation inside the file
  const char* text = "class lattice\nsize 2\nleq\n1 1\n1 1\n";
  auto raw = parse_model_file(text);
  REQUIRE(raw.ok());
  auto m = validate_raw(raw.value());
  REQUIRE_FALSE(m.ok());
  CHECK(m.error().code == "NotAntisymmetric");
}

TEST_CASE("canonical labeling is enforced at load time") {
  // a valid 3-element MV chain, but with 1 = n(0) sitting at index 1
  const char* text =
      "class basic\n"
      "size 3\n"
      "oplus\n0 1 2\n1 1 1\n2 1 1\n"
      "neg\n1 0 2\n";
  auto raw = parse_model_file(text);
  REQUIRE(raw.ok());
  auto m = validate_raw(raw.value());
  REQUIRE_FALSE(m.ok());
  // rejected as either invalid or non-canonical; the labeling rule is the point
  CHECK(m.error().code == "NotCanonicalLabeling");
}

TEST_CASE("raw candidate tables can be dumped and re-parsed without validating") {
  BasicTables t = basic_of_groupoid(example1_lrpg());
  RawModel raw = to_raw(t);
  const std::string text = dump_raw(raw);
  auto back = parse_model_file(text);
  REQUIRE(back.ok());
  CHECK(*back.value().oplus == t.oplus);
  auto validated = validate_raw(back.value());
  REQUIRE_FALSE(validated.ok());
  CHECK(validated.error().code == "AxiomFailed");
}

TEST_CASE("loaded classes dispatch to the right variant") {
  auto m1 = load_model(std::string(kFixtures) + "/example1.lrpg");
  REQUIRE(m1.ok());
  CHECK(std::holds_alternative<LeftResiduatedGroupoid>(m1.value()));

  auto m2 = load_model(std::string(kFixtures) + "/mo2_filter.inv");
  REQUIRE(m2.ok());
  const auto* f = std::get_if<SectionInvolutionFamily>(&m2.value());
  REQUIRE(f != nullptr);
  CHECK(f->kind == SectionKind::Filters);
  CHECK(f->maps == mo2_filter_family().maps);

  auto m3 = load_model(std::string(kFixtures) + "/o6.ortho");
  REQUIRE(m3.ok());
  const auto* o = std::get_if<OrthoLattice>(&m3.value());
  REQUIRE(o != nullptr);
  CHECK_FALSE(o->orthomodular);
}

TEST_CASE("search results survive a dump-reload cycle with identical verdicts") {
  SearchSpec spec;
  spec.size = 5;
  spec.require = {"div", "jk"};
  auto r = search_models(spec);
  REQUIRE(r.ok());
  for (const auto& m : r.value().models) {
    const std::string text = dump_model(LoadedModel{m.groupoid});
    auto raw = parse_model_file(text);
    REQUIRE(raw.ok());
    auto back = validate_raw(raw.value());
    REQUIRE(back.ok());
    const auto& g = std::get<LeftResiduatedGroupoid>(back.value());
    CHECK(g.mult == m.groupoid.mult);
    for (const char* law : {"div", "jk", "dneg", "w"}) {
      auto v = check_formula(catalog_law(law).value(), ops_for(g));
      REQUIRE(v.ok());
      CHECK(v.value().holds);
    }
  }
}

TEST_CASE("out-of-range entries are rejected") {
  const char* text = "class basic\nsize 2\noplus\n0 1\n1 9\nneg\n1 0\n";
  auto raw = parse_model_file(text);
  REQUIRE(raw.ok());
  CHECK_FALSE(validate_raw(raw.value()).ok());
}
