#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <variant>

#include "balg/canonical.hpp"
#include "balg/constructions.hpp"
#include "balg/continuum.hpp"
#include "balg/laws.hpp"
#include "balg/model_io.hpp"
#include "balg/search.hpp"

using namespace balg;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

int load_or_complain(const std::string& path, LoadedModel& out) {
  auto m = load_model(path);
  if (!m) {
    std::cerr << path << ": " << m.error().message() << "\n";
    return m.error().io ? kUsage : kFail;
  }
  out = std::move(m).value();
  return kOk;
}

ModelOps ops_of_loaded(const LoadedModel& m) {
  if (const auto* a = std::get_if<BasicAlgebraModel>(&m)) return ops_for(*a);
  if (const auto* g = std::get_if<LeftResiduatedGroupoid>(&m)) return ops_for(*g);
  if (const auto* c = std::get_if<ContrapositionalGroupoid>(&m)) return ops_for(*c);
  if (const auto* l = std::get_if<BoundedLattice>(&m)) return ops_for(*l);
  if (const auto* o = std::get_if<OrthoLattice>(&m)) return ops_for(*o);
  // involution families check laws through their underlying lattice
  return ops_for(std::get<SectionInvolutionFamily>(m).lattice);
}

int cmd_validate(const std::string& path, bool raw_only) {
  if (raw_only) {
    auto raw = read_model_file(path);
    if (!raw) {
      std::cerr << path << ": " << raw.error().message() << "\n";
      return kFail;
    }
    std::cout << "parsed: class " << model_class_name(raw.value().cls) << ", size "
              << raw.value().n << " (validation skipped)\n";
    return kOk;
  }
  LoadedModel m;
  if (int rc = load_or_complain(path, m); rc != kOk) return rc;
  std::cout << "valid " << model_class_name(class_of(m)) << " model, size "
            << to_raw(m).n << "\n";
  if (const auto* o = std::get_if<OrthoLattice>(&m))
    std::cout << "orthomodular: " << (o->orthomodular ? "yes" : "no") << "\n";
  return kOk;
}

void print_witness(std::ostream& os, const Verdict& v) {
  os << "witness:";
  for (std::size_t i = 0; i < v.witness.size(); ++i)
    os << " " << v.var_names[i] << "=" << v.witness[i];
  os << "\n";
}

int cmd_check(const std::string& path, const std::vector<std::string>& laws,
              const std::vector<std::string>& formulas, const std::string& laws_file) {
  LoadedModel m;
  if (int rc = load_or_complain(path, m); rc != kOk) return rc;
  ModelOps ops = ops_of_loaded(m);

  std::vector<std::pair<std::string, Formula>> extra;
  if (!laws_file.empty()) {
    auto text = read_text_file(laws_file);
    if (!text) {
      std::cerr << text.error().message() << "\n";
      return kUsage;
    }
    auto parsed = parse_law_file(text.value());
    if (!parsed) {
      std::cerr << laws_file << ": " << parsed.error().message() << "\n";
      return kUsage;
    }
    extra = std::move(parsed).value();
  }

  std::vector<std::pair<std::string, Formula>> todo;
  for (const auto& name : laws) {
    auto f = catalog_law(name);
    if (f) {
      todo.emplace_back(name, std::move(f).value());
      continue;
    }
    bool found = false;
    for (const auto& [n2, f2] : extra)
      if (n2 == name) {
        todo.emplace_back(name, f2);
        found = true;
        break;
      }
    if (!found) {
      std::cerr << "unknown law '" << name << "'\n";
      return kUsage;
    }
  }
  for (const auto& text : formulas) {
    auto f = parse_formula(text);
    if (!f) {
      std::cerr << f.error().message() << "\n";
      return kUsage;
    }
    todo.emplace_back(text, std::move(f).value());
  }
  if (todo.empty()) {
    std::cerr << "nothing to check; pass --law or --formula\n";
    return kUsage;
  }

  bool all_hold = true;
  for (const auto& [name, f] : todo) {
    auto v = check_formula(f, ops);
    if (!v) {
      std::cerr << name << ": " << v.error().message() << "\n";
      return kUsage;
    }
    if (v.value().holds) {
      std::cout << name << ": holds\n";
    } else {
      all_hold = false;
      std::cout << name << ": fails  ";
      print_witness(std::cout, v.value());
      std::ostringstream os;
      print_witness(os, v.value());
      std::cerr << name << " " << os.str();
    }
  }
  return all_hold ? kOk : kFail;
}

int emit_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  auto w = write_text_file(out_path, text);
  if (!w) {
    std::cerr << w.error().message() << "\n";
    return kFail;
  }
  return kOk;
}

int cmd_construct(const std::string& recipe, const std::string& path,
                  const std::string& out_path) {
  LoadedModel m;
  if (int rc = load_or_complain(path, m); rc != kOk) return rc;

  auto wrong_input = [&](const char* needed) {
    std::cerr << "recipe " << recipe << " needs a " << needed << " input, got "
              << model_class_name(class_of(m)) << "\n";
    return kUsage;
  };

  if (recipe == "g-of-a") {
    const auto* a = std::get_if<BasicAlgebraModel>(&m);
    if (!a) return wrong_input("basic");
    return emit_output(dump_model(LoadedModel{groupoid_of_basic(*a)}), out_path);
  }
  if (recipe == "a-of-g") {
    const auto* g = std::get_if<LeftResiduatedGroupoid>(&m);
    if (!g) return wrong_input("lrpg");
    // candidate tables only; validity is deliberately not guaranteed
    return emit_output(dump_raw(to_raw(basic_of_groupoid(*g))), out_path);
  }
  if (recipe == "from-filter-inv" || recipe == "from-ideal-inv") {
    const auto* f = std::get_if<SectionInvolutionFamily>(&m);
    if (!f) return wrong_input("involutions");
    auto a = recipe == "from-filter-inv" ? basic_from_filter_involutions(*f)
                                         : basic_from_ideal_involutions(*f);
    if (!a) {
      std::cerr << a.error().message() << "\n";
      return kFail;
    }
    return emit_output(dump_model(LoadedModel{std::move(a).value()}), out_path);
  }
  if (recipe == "from-oml") {
    const auto* o = std::get_if<OrthoLattice>(&m);
    if (!o) return wrong_input("ortho");
    auto a = basic_from_oml(*o);
    if (!a) {
      std::cerr << a.error().message() << "\n";
      return kFail;
    }
    return emit_output(dump_model(LoadedModel{std::move(a).value()}), out_path);
  }
  if (recipe == "cpg-of-lrpg") {
    const auto* g = std::get_if<LeftResiduatedGroupoid>(&m);
    if (!g) return wrong_input("lrpg");
    auto c = cpg_from_lrpg(*g);
    if (!c) {
      std::cerr << c.error().message() << "\n";
      return kFail;
    }
    return emit_output(dump_model(LoadedModel{std::move(c).value()}), out_path);
  }
  if (recipe == "lrpg-of-cpg") {
    const auto* c = std::get_if<ContrapositionalGroupoid>(&m);
    if (!c) return wrong_input("cpg");
    return emit_output(dump_model(LoadedModel{lrpg_from_cpg(*c)}), out_path);
  }
  std::cerr << "unknown recipe '" << recipe << "'\n";
  return kUsage;
}

int cmd_roundtrip(const std::string& path) {
  LoadedModel m;
  if (int rc = load_or_complain(path, m); rc != kOk) return rc;
  RoundtripReport rep;
  if (const auto* a = std::get_if<BasicAlgebraModel>(&m))
    rep = roundtrip_check(*a);
  else if (const auto* g = std::get_if<LeftResiduatedGroupoid>(&m))
    rep = roundtrip_check(*g);
  else if (const auto* c = std::get_if<ContrapositionalGroupoid>(&m))
    rep = roundtrip_check(*c);
  else {
    std::cerr << "roundtrip applies to basic, lrpg and cpg models\n";
    return kUsage;
  }
  std::cout << rep.summary() << "\n";
  return rep.ok() ? kOk : kFail;
}

int cmd_search(SearchSpec spec, const std::string& spec_file,
               const std::string& laws_file, const std::string& out_dir) {
  if (!spec_file.empty()) {
    auto text = read_text_file(spec_file);
    if (!text) {
      std::cerr << text.error().message() << "\n";
      return kUsage;
    }
    auto parsed = parse_search_spec(text.value());
    if (!parsed) {
      std::cerr << spec_file << ": " << parsed.error() << "\n";
      return kUsage;
    }
    SearchSpec base = std::move(parsed).value();
    // command-line flags override the file
    if (spec.size) base.size = spec.size;
    if (!spec.require.empty()) base.require = spec.require;
    if (!spec.forbid.empty()) base.forbid = spec.forbid;
    if (spec.max_models >= 0) base.max_models = spec.max_models;
    if (spec.jobs != 1) base.jobs = spec.jobs;
    if (spec.budget_seconds != 600.0) base.budget_seconds = spec.budget_seconds;
    if (spec.cls != SearchSpec::Class::Lrpg) base.cls = spec.cls;
    if (!spec.poset_path.empty()) base.poset_path = spec.poset_path;
    spec = std::move(base);
  }

  const std::string law_source = laws_file.empty() ? spec.laws_path : laws_file;
  if (!law_source.empty()) {
    auto text = read_text_file(law_source);
    if (!text) {
      std::cerr << text.error().message() << "\n";
      return kUsage;
    }
    auto parsed = parse_law_file(text.value());
    if (!parsed) {
      std::cerr << law_source << ": " << parsed.error().message() << "\n";
      return kUsage;
    }
    spec.extra_laws = std::move(parsed).value();
  }

  if (!spec.poset_path.empty()) {
    LoadedModel m;
    if (int rc = load_or_complain(spec.poset_path, m); rc != kOk) return rc;
    if (const auto* l = std::get_if<BoundedLattice>(&m))
      spec.fixed_poset = l->poset;
    else if (const auto* g = std::get_if<LeftResiduatedGroupoid>(&m))
      spec.fixed_poset = g->poset;
    else {
      std::cerr << "--poset wants a lattice (or lrpg) model file\n";
      return kUsage;
    }
  }

  auto r = search_models(spec);
  if (!r) {
    std::cerr << r.error().message() << "\n";
    return kUsage;
  }
  const SearchResult& res = r.value();

  std::ostringstream sum;
  sum << "posets enumerated: " << res.counts.posets_enumerated
      << ", searched: " << res.counts.posets_searched << "\n"
      << "partial tables pruned: " << res.counts.partial_prunes
      << ", leaves: " << res.counts.leaves << "\n"
      << "models up to isomorphism: " << res.models.size() << "\n"
      << "exhausted: " << (res.exhausted ? "yes" : "no") << ", time: " << res.seconds
      << "s\n";
  for (std::size_t i = 0; i < res.models.size(); ++i)
    sum << "model " << i << ": " << canonical_digest(res.models[i].canon) << "\n";
  std::cout << sum.str();

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "cannot create " << out_dir << ": " << ec.message() << "\n";
      return kFail;
    }
    for (std::size_t i = 0; i < res.models.size(); ++i) {
      const auto& fm = res.models[i];
      std::ostringstream name;
      name << out_dir << "/model_" << i
           << (fm.basic ? ".basic" : ".lrpg");
      const std::string text = fm.basic ? dump_model(LoadedModel{*fm.basic})
                                        : dump_model(LoadedModel{fm.groupoid});
      if (auto w = write_text_file(name.str(), text); !w) {
        std::cerr << w.error().message() << "\n";
        return kFail;
      }
    }
    if (auto w = write_text_file(out_dir + "/summary.txt", sum.str()); !w) {
      std::cerr << w.error().message() << "\n";
      return kFail;
    }
  }
  return res.exhausted ? kOk : kBudget;
}

int cmd_continuum(double x, double step) {
  auto w = unit_interval::witness_no_right_residuum(x, std::min(step, 1e-3));
  if (!w) {
    std::cerr << w.error().message() << "\n";
    return kUsage;
  }
  std::cout << w.value().summary() << "\n";

  auto rep = unit_interval::check_monotone_grid(step);
  if (!rep) {
    std::cerr << rep.error().message() << "\n";
    return kUsage;
  }
  std::cout << "monotonicity on the step-" << rep.value().step << " grid: "
            << rep.value().triples << " triples, max violation "
            << rep.value().max_violation << "\n";
  return w.value().valid() && rep.value().holds() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite basic algebras, residuated po-groupoids and lattices with "
               "sectional antitone involutions: validation, law checking, "
               "interconversion and exhaustive model search"};
  app.require_subcommand(1);

  // validate
  std::string v_path;
  bool v_raw = false;
  auto* v = app.add_subcommand("validate", "validate a model file");
  v->add_option("file", v_path)->required();
  v->add_flag("--raw", v_raw, "parse only, skip validation");

  // check
  std::string c_path, c_laws_file;
  std::vector<std::string> c_laws, c_formulas;
  auto* c = app.add_subcommand("check", "check laws on a model");
  c->add_option("file", c_path)->required();
  c->add_option("--law", c_laws, "law name from the catalog (repeatable)");
  c->add_option("--formula", c_formulas, "formula text (repeatable)");
  c->add_option("--laws", c_laws_file, "law file with extra named laws");

  // construct
  std::string k_recipe, k_path, k_out;
  auto* k = app.add_subcommand("construct", "convert between structure classes");
  k->add_option("recipe", k_recipe,
                "g-of-a | a-of-g | from-filter-inv | from-ideal-inv | from-oml | "
                "cpg-of-lrpg | lrpg-of-cpg")
      ->required();
  k->add_option("file", k_path)->required();
  k->add_option("-o,--out", k_out, "output file (default: stdout)");

  // roundtrip
  std::string r_path;
  auto* r = app.add_subcommand("roundtrip", "equivalence round-trip report");
  r->add_option("file", r_path)->required();

  // search
  SearchSpec spec;
  std::string s_class = "lrpg", s_spec_file, s_laws_file, s_out;
  std::vector<std::string> s_require, s_forbid;
  auto* s = app.add_subcommand("search", "enumerate models up to isomorphism");
  s->add_option("--size", spec.size, "universe size (2..8)");
  s->add_option("--class", s_class, "lrpg | basic")->check(CLI::IsMember({"lrpg", "basic"}));
  s->add_option("--require", s_require, "laws every model must satisfy")->delimiter(',');
  s->add_option("--forbid", s_forbid, "laws every model must violate")->delimiter(',');
  s->add_option("--poset", spec.poset_path, "fixed poset (lattice model file)");
  s->add_option("--limit", spec.max_models, "stop after this many models");
  s->add_option("--budget", spec.budget_seconds, "time budget in seconds");
  s->add_option("--jobs", spec.jobs, "worker threads (default 1)");
  s->add_option("--spec", s_spec_file, "key=value spec file");
  s->add_option("--laws", s_laws_file, "law file with extra named laws");
  s->add_option("-o,--out", s_out, "directory for found models and summary");
  bool s_debug = false;
  s->add_flag("--debug-no-prune", s_debug, "leaf-only checking (tiny sizes only)");

  // continuum
  double x_val = 0.0, x_step = 0.01;
  auto* u = app.add_subcommand("continuum", "unit-interval algebra probes");
  u->add_option("--x", x_val, "element of (0,1)")->required();
  u->add_option("--step", x_step, "grid step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (v->parsed()) return cmd_validate(v_path, v_raw);
    if (c->parsed()) return cmd_check(c_path, c_laws, c_formulas, c_laws_file);
    if (k->parsed()) return cmd_construct(k_recipe, k_path, k_out);
    if (r->parsed()) return cmd_roundtrip(r_path);
    if (s->parsed()) {
      spec.require = s_require;
      spec.forbid = s_forbid;
      spec.cls = s_class == "basic" ? SearchSpec::Class::Basic : SearchSpec::Class::Lrpg;
      spec.debug_no_prune = s_debug;
      return cmd_search(std::move(spec), s_spec_file, s_laws_file, s_out);
    }
    if (u->parsed()) return cmd_continuum(x_val, x_step);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
