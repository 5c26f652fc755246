#include "balg/model_io.hpp"

#include <fstream>
#include <sstream>

namespace balg {

const char* model_class_name(ModelClass c) {
  switch (c) {
    case ModelClass::Basic: return "basic";
    case ModelClass::Lrpg: return "lrpg";
    case ModelClass::Cpg: return "cpg";
    case ModelClass::Lattice: return "lattice";
    case ModelClass::Ortho: return "ortho";
    case ModelClass::Involutions: return "involutions";
  }
  return "?";
}

std::optional<ModelClass> model_class_from(std::string_view name) {
  if (name == "basic") return ModelClass::Basic;
  if (name == "lrpg") return ModelClass::Lrpg;
  if (name == "cpg") return ModelClass::Cpg;
  if (name == "lattice") return ModelClass::Lattice;
  if (name == "ortho") return ModelClass::Ortho;
  if (name == "involutions") return ModelClass::Involutions;
  return std::nullopt;
}

std::string IoError::message() const {
  std::ostringstream os;
  os << "line " << line << ": " << reason;
  return os.str();
}

std::string LoadError::message() const {
  if (io) return io->message();
  if (validation) return validation->message();
  return "unknown load error";
}

namespace {

struct Section {
  std::string name;
  int line = 0;
  std::vector<std::vector<int>> rows;
};

struct Requirement {
  const char* name;
  enum class Shape { Square, Vector, PaddedRows } shape;
};

std::vector<Requirement> sections_for(ModelClass c) {
  using S = Requirement::Shape;
  switch (c) {
    case ModelClass::Basic: return {{"oplus", S::Square}, {"neg", S::Vector}};
    case ModelClass::Lrpg:
      return {{"leq", S::Square}, {"mult", S::Square}, {"res", S::Square}};
    case ModelClass::Cpg:
      return {{"leq", S::Square}, {"mult", S::Square}, {"imp", S::Square}};
    case ModelClass::Lattice: return {{"leq", S::Square}};
    case ModelClass::Ortho: return {{"leq", S::Square}, {"perp", S::Vector}};
    case ModelClass::Involutions: return {};  // leq plus gamma or delta, handled apart
  }
  return {};
}

bool parse_int(std::string_view tok, int& out) {
  if (tok.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (tok[0] == '-') {
    negative = true;
    i = 1;
    if (tok.size() == 1) return false;
  }
  long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
    v = v * 10 + (tok[i] - '0');
    if (v > 1 << 20) return false;
  }
  out = static_cast<int>(negative ? -v : v);
  return true;
}

}  // namespace

Result<RawModel, IoError> parse_model_file(std::string_view text) {
  std::optional<ModelClass> cls;
  std::optional<int> size;
  std::vector<Section> sections;

  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    const bool at_end = end == text.size();
    pos = end + 1;

    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::istringstream is{std::string(line)};
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(t);
    if (!toks.empty()) {
      if (toks[0] == "class") {
        if (toks.size() != 2) return IoError{lineno, "expected: class <name>"};
        cls = model_class_from(toks[1]);
        if (!cls) return IoError{lineno, "unknown class '" + toks[1] + "'"};
      } else if (toks[0] == "size") {
        int v = 0;
        if (toks.size() != 2 || !parse_int(toks[1], v) || v <= 0)
          return IoError{lineno, "expected: size <positive integer>"};
        size = v;
      } else {
        int v = 0;
        if (parse_int(toks[0], v)) {
          if (sections.empty()) return IoError{lineno, "numbers before any section name"};
          std::vector<int> row;
          for (const auto& t : toks) {
            int x = 0;
            if (!parse_int(t, x)) return IoError{lineno, "bad integer '" + t + "'"};
            row.push_back(x);
          }
          sections.back().rows.push_back(std::move(row));
        } else {
          if (toks.size() != 1)
            return IoError{lineno, "section names stand alone on a line"};
          sections.push_back({toks[0], lineno, {}});
        }
      }
    }
    if (at_end) break;
  }

  if (!cls) return IoError{0, "missing 'class' header"};
  if (!size) return IoError{0, "missing 'size' header"};

  RawModel raw;
  raw.cls = *cls;
  raw.n = *size;
  const int n = raw.n;

  auto to_square = [&](const Section& s) -> Result<Table, IoError> {
    if (static_cast<int>(s.rows.size()) != n)
      return IoError{s.line, s.name + ": expected " + std::to_string(n) + " rows"};
    Table t(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(s.rows[i].size()) != n)
        return IoError{s.line, s.name + ": row " + std::to_string(i) + " must have " +
                                   std::to_string(n) + " entries"};
      for (int j = 0; j < n; ++j) t(i, j) = s.rows[i][j];
    }
    return t;
  };
  auto to_vector = [&](const Section& s) -> Result<std::vector<int>, IoError> {
    std::vector<int> flat;
    for (const auto& r : s.rows) flat.insert(flat.end(), r.begin(), r.end());
    if (static_cast<int>(flat.size()) != n)
      return IoError{s.line, s.name + ": expected " + std::to_string(n) + " entries"};
    return flat;
  };
  auto to_padded = [&](const Section& s) -> Result<std::vector<std::vector<int>>, IoError> {
    if (static_cast<int>(s.rows.size()) != n)
      return IoError{s.line, s.name + ": expected " + std::to_string(n) + " rows"};
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(s.rows[i].size()) != n)
        return IoError{s.line, s.name + ": row " + std::to_string(i) + " must have " +
                                   std::to_string(n) + " entries"};
    return s.rows;
  };

  for (const auto& s : sections) {
    if (s.name == "leq") {
      auto t = to_square(s);
      if (!t) return t.error();
      raw.leq = std::move(t).value();
    } else if (s.name == "mult") {
      auto t = to_square(s);
      if (!t) return t.error();
      raw.mult = std::move(t).value();
    } else if (s.name == "res") {
      auto t = to_square(s);
      if (!t) return t.error();
      raw.res = std::move(t).value();
    } else if (s.name == "imp") {
      auto t = to_square(s);
      if (!t) return t.error();
      raw.imp = std::move(t).value();
    } else if (s.name == "oplus") {
      auto t = to_square(s);
      if (!t) return t.error();
      raw.oplus = std::move(t).value();
    } else if (s.name == "neg") {
      auto v = to_vector(s);
      if (!v) return v.error();
      raw.neg = std::move(v).value();
    } else if (s.name == "perp") {
      auto v = to_vector(s);
      if (!v) return v.error();
      raw.perp = std::move(v).value();
    } else if (s.name == "gamma") {
      auto v = to_padded(s);
      if (!v) return v.error();
      raw.gamma = std::move(v).value();
    } else if (s.name == "delta") {
      auto v = to_padded(s);
      if (!v) return v.error();
      raw.delta = std::move(v).value();
    } else {
      return IoError{s.line, "unknown section '" + s.name + "'"};
    }
  }

  // exactly the class's sections must be present
  auto have = [&](const char* name) {
    std::string_view s = name;
    if (s == "leq") return raw.leq.has_value();
    if (s == "mult") return raw.mult.has_value();
    if (s == "res") return raw.res.has_value();
    if (s == "imp") return raw.imp.has_value();
    if (s == "oplus") return raw.oplus.has_value();
    if (s == "neg") return raw.neg.has_value();
    if (s == "perp") return raw.perp.has_value();
    return false;
  };
  int expected = 0;
  for (const auto& r : sections_for(raw.cls)) {
    ++expected;
    if (!have(r.name))
      return IoError{0, std::string("class ") + model_class_name(raw.cls) +
                            " requires section '" + r.name + "'"};
  }
  int present = 0;
  for (const char* s : {"leq", "mult", "res", "imp", "oplus", "neg", "perp"})
    if (have(s)) ++present;
  if (raw.cls == ModelClass::Involutions) {
    if (!raw.leq || present != 1 || raw.gamma.has_value() == raw.delta.has_value())
      return IoError{0, "class involutions requires sections leq and exactly one of gamma/delta"};
  } else {
    if (present != expected || raw.gamma || raw.delta)
      return IoError{0, std::string("class ") + model_class_name(raw.cls) +
                            " carries exactly its own sections"};
  }
  return raw;
}

Result<RawModel, IoError> read_model_file(const std::string& path) {
  auto text = read_text_file(path);
  if (!text) return text.error();
  return parse_model_file(text.value());
}

namespace {

Result<FinitePoset, Diagnostic> canonical_poset(const RawModel& raw) {
  if (!raw.leq) return Diagnostic{"MissingSection", {}, "leq required"};
  auto p = validate_finite_poset(*raw.leq, 0, raw.n - 1);
  if (!p) return p.error();
  return std::move(p).value();
}

}  // namespace

Result<LoadedModel, Diagnostic> validate_raw(const RawModel& raw) {
  switch (raw.cls) {
    case ModelClass::Basic: {
      auto a = validate_basic_algebra(raw.n, *raw.oplus, *raw.neg);
      if (!a) return a.error();
      if (a.value().one() != raw.n - 1)
        return Diagnostic{"NotCanonicalLabeling", {a.value().one()},
                          "canonical files put 1 = n(0) at index n-1"};
      return LoadedModel{std::move(a).value()};
    }
    case ModelClass::Lrpg: {
      auto p = canonical_poset(raw);
      if (!p) return p.error();
      auto g = validate_lrpg(p.value(), *raw.mult, *raw.res);
      if (!g) return g.error();
      return LoadedModel{std::move(g).value()};
    }
    case ModelClass::Cpg: {
      auto p = canonical_poset(raw);
      if (!p) return p.error();
      auto c = validate_cpg(p.value(), *raw.mult, *raw.imp);
      if (!c) return c.error();
      return LoadedModel{std::move(c).value()};
    }
    case ModelClass::Lattice: {
      auto p = canonical_poset(raw);
      if (!p) return p.error();
      auto l = meets_joins(p.value());
      if (!l) return l.error();
      return LoadedModel{std::move(l).value()};
    }
    case ModelClass::Ortho: {
      auto p = canonical_poset(raw);
      if (!p) return p.error();
      auto l = meets_joins(p.value());
      if (!l) return l.error();
      auto o = make_ortholattice(l.value(), *raw.perp);
      if (!o) return o.error();
      return LoadedModel{std::move(o).value()};
    }
    case ModelClass::Involutions: {
      auto p = canonical_poset(raw);
      if (!p) return p.error();
      auto l = meets_joins(p.value());
      if (!l) return l.error();
      SectionInvolutionFamily f;
      f.lattice = std::move(l).value();
      f.kind = raw.gamma ? SectionKind::Filters : SectionKind::Ideals;
      f.maps = raw.gamma ? *raw.gamma : *raw.delta;
      if (auto d = validate_involution_family(f)) return *d;
      return LoadedModel{std::move(f)};
    }
  }
  return Diagnostic{"UnknownClass", {}, "unhandled model class"};
}

Result<LoadedModel, LoadError> load_model(const std::string& path) {
  auto raw = read_model_file(path);
  if (!raw) return LoadError{raw.error(), std::nullopt};
  auto m = validate_raw(raw.value());
  if (!m) return LoadError{std::nullopt, m.error()};
  return std::move(m).value();
}

namespace {

void dump_square(std::ostringstream& os, const char* name, const Table& t) {
  os << name << "\n";
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) {
      if (j) os << ' ';
      os << t(i, j);
    }
    os << "\n";
  }
}

void dump_vector(std::ostringstream& os, const char* name, const std::vector<int>& v) {
  os << name << "\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  os << "\n";
}

void dump_rows(std::ostringstream& os, const char* name,
               const std::vector<std::vector<int>>& rows) {
  os << name << "\n";
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) os << ' ';
      os << r[j];
    }
    os << "\n";
  }
}

}  // namespace

std::string dump_raw(const RawModel& raw) {
  std::ostringstream os;
  os << "class " << model_class_name(raw.cls) << "\n";
  os << "size " << raw.n << "\n";
  // fixed section order keeps dumps byte-stable
  if (raw.leq) dump_square(os, "leq", *raw.leq);
  if (raw.oplus) dump_square(os, "oplus", *raw.oplus);
  if (raw.mult) dump_square(os, "mult", *raw.mult);
  if (raw.res) dump_square(os, "res", *raw.res);
  if (raw.imp) dump_square(os, "imp", *raw.imp);
  if (raw.neg) dump_vector(os, "neg", *raw.neg);
  if (raw.perp) dump_vector(os, "perp", *raw.perp);
  if (raw.gamma) dump_rows(os, "gamma", *raw.gamma);
  if (raw.delta) dump_rows(os, "delta", *raw.delta);
  return os.str();
}

RawModel to_raw(const LoadedModel& m) {
  RawModel raw;
  if (const auto* a = std::get_if<BasicAlgebraModel>(&m)) {
    raw.cls = ModelClass::Basic;
    raw.n = a->n;
    raw.oplus = a->oplus;
    raw.neg = a->neg;
  } else if (const auto* g = std::get_if<LeftResiduatedGroupoid>(&m)) {
    raw.cls = ModelClass::Lrpg;
    raw.n = g->poset.n;
    raw.leq = g->poset.leq;
    raw.mult = g->mult;
    raw.res = g->res;
  } else if (const auto* c = std::get_if<ContrapositionalGroupoid>(&m)) {
    raw.cls = ModelClass::Cpg;
    raw.n = c->poset.n;
    raw.leq = c->poset.leq;
    raw.mult = c->mult;
    raw.imp = c->imp;
  } else if (const auto* l = std::get_if<BoundedLattice>(&m)) {
    raw.cls = ModelClass::Lattice;
    raw.n = l->poset.n;
    raw.leq = l->poset.leq;
  } else if (const auto* o = std::get_if<OrthoLattice>(&m)) {
    raw.cls = ModelClass::Ortho;
    raw.n = o->lattice.poset.n;
    raw.leq = o->lattice.poset.leq;
    raw.perp = o->perp;
  } else if (const auto* f = std::get_if<SectionInvolutionFamily>(&m)) {
    raw.cls = ModelClass::Involutions;
    raw.n = f->lattice.poset.n;
    raw.leq = f->lattice.poset.leq;
    if (f->kind == SectionKind::Filters)
      raw.gamma = f->maps;
    else
      raw.delta = f->maps;
  }
  return raw;
}

RawModel to_raw(const BasicTables& t) {
  RawModel raw;
  raw.cls = ModelClass::Basic;
  raw.n = t.n;
  raw.oplus = t.oplus;
  raw.neg = t.neg;
  return raw;
}

std::string dump_model(const LoadedModel& m) { return dump_raw(to_raw(m)); }

ModelClass class_of(const LoadedModel& m) { return to_raw(m).cls; }

Result<bool, IoError> write_text_file(const std::string& path, std::string_view text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) return IoError{0, "cannot open " + path + " for writing"};
  os << text;
  os.flush();
  if (!os) return IoError{0, "write to " + path + " failed"};
  return true;
}

Result<std::string, IoError> read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return IoError{0, "cannot open " + path};
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace balg
