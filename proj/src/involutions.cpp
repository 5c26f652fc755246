#include "balg/involutions.hpp"

#include <algorithm>
#include <stdexcept>

namespace balg {

std::optional<Diagnostic> validate_involution_family(const SectionInvolutionFamily& f) {
  const int n = f.lattice.poset.n;
  if (static_cast<int>(f.maps.size()) != n)
    return Diagnostic{"BadFamilyShape", {}, "one map row per element required"};
  for (int a = 0; a < n; ++a)
    if (static_cast<int>(f.maps[a].size()) != n)
      return Diagnostic{"BadFamilyShape", {a}, "map row has wrong length"};

  for (int a = 0; a < n; ++a) {
    // into the section (and defined exactly there)
    for (int x = 0; x < n; ++x) {
      const int v = f.maps[a][x];
      if (!f.in_section(a, x)) {
        if (v != -1)
          return Diagnostic{"NotIntoSection", {a, x}, "map defined off the section"};
        continue;
      }
      if (v < 0 || v >= n || !f.in_section(a, v))
        return Diagnostic{"NotIntoSection", {a, x}, "image leaves the section"};
    }
    // antitone on the section
    for (int x = 0; x < n; ++x) {
      if (!f.in_section(a, x)) continue;
      for (int y = 0; y < n; ++y) {
        if (!f.in_section(a, y) || !f.lattice.poset.le(x, y)) continue;
        if (!f.lattice.poset.le(f.maps[a][y], f.maps[a][x]))
          return Diagnostic{"NotAntitone", {a, x, y}, "x <= y but not f(y) <= f(x)"};
      }
    }
    // involution on the section
    for (int x = 0; x < n; ++x) {
      if (!f.in_section(a, x)) continue;
      if (f.maps[a][f.maps[a][x]] != x)
        return Diagnostic{"NotInvolutive", {a, x}, "f(f(x)) != x"};
    }
  }
  return std::nullopt;
}

Result<SectionInvolutionFamily> dualize_involution_family(const SectionInvolutionFamily& f) {
  if (auto d = validate_involution_family(f)) return *d;

  const int n = f.lattice.poset.n;
  SectionInvolutionFamily out;
  out.lattice = f.lattice;
  out.maps.assign(n, std::vector<int>(n, -1));

  if (f.kind == SectionKind::Filters) {
    out.kind = SectionKind::Ideals;
    // delta_a(x) = g0(g_{g0(a)}(g0(x) v g0(a)))
    auto g = [&](int a, int x) { return f.maps[a][x]; };
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x) {
        if (!f.lattice.poset.le(x, a)) continue;
        const int na = g(0, a);
        out.maps[a][x] = g(0, g(na, f.lattice.join(g(0, x), na)));
      }
  } else {
    out.kind = SectionKind::Filters;
    // gamma_a(x) = d1(d_{d1(a)}(d1(x) ^ d1(a)))
    const int top = f.lattice.poset.top;
    auto d = [&](int a, int x) { return f.maps[a][x]; };
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x) {
        if (!f.lattice.poset.le(a, x)) continue;
        const int na = d(top, a);
        out.maps[a][x] = d(top, d(na, f.lattice.meet(d(top, x), na)));
      }
  }

  if (auto d = validate_involution_family(out)) return *d;
  return out;
}

OrthoReport validate_ortholattice(const BoundedLattice& lat, const std::vector<int>& perp) {
  OrthoReport rep;
  const int n = lat.poset.n;
  if (static_cast<int>(perp.size()) != n) {
    rep.ortho_failure = Diagnostic{"BadPerpShape", {}, "perp must map every element"};
    return rep;
  }
  for (int x = 0; x < n; ++x)
    if (perp[x] < 0 || perp[x] >= n) {
      rep.ortho_failure = Diagnostic{"ValueOutOfRange", {x}, "perp value out of range"};
      return rep;
    }

  for (int x = 0; x < n; ++x) {
    if (perp[perp[x]] != x) {
      rep.ortho_failure = Diagnostic{"NotInvolutive", {x}, "perp(perp(x)) != x"};
      return rep;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lat.poset.le(x, y) && !lat.poset.le(perp[y], perp[x])) {
        rep.ortho_failure = Diagnostic{"NotAntitone", {x, y}, "x <= y but not perp(y) <= perp(x)"};
        return rep;
      }
  for (int x = 0; x < n; ++x) {
    if (lat.meet(x, perp[x]) != lat.poset.bottom || lat.join(x, perp[x]) != lat.poset.top) {
      rep.ortho_failure = Diagnostic{"NotComplemented", {x}, "x ^ perp(x) != 0 or x v perp(x) != 1"};
      return rep;
    }
  }
  rep.ortholattice = true;

  rep.orthomodular = true;
  for (int x = 0; x < n && rep.orthomodular; ++x)
    for (int y = 0; y < n; ++y) {
      if (!lat.poset.le(x, y)) continue;
      if (lat.join(x, lat.meet(perp[x], y)) != y) {
        rep.orthomodular = false;
        rep.orthomodular_witness = {x, y};
        break;
      }
    }
  return rep;
}

Result<OrthoLattice> make_ortholattice(const BoundedLattice& lat, std::vector<int> perp) {
  OrthoReport rep = validate_ortholattice(lat, perp);
  if (!rep.ortholattice) return *rep.ortho_failure;
  OrthoLattice o;
  o.lattice = lat;
  o.perp = std::move(perp);
  o.orthomodular = rep.orthomodular;
  return o;
}

namespace {

bool antitone_consistent(const FinitePoset& p, const std::vector<int>& sec,
                         const std::vector<int>& img) {
  for (std::size_t u = 0; u < sec.size(); ++u) {
    if (img[u] < 0) continue;
    for (std::size_t v = 0; v < sec.size(); ++v) {
      if (img[v] < 0) continue;
      if (p.le(sec[u], sec[v]) && !p.le(sec[img[v]], sec[img[u]])) return false;
    }
  }
  return true;
}

// Backtracking over antitone pairings x <-> y of the section.
void involution_search(const FinitePoset& p, const std::vector<int>& sec,
                       std::vector<int>& img, std::size_t i,
                       std::vector<std::vector<int>>& out, bool stop_at_first) {
  if (stop_at_first && !out.empty()) return;
  if (i == sec.size()) {
    std::vector<int> full(p.n, -1);
    for (std::size_t k = 0; k < sec.size(); ++k) full[sec[k]] = sec[img[k]];
    out.push_back(std::move(full));
    return;
  }
  if (img[i] >= 0) {
    involution_search(p, sec, img, i + 1, out, stop_at_first);
    return;
  }
  for (std::size_t j = i; j < sec.size(); ++j) {
    if (img[j] >= 0) continue;
    img[i] = static_cast<int>(j);  // pair i <-> j; j == i is a fixed point
    img[j] = static_cast<int>(i);
    if (antitone_consistent(p, sec, img))
      involution_search(p, sec, img, i + 1, out, stop_at_first);
    img[i] = -1;
    img[j] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> antitone_involutions_on(const FinitePoset& p,
                                                      const std::vector<int>& section) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(section.size(), -1);
  involution_search(p, section, img, 0, out, false);
  return out;
}

bool admits_antitone_involution(const FinitePoset& p) {
  std::vector<int> all(p.n);
  for (int i = 0; i < p.n; ++i) all[i] = i;
  std::vector<std::vector<int>> out;
  std::vector<int> img(all.size(), -1);
  involution_search(p, all, img, 0, out, true);
  return !out.empty();
}

}  // namespace balg
