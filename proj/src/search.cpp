#include "balg/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "balg/constructions.hpp"
#include "balg/involutions.hpp"
#include "balg/laws.hpp"

namespace balg {

namespace {

// ---------------------------------------------------------------- posets

std::string relation_canon(const Table& leq) {
  const int m = leq.size();
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::string best;
  do {
    std::string enc(static_cast<std::size_t>(m) * m, '\0');
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        enc[static_cast<std::size_t>(perm[i]) * m + perm[j]] =
            static_cast<char>(leq(i, j));
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Posets on m labeled points, one representative per isomorphism class,
// grown by repeatedly adding a maximal element over an order ideal.
std::vector<Table> interior_posets(int m) {
  std::vector<Table> cur{Table(0)};
  for (int k = 1; k <= m; ++k) {
    std::set<std::string> seen;
    std::vector<Table> next;
    for (const Table& r : cur) {
      const int sz = k - 1;
      for (unsigned mask = 0; mask < (1u << sz); ++mask) {
        bool ideal = true;
        for (int x = 0; x < sz && ideal; ++x) {
          if (!(mask >> x & 1)) continue;
          for (int y = 0; y < sz; ++y)
            if (r(y, x) && !(mask >> y & 1)) {
              ideal = false;
              break;
            }
        }
        if (!ideal) continue;
        Table r2(k);
        for (int i = 0; i < sz; ++i)
          for (int j = 0; j < sz; ++j) r2(i, j) = r(i, j);
        for (int i = 0; i < k; ++i) r2(i, i) = 1;
        for (int x = 0; x < sz; ++x)
          if (mask >> x & 1) r2(x, k - 1) = 1;
        if (seen.insert(relation_canon(r2)).second) next.push_back(std::move(r2));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Result<std::vector<FinitePoset>> enumerate_bounded_posets(int n) {
  if (n < 2 || n > 8)
    return Diagnostic{"SizeOutOfRange", {n}, "supported sizes are 2..8"};
  const int m = n - 2;

  std::vector<FinitePoset> out;
  for (const Table& r : interior_posets(m)) {
    // Relabel the interior along a linear extension: sorting by strict
    // down-set size works because u < v forces a strictly smaller down-set.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    auto downsize = [&](int v) {
      int c = 0;
      for (int u = 0; u < m; ++u)
        if (u != v && r(u, v)) ++c;
      return c;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return downsize(a) < downsize(b); });
    std::vector<int> pos(m);
    for (int i = 0; i < m; ++i) pos[order[i]] = i;

    Table leq(n);
    for (int i = 0; i < n; ++i) leq(i, i) = 1;
    for (int i = 0; i < n; ++i) {
      leq(0, i) = 1;
      leq(i, n - 1) = 1;
    }
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v)
        if (r(u, v)) leq(1 + pos[u], 1 + pos[v]) = 1;

    auto p = validate_finite_poset(leq, 0, n - 1);
    if (!p) throw std::logic_error("poset generator produced a non-poset");
    out.push_back(std::move(p).value());
  }

  std::sort(out.begin(), out.end(), [n](const FinitePoset& a, const FinitePoset& b) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.leq(i, j) != b.leq(i, j)) return a.leq(i, j) < b.leq(i, j);
    return false;
  });
  return out;
}

namespace {

// ---------------------------------------------------------------- search

using Clock = std::chrono::steady_clock;

struct ResolvedLaw {
  std::string name;
  Formula formula;
};

struct SearchParams {
  SearchSpec::Class cls = SearchSpec::Class::Lrpg;
  std::vector<ResolvedLaw> require, forbid;
  bool need_lattice = false;
  bool prefilter_involution = false;
  bool div_prop = false;
  bool dneg_prop = false;
  bool debug_no_prune = false;
  long max_models = -1;
  Clock::time_point deadline;
  bool has_deadline = false;
};

struct PosetCtx {
  FinitePoset p;
  std::vector<std::vector<int>> down;  // ascending candidate lists
  bool is_lattice = false;
  Table meet;
};

struct JobResult {
  std::vector<FoundModel> models;
  SearchCounts counts;
  bool aborted_budget = false;
  bool aborted_limit = false;
};

bool law_holds(const ResolvedLaw& law, const ModelOps& ops) {
  auto v = check_formula(law.formula, ops);
  // A law whose signature the model lacks cannot hold on it.
  return v.ok() && v.value().holds;
}

class PosetJob {
 public:
  PosetJob(const PosetCtx& ctx, const SearchParams& params, JobResult& out)
      : ctx_(ctx), par_(params), out_(out), n_(ctx.p.n) {
    mult_ = Table(n_);
    res_ = Table(n_);
    neg_.assign(n_, -1);
    neg_preimage_.assign(n_, -1);
    const int top = n_ - 1;
    for (int x = 0; x < n_; ++x) {
      mult_(x, 0) = 0;
      mult_(0, x) = 0;
      mult_(top, x) = x;
      mult_(x, top) = x;
    }
    // res columns for 0 and top never change: z/0 = 1 and z/1 = z.
    for (int z = 0; z < n_; ++z) {
      res_(z, 0) = top;
      res_(z, top) = z;
    }
    neg_[0] = top;
    neg_[top] = 0;
    neg_preimage_[top] = 0;
    neg_preimage_[0] = top;
  }

  void run() {
    if (par_.debug_no_prune)
      debug_fill(0, 0);
    else
      fill(1, 1);
  }

 private:
  bool stop() const {
    if (out_.aborted_budget || out_.aborted_limit) return true;
    if (par_.has_deadline && Clock::now() > par_.deadline) {
      out_.aborted_budget = true;
      return true;
    }
    return false;
  }

  // Greatest element of the bitmask set s, or -1.
  int greatest_of_mask(unsigned s) const {
    for (int g = 0; g < n_; ++g) {
      if (!(s >> g & 1)) continue;
      bool all = true;
      for (int x = 0; x < n_ && all; ++x)
        if ((s >> x & 1) && !ctx_.p.le(x, g)) all = false;
      if (all) return g;
    }
    return -1;
  }

  // Completes column y: derives its residuum slice, applies the column-local
  // div check, and keeps the partial negation extendable to an involution
  // when dneg is required. `owned` reports whether this column claimed the
  // preimage slot (for the unwind).
  bool column_checks(int y, bool& owned) {
    // Residuum existence: every {x : x*y <= z} needs a greatest element.
    for (int z = 0; z < n_; ++z) {
      unsigned s = 0;
      for (int x = 0; x < n_; ++x)
        if (ctx_.p.le(mult_(x, y), z)) s |= 1u << x;
      const int g = greatest_of_mask(s);
      if (g < 0) return false;
      res_(z, y) = g;
    }
    if (par_.div_prop) {
      // (z/y)*y = z ^ y, column-local form of the divisibility law
      for (int z = 0; z < n_; ++z)
        if (mult_(res_(z, y), y) != ctx_.meet(z, y)) return false;
    }
    const int w = res_(0, y);
    neg_[y] = w;
    owned = false;
    if (par_.dneg_prop) {
      // n must stay a partial involution: n(n(y)) = y where known,
      // injective, and consistent with columns that already map onto y.
      if ((neg_[w] != -1 && neg_[w] != y) ||
          (neg_preimage_[w] != -1 && neg_preimage_[w] != y) ||
          (neg_preimage_[y] != -1 && neg_preimage_[y] != w)) {
        neg_[y] = -1;
        return false;
      }
      if (neg_preimage_[w] == -1) {
        neg_preimage_[w] = y;
        owned = true;
      }
    }
    return true;
  }

  void undo_column(int y, bool owned) {
    if (owned) neg_preimage_[neg_[y]] = -1;
    neg_[y] = -1;
  }

  void fill(int yi, int xi) {
    if (stop()) return;
    if (yi == n_ - 1) {
      leaf();
      return;
    }
    if (xi == n_ - 1) {
      bool owned = false;
      if (!column_checks(yi, owned)) {
        ++out_.counts.partial_prunes;
        return;
      }
      fill(yi + 1, 1);
      undo_column(yi, owned);
      return;
    }

    const int y = yi, x = xi;
    bool any = false;
    for (int v : ctx_.down[y]) {  // candidates honor x*y <= y
      bool ok = true;
      // right monotonicity against every filled cell of this column
      for (int x2 = 0; x2 < x && ok; ++x2) {
        if (ctx_.p.le(x2, x) && !ctx_.p.le(mult_(x2, y), v)) ok = false;
        if (ctx_.p.le(x, x2) && !ctx_.p.le(v, mult_(x2, y))) ok = false;
      }
      if (!ok) continue;
      any = true;
      mult_(x, y) = v;
      fill(yi, xi + 1);
      if (stop()) return;
    }
    if (!any) ++out_.counts.partial_prunes;
  }

  // Debug mode: only the identity row/column is forced (it is part of the
  // groupoid definition); every other cell ranges over the whole universe
  // and all checking happens at the leaf through the public validators.
  void debug_fill(int x, int y) {
    if (stop()) return;
    if (x == n_ - 1) {
      debug_leaf();
      return;
    }
    int nx = x, ny = y + 1;
    if (ny == n_ - 1) {
      ny = 0;
      nx = x + 1;
    }
    for (int v = 0; v < n_; ++v) {
      mult_(x, y) = v;
      debug_fill(nx, ny);
      if (stop()) return;
    }
  }

  void debug_leaf() {
    ++out_.counts.leaves;
    auto res = residuum_from_mult(ctx_.p, mult_);
    if (!res) return;
    auto g = validate_lrpg(ctx_.p, mult_, res.value());
    if (!g) return;
    emit(g.value());
  }

  void leaf() {
    ++out_.counts.leaves;
    // No trust in search-time pruning: run the public validator.
    auto g = validate_lrpg(ctx_.p, mult_, res_);
    if (!g)
      throw std::logic_error("search produced an invalid groupoid: " + g.error().message());
    emit(g.value());
  }

  void emit(const LeftResiduatedGroupoid& g) {
    ModelOps ops = ops_for(g);
    for (const auto& law : par_.require)
      if (!law_holds(law, ops)) return;
    for (const auto& law : par_.forbid)
      if (law_holds(law, ops)) return;

    FoundModel fm;
    fm.groupoid = g;
    if (par_.cls == SearchSpec::Class::Basic) {
      BasicTables t = basic_of_groupoid(g);
      auto a = validate_basic_algebra(t.n, t.oplus, t.neg);
      if (!a)
        throw std::logic_error(
            "div+jk groupoid yielded an invalid basic algebra: " + a.error().message());
      fm.canon = canonical_form(a.value());
      fm.basic = std::move(a).value();
    } else {
      fm.canon = canonical_form(g);
    }
    if (!local_canon_.insert(fm.canon).second) return;

    out_.models.push_back(std::move(fm));
    ++out_.counts.emitted;
    if (par_.max_models >= 0 &&
        static_cast<long>(out_.models.size()) >= par_.max_models)
      out_.aborted_limit = true;
  }

  const PosetCtx& ctx_;
  const SearchParams& par_;
  JobResult& out_;
  int n_;
  Table mult_, res_;
  std::vector<int> neg_, neg_preimage_;
  bool neg_preimage_set_ = false;
  std::set<std::string> local_canon_;
};

Result<std::vector<ResolvedLaw>> resolve_laws(const std::vector<std::string>& names,
                                              const SearchSpec& spec) {
  std::vector<ResolvedLaw> out;
  for (const auto& name : names) {
    auto f = catalog_law(name);
    if (f) {
      out.push_back({name, std::move(f).value()});
      continue;
    }
    bool found = false;
    for (const auto& [n2, f2] : spec.extra_laws)
      if (n2 == name) {
        out.push_back({name, f2});
        found = true;
        break;
      }
    if (!found) return Diagnostic{"UnknownLaw", {}, "no law named '" + name + "'"};
  }
  return out;
}

bool has_law(const std::vector<ResolvedLaw>& laws, const char* name) {
  for (const auto& l : laws)
    if (l.name == name) return true;
  return false;
}

}  // namespace

Result<SearchResult> search_models(const SearchSpec& spec) {
  const auto t0 = Clock::now();

  SearchParams par;
  par.cls = spec.cls;
  par.debug_no_prune = spec.debug_no_prune;
  par.max_models = spec.max_models;
  if (spec.budget_seconds > 0) {
    par.has_deadline = true;
    par.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(spec.budget_seconds));
  }

  auto req = resolve_laws(spec.require, spec);
  if (!req) return req.error();
  par.require = std::move(req).value();
  if (spec.cls == SearchSpec::Class::Basic) {
    // Basic algebras are exactly the div+jk groupoids.
    for (const char* name : {"div", "jk"})
      if (!has_law(par.require, name))
        par.require.push_back({name, catalog_law(name).value()});
  }
  auto fb = resolve_laws(spec.forbid, spec);
  if (!fb) return fb.error();
  par.forbid = std::move(fb).value();

  const int n = spec.fixed_poset ? spec.fixed_poset->n : spec.size;
  if (n < 2 || n > 8)
    return Diagnostic{"SizeOutOfRange", {n}, "supported sizes are 2..8"};
  if (spec.fixed_poset && spec.size != 0 && spec.size != n)
    return Diagnostic{"SizeMismatch", {spec.size, n}, "spec size differs from the poset size"};

  const bool req_div = has_law(par.require, "div");
  const bool req_jk = has_law(par.require, "jk");
  const bool req_dneg = has_law(par.require, "dneg");
  const bool req_w = has_law(par.require, "w");
  const bool req_cap = has_law(par.require, "cap");
  const bool req_contra = has_law(par.require, "contraposition");
  const bool req_skew = has_law(par.require, "skew_div");

  bool lattice_ops = false;
  for (const auto& l : par.require) lattice_ops |= formula_uses_lattice_ops(l.formula);

  if (!par.debug_no_prune) {
    // div forces a meet-semilattice (finite and bounded, hence a lattice);
    // dneg+w forces a join-semilattice with an antitone involution.
    par.need_lattice = req_div || req_skew || (req_dneg && req_w) || lattice_ops;
    // Sound only when the required laws make negation itself antitone;
    // dneg alone does not (there are dneg models on non-self-dual posets).
    par.prefilter_involution =
        req_jk || req_contra || req_skew || (req_dneg && (req_w || req_cap));
    par.div_prop = req_div || req_skew;
    par.dneg_prop = req_dneg || req_jk || req_contra || req_skew;
  }
  if (par.div_prop && !par.need_lattice) par.div_prop = false;  // needs meet tables

  SearchResult result;

  std::vector<PosetCtx> work;
  {
    std::vector<FinitePoset> posets;
    if (spec.fixed_poset) {
      posets.push_back(*spec.fixed_poset);
    } else {
      auto ps = enumerate_bounded_posets(n);
      if (!ps) return ps.error();
      posets = std::move(ps).value();
    }
    result.counts.posets_enumerated = static_cast<long>(posets.size());

    for (auto& p : posets) {
      PosetCtx ctx;
      ctx.p = std::move(p);
      auto lat = meets_joins(ctx.p);
      ctx.is_lattice = lat.ok();
      if (ctx.is_lattice) ctx.meet = lat.value().meet;
      if (par.need_lattice && !ctx.is_lattice) continue;
      if (par.prefilter_involution && !admits_antitone_involution(ctx.p)) continue;
      ctx.down.resize(ctx.p.n);
      for (int y = 0; y < ctx.p.n; ++y) ctx.down[y] = ctx.p.down_set(y);
      work.push_back(std::move(ctx));
    }
  }
  result.counts.posets_searched = static_cast<long>(work.size());

  const int jobs = std::max(1, spec.jobs);
  std::vector<JobResult> outcomes(work.size());
  bool skipped_posets = false;

  if (jobs == 1 || work.size() <= 1) {
    long found_so_far = 0;
    for (std::size_t i = 0; i < work.size(); ++i) {
      JobResult& jr = outcomes[i];
      if (par.max_models >= 0 && found_so_far >= par.max_models) {
        skipped_posets = true;
        break;
      }
      SearchParams local = par;
      if (par.max_models >= 0) local.max_models = par.max_models - found_so_far;
      PosetJob job(work[i], local, jr);
      job.run();
      found_so_far += static_cast<long>(jr.models.size());
      if (jr.aborted_budget) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> budget_hit{false};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= work.size() || budget_hit.load()) return;
        PosetJob job(work[i], par, outcomes[i]);
        job.run();
        if (outcomes[i].aborted_budget) budget_hit.store(true);
      }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  // Deterministic merge in poset order, then a coordinator-side dedup.
  std::set<std::string> seen;
  bool truncated = skipped_posets;
  bool budget = false;
  for (auto& jr : outcomes) {
    budget |= jr.aborted_budget;
    truncated |= jr.aborted_limit;
    result.counts.partial_prunes += jr.counts.partial_prunes;
    result.counts.leaves += jr.counts.leaves;
    for (auto& m : jr.models) {
      if (!seen.insert(m.canon).second) continue;
      if (par.max_models >= 0 &&
          static_cast<long>(result.models.size()) >= par.max_models) {
        truncated = true;
        break;
      }
      result.models.push_back(std::move(m));
    }
  }
  result.counts.emitted = static_cast<long>(result.models.size());
  result.exhausted = !budget && !truncated;
  result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return result;
}

Result<SearchSpec, std::string> parse_search_spec(std::string_view text) {
  SearchSpec spec;
  std::size_t pos = 0;
  int lineno = 0;
  auto split_list = [](std::string_view v) {
    std::vector<std::string> out;
    std::size_t p = 0;
    while (p <= v.size()) {
      std::size_t c = v.find(',', p);
      if (c == std::string_view::npos) c = v.size();
      std::string item(v.substr(p, c - p));
      std::erase(item, ' ');
      std::erase(item, '\t');
      if (!item.empty()) out.push_back(item);
      p = c + 1;
      if (c == v.size()) break;
    }
    return out;
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
      pos = end + 1;
      if (end == text.size()) break;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      return "line " + std::to_string(lineno) + ": expected key=value";
    std::string key(line.substr(a, eq - a));
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string_view val = line.substr(eq + 1);
    std::size_t b = val.find_first_not_of(" \t");
    val = b == std::string_view::npos ? std::string_view{} : val.substr(b);
    std::string sval(val);
    while (!sval.empty() && (sval.back() == ' ' || sval.back() == '\t' || sval.back() == '\r'))
      sval.pop_back();

    if (key == "size") spec.size = std::atoi(sval.c_str());
    else if (key == "class") {
      if (sval == "lrpg") spec.cls = SearchSpec::Class::Lrpg;
      else if (sval == "basic") spec.cls = SearchSpec::Class::Basic;
      else return "line " + std::to_string(lineno) + ": class must be lrpg or basic";
    } else if (key == "require") spec.require = split_list(sval);
    else if (key == "forbid") spec.forbid = split_list(sval);
    else if (key == "limit") spec.max_models = std::atol(sval.c_str());
    else if (key == "budget") spec.budget_seconds = std::atof(sval.c_str());
    else if (key == "jobs") spec.jobs = std::atoi(sval.c_str());
    else if (key == "poset") spec.poset_path = sval;
    else if (key == "laws") spec.laws_path = sval;
    else return "line " + std::to_string(lineno) + ": unknown key '" + key + "'";

    pos = end + 1;
    if (end == text.size()) break;
  }
  return spec;
}

}  // namespace balg
