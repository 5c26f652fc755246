#include "balg/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace balg {

namespace {

// All permutations of {0..n-1} fixing lo and hi, as old->new maps.
std::vector<std::vector<int>> stabilizer_perms(int n, int lo, int hi) {
  std::vector<int> free_idx;
  for (int i = 0; i < n; ++i)
    if (i != lo && i != hi) free_idx.push_back(i);
  std::vector<int> target = free_idx;
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> perm(n);
    perm[lo] = lo;
    perm[hi] = hi;
    for (std::size_t k = 0; k < free_idx.size(); ++k) perm[free_idx[k]] = target[k];
    out.push_back(perm);
  } while (std::next_permutation(target.begin(), target.end()));
  return out;
}

void append_relabeled(std::string& enc, const Table& t, const std::vector<int>& perm,
                      const std::vector<int>& inv, bool values_are_elements) {
  const int n = t.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = t(inv[i], inv[j]);
      enc.push_back(static_cast<char>(values_are_elements ? perm[v] : v));
    }
}

void append_relabeled(std::string& enc, const std::vector<int>& u,
                      const std::vector<int>& perm, const std::vector<int>& inv) {
  const int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i) enc.push_back(static_cast<char>(perm[u[inv[i]]]));
}

template <typename EncodeFn>
std::string minimize(int n, int lo, int hi, EncodeFn&& encode) {
  std::string best;
  for (const auto& perm : stabilizer_perms(n, lo, hi)) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string enc;
    encode(enc, perm, inv);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

}  // namespace

std::string canonical_form(const BasicAlgebraModel& a) {
  std::string out = minimize(a.n, 0, a.one(), [&](std::string& enc, const auto& perm, const auto& inv) {
    append_relabeled(enc, a.oplus, perm, inv, true);
    append_relabeled(enc, a.neg, perm, inv);
  });
  return "basic:" + out;
}

std::string canonical_form(const LeftResiduatedGroupoid& g) {
  std::string out = minimize(g.poset.n, g.poset.bottom, g.poset.top,
                             [&](std::string& enc, const auto& perm, const auto& inv) {
                               append_relabeled(enc, g.poset.leq, perm, inv, false);
                               append_relabeled(enc, g.mult, perm, inv, true);
                               append_relabeled(enc, g.res, perm, inv, true);
                             });
  return "lrpg:" + out;
}

std::string canonical_form(const ContrapositionalGroupoid& c) {
  std::string out = minimize(c.poset.n, c.poset.bottom, c.poset.top,
                             [&](std::string& enc, const auto& perm, const auto& inv) {
                               append_relabeled(enc, c.poset.leq, perm, inv, false);
                               append_relabeled(enc, c.mult, perm, inv, true);
                               append_relabeled(enc, c.imp, perm, inv, true);
                             });
  return "cpg:" + out;
}

bool is_isomorphic(const BasicAlgebraModel& a, const BasicAlgebraModel& b) {
  return a.n == b.n && canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const LeftResiduatedGroupoid& a, const LeftResiduatedGroupoid& b) {
  return a.poset.n == b.poset.n && canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const ContrapositionalGroupoid& a, const ContrapositionalGroupoid& b) {
  return a.poset.n == b.poset.n && canonical_form(a) == canonical_form(b);
}

std::string canonical_digest(const std::string& canon) {
  // FNV-1a, rendered as hex; plenty for summaries.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hexd = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexd[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace balg
