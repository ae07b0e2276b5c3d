#include "gridrig/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gridrig/errors.hpp"
#include "gridrig/parity_union_find.hpp"

namespace gridrig {

namespace {

// pair code: 0 no edge, +1 / -1 a single edge of that gain, 2 both gains
struct Profile {
  std::size_t n = 0;
  std::vector<int> pair;
  std::vector<bool> loop;
  std::vector<int> degree;

  int at(int i, int j) const { return pair[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)]; }
};

Profile profile_of(const SignedQuotientGraph& q) {
  Profile p;
  p.n = q.orbit_count();
  p.pair.assign(p.n * p.n, 0);
  p.loop.assign(p.n, false);
  p.degree.assign(p.n, 0);
  for (const auto& e : q.edges()) {
    ++p.degree[static_cast<std::size_t>(e.u)];
    if (e.is_loop()) {
      p.loop[static_cast<std::size_t>(e.u)] = true;
      continue;
    }
    ++p.degree[static_cast<std::size_t>(e.v)];
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      int& c = p.pair[static_cast<std::size_t>(x) * p.n + static_cast<std::size_t>(y)];
      c = c == 0 ? e.gain : 2;
    }
  }
  return p;
}

bool extend(const Profile& a, const Profile& b, std::vector<int>& perm, std::vector<bool>& used, std::size_t depth,
            ParityUnionFind uf, SwitchingIsomorphism& out) {
  if (depth == a.n) {
    out.perm = perm;
    out.signs.resize(a.n);
    for (std::size_t i = 0; i < a.n; ++i) out.signs[i] = uf.parity_of(i);
    return true;
  }
  const int i = static_cast<int>(depth);
  for (std::size_t t = 0; t < b.n; ++t) {
    if (used[t] || a.loop[depth] != b.loop[t] || a.degree[depth] != b.degree[t]) continue;
    ParityUnionFind next = uf;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      const int ca = a.at(i, j);
      const int cb = b.at(static_cast<int>(t), perm[static_cast<std::size_t>(j)]);
      if ((ca == 0) != (cb == 0) || (ca == 2) != (cb == 2)) {
        ok = false;
      } else if (ca == 1 || ca == -1) {
        // switched gain s_i s_j ca must equal cb
        ok = next.unite(depth, static_cast<std::size_t>(j), ca * cb);
      }
    }
    if (!ok) continue;
    perm[depth] = static_cast<int>(t);
    used[t] = true;
    if (extend(a, b, perm, used, depth + 1, next, out)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<SwitchingIsomorphism> find_switching_isomorphism(const SignedQuotientGraph& a,
                                                               const SignedQuotientGraph& b) {
  if (a.orbit_count() != b.orbit_count() || a.edge_count() != b.edge_count() || a.loop_count() != b.loop_count()) {
    return std::nullopt;
  }
  const Profile pa = profile_of(a);
  const Profile pb = profile_of(b);
  std::vector<int> perm(pa.n, -1);
  std::vector<bool> used(pa.n, false);
  SwitchingIsomorphism out;
  if (!extend(pa, pb, perm, used, 0, ParityUnionFind(pa.n), out)) return std::nullopt;
  return out;
}

bool switching_isomorphic(const SignedQuotientGraph& a, const SignedQuotientGraph& b) {
  return find_switching_isomorphism(a, b).has_value();
}

CanonicalForm canonical_form(const SignedQuotientGraph& q) {
  const std::size_t n = q.orbit_count();
  if (n > kMaxCanonicalOrbits) throw SizeLimitExceeded("canonical form refuses more than 8 orbits");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best;
  bool first = true;
  CanonicalForm current;
  current.reserve(q.edge_count());
  const std::size_t switchings = n == 0 ? 1 : (std::size_t{1} << (n - 1));
  do {
    for (std::size_t s = 0; s < switchings; ++s) {
      current.clear();
      for (const auto& e : q.edges()) {
        int u = perm[static_cast<std::size_t>(e.u)];
        int v = perm[static_cast<std::size_t>(e.v)];
        int g = e.gain;
        if (!e.is_loop()) {
          // orbit 0 is never switched; bit k-1 switches orbit k
          const int su = e.u == 0 ? 1 : ((s >> (e.u - 1)) & 1u ? -1 : 1);
          const int sv = e.v == 0 ? 1 : ((s >> (e.v - 1)) & 1u ? -1 : 1);
          g *= su * sv;
        }
        if (u > v) std::swap(u, v);
        current.push_back({u, v, g});
      }
      std::sort(current.begin(), current.end());
      if (first || current < best) {
        best = current;
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SignedQuotientGraph from_canonical(std::size_t orbits, const CanonicalForm& form) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < orbits; ++i) names.push_back(std::to_string(i));
  std::vector<GainEdge> edges;
  for (std::size_t k = 0; k < form.size(); ++k) {
    edges.push_back({"e" + std::to_string(k), form[k][0], form[k][1], form[k][2]});
  }
  return SignedQuotientGraph(std::move(names), std::move(edges));
}

}  // namespace gridrig
