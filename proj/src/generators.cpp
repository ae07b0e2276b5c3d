#include "gridrig/generators.hpp"

#include <algorithm>
#include <set>

#include "gridrig/errors.hpp"
#include "gridrig/realize.hpp"
#include "gridrig/rigidity.hpp"
#include "gridrig/sparsity.hpp"

namespace gridrig {

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

int random_gain(Rng& rng) { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; }

std::string fresh_name(const SignedQuotientGraph& q, const std::string& prefix, const std::set<std::string>& taken = {}) {
  for (int k = 0;; ++k) {
    std::string name = prefix + std::to_string(k);
    if (!q.find_orbit(name) && !q.find_edge(name) && !taken.count(name)) return name;
  }
}

SignedQuotientGraph relabelled_two_k3(const std::vector<std::string>& names, const std::vector<std::string>& ids) {
  const auto base = frozen_two_k3_graph();
  std::vector<GainEdge> edges = base.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].id = ids[i];
  return SignedQuotientGraph(names, std::move(edges));
}

}  // namespace

Move random_move(Rng& rng, const SignedQuotientGraph& q, Mode mode) {
  std::set<std::string> taken;
  auto name = [&](const char* prefix) {
    auto n = fresh_name(q, prefix, taken);
    taken.insert(n);
    return n;
  };
  const int kinds = mode == Mode::kAnti ? 5 : 4;
  const int kind = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
  const auto& orbits = q.orbits();
  if (orbits.empty()) throw InvalidInput("graph has no orbits");
  if (kind == 0) {
    H1Move m;
    m.orbit = name("v");
    std::vector<std::string> targets = orbits;
    if (mode == Mode::kSym) targets.push_back(m.orbit);
    const auto& t1 = pick(rng, targets);
    auto t2 = pick(rng, orbits);
    m.edges[0] = {name("e"), t1, t1 == m.orbit ? -1 : random_gain(rng)};
    m.edges[1] = {name("e"), t2, t2 == t1 ? -m.edges[0].gain : random_gain(rng)};
    m.variant = t1 == m.orbit ? 'c' : (t1 == t2 ? 'b' : 'a');
    return m;
  }
  if (kind == 1) {
    H2Move m;
    m.orbit = name("v");
    if (q.edges().empty()) throw InvalidInput("no edge to subdivide");
    const auto& e = pick(rng, q.edges());
    m.removed = e.id;
    const int g1 = random_gain(rng);
    m.split = {Attachment{name("e"), q.orbit_name(e.u), g1}, Attachment{name("e"), q.orbit_name(e.v), g1 * e.gain}};
    const auto& z = pick(rng, orbits);
    int g3 = random_gain(rng);
    if (z == m.split[0].to) g3 = -m.split[0].gain;
    if (z == m.split[1].to) g3 = -m.split[1].gain;
    m.extra = {name("e"), z, g3};
    m.variant = e.is_loop() ? 'c' : (z == m.split[0].to || z == m.split[1].to ? 'b' : 'a');
    return m;
  }
  if (kind == 2) {
    VertexToK4Move m;
    const int v = static_cast<int>(std::uniform_int_distribution<std::size_t>(0, q.orbit_count() - 1)(rng));
    m.orbit = q.orbit_name(v);
    for (auto& k : m.k4) k = name("v");
    for (auto& id : m.k4_edges) id = name("e");
    std::uniform_int_distribution<int> slot(0, 3);
    for (auto i : q.incident_edges(v)) {
      const auto& e = q.edges()[i];
      if (e.is_loop()) {
        m.loop = K4Loop{e.id, m.k4[static_cast<std::size_t>(slot(rng))], m.k4[static_cast<std::size_t>(slot(rng))]};
      } else {
        m.redistribute[e.id] = slot(rng);
      }
    }
    return m;
  }
  if (kind == 3) {
    EdgeToK3Move m;
    std::vector<std::size_t> trivial;
    for (std::size_t i = 0; i < q.edge_count(); ++i) {
      if (!q.edges()[i].is_loop() && q.edges()[i].gain == 1) trivial.push_back(i);
    }
    if (trivial.empty()) throw InvalidInput("no trivial-gain edge to split along");
    const auto& via = q.edges()[pick(rng, trivial)];
    const int v = std::bernoulli_distribution(0.5)(rng) ? via.u : via.v;
    m.orbit = q.orbit_name(v);
    m.via = via.id;
    m.fresh = {name("v"), name("v")};
    m.new_edges = {name("e"), name("e"), name("e")};
    std::uniform_int_distribution<int> side(0, 1);
    for (auto i : q.incident_edges(v)) {
      if (q.edges()[i].id != via.id) m.assign[q.edges()[i].id] = side(rng);
    }
    return m;
  }
  std::vector<std::string> names{name("v"), name("v"), name("v")};
  std::vector<std::string> ids;
  for (int i = 0; i < 5; ++i) ids.push_back(name("e"));
  K3JoinMove m{relabelled_two_k3(names, ids), JoinEdge{name("e"), pick(rng, orbits), pick(rng, names), random_gain(rng)},
               false};
  return m;
}

SignedQuotientGraph random_quotient(Rng& rng, std::size_t max_orbits, std::size_t max_edges, bool allow_loops) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_orbits))(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<GainEdge> slots;
  const int ni = static_cast<int>(n);
  for (int i = 0; i < ni; ++i) {
    if (allow_loops) slots.push_back({"", i, i, -1});
    for (int j = i + 1; j < ni; ++j) {
      slots.push_back({"", i, j, 1});
      slots.push_back({"", i, j, -1});
    }
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, std::min(max_edges, slots.size()))(rng);
  slots.resize(m);
  std::sort(slots.begin(), slots.end(), [](const GainEdge& a, const GainEdge& b) {
    return std::tie(a.u, a.v, a.gain) < std::tie(b.u, b.v, b.gain);
  });
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i].id = "e" + std::to_string(i);
  return SignedQuotientGraph(std::move(names), std::move(slots));
}

std::optional<std::pair<Move, SignedQuotientGraph>> random_forward_move(Rng& rng, const SignedQuotientGraph& q,
                                                                        Mode mode, int tries) {
  for (int t = 0; t < tries; ++t) {
    try {
      Move m = random_move(rng, q, mode);
      if (!move_allowed(m, mode)) continue;
      SignedQuotientGraph next = apply_move(q, m);
      if (!is_gain_tight(next, mode == Mode::kAnti)) continue;
      return std::make_pair(std::move(m), std::move(next));
    } catch (const InvalidInput&) {
      continue;
    }
  }
  return std::nullopt;
}

SignedQuotientGraph random_tight_graph(Rng& rng, std::size_t max_orbits, Mode mode) {
  SignedQuotientGraph q = mode == Mode::kSym
                              ? SignedQuotientGraph({"v0"}, std::vector<GainEdge>{{"e0", 0, 0, -1}})
                              : relabelled_two_k3({"v0", "v1", "v2"}, {"e0", "e1", "e2", "e3", "e4"});
  const std::size_t lo = q.orbit_count();
  if (max_orbits <= lo) return q;
  const std::size_t target = std::uniform_int_distribution<std::size_t>(lo, max_orbits)(rng);
  for (int guard = 0; q.orbit_count() < target && guard < 64; ++guard) {
    auto step = random_forward_move(rng, q, mode);
    if (step && step->second.orbit_count() <= max_orbits) q = std::move(step->second);
  }
  return q;
}

std::optional<SymmetricFramework> random_framework(Rng& rng, const SignedQuotientGraph& q, const QuadNorm& norm,
                                                   long grid, int retries) {
  std::uniform_int_distribution<long> coord(-grid, grid);
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<Vec2> reps;
    bool on_mirror = false;
    for (std::size_t i = 0; i < q.orbit_count(); ++i) {
      const long x = coord(rng);
      const long y = coord(rng);
      reps.push_back(make_vec(x, y));
      on_mirror = on_mirror || norm.normalize(reps.back())[0] == 0;
    }
    if (on_mirror) continue;
    SymmetricFramework f = SymmetricFramework::from_representatives(q, norm, std::move(reps));
    if (!validate_symmetric(f).valid) continue;
    if (std::holds_alternative<IllPositionedEdges>(colour_edges(f))) continue;
    return f;
  }
  return std::nullopt;
}

SymmetricFramework random_corpus_framework(Rng& rng, std::size_t max_orbits, const QuadNorm& norm) {
  for (;;) {
    const int kind = std::uniform_int_distribution<int>(0, 4)(rng);
    SignedQuotientGraph q;
    if (kind == 0) {
      q = random_quotient(rng, max_orbits, 2 * max_orbits + 1);
    } else if (kind == 1 || kind == 3 || max_orbits < 3) {
      q = random_tight_graph(rng, max_orbits, Mode::kSym);
    } else {
      q = random_tight_graph(rng, max_orbits, Mode::kAnti);
    }
    if (kind < 3) {
      if (auto f = random_framework(rng, q, norm)) return std::move(*f);
      continue;
    }
    // Rigid placements are rare under uniform sampling, so these kinds
    // resample a few times looking for one: kind 3 adds an edge
    // (|E0| = 2|V0|) and hunts for infinitesimal rigidity, kind 4 hunts for
    // anti-symmetric isostaticity. Plain isostaticity is never hunted: the F2
    // class always has an even number of bars, so it cannot be a spanning tree.
    if (kind == 3) {
      std::vector<GainEdge> edges = q.edges();
      const int n = static_cast<int>(q.orbit_count());
      std::uniform_int_distribution<int> pick_orbit(0, n - 1);
      const int u = pick_orbit(rng);
      const int v = pick_orbit(rng);
      edges.push_back({fresh_name(q, "e"), std::min(u, v), std::max(u, v), u == v ? -1 : random_gain(rng)});
      try {
        q = SignedQuotientGraph(q.orbits(), std::move(edges));
      } catch (const InvalidInput&) {
        continue;
      }
    }
    std::optional<SymmetricFramework> last;
    for (int attempt = 0; attempt < 24; ++attempt) {
      auto f = random_framework(rng, q, norm);
      if (!f) break;
      const auto report = rigidity_report(*f);
      if (kind == 3 ? report.inf_rigid : report.anti_isostatic) return std::move(*f);
      last = std::move(f);
    }
    if (last) return std::move(*last);
  }
}

CrosscheckSummary run_crosscheck(std::size_t cases, std::size_t max_orbits, std::uint64_t seed, const QuadNorm& norm) {
  Rng rng(seed);
  CrosscheckSummary s;
  for (std::size_t i = 0; i < cases; ++i) {
    SymmetricFramework f = random_corpus_framework(rng, max_orbits, norm);
    const auto rec = crosscheck(f);
    ++s.cases;
    s.sym_isostatic += rec.report.sym_isostatic;
    s.anti_isostatic += rec.report.anti_isostatic;
    s.inf_rigid += rec.report.inf_rigid;
    s.isostatic += rec.report.isostatic;
    if (rec.agree()) {
      ++s.agreements;
    } else {
      s.failures.push_back({i, std::move(f), rec.disagreements});
    }
  }
  return s;
}

}  // namespace gridrig
