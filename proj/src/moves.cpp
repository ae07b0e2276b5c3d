#include "gridrig/moves.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "gridrig/errors.hpp"
#include "gridrig/isomorphism.hpp"
#include "gridrig/parity_union_find.hpp"
#include "gridrig/sparsity.hpp"

namespace gridrig {

namespace {

// Name-based working copy; building the SignedQuotientGraph re-validates everything.
struct Draft {
  std::vector<std::string> orbits;
  std::vector<NamedGainEdge> edges;

  explicit Draft(const SignedQuotientGraph& q) : orbits(q.orbits()) {
    for (const auto& e : q.edges()) edges.push_back({e.id, q.orbit_name(e.u), q.orbit_name(e.v), e.gain});
  }

  SignedQuotientGraph build(const std::string& context) const {
    try {
      return SignedQuotientGraph(orbits, edges);
    } catch (const InvalidInput& err) {
      throw InvalidInput(context + ": result is not a valid signed quotient graph (" + err.what() + ")");
    }
  }

  void remove_orbit(const std::string& name) { orbits.erase(std::find(orbits.begin(), orbits.end(), name)); }
};

[[noreturn]] void reject(const std::string& move, const std::string& clause) {
  throw InvalidInput(move + ": " + clause);
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

SignedQuotientGraph apply_h1(const SignedQuotientGraph& q, const H1Move& m) {
  const std::string name = std::string("H1") + m.variant;
  if (m.variant != 'a' && m.variant != 'b' && m.variant != 'c') reject("H1", "variant must be a, b or c");
  if (q.find_orbit(m.orbit)) reject(name, "orbit '" + m.orbit + "' already exists");
  int loops = 0;
  for (const auto& a : m.edges) {
    if (a.to == m.orbit) {
      ++loops;
      if (a.gain != -1) reject(name, "the loop at the new orbit must have gain -1");
    } else if (!q.find_orbit(a.to)) {
      reject(name, "attachment target '" + a.to + "' is not an orbit");
    }
  }
  if (loops == 2) reject(name, "the two new edges must not both be loops");
  char actual = 'a';
  if (loops == 1) {
    actual = 'c';
  } else if (m.edges[0].to == m.edges[1].to) {
    actual = 'b';
    if (m.edges[0].gain == m.edges[1].gain) reject(name, "parallel new edges need distinct gains");
  }
  if (actual != m.variant) reject(name, std::string("the attachments describe an H1") + actual + " move");
  Draft d(q);
  d.orbits.push_back(m.orbit);
  for (const auto& a : m.edges) d.edges.push_back({a.id, m.orbit, a.to, a.gain});
  return d.build(name);
}

SignedQuotientGraph apply_h2(const SignedQuotientGraph& q, const H2Move& m) {
  const std::string name = std::string("H2") + m.variant;
  if (m.variant != 'a' && m.variant != 'b' && m.variant != 'c') reject("H2", "variant must be a, b or c");
  if (q.find_orbit(m.orbit)) reject(name, "orbit '" + m.orbit + "' already exists");
  const auto idx = q.find_edge(m.removed);
  if (!idx) reject(name, "removed edge '" + m.removed + "' does not exist");
  const auto& e = q.edges()[*idx];
  const std::string& u = q.orbit_name(e.u);
  const std::string& v = q.orbit_name(e.v);
  // Z2 gains are their own inverses, so the stored orientation of the removed edge is irrelevant
  const bool forward = m.split[0].to == u && m.split[1].to == v;
  const bool backward = m.split[0].to == v && m.split[1].to == u;
  if (!forward && !backward) {
    reject(name, "split edges must go to the removed edge's endpoints");
  }
  if (m.split[0].gain * m.split[1].gain != e.gain) reject(name, "split gains must multiply to the removed gain");
  if (m.extra.to == m.orbit || !q.find_orbit(m.extra.to)) reject(name, "third edge must join an existing orbit");
  char actual = 'a';
  if (e.is_loop()) {
    actual = 'c';
  } else if (m.extra.to == u || m.extra.to == v) {
    actual = 'b';
  }
  if (actual != m.variant) reject(name, std::string("the edges describe an H2") + actual + " move");
  // 2-cycles among the new edges must be unbalanced, i.e. parallels differ in gain
  std::vector<Attachment> fresh{m.split[0], m.split[1], m.extra};
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    for (std::size_t j = i + 1; j < fresh.size(); ++j) {
      if (fresh[i].to == fresh[j].to && fresh[i].gain == fresh[j].gain) {
        reject(name, "new edges '" + fresh[i].id + "' and '" + fresh[j].id + "' form a balanced 2-cycle");
      }
    }
  }
  Draft d(q);
  d.edges.erase(d.edges.begin() + static_cast<std::ptrdiff_t>(*idx));
  d.orbits.push_back(m.orbit);
  for (const auto& a : fresh) d.edges.push_back({a.id, m.orbit, a.to, a.gain});
  return d.build(name);
}

void check_new_names(const SignedQuotientGraph& q, const std::string& replaced, const std::vector<std::string>& names,
                     const std::string& move) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) reject(move, "new orbit name '" + n + "' is repeated");
    if (n != replaced && q.find_orbit(n)) reject(move, "new orbit name '" + n + "' already exists");
  }
}

SignedQuotientGraph apply_k4(const SignedQuotientGraph& q, const VertexToK4Move& m) {
  const std::string name = "VertexToK4";
  const auto v = q.find_orbit(m.orbit);
  if (!v) reject(name, "orbit '" + m.orbit + "' does not exist");
  check_new_names(q, m.orbit, {m.k4.begin(), m.k4.end()}, name);
  std::set<std::string> expected;
  std::optional<std::size_t> old_loop;
  for (auto i : q.incident_edges(*v)) {
    if (q.edges()[i].is_loop()) {
      old_loop = i;
    } else {
      expected.insert(q.edges()[i].id);
    }
  }
  std::set<std::string> given;
  for (const auto& [id, k] : m.redistribute) {
    if (k < 0 || k > 3) reject(name, "redistribution index for '" + id + "' must be 0..3");
    given.insert(id);
  }
  if (given != expected) reject(name, "redistribution must list exactly the non-loop edges at the orbit");
  if (old_loop.has_value() != m.loop.has_value()) {
    reject(name, old_loop ? "the loop at the orbit needs a replacement edge" : "no loop to replace");
  }
  if (m.loop && (!contains({m.k4.begin(), m.k4.end()}, m.loop->u) || !contains({m.k4.begin(), m.k4.end()}, m.loop->v))) {
    reject(name, "loop replacement must join K4 orbits");
  }
  Draft d(q);
  std::vector<NamedGainEdge> edges;
  for (const auto& e : d.edges) {
    if (old_loop && e.id == q.edges()[*old_loop].id) continue;
    NamedGainEdge moved = e;
    if (auto it = m.redistribute.find(e.id); it != m.redistribute.end()) {
      const auto& target = m.k4[static_cast<std::size_t>(it->second)];
      if (moved.u == m.orbit) moved.u = target;
      if (moved.v == m.orbit) moved.v = target;
    }
    edges.push_back(std::move(moved));
  }
  static constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (std::size_t k = 0; k < 6; ++k) {
    edges.push_back({m.k4_edges[k], m.k4[static_cast<std::size_t>(kPairs[k].first)],
                     m.k4[static_cast<std::size_t>(kPairs[k].second)], 1});
  }
  if (m.loop) edges.push_back({m.loop->id, m.loop->u, m.loop->v, -1});
  d.edges = std::move(edges);
  d.remove_orbit(m.orbit);
  for (const auto& n : m.k4) d.orbits.push_back(n);
  return d.build(name);
}

SignedQuotientGraph apply_k3(const SignedQuotientGraph& q, const EdgeToK3Move& m) {
  const std::string name = "EdgeToK3";
  const auto v = q.find_orbit(m.orbit);
  if (!v) reject(name, "orbit '" + m.orbit + "' does not exist");
  check_new_names(q, m.orbit, {m.fresh.begin(), m.fresh.end()}, name);
  const auto via = q.find_edge(m.via);
  if (!via) reject(name, "edge '" + m.via + "' does not exist");
  const auto& ve = q.edges()[*via];
  if (ve.is_loop() || (ve.u != *v && ve.v != *v)) reject(name, "via edge must be a non-loop edge at the orbit");
  if (ve.gain != 1) reject(name, "via edge must have trivial gain");
  const std::string u = q.orbit_name(ve.u == *v ? ve.v : ve.u);
  std::set<std::string> expected;
  for (auto i : q.incident_edges(*v)) {
    if (i != *via) expected.insert(q.edges()[i].id);
  }
  std::set<std::string> given;
  for (const auto& [id, k] : m.assign) {
    if (k != 0 && k != 1) reject(name, "assignment for '" + id + "' must be 0 or 1");
    given.insert(id);
  }
  if (given != expected) reject(name, "assignment must list exactly the other edges at the orbit");
  Draft d(q);
  std::vector<NamedGainEdge> edges;
  for (const auto& e : d.edges) {
    if (e.id == m.via) continue;
    NamedGainEdge moved = e;
    if (auto it = m.assign.find(e.id); it != m.assign.end()) {
      const auto& target = m.fresh[static_cast<std::size_t>(it->second)];
      if (moved.u == m.orbit) moved.u = target;
      if (moved.v == m.orbit) moved.v = target;
    }
    edges.push_back(std::move(moved));
  }
  edges.push_back({m.new_edges[0], m.fresh[0], m.fresh[1], 1});
  edges.push_back({m.new_edges[1], m.fresh[0], u, 1});
  edges.push_back({m.new_edges[2], m.fresh[1], u, 1});
  d.edges = std::move(edges);
  d.remove_orbit(m.orbit);
  d.orbits.push_back(m.fresh[0]);
  d.orbits.push_back(m.fresh[1]);
  return d.build(name);
}

SignedQuotientGraph apply_join(const SignedQuotientGraph& q, const K3JoinMove& m) {
  const std::string name = "K3Join";
  if (!m.generalized && !is_two_k3_minus_edge(m.piece)) reject(name, "piece must be 2K3-[e]");
  if (m.generalized && !is_gain_tight(m.piece)) reject(name, "piece must be (2,2,1)-gain-tight");
  for (const auto& o : m.piece.orbits()) {
    if (q.find_orbit(o)) reject(name, "piece orbit '" + o + "' already exists");
  }
  if (!q.find_orbit(m.edge.u)) reject(name, "join edge must start at an existing orbit");
  if (!m.piece.find_orbit(m.edge.v)) reject(name, "join edge must end in the piece");
  if (m.edge.gain != 1 && m.edge.gain != -1) reject(name, "join gain must be +1 or -1");
  Draft d(q);
  Draft p(m.piece);
  d.orbits.insert(d.orbits.end(), p.orbits.begin(), p.orbits.end());
  d.edges.insert(d.edges.end(), p.edges.begin(), p.edges.end());
  d.edges.push_back({m.edge.id, m.edge.u, m.edge.v, m.edge.gain});
  return d.build(name);
}

// Orbits to switch so that `from` becomes `to` literally: same orbit names,
// same edge ids and endpoints, gains equal after switching. Nothing if the
// two graphs differ in any other way.
std::optional<std::set<std::string>> labelled_switching(const SignedQuotientGraph& from,
                                                        const SignedQuotientGraph& to) {
  if (from.orbit_count() != to.orbit_count() || from.edge_count() != to.edge_count()) return std::nullopt;
  const std::size_t n = from.orbit_count();
  std::vector<int> to_index(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = to.find_orbit(from.orbit_name(static_cast<int>(i)));
    if (!j) return std::nullopt;
    to_index[i] = *j;
  }
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& e : from.edges()) {
    const auto k = to.find_edge(e.id);
    if (!k) return std::nullopt;
    const auto& f = to.edges()[*k];
    const int a = to_index[static_cast<std::size_t>(e.u)];
    const int b = to_index[static_cast<std::size_t>(e.v)];
    if (!((f.u == a && f.v == b) || (f.u == b && f.v == a))) return std::nullopt;
    if (e.is_loop()) continue;
    const int flip = e.gain * f.gain;
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, flip});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, flip});
  }
  std::vector<int> sign(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& [y, flip] : adj[x]) {
        const int want = sign[x] * flip;
        auto& sy = sign[static_cast<std::size_t>(y)];
        if (sy == 0) {
          sy = want;
          stack.push_back(static_cast<std::size_t>(y));
        } else if (sy != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::set<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (sign[i] < 0) out.insert(from.orbit_name(static_cast<int>(i)));
  }
  return out;
}

// Rewrites m, stated for a graph g, so that it acts on `switched`, which is g
// switched at the orbits in `flipped`. The result then agrees with the
// original result up to a switching. Nothing when the switched graph no
// longer offers what the move needs.
std::optional<Move> transport_move(const Move& m, const std::set<std::string>& flipped,
                                   const SignedQuotientGraph& switched) {
  const auto sign = [&](const std::string& x) { return flipped.count(x) > 0 ? -1 : 1; };
  if (const auto* h1 = std::get_if<H1Move>(&m)) {
    H1Move out = *h1;
    for (auto& a : out.edges) {
      if (a.to != out.orbit) a.gain *= sign(a.to);
    }
    return out;
  }
  if (const auto* h2 = std::get_if<H2Move>(&m)) {
    H2Move out = *h2;
    for (auto& a : out.split) a.gain *= sign(a.to);
    out.extra.gain *= sign(out.extra.to);
    return out;
  }
  if (const auto* k3 = std::get_if<EdgeToK3Move>(&m)) {
    // the edge along which the orbit splits must keep its trivial gain
    const auto via = switched.find_edge(k3->via);
    if (!via || switched.edges()[*via].gain != 1) return std::nullopt;
    return m;
  }
  if (const auto* join = std::get_if<K3JoinMove>(&m)) {
    K3JoinMove out = *join;
    out.edge.gain *= sign(out.edge.u);
    return out;
  }
  // a vertex-to-K4 move carries every old edge over with its current gain
  return m;
}

bool tight_for(const SignedQuotientGraph& q, Mode mode) { return is_gain_tight(q, mode == Mode::kAnti); }

void require_tight(const SignedQuotientGraph& q, Mode mode) {
  if (q.orbit_count() > kMaxSparsityOrbits) {
    throw SizeLimitExceeded("construction search refuses graphs with more than 20 orbits");
  }
  const auto verdict = check_gain_sparse(q, SparsityVariant::k221, mode == Mode::kAnti);
  if (verdict.tight) return;
  std::string why;
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    why = "violating " + to_string(w.clause) + " count: " + std::to_string(w.edge_count) + " edges on " +
          std::to_string(w.orbits.size()) + " orbits (bound " + std::to_string(w.bound) + ")";
  } else {
    why = "sparse but has " + std::to_string(q.edge_count()) + " edges, tight needs " +
          std::to_string(2 * q.orbit_count() - 1);
  }
  throw InvalidInput("graph is not (2,2,1)-gain-tight" + std::string(mode == Mode::kAnti ? " and loopless" : "") +
                     "; " + why);
}

// --- inverse move generation -------------------------------------------------

using Emit = std::function<void(Move, const std::function<SignedQuotientGraph()>&)>;

void inverse_h1(const SignedQuotientGraph& q, const Emit& emit) {
  for (std::size_t v = 0; v < q.orbit_count(); ++v) {
    const int vi = static_cast<int>(v);
    const auto inc = q.incident_edges(vi);
    if (inc.size() != 2) continue;
    H1Move m;
    m.orbit = q.orbit_name(vi);
    int loops = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& e = q.edges()[inc[k]];
      const int other = e.u == vi ? e.v : e.u;
      loops += e.is_loop() ? 1 : 0;
      m.edges[k] = {e.id, q.orbit_name(other), e.gain};
    }
    m.variant = loops ? 'c' : (m.edges[0].to == m.edges[1].to ? 'b' : 'a');
    emit(m, [&q, &m] {
      Draft d(q);
      std::erase_if(d.edges, [&m](const NamedGainEdge& e) { return e.id == m.edges[0].id || e.id == m.edges[1].id; });
      d.remove_orbit(m.orbit);
      return d.build("inverse H1");
    });
  }
}

void inverse_h2(const SignedQuotientGraph& q, const Emit& emit) {
  for (std::size_t v = 0; v < q.orbit_count(); ++v) {
    const int vi = static_cast<int>(v);
    const auto inc = q.incident_edges(vi);
    if (inc.size() != 3) continue;
    if (std::any_of(inc.begin(), inc.end(), [&q](std::size_t i) { return q.edges()[i].is_loop(); })) continue;
    static constexpr std::array<std::array<int, 3>, 3> kChoices{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (const auto& c : kChoices) {
      std::array<Attachment, 3> at;
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& e = q.edges()[inc[static_cast<std::size_t>(c[k])]];
        at[k] = {e.id, q.orbit_name(e.u == vi ? e.v : e.u), e.gain};
      }
      const int product = at[0].gain * at[1].gain;
      if (at[0].to == at[1].to && product != -1) continue;
      H2Move m;
      m.orbit = q.orbit_name(vi);
      m.removed = at[0].id;
      m.split = {at[0], at[1]};
      m.extra = at[2];
      m.variant = at[0].to == at[1].to ? 'c' : (at[2].to == at[0].to || at[2].to == at[1].to ? 'b' : 'a');
      emit(m, [&q, m, product] {
        Draft d(q);
        std::erase_if(d.edges, [&m](const NamedGainEdge& e) {
          return e.id == m.split[0].id || e.id == m.split[1].id || e.id == m.extra.id;
        });
        d.remove_orbit(m.orbit);
        d.edges.push_back({m.removed, m.split[0].to, m.split[1].to, product});
        return d.build("inverse H2");
      });
    }
  }
}

bool contains_int(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Edges of q with both ends in `members` (loops included).
std::vector<std::size_t> internal_edges(const SignedQuotientGraph& q, const std::vector<int>& members) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.edge_count(); ++i) {
    const auto& e = q.edges()[i];
    if (contains_int(members, e.u) && contains_int(members, e.v)) out.push_back(i);
  }
  return out;
}

// Switching that flips the orbits of `members` whose bit is set in `mask`.
SignedQuotientGraph switched(const SignedQuotientGraph& q, const std::vector<int>& members, unsigned mask) {
  std::vector<int> signs(q.orbit_count(), 1);
  for (std::size_t k = 0; k < members.size(); ++k) {
    if ((mask >> k) & 1u) signs[static_cast<std::size_t>(members[k])] = -1;
  }
  return apply_switching(q, signs);
}

std::optional<std::size_t> edge_between(const SignedQuotientGraph& q, int a, int b, int gain) {
  for (std::size_t i = 0; i < q.edge_count(); ++i) {
    const auto& e = q.edges()[i];
    if (e.gain == gain && ((e.u == a && e.v == b) || (e.u == b && e.v == a))) return i;
  }
  return std::nullopt;
}

void inverse_k4(const SignedQuotientGraph& q, const Emit& emit) {
  const int n = static_cast<int>(q.orbit_count());
  static constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          const std::vector<int> members{a, b, c, d};
          // the first member stays fixed; bits 1..3 switch the others
          for (unsigned mask = 0; mask < 16; mask += 2) {
            const SignedQuotientGraph s = switched(q, members, mask);
            VertexToK4Move m;
            bool ok = true;
            std::set<std::size_t> used;
            for (std::size_t k = 0; k < 6 && ok; ++k) {
              const auto e = edge_between(s, members[static_cast<std::size_t>(kPairs[k].first)],
                                          members[static_cast<std::size_t>(kPairs[k].second)], 1);
              if (!e) {
                ok = false;
              } else {
                used.insert(*e);
                m.k4_edges[k] = s.edges()[*e].id;
              }
            }
            if (!ok) continue;
            std::vector<std::size_t> extras;
            for (auto i : internal_edges(s, members)) {
              if (!used.count(i)) extras.push_back(i);
            }
            if (extras.size() > 1) continue;
            m.orbit = s.orbit_name(a);
            for (std::size_t k = 0; k < 4; ++k) m.k4[k] = s.orbit_name(members[k]);
            for (std::size_t k = 0; k < 4; ++k) {
              for (auto i : s.incident_edges(members[k])) {
                const auto& e = s.edges()[i];
                if (!contains_int(members, e.u) || !contains_int(members, e.v)) m.redistribute[e.id] = static_cast<int>(k);
              }
            }
            if (!extras.empty()) {
              const auto& e = s.edges()[extras[0]];
              m.loop = K4Loop{e.id, s.orbit_name(e.u), s.orbit_name(e.v)};
            }
            emit(m, [s, m, members] {
              Draft d(s);
              std::vector<NamedGainEdge> edges;
              for (const auto& e : d.edges) {
                const bool in_u = std::find(m.k4.begin(), m.k4.end(), e.u) != m.k4.end();
                const bool in_v = std::find(m.k4.begin(), m.k4.end(), e.v) != m.k4.end();
                if (in_u && in_v) continue;
                NamedGainEdge moved = e;
                if (in_u) moved.u = m.orbit;
                if (in_v) moved.v = m.orbit;
                edges.push_back(std::move(moved));
              }
              if (m.loop) edges.push_back({m.loop->id, m.orbit, m.orbit, -1});
              d.edges = std::move(edges);
              for (std::size_t k = 1; k < 4; ++k) d.remove_orbit(m.k4[k]);
              return d.build("inverse VertexToK4");
            });
          }
        }
      }
    }
  }
}

void inverse_k3(const SignedQuotientGraph& q, const Emit& emit) {
  const int n = static_cast<int>(q.orbit_count());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const std::array<int, 3> tri{i, j, k};
        for (std::size_t pick = 0; pick < 3; ++pick) {
          const int u = tri[pick];
          std::vector<int> rest;
          for (int x : tri) {
            if (x != u) rest.push_back(x);
          }
          const int v0 = rest[0];
          const int v1 = rest[1];
          const std::vector<int> members{v0, v1, u};
          for (unsigned mask = 0; mask < 8; mask += 2) {
            const SignedQuotientGraph s = switched(q, members, mask);
            const auto e01 = edge_between(s, v0, v1, 1);
            const auto e0u = edge_between(s, v0, u, 1);
            const auto e1u = edge_between(s, v1, u, 1);
            if (!e01 || !e0u || !e1u || edge_between(s, v0, v1, -1)) continue;
            EdgeToK3Move m;
            m.orbit = s.orbit_name(v0);
            m.via = s.edges()[*e0u].id;
            m.fresh = {s.orbit_name(v0), s.orbit_name(v1)};
            m.new_edges = {s.edges()[*e01].id, s.edges()[*e0u].id, s.edges()[*e1u].id};
            for (std::size_t side = 0; side < 2; ++side) {
              for (auto idx : s.incident_edges(side == 0 ? v0 : v1)) {
                if (idx == *e01 || idx == *e0u || idx == *e1u) continue;
                m.assign[s.edges()[idx].id] = static_cast<int>(side);
              }
            }
            const std::string uname = s.orbit_name(u);
            emit(m, [s, m, uname] {
              Draft d(s);
              std::erase_if(d.edges, [&m](const NamedGainEdge& e) {
                return e.id == m.new_edges[0] || e.id == m.new_edges[1] || e.id == m.new_edges[2];
              });
              for (auto& e : d.edges) {
                if (e.u == m.fresh[1]) e.u = m.orbit;
                if (e.v == m.fresh[1]) e.v = m.orbit;
              }
              d.edges.push_back({m.via, m.orbit, uname, 1});
              d.remove_orbit(m.fresh[1]);
              return d.build("inverse EdgeToK3");
            });
          }
        }
      }
    }
  }
}

void inverse_join(const SignedQuotientGraph& q, const Emit& emit) {
  const int n = static_cast<int>(q.orbit_count());
  if (n <= 3) return;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const std::vector<int> members{i, j, k};
        const auto inside = internal_edges(q, members);
        std::vector<std::size_t> crossing;
        for (std::size_t idx = 0; idx < q.edge_count(); ++idx) {
          const auto& e = q.edges()[idx];
          if (contains_int(members, e.u) != contains_int(members, e.v)) crossing.push_back(idx);
        }
        if (inside.size() != 5 || crossing.size() != 1) continue;
        std::vector<std::string> names;
        for (int x : members) names.push_back(q.orbit_name(x));
        std::vector<GainEdge> piece_edges;
        for (auto idx : inside) {
          const auto& e = q.edges()[idx];
          piece_edges.push_back({e.id, static_cast<int>(std::find(members.begin(), members.end(), e.u) - members.begin()),
                                 static_cast<int>(std::find(members.begin(), members.end(), e.v) - members.begin()),
                                 e.gain});
        }
        SignedQuotientGraph piece(names, std::move(piece_edges));
        if (!is_two_k3_minus_edge(piece)) continue;
        const auto& f = q.edges()[crossing[0]];
        const bool u_inside = contains_int(members, f.u);
        K3JoinMove m{piece, JoinEdge{f.id, q.orbit_name(u_inside ? f.v : f.u), q.orbit_name(u_inside ? f.u : f.v), f.gain},
                     false};
        emit(m, [&q, names, f] {
          Draft d(q);
          std::erase_if(d.edges, [&](const NamedGainEdge& e) {
            return e.id == f.id || contains(names, e.u) || contains(names, e.v);
          });
          for (const auto& nm : names) d.remove_orbit(nm);
          return d.build("inverse K3Join");
        });
      }
    }
  }
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::kSym ? "sym" : "anti"; }

std::string to_string(BaseKind kind) {
  return kind == BaseKind::kUnbalancedLoop ? "UnbalancedLoop" : "TwoK3MinusEdge";
}

std::string move_name(const Move& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, H1Move>) return std::string("H1") + x.variant;
        if constexpr (std::is_same_v<T, H2Move>) return std::string("H2") + x.variant;
        if constexpr (std::is_same_v<T, VertexToK4Move>) return "VertexToK4";
        if constexpr (std::is_same_v<T, EdgeToK3Move>) return "EdgeToK3";
        if constexpr (std::is_same_v<T, K3JoinMove>) return "K3Join";
      },
      m);
}

SignedQuotientGraph apply_move(const SignedQuotientGraph& q, const Move& m) {
  return std::visit(
      [&q](const auto& x) -> SignedQuotientGraph {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, H1Move>) return apply_h1(q, x);
        if constexpr (std::is_same_v<T, H2Move>) return apply_h2(q, x);
        if constexpr (std::is_same_v<T, VertexToK4Move>) return apply_k4(q, x);
        if constexpr (std::is_same_v<T, EdgeToK3Move>) return apply_k3(q, x);
        if constexpr (std::is_same_v<T, K3JoinMove>) return apply_join(q, x);
      },
      m);
}

bool move_allowed(const Move& m, Mode mode) {
  if (mode == Mode::kSym) return !std::holds_alternative<K3JoinMove>(m);
  if (const auto* h1 = std::get_if<H1Move>(&m)) return h1->variant != 'c';
  if (const auto* h2 = std::get_if<H2Move>(&m)) return h2->variant != 'c';
  if (const auto* k4 = std::get_if<VertexToK4Move>(&m)) return !k4->loop.has_value();
  return true;
}

bool is_unbalanced_loop(const SignedQuotientGraph& q) {
  return q.orbit_count() == 1 && q.edge_count() == 1 && q.has_loops();
}

bool is_two_k3_minus_edge(const SignedQuotientGraph& q) {
  if (q.orbit_count() != 3 || q.edge_count() != 5 || q.has_loops()) return false;
  std::array<int, 3> pair_count{};
  for (const auto& e : q.edges()) ++pair_count[static_cast<std::size_t>(3 - e.u - e.v)];
  std::sort(pair_count.begin(), pair_count.end());
  return pair_count == std::array<int, 3>{1, 2, 2};
}

std::vector<InverseCandidate> inverse_candidates(const SignedQuotientGraph& q, Mode mode) {
  require_tight(q, mode);
  std::vector<InverseCandidate> out;
  const std::size_t min_orbits = mode == Mode::kAnti ? 3 : 1;
  const Emit emit = [&](Move m, const std::function<SignedQuotientGraph()>& predecessor) {
    if (!move_allowed(m, mode)) return;
    SignedQuotientGraph pred;
    try {
      pred = predecessor();
    } catch (const InvalidInput&) {
      return;
    }
    if (pred.orbit_count() < min_orbits || !tight_for(pred, mode)) return;
    try {
      if (!labelled_switching(apply_move(pred, m), q)) return;
    } catch (const InvalidInput&) {
      return;
    }
    out.push_back({std::move(m), std::move(pred)});
  };
  inverse_h1(q, emit);
  inverse_h2(q, emit);
  inverse_k4(q, emit);
  inverse_k3(q, emit);
  if (mode == Mode::kAnti) inverse_join(q, emit);
  return out;
}

ConstructionSequence extract_sequence(const SignedQuotientGraph& q, Mode mode) {
  require_tight(q, mode);
  const auto at_base = [mode](const SignedQuotientGraph& g) {
    return mode == Mode::kSym ? is_unbalanced_loop(g) : is_two_k3_minus_edge(g);
  };
  // Inverse candidates only promise their predecessor up to a switching, so
  // a found path is replayed from the base, each move transported onto the
  // graph actually produced so far.
  std::vector<InverseCandidate> path;
  const auto materialize = [&](const SignedQuotientGraph& base) -> std::optional<std::vector<Move>> {
    std::vector<Move> moves;
    SignedQuotientGraph cur = base;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const auto flipped = labelled_switching(it->predecessor, cur);
      if (!flipped) return std::nullopt;
      auto moved = transport_move(it->move, *flipped, cur);
      if (!moved) return std::nullopt;
      try {
        cur = apply_move(cur, *moved);
      } catch (const InvalidInput&) {
        return std::nullopt;
      }
      if (!tight_for(cur, mode)) return std::nullopt;
      moves.push_back(std::move(*moved));
    }
    return moves;
  };
  // Depth-first: a greedy walk can strand itself on a tight graph with no
  // admissible inverse move although another branch reaches the base. Graphs
  // whose every branch ends in such a dead end are remembered by canonical form.
  enum class Outcome { kFound, kDead, kBlocked };
  std::set<CanonicalForm> dead;
  std::optional<std::vector<Move>> found;
  SignedQuotientGraph base;
  std::size_t stuck_orbits = q.orbit_count();
  std::function<Outcome(const SignedQuotientGraph&)> descend = [&](const SignedQuotientGraph& g) {
    if (at_base(g)) {
      found = materialize(g);
      if (!found) return Outcome::kBlocked;
      base = g;
      return Outcome::kFound;
    }
    const bool memo = g.orbit_count() <= kMaxCanonicalOrbits;
    if (memo && dead.count(canonical_form(g)) > 0) return Outcome::kDead;
    auto candidates = inverse_candidates(g, mode);
    if (candidates.empty()) stuck_orbits = std::min(stuck_orbits, g.orbit_count());
    bool blocked = false;
    for (auto& c : candidates) {
      path.push_back(c);
      const Outcome o = descend(c.predecessor);
      path.pop_back();
      if (o == Outcome::kFound) return o;
      blocked = blocked || o == Outcome::kBlocked;
    }
    if (blocked) return Outcome::kBlocked;
    if (memo) dead.insert(canonical_form(g));
    return Outcome::kDead;
  };
  if (descend(q) != Outcome::kFound) {
    throw Exhausted("no admissible inverse move sequence reaches the base; dead end at a tight graph with " +
                    std::to_string(stuck_orbits) + " orbits");
  }
  ConstructionSequence seq;
  seq.mode = mode;
  seq.base = mode == Mode::kSym ? BaseKind::kUnbalancedLoop : BaseKind::kTwoK3MinusEdge;
  seq.base_graph = std::move(base);
  seq.moves = std::move(*found);
  return seq;
}

std::vector<SignedQuotientGraph> replay_prefixes(const ConstructionSequence& seq) {
  const bool base_ok = seq.base == BaseKind::kUnbalancedLoop ? is_unbalanced_loop(seq.base_graph)
                                                              : is_two_k3_minus_edge(seq.base_graph);
  if (!base_ok) throw InvalidInput("base graph does not match base kind " + to_string(seq.base));
  const BaseKind expected = seq.mode == Mode::kSym ? BaseKind::kUnbalancedLoop : BaseKind::kTwoK3MinusEdge;
  if (seq.base != expected) throw InvalidInput(to_string(seq.mode) + " sequences start from " + to_string(expected));
  std::vector<SignedQuotientGraph> out{seq.base_graph};
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    const auto& m = seq.moves[i];
    const std::string where = "move " + std::to_string(i) + " (" + move_name(m) + ")";
    if (!move_allowed(m, seq.mode)) throw InvalidInput(where + ": not allowed in " + to_string(seq.mode) + " mode");
    if (const auto* join = std::get_if<K3JoinMove>(&m); join && join->piece.has_loops()) {
      throw InvalidInput(where + ": joined piece must be loopless");
    }
    SignedQuotientGraph next;
    try {
      next = apply_move(out.back(), m);
    } catch (const InvalidInput& err) {
      throw InvalidInput(where + ": " + err.what());
    }
    if (!tight_for(next, seq.mode)) throw InvalidInput(where + ": result is not tight");
    out.push_back(std::move(next));
  }
  return out;
}

SignedQuotientGraph replay(const ConstructionSequence& seq) { return replay_prefixes(seq).back(); }

namespace {

struct SlotEdge {
  int u = 0;
  int v = 0;
  int gain = 1;
};

// Whether adding slots[added] to an already (2,2,1)-sparse edge set keeps it
// sparse. Only vertex sets containing both ends of the new edge can become
// violated, and a balanced violator with 2|W|-1 edges is the whole induced set.
bool stays_sparse(const std::vector<SlotEdge>& chosen, const SlotEdge& added, int n) {
  const unsigned ends = (1u << added.u) | (1u << added.v);
  for (unsigned w = 1; w < (1u << n); ++w) {
    if ((w & ends) != ends) continue;
    const int size = __builtin_popcount(w);
    int count = 1;
    for (const auto& e : chosen) {
      if ((w >> e.u & 1u) && (w >> e.v & 1u)) ++count;
    }
    if (count > 2 * size - 1) return false;
    if (count < 2 * size - 1) continue;
    ParityUnionFind uf(static_cast<std::size_t>(n));
    bool balanced = true;
    const auto take = [&](const SlotEdge& e) {
      if (e.u == e.v || !uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), e.gain)) {
        balanced = false;
      }
    };
    take(added);
    for (const auto& e : chosen) {
      if (balanced && (w >> e.u & 1u) && (w >> e.v & 1u)) take(e);
    }
    if (balanced) return false;
  }
  return true;
}

}  // namespace

std::vector<SignedQuotientGraph> enumerate_tight_graphs(std::size_t orbits, bool loopless) {
  if (orbits == 0) return {};
  if (orbits > kMaxCanonicalOrbits) throw SizeLimitExceeded("enumeration refuses more than 8 orbits");
  const int n = static_cast<int>(orbits);
  // slots sorted by larger endpoint, so every edge to a lower orbit of v is
  // decided before any edge reaching above v
  std::vector<SlotEdge> universe;
  for (int j = 0; j < n; ++j) {
    if (!loopless) universe.push_back({j, j, -1});
    for (int i = 0; i < j; ++i) {
      universe.push_back({i, j, 1});
      universe.push_back({i, j, -1});
    }
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  const std::size_t target = 2 * orbits - 1;
  const auto build = [&](const std::vector<SlotEdge>& edges) {
    std::vector<GainEdge> out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      out.push_back({"e" + std::to_string(k), edges[k].u, edges[k].v, edges[k].gain});
    }
    return SignedQuotientGraph(names, out);
  };
  // Switching orbit v fixes the gain of its first edge to a lower orbit
  // without touching earlier decisions, so that edge is taken with gain +1.
  std::vector<int> first_lower(orbits, -1);
  std::map<std::vector<int>, std::vector<SignedQuotientGraph>> classes;
  std::vector<SlotEdge> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    if (chosen.size() == target) {
      SignedQuotientGraph g = build(chosen);
      if (!is_gain_tight(g, loopless)) return;
      // per-orbit degree, loops, parallel pairs and distinct neighbours: all
      // invariant under switching and relabelling
      std::vector<std::array<int, 4>> profile(orbits, std::array<int, 4>{});
      std::vector<std::vector<int>> multiplicity(orbits, std::vector<int>(orbits, 0));
      for (const auto& e : chosen) {
        const auto u = static_cast<std::size_t>(e.u);
        const auto v = static_cast<std::size_t>(e.v);
        if (u == v) {
          profile[u][0] += 2;
          ++profile[u][1];
          continue;
        }
        ++profile[u][0];
        ++profile[v][0];
        ++multiplicity[u][v];
        ++multiplicity[v][u];
      }
      for (std::size_t u = 0; u < orbits; ++u) {
        for (std::size_t v = 0; v < orbits; ++v) {
          if (multiplicity[u][v] == 2) ++profile[u][2];
          if (multiplicity[u][v] > 0) ++profile[u][3];
        }
      }
      std::sort(profile.begin(), profile.end());
      std::vector<int> key;
      for (const auto& p : profile) key.insert(key.end(), p.begin(), p.end());
      auto& bucket = classes[key];
      for (const auto& other : bucket) {
        if (switching_isomorphic(other, g)) return;
      }
      bucket.push_back(std::move(g));
      return;
    }
    if (universe.size() - next < target - chosen.size()) return;
    for (std::size_t k = next; k < universe.size(); ++k) {
      const SlotEdge& e = universe[k];
      const auto v = static_cast<std::size_t>(e.v);
      const bool lower = e.u != e.v;
      if (lower && first_lower[v] < 0 && e.gain != 1) continue;
      if (!stays_sparse(chosen, e, n)) continue;
      const bool opens = lower && first_lower[v] < 0;
      if (opens) first_lower[v] = e.u;
      chosen.push_back(e);
      dfs(k + 1);
      chosen.pop_back();
      if (opens) first_lower[v] = -1;
    }
  };
  dfs(0);
  std::vector<CanonicalForm> forms;
  for (const auto& [key, bucket] : classes) {
    for (const auto& g : bucket) forms.push_back(canonical_form(g));
  }
  std::sort(forms.begin(), forms.end());
  std::vector<SignedQuotientGraph> out;
  for (const auto& f : forms) out.push_back(from_canonical(orbits, f));
  return out;
}

}  // namespace gridrig
