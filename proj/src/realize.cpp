#include "gridrig/realize.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gridrig/errors.hpp"
#include "gridrig/isomorphism.hpp"

namespace gridrig {

namespace {

using Placement = std::map<std::string, Vec2>;  // orbit name -> representative, normalized coordinates

// In normalized coordinates the norm is the max-norm with F1hat = e1, F2hat = e2.
const QuadNorm& unit_norm() {
  static const QuadNorm norm(make_vec(1, 0), make_vec(0, 1));
  return norm;
}

Vec2 reflect(const Vec2& u) { return {-u[0], u[1]}; }
Vec2 act(int gamma, const Vec2& u) { return gamma > 0 ? u : reflect(u); }
Vec2 axis(Colour c) { return c == Colour::kF1 ? make_vec(1, 0) : make_vec(0, 1); }
Colour other(Colour c) { return c == Colour::kF1 ? Colour::kF2 : Colour::kF1; }

Rational q(long num, long den = 1) { return Rational(num, den); }

std::vector<Vec2> perturbations(std::uint64_t seed) {
  std::vector<Vec2> dirs{{q(0), q(1)},         {q(1), q(0)},        {q(0), q(-1)},        {q(-1), q(0)},
                         {q(1, 3), q(1)},      {q(1), q(1, 3)},     {q(-1, 3), q(1)},     {q(1), q(-1, 3)},
                         {q(1, 3), q(-1)},     {q(-1), q(1, 3)},    {q(-1, 3), q(-1)},    {q(-1), q(-1, 3)},
                         {q(2, 7), q(3, 5)},   {q(3, 5), q(-2, 7)}, {q(-3, 5), q(2, 7)},  {q(-2, 7), q(-3, 5)},
                         {q(5, 11), q(1, 9)},  {q(1, 9), q(5, 11)}, {q(-5, 11), q(-1, 9)}, {q(-1, 9), q(-5, 11)}};
  std::mt19937_64 rng(seed);
  std::shuffle(dirs.begin(), dirs.end(), rng);
  dirs.insert(dirs.begin(), Vec2{q(0), q(0)});
  return dirs;
}

SymmetricFramework normalized_framework(const SignedQuotientGraph& g, const Placement& rep) {
  std::vector<Vec2> reps;
  for (const auto& name : g.orbits()) reps.push_back(rep.at(name));
  return SymmetricFramework::from_representatives(g, unit_norm(), std::move(reps));
}

bool joints_distinct(const SymmetricFramework& f) {
  auto pts = f.placement();
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

using ColourMap = std::map<std::string, Colour>;

// Accepts a placement when it is well-positioned, joints are distinct and off
// the mirror, surviving edge ids keep their colour, and the mode's monochrome
// condition holds. Returns the new colouring on success.
std::optional<ColourMap> accept(const SignedQuotientGraph& g, const Placement& rep, Mode mode, const ColourMap& old) {
  for (const auto& [name, u] : rep) {
    if (u[0] == 0) return std::nullopt;
  }
  const SymmetricFramework f = normalized_framework(g, rep);
  if (!joints_distinct(f)) return std::nullopt;
  auto result = colour_edges(f);
  const auto* dec = std::get_if<MonochromeDecomposition>(&result);
  if (!dec) return std::nullopt;
  ColourMap colours;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& id = g.edges()[i].id;
    colours[id] = dec->colour[i];
    if (auto it = old.find(id); it != old.end() && it->second != dec->colour[i]) return std::nullopt;
  }
  const bool ok = mode == Mode::kSym ? sym_isostatic_condition(g, *dec) : anti_isostatic_condition(g, *dec);
  if (!ok) return std::nullopt;
  return colours;
}

Placement map_frozen_onto(const SignedQuotientGraph& target) {
  const auto iso = find_switching_isomorphism(frozen_two_k3_graph(), target);
  if (!iso) throw InvalidInput("graph is not 2K3-[e]");
  const auto frozen = frozen_two_k3_placement();
  Placement rep;
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    rep[target.orbit_name(iso->perm[i])] = act(iso->signs[i], frozen[i]);
  }
  return rep;
}

struct Counters {
  int attempts = 0;
  int shrink_steps = 0;
};

Placement realize_normalized(const ConstructionSequence& seq, std::uint64_t seed, Counters& counters);

// Proposal for one move: given the radius index k and a perturbation, the full new placement.
using Proposal = std::function<std::optional<Placement>(const Rational& r, const Vec2& delta, int variant)>;

Placement place_move(const SignedQuotientGraph& next, const ColourMap& colours, Mode mode,
                     const Proposal& propose, int variants, const std::vector<Vec2>& dirs, Counters& counters,
                     ColourMap& new_colours, const std::string& where) {
  Rational r = 1;
  for (int k = 0; k <= kShrinkBudget; ++k) {
    for (int variant = 0; variant < variants; ++variant) {
      for (const auto& d : dirs) {
        ++counters.attempts;
        auto candidate = propose(r, d, variant);
        if (!candidate) continue;
        if (auto c = accept(next, *candidate, mode, colours)) {
          counters.shrink_steps += k;
          new_colours = std::move(*c);
          return std::move(*candidate);
        }
      }
    }
    r /= 2;
  }
  throw Exhausted(where + ": no valid placement within " + std::to_string(kShrinkBudget) + " halvings");
}

Placement realize_normalized(const ConstructionSequence& seq, std::uint64_t seed, Counters& counters) {
  const auto graphs = replay_prefixes(seq);
  const auto dirs = perturbations(seed);
  Placement rep;
  if (seq.base == BaseKind::kUnbalancedLoop) {
    rep[seq.base_graph.orbit_name(0)] = make_vec(1, 0);
  } else {
    rep = map_frozen_onto(seq.base_graph);
  }
  auto colours = accept(seq.base_graph, rep, seq.mode, {});
  if (!colours) throw Exhausted("base placement fails its own certificate");
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    const auto& next = graphs[i + 1];
    const auto& move = seq.moves[i];
    const std::string where = "move " + std::to_string(i) + " (" + move_name(move) + ")";
    auto pos = [&rep](const std::string& name, int gamma) { return act(gamma, rep.at(name)); };
    Proposal propose;
    int variants = 1;
    std::vector<Vec2> local_dirs = dirs;
    if (const auto* h1 = std::get_if<H1Move>(&move)) {
      if (h1->variant == 'c') {
        const auto& edge = h1->edges[0].to == h1->orbit ? h1->edges[1] : h1->edges[0];
        const Vec2 anchor = pos(edge.to, edge.gain);
        propose = [&, anchor](const Rational& r, const Vec2& d, int) -> std::optional<Placement> {
          Placement out = rep;
          out[h1->orbit] = anchor + r * d;
          return out;
        };
      } else {
        variants = 2;
        propose = [&](const Rational& r, const Vec2& d, int variant) -> std::optional<Placement> {
          const auto& e1 = h1->edges[static_cast<std::size_t>(variant)];
          const auto& e2 = h1->edges[static_cast<std::size_t>(1 - variant)];
          const Vec2 q1 = pos(e1.to, e1.gain);  // joined by an F1 bar
          const Vec2 q2 = pos(e2.to, e2.gain);  // joined by an F2 bar
          Placement out = rep;
          out[h1->orbit] = Vec2{q2[0], q1[1]} + r * d;
          return out;
        };
      }
    } else if (const auto* h2 = std::get_if<H2Move>(&move)) {
      const Colour c = colours->at(h2->removed);
      const Vec2 q1 = pos(h2->split[0].to, h2->split[0].gain);
      const Vec2 q2 = pos(h2->split[1].to, h2->split[1].gain);
      const Vec2 q3 = pos(h2->extra.to, h2->extra.gain);
      const Vec2 dir = q2 - q1;
      // line q1 + t*dir meets the axis line through q3 in direction of the other colour
      const std::size_t fixed = other(c) == Colour::kF2 ? 0 : 1;
      const Rational t = (q3[fixed] - q1[fixed]) / dir[fixed];
      const Vec2 anchor = q1 + t * dir;
      propose = [&, anchor](const Rational& r, const Vec2& d, int) -> std::optional<Placement> {
        Placement out = rep;
        out[h2->orbit] = anchor + r * d;
        return out;
      };
    } else if (const auto* k4 = std::get_if<VertexToK4Move>(&move)) {
      static const std::array<Vec2, 4> kTemplate{
          Vec2{q(0), q(0)}, Vec2{q(1), q(1, 5)}, Vec2{q(-1, 5), q(1)}, Vec2{q(6, 5), q(7, 5)}};
      const Vec2 centre = rep.at(k4->orbit);
      propose = [&, centre](const Rational& r, const Vec2& d, int) -> std::optional<Placement> {
        Placement out = rep;
        out.erase(k4->orbit);
        for (std::size_t k = 0; k < 4; ++k) out[k4->k4[k]] = centre + r * kTemplate[k] + (r / 8) * d;
        return out;
      };
    } else if (const auto* k3 = std::get_if<EdgeToK3Move>(&move)) {
      const Colour c = colours->at(k3->via);
      const Vec2 centre = rep.at(k3->orbit);
      const Vec2 step = axis(other(c));
      propose = [&, centre, step](const Rational& r, const Vec2& d, int) -> std::optional<Placement> {
        Placement out = rep;
        out.erase(k3->orbit);
        out[k3->fresh[0]] = centre;
        out[k3->fresh[1]] = centre + r * (step + Rational(1, 4) * d);
        return out;
      };
    } else if (const auto* join = std::get_if<K3JoinMove>(&move)) {
      Placement piece;
      if (join->generalized) {
        piece = realize_normalized(extract_sequence(join->piece, Mode::kAnti), seed, counters);
      } else {
        piece = map_frozen_onto(join->piece);
      }
      const Rational level = rep.at(join->edge.u)[1];
      const Rational shift = level - piece.at(join->edge.v)[1];
      for (auto& [name, u] : piece) u[1] += shift;
      local_dirs = {Vec2{q(0), q(0)}};
      propose = [&, piece, level](const Rational& s, const Vec2&, int) -> std::optional<Placement> {
        Placement out = rep;
        for (const auto& [name, u] : piece) out[name] = Vec2{s * u[0], level + s * (u[1] - level)};
        return out;
      };
    }
    ColourMap new_colours;
    rep = place_move(next, *colours, seq.mode, propose, variants, local_dirs, counters, new_colours, where);
    colours = std::move(new_colours);
  }
  return rep;
}

}  // namespace

SignedQuotientGraph frozen_two_k3_graph() {
  return SignedQuotientGraph({"a", "b", "c"}, std::vector<NamedGainEdge>{{"ab+", "a", "b", 1},
                                                                        {"ab-", "a", "b", -1},
                                                                        {"cb+", "c", "b", 1},
                                                                        {"cb-", "c", "b", -1},
                                                                        {"ca+", "c", "a", 1}});
}

std::vector<Vec2> frozen_two_k3_placement() {
  return {Vec2{q(-1, 2), q(0)}, Vec2{q(-1, 2), q(3, 2)}, Vec2{q(-3, 2), q(0)}};
}

RealizationResult realize(const ConstructionSequence& seq, const QuadNorm& norm, std::uint64_t seed) {
  Counters counters;
  const Placement rep = realize_normalized(seq, seed, counters);
  const SignedQuotientGraph g = replay(seq);
  std::vector<Vec2> reps;
  for (const auto& name : g.orbits()) reps.push_back(norm.denormalize(rep.at(name)));
  SymmetricFramework f = SymmetricFramework::from_representatives(g, norm, std::move(reps));
  CharacterizationReport cert = characterize(f);
  RigidityReport report = rigidity_report(f);
  const bool ok = seq.mode == Mode::kSym ? cert.sym_isostatic_c : cert.anti_isostatic_c;
  if (!ok) throw Exhausted("realized framework fails its certificate");
  return RealizationResult{std::move(f), std::move(cert), report, counters.attempts, counters.shrink_steps};
}

std::string to_string(RandomTarget t) {
  switch (t) {
    case RandomTarget::kSym:
      return "sym";
    case RandomTarget::kAnti:
      return "anti";
    case RandomTarget::kRigid:
      return "rigid";
  }
  return "sym";
}

RealizationResult random_realize(const SignedQuotientGraph& g, const QuadNorm& norm, RandomTarget target,
                                 std::uint64_t seed, int attempts) {
  std::mt19937_64 rng(seed);
  for (int k = 1; k <= attempts; ++k) {
    const long bound = 2 + k;
    std::uniform_int_distribution<long> coord(-bound, bound);
    std::vector<Vec2> reps;
    for (std::size_t i = 0; i < g.orbit_count(); ++i) {
      const long x = coord(rng);
      const long y = coord(rng);
      reps.push_back(make_vec(x, y));
    }
    bool on_mirror = false;
    for (const auto& p : reps) on_mirror = on_mirror || norm.normalize(p)[0] == 0;
    if (on_mirror) continue;
    SymmetricFramework f = SymmetricFramework::from_representatives(g, norm, std::move(reps));
    if (!validate_symmetric(f).valid) continue;
    if (std::holds_alternative<IllPositionedEdges>(colour_edges(f))) continue;
    RigidityReport report = rigidity_report(f);
    const bool hit = target == RandomTarget::kSym    ? report.sym_isostatic
                     : target == RandomTarget::kAnti ? report.anti_isostatic
                                                     : report.inf_rigid;
    if (!hit) continue;
    CharacterizationReport cert = characterize(f);
    return RealizationResult{std::move(f), std::move(cert), report, k, 0};
  }
  throw Exhausted("random_realize found no " + to_string(target) + " placement in " + std::to_string(attempts) +
                  " attempts");
}

}  // namespace gridrig
