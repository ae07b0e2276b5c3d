#include "gridrig/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gridrig/errors.hpp"

namespace gridrig::io {

namespace {

std::string child(const std::string& ptr, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return ptr + "/" + escaped;
}

std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const Json& require_object(const Json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  return j;
}

const Json& field(const Json& obj, const std::string& key, const std::string& ptr) {
  require_object(obj, ptr);
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(child(ptr, key), "missing required field");
  return *it;
}

std::string string_of(const Json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, "expected a string");
  return j.get<std::string>();
}

long integer_of(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  return j.get<long>();
}

int gain_of(const Json& j, const std::string& ptr) {
  const long g = integer_of(j, ptr);
  if (g != 1 && g != -1) throw SchemaError(ptr, "gain must be 1 or -1");
  return static_cast<int>(g);
}

bool bool_of(const Json& j, const std::string& ptr) {
  if (!j.is_boolean()) throw SchemaError(ptr, "expected a boolean");
  return j.get<bool>();
}

std::string string_field(const Json& obj, const std::string& key, const std::string& ptr) {
  return string_of(field(obj, key, ptr), child(ptr, key));
}

template <std::size_t N>
std::array<std::string, N> string_array(const Json& j, const std::string& ptr) {
  require_array(j, ptr);
  if (j.size() != N) throw SchemaError(ptr, "expected " + std::to_string(N) + " entries");
  std::array<std::string, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = string_of(j[i], child(ptr, i));
  return out;
}

std::map<std::string, int> index_map(const Json& j, const std::string& ptr, int limit) {
  require_object(j, ptr);
  std::map<std::string, int> out;
  for (const auto& [key, value] : j.items()) {
    const long k = integer_of(value, child(ptr, key));
    if (k < 0 || k >= limit) throw SchemaError(child(ptr, key), "index out of range");
    out[key] = static_cast<int>(k);
  }
  return out;
}

Attachment attachment_from_json(const Json& j, const std::string& ptr) {
  return Attachment{string_field(j, "id", ptr), string_field(j, "to", ptr), gain_of(field(j, "gain", ptr), child(ptr, "gain"))};
}

Json to_json(const Attachment& a) { return Json{{"id", a.id}, {"to", a.to}, {"gain", a.gain}}; }

Json stats_json(const MatrixStats& s) {
  return Json{{"rows", s.rows}, {"cols", s.cols}, {"rank", s.rank}, {"nullity", s.nullity}};
}

Json edge_ids(const SignedQuotientGraph& q, const std::vector<std::size_t>& edges) {
  Json out = Json::array();
  for (auto i : edges) out.push_back(q.edges()[i].id);
  return out;
}

Json classification_json(const SubgraphClassification& c, const SignedQuotientGraph& q) {
  Json j{{"spanning", c.spanning},
         {"connected", c.connected},
         {"is_tree", c.is_tree},
         {"is_unbalanced_map_graph", c.is_unbalanced_map_graph},
         {"contains_connected_spanning_unbalanced_map_graph", c.contains_connected_spanning_unbalanced_map_graph}};
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json names = Json::array();
    for (int o : comp.orbits) names.push_back(q.orbit_name(o));
    comps.push_back(Json{{"orbits", names}, {"vertices", comp.vertex_count}, {"edges", comp.edge_count},
                         {"balanced", comp.balanced}});
  }
  j["components"] = comps;
  if (c.witness) j["witness"] = edge_ids(q, *c.witness);
  return j;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(ptr, "expected a rational string \"num/den\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw SchemaError(ptr, "malformed rational '" + j.get<std::string>() + "'");
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Vec2 vec_from_json(const Json& j, const std::string& ptr) {
  require_array(j, ptr);
  if (j.size() != 2) throw SchemaError(ptr, "expected two coordinates");
  return {rational_from_json(j[0], child(ptr, 0)), rational_from_json(j[1], child(ptr, 1))};
}

Json to_json(const Vec2& v) { return Json::array({to_json(v[0]), to_json(v[1])}); }

SignedQuotientGraph quotient_from_json(const Json& j, const std::string& ptr) {
  const Json& orbits = require_array(field(j, "orbits", ptr), child(ptr, "orbits"));
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    names.push_back(string_of(orbits[i], child(child(ptr, "orbits"), i)));
    if (!seen.insert(names.back()).second) throw SchemaError(child(child(ptr, "orbits"), i), "duplicate orbit name");
  }
  const std::string eptr = child(ptr, "edges");
  const Json& edges = require_array(field(j, "edges", ptr), eptr);
  std::vector<NamedGainEdge> out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = child(eptr, i);
    NamedGainEdge e{string_field(edges[i], "id", p), string_field(edges[i], "u", p), string_field(edges[i], "v", p),
                    gain_of(field(edges[i], "gain", p), child(p, "gain"))};
    if (!ids.insert(e.id).second) throw SchemaError(child(p, "id"), "duplicate edge id");
    if (!seen.count(e.u)) throw SchemaError(child(p, "u"), "unknown orbit '" + e.u + "'");
    if (!seen.count(e.v)) throw SchemaError(child(p, "v"), "unknown orbit '" + e.v + "'");
    out.push_back(std::move(e));
  }
  return SignedQuotientGraph(std::move(names), out);
}

Json to_json(const SignedQuotientGraph& q) {
  Json edges = Json::array();
  for (const auto& e : q.edges()) {
    edges.push_back(Json{{"id", e.id}, {"u", q.orbit_name(e.u)}, {"v", q.orbit_name(e.v)}, {"gain", e.gain}});
  }
  return Json{{"orbits", q.orbits()}, {"edges", edges}};
}

QuadNorm norm_from_json(const Json& j, const std::string& ptr) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "linf") return QuadNorm::linf();
    if (name == "l1") return QuadNorm::l1();
    throw SchemaError(ptr, "unknown norm preset '" + name + "'");
  }
  return QuadNorm(vec_from_json(field(j, "F1", ptr), child(ptr, "F1")),
                  vec_from_json(field(j, "F2", ptr), child(ptr, "F2")));
}

Json to_json(const QuadNorm& n) { return Json{{"F1", to_json(n.f1hat())}, {"F2", to_json(n.f2hat())}}; }

SymmetricFramework framework_from_json(const Json& j, const std::string& ptr) {
  require_object(j, ptr);
  QuadNorm norm = j.contains("norm") ? norm_from_json(j["norm"], child(ptr, "norm")) : QuadNorm::linf();
  SignedQuotientGraph q = quotient_from_json(field(j, "quotient", ptr), child(ptr, "quotient"));
  const std::string rptr = child(ptr, "reps");
  const Json& reps = require_object(field(j, "reps", ptr), rptr);
  for (const auto& [key, value] : reps.items()) {
    if (!q.find_orbit(key)) throw SchemaError(child(rptr, key), "unknown orbit '" + key + "'");
  }
  std::vector<Vec2> positions;
  for (const auto& name : q.orbits()) {
    positions.push_back(vec_from_json(field(reps, name, rptr), child(rptr, name)));
  }
  return SymmetricFramework::from_representatives(std::move(q), std::move(norm), std::move(positions));
}

Json to_json(const SymmetricFramework& f) {
  Json reps = Json::object();
  const auto& q = f.quotient();
  for (std::size_t i = 0; i < q.orbit_count(); ++i) reps[q.orbits()[i]] = to_json(f.representative(static_cast<int>(i)));
  return Json{{"norm", to_json(f.norm())}, {"quotient", to_json(q)}, {"reps", reps}};
}

Json to_json(const SparsityVerdict& v, const SignedQuotientGraph& q) {
  Json j{{"sparse", v.sparse}, {"tight", v.tight}};
  if (v.witness) {
    Json orbits = Json::array();
    for (int o : v.witness->orbits) orbits.push_back(q.orbit_name(o));
    j["witness"] = Json{{"clause", to_string(v.witness->clause)},
                        {"orbits", orbits},
                        {"edges", edge_ids(q, v.witness->edges)},
                        {"edge_count", v.witness->edge_count},
                        {"bound", v.witness->bound}};
  }
  return j;
}

Json to_json(const RigidityReport& r) {
  return Json{{"well_positioned", r.well_positioned},
              {"counts",
               {{"orbits", r.orbits},
                {"edge_orbits", r.edge_orbits},
                {"non_loop_edge_orbits", r.non_loop_edge_orbits},
                {"fixed_edges", r.fixed_edges},
                {"vertices", r.vertices},
                {"edges", r.edges}}},
              {"df", stats_json(r.df)},
              {"o1", stats_json(r.o1)},
              {"o2", stats_json(r.o2)},
              {"trivial", {{"t", r.trivial.t}, {"t1", r.trivial.t1}, {"t2", r.trivial.t2}}},
              {"inf_rigid", r.inf_rigid},
              {"isostatic", r.isostatic},
              {"sym_rigid", r.sym_rigid},
              {"sym_isostatic", r.sym_isostatic},
              {"anti_rigid", r.anti_rigid},
              {"anti_isostatic", r.anti_isostatic}};
}

Json to_json(const CharacterizationReport& c, const SignedQuotientGraph& q) {
  Json colours = Json::object();
  for (std::size_t i = 0; i < q.edge_count(); ++i) colours[q.edges()[i].id] = to_string(c.decomposition.colour[i]);
  return Json{{"colours", colours},
              {"f1", classification_json(c.f1, q)},
              {"f2", classification_json(c.f2, q)},
              {"f1_cover_spanning_tree", c.f1_cover_spanning_tree},
              {"f2_cover_spanning_tree", c.f2_cover_spanning_tree},
              {"sym_isostatic_c", c.sym_isostatic_c},
              {"anti_isostatic_c", c.anti_isostatic_c},
              {"inf_rigid_c", c.inf_rigid_c},
              {"nonsym_isostatic_c", c.nonsym_isostatic_c}};
}

Move move_from_json(const Json& j, const std::string& ptr) {
  const std::string type = string_field(j, "type", ptr);
  if ((type.size() == 3) && (type.rfind("H1", 0) == 0 || type.rfind("H2", 0) == 0) && type[2] >= 'a' && type[2] <= 'c') {
    if (type[1] == '1') {
      H1Move m;
      m.variant = type[2];
      m.orbit = string_field(j, "orbit", ptr);
      const std::string p = child(ptr, "edges");
      const Json& edges = require_array(field(j, "edges", ptr), p);
      if (edges.size() != 2) throw SchemaError(p, "expected two attachments");
      for (std::size_t i = 0; i < 2; ++i) m.edges[i] = attachment_from_json(edges[i], child(p, i));
      return m;
    }
    H2Move m;
    m.variant = type[2];
    m.orbit = string_field(j, "orbit", ptr);
    m.removed = string_field(j, "removed", ptr);
    const std::string p = child(ptr, "split");
    const Json& split = require_array(field(j, "split", ptr), p);
    if (split.size() != 2) throw SchemaError(p, "expected two attachments");
    for (std::size_t i = 0; i < 2; ++i) m.split[i] = attachment_from_json(split[i], child(p, i));
    m.extra = attachment_from_json(field(j, "extra", ptr), child(ptr, "extra"));
    return m;
  }
  if (type == "VertexToK4") {
    VertexToK4Move m;
    m.orbit = string_field(j, "orbit", ptr);
    m.k4 = string_array<4>(field(j, "k4", ptr), child(ptr, "k4"));
    m.k4_edges = string_array<6>(field(j, "k4_edges", ptr), child(ptr, "k4_edges"));
    m.redistribute = index_map(field(j, "redistribute", ptr), child(ptr, "redistribute"), 4);
    if (j.contains("loop")) {
      const std::string p = child(ptr, "loop");
      m.loop = K4Loop{string_field(j["loop"], "id", p), string_field(j["loop"], "u", p), string_field(j["loop"], "v", p)};
    }
    return m;
  }
  if (type == "EdgeToK3") {
    EdgeToK3Move m;
    m.orbit = string_field(j, "orbit", ptr);
    m.via = string_field(j, "via", ptr);
    m.fresh = string_array<2>(field(j, "fresh", ptr), child(ptr, "fresh"));
    m.new_edges = string_array<3>(field(j, "new_edges", ptr), child(ptr, "new_edges"));
    m.assign = index_map(field(j, "assign", ptr), child(ptr, "assign"), 2);
    return m;
  }
  if (type == "K3Join") {
    const std::string p = child(ptr, "edge");
    const Json& edge = field(j, "edge", ptr);
    K3JoinMove m{quotient_from_json(field(j, "piece", ptr), child(ptr, "piece")),
                 JoinEdge{string_field(edge, "id", p), string_field(edge, "u", p), string_field(edge, "v", p),
                          gain_of(field(edge, "gain", p), child(p, "gain"))},
                 false};
    if (j.contains("generalized")) m.generalized = bool_of(j["generalized"], child(ptr, "generalized"));
    return m;
  }
  throw SchemaError(child(ptr, "type"), "unknown move type '" + type + "'");
}

Json to_json(const Move& move) {
  Json j = std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, H1Move>) {
          return Json{{"orbit", m.orbit}, {"edges", Json::array({to_json(m.edges[0]), to_json(m.edges[1])})}};
        } else if constexpr (std::is_same_v<T, H2Move>) {
          return Json{{"orbit", m.orbit},
                      {"removed", m.removed},
                      {"split", Json::array({to_json(m.split[0]), to_json(m.split[1])})},
                      {"extra", to_json(m.extra)}};
        } else if constexpr (std::is_same_v<T, VertexToK4Move>) {
          Json out{{"orbit", m.orbit}, {"k4", m.k4}, {"k4_edges", m.k4_edges}, {"redistribute", m.redistribute}};
          if (m.loop) out["loop"] = Json{{"id", m.loop->id}, {"u", m.loop->u}, {"v", m.loop->v}};
          return out;
        } else if constexpr (std::is_same_v<T, EdgeToK3Move>) {
          return Json{{"orbit", m.orbit}, {"via", m.via}, {"fresh", m.fresh}, {"new_edges", m.new_edges},
                      {"assign", m.assign}};
        } else {
          return Json{{"piece", to_json(m.piece)},
                      {"edge", {{"id", m.edge.id}, {"u", m.edge.u}, {"v", m.edge.v}, {"gain", m.edge.gain}}},
                      {"generalized", m.generalized}};
        }
      },
      move);
  j["type"] = move_name(move);
  return j;
}

ConstructionSequence sequence_from_json(const Json& j, const std::string& ptr) {
  ConstructionSequence s;
  try {
    s.mode = mode_from_string(string_field(j, "mode", ptr));
  } catch (const InvalidInput& e) {
    throw SchemaError(child(ptr, "mode"), e.what());
  }
  const std::string base = string_field(j, "base", ptr);
  if (base == "UnbalancedLoop") {
    s.base = BaseKind::kUnbalancedLoop;
  } else if (base == "TwoK3MinusEdge") {
    s.base = BaseKind::kTwoK3MinusEdge;
  } else {
    throw SchemaError(child(ptr, "base"), "unknown base '" + base + "'");
  }
  s.base_graph = quotient_from_json(field(j, "base_graph", ptr), child(ptr, "base_graph"));
  const std::string mptr = child(ptr, "moves");
  const Json& moves = require_array(field(j, "moves", ptr), mptr);
  for (std::size_t i = 0; i < moves.size(); ++i) s.moves.push_back(move_from_json(moves[i], child(mptr, i)));
  return s;
}

Json to_json(const ConstructionSequence& s) {
  Json moves = Json::array();
  for (const auto& m : s.moves) moves.push_back(to_json(m));
  return Json{{"mode", to_string(s.mode)}, {"base", to_string(s.base)}, {"base_graph", to_json(s.base_graph)},
              {"moves", moves}};
}

Json to_json(const CrosscheckSummary& s) {
  Json j{{"cases", s.cases},
         {"agreements", s.agreements},
         {"failures", s.failures.size()},
         {"positives",
          {{"sym_isostatic", s.sym_isostatic},
           {"anti_isostatic", s.anti_isostatic},
           {"inf_rigid", s.inf_rigid},
           {"isostatic", s.isostatic}}}};
  if (!s.failures.empty()) {
    Json cases = Json::array();
    for (const auto& f : s.failures) {
      Json dis = Json::array();
      for (const auto& d : f.disagreements) {
        dis.push_back(Json{{"predicate", d.predicate}, {"rank", d.rank_verdict}, {"combinatorial", d.combinatorial_verdict}});
      }
      cases.push_back(Json{{"index", f.index}, {"framework", to_json(f.framework)}, {"disagreements", dis}});
    }
    j["failure_cases"] = cases;
  }
  return j;
}

Mode mode_from_string(const std::string& text) {
  if (text == "sym") return Mode::kSym;
  if (text == "anti") return Mode::kAnti;
  throw InvalidInput("mode must be 'sym' or 'anti', got '" + text + "'");
}

SparsityVariant variant_from_string(const std::string& text) {
  if (text == "221") return SparsityVariant::k221;
  if (text == "220") return SparsityVariant::k220;
  throw InvalidInput("variant must be '221' or '220', got '" + text + "'");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gridrig::io
