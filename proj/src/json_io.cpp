#include "arcalg/json_io.hpp"

#include "arcalg/error.hpp"

namespace arcalg {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InvalidInput(std::string("expected an object with field \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + name + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InvalidInput(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<int> as_int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& v : j) out.push_back(as_int(v, what));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Permutation& p) { return Json(p.values()); }

Permutation permutation_from_json(const Json& j) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>());
  return Permutation(as_int_vector(j, "permutation"));
}

Json to_json(const Arc& arc) {
  return Json{{"a", arc.a}, {"b", arc.b}, {"n", arc.n}, {"above", arc.above.elements()}};
}

Arc arc_from_json(const Json& j, int n, bool extended) {
  int arc_n = j.contains("n") ? as_int(j["n"], "arc n") : n;
  if (arc_n != n) throw InvalidInput("arc size " + std::to_string(arc_n) + " differs from " + std::to_string(n));
  std::vector<int> above = j.contains("above") ? as_int_vector(j["above"], "above") : std::vector<int>{};
  for (int p : above) {
    if (p < 0 || p >= 32) throw InvalidInput("point out of range in \"above\"");
  }
  return Arc::make(as_int(field(j, "a"), "a"), as_int(field(j, "b"), "b"), n,
                   PointSet::from_vector(above), extended);
}

Json to_json(const NoncrossingArcDiagram& d) {
  Json arcs = Json::array();
  for (const Arc& arc : d.arcs()) arcs.push_back(to_json(arc));
  return Json{{"n", d.n()}, {"arcs", arcs}};
}

NoncrossingArcDiagram diagram_from_json(const Json& j) {
  int n = as_int(field(j, "n"), "n");
  if (n < 0 || n > kMaxGroundSize) throw InvalidInput("diagram size out of range");
  std::vector<Arc> arcs;
  const Json& list = field(j, "arcs");
  if (!list.is_array()) throw InvalidInput("\"arcs\" must be an array");
  for (const Json& a : list) arcs.push_back(arc_from_json(a, n, false));
  return NoncrossingArcDiagram(n, ArcSet(std::move(arcs)));
}

Json to_json(const ArcIdeal& ideal) {
  Json arcs = Json::array();
  for (const Arc& arc : ideal.arcs()) arcs.push_back(to_json(arc));
  return Json{{"n", ideal.n()}, {"extended", ideal.extended()}, {"arcs", arcs}};
}

namespace {

bool extended_flag(const Json& j) {
  if (!j.contains("extended")) return false;
  if (!j["extended"].is_boolean()) throw InvalidInput("\"extended\" must be a boolean");
  return j["extended"].get<bool>();
}

}  // namespace

ArcSet arc_set_from_json(const Json& j, int& n) {
  n = as_int(field(j, "n"), "n");
  if (n < 0 || n > kMaxGroundSize) throw InvalidInput("ideal size out of range");
  bool extended = extended_flag(j);
  const Json& list = field(j, "arcs");
  if (!list.is_array()) throw InvalidInput("\"arcs\" must be an array");
  std::vector<Arc> arcs;
  for (const Json& a : list) arcs.push_back(arc_from_json(a, n, extended));
  return ArcSet(std::move(arcs));
}

ArcIdeal ideal_from_json(const Json& j, bool close) {
  if (j.is_object() && j.contains("type")) {
    std::string type = as_string(j["type"], "type");
    if (type != "walls") throw InvalidInput("unknown ideal type: " + type);
    return bounded_crossing_ideal(walls_from_json(j));
  }
  int n = 0;
  ArcSet set = arc_set_from_json(j, n);
  bool extended = extended_flag(j);
  if (close) return ArcIdeal::closure_of(n, set, extended);
  if (!is_ideal(set)) {
    ArcSet missing = forcing_closure(set).minus(set);
    throw SemanticError("arc set is not closed under forcing (missing " + missing[0].to_string() +
                        "); pass --close to apply the forcing closure");
  }
  return ArcIdeal(n, std::move(set), extended);
}

Json to_json(const WallSpec& w) {
  return Json{{"type", "walls"}, {"k", w.k}, {"N", w.north}, {"S", w.south}, {"E", w.east}, {"W", w.west}};
}

WallSpec walls_from_json(const Json& j) {
  WallSpec w;
  w.k = j.contains("k") ? as_int(j["k"], "k") : 1;
  w.north = as_int_vector(field(j, "N"), "N");
  w.south = as_int_vector(field(j, "S"), "S");
  w.east = as_int_vector(field(j, "E"), "E");
  w.west = as_int_vector(field(j, "W"), "W");
  w.n = static_cast<int>(w.north.size());
  w.validate();
  return w;
}

Json to_json(const Decoration& x) {
  switch (x.kind()) {
    case DecorationKind::kWord: return Json{{"kind", "word"}, {"letters", x.as_word()->letters}};
    case DecorationKind::kWalls: {
      const WallSpec& w = x.as_walls()->walls;
      return Json{{"kind", "walls"}, {"k", w.k}, {"N", w.north}, {"S", w.south}, {"E", w.east}, {"W", w.west}};
    }
    case DecorationKind::kExtIdeal:
      return Json{{"kind", "extideal"}, {"ideal", to_json(x.as_ext_ideal()->ideal)}};
    case DecorationKind::kPair:
      return Json{{"kind", "pair"}, {"left", to_json(*x.as_pair()->left)}, {"right", to_json(*x.as_pair()->right)}};
  }
  return Json();
}

Decoration decoration_from_json(const Json& j) {
  std::string kind = as_string(field(j, "kind"), "kind");
  if (kind == "word") return Decoration::word(as_string(field(j, "letters"), "letters"));
  if (kind == "walls") return Decoration::walls(walls_from_json(j));
  if (kind == "extideal") {
    ArcIdeal ideal = ideal_from_json(field(j, "ideal"));
    if (!ideal.extended()) throw InvalidInput("extideal decoration needs \"extended\": true");
    return Decoration::ext_ideal(std::move(ideal));
  }
  if (kind == "pair") {
    return Decoration::pair(decoration_from_json(field(j, "left")), decoration_from_json(field(j, "right")));
  }
  throw InvalidInput("unknown decoration kind: " + kind);
}

Json to_json(const ConservativeMap& m) {
  using K = ConservativeMap::Kind;
  switch (m.kind()) {
    case K::kFull: return Json{{"map", "full"}};
    case K::kDown: return Json{{"map", "down"}};
    case K::kPreset: return Json{{"map", "preset"}, {"preset", m.parameter()}};
    case K::kWalls: return Json{{"map", "walls"}};
    case K::kStrict: return Json{{"map", "strict"}};
    case K::kIntersect:
      return Json{{"map", "intersect"}, {"left", to_json(m.children()[0])}, {"right", to_json(m.children()[1])}};
    case K::kRestrict:
      return Json{{"map", "restrict"}, {"inner", to_json(m.children()[0])}, {"predicate", m.parameter()}};
  }
  return Json();
}

ConservativeMap map_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "full") return ConservativeMap::full();
    if (s == "down") return ConservativeMap::down();
    if (s == "walls") return ConservativeMap::walls();
    if (s == "strict") return ConservativeMap::strict();
    if (s.rfind("preset:", 0) == 0) return ConservativeMap::preset(s.substr(7));
    return ConservativeMap::preset(s);
  }
  std::string kind = as_string(field(j, "map"), "map");
  if (kind == "full") return ConservativeMap::full();
  if (kind == "down") return ConservativeMap::down();
  if (kind == "walls") return ConservativeMap::walls();
  if (kind == "strict") return ConservativeMap::strict();
  if (kind == "preset") return ConservativeMap::preset(as_string(field(j, "preset"), "preset"));
  if (kind == "intersect") {
    return ConservativeMap::intersect(map_from_json(field(j, "left")), map_from_json(field(j, "right")));
  }
  if (kind == "restrict") {
    return ConservativeMap::restrict(map_from_json(field(j, "inner")),
                                     as_string(field(j, "predicate"), "predicate"));
  }
  throw InvalidInput("unknown map: " + kind);
}

Json to_json(const DecoratedPermutation& k) { return Json{{"perm", to_json(k.perm)}, {"dec", to_json(k.dec)}}; }

DecoratedPermutation decorated_permutation_from_json(const Json& j) {
  return DecoratedPermutation(permutation_from_json(field(j, "perm")), decoration_from_json(field(j, "dec")));
}

Json to_json(const DecoratedDiagram& k) {
  return Json{{"diagram", to_json(k.diagram)}, {"dec", to_json(k.dec)}, {"map", to_json(k.map)}};
}

DecoratedDiagram decorated_diagram_from_json(const Json& j) {
  return DecoratedDiagram(diagram_from_json(field(j, "diagram")), decoration_from_json(field(j, "dec")),
                          map_from_json(field(j, "map")));
}

Json to_json(const CheckReport& r) {
  Json out{{"check", r.check}, {"status", r.pass ? "PASS" : "FAIL"}, {"cases", r.cases},
           {"exhaustive", r.exhaustive}};
  if (!r.pass) out["witness"] = r.witness;
  return out;
}

Json to_json(const CongruenceClass& c) {
  Json members = Json::array();
  for (const Permutation& p : c.members) members.push_back(to_json(p));
  return Json{{"diagram", to_json(c.diagram)}, {"min", to_json(c.bottom)}, {"max", to_json(c.top)},
              {"size", c.members.size()}, {"members", members}};
}

Json to_json(const CongruenceReport& r) {
  return Json{{"check", "congruence"},
              {"status", r.pass() ? "PASS" : "FAIL"},
              {"classes", r.class_count},
              {"classes_are_intervals", r.classes_are_intervals},
              {"projections_order_preserving", r.projections_order_preserving},
              {"respects_join", r.respects_join},
              {"respects_meet", r.respects_meet},
              {"witnesses", r.witnesses}};
}

}  // namespace arcalg
