#pragma once

/// @file json_io.hpp
/// JSON encodings of every value type. Readers throw InvalidInput on
/// malformed input and SemanticError on well-formed but invalid values.

#include <json.hpp>
#include <optional>

#include "arcalg/arc.hpp"
#include "arcalg/decoration.hpp"
#include "arcalg/diagram_maps.hpp"
#include "arcalg/hopf.hpp"
#include "arcalg/permutation.hpp"

namespace arcalg {

/// Keys keep insertion order so output follows the documented schemas.
using Json = nlohmann::ordered_json;

/// Parses text, throwing InvalidInput on a syntax error.
Json parse_json(const std::string& text);

Json to_json(const Permutation& p);
/// Accepts an integer array or a digit string.
Permutation permutation_from_json(const Json& j);

Json to_json(const Arc& arc);
Arc arc_from_json(const Json& j, int n, bool extended);

Json to_json(const NoncrossingArcDiagram& d);
NoncrossingArcDiagram diagram_from_json(const Json& j);

Json to_json(const ArcIdeal& ideal);
/// {"n", "extended", "arcs"} read as a raw arc set, without closure checks.
ArcSet arc_set_from_json(const Json& j, int& n);
/// Accepts {"n", "extended", "arcs"} or {"type": "walls", ...}. Non-closed
/// arc sets raise SemanticError unless `close` is set.
ArcIdeal ideal_from_json(const Json& j, bool close = false);

Json to_json(const WallSpec& w);
/// {"k", "N", "S", "E", "W"}; n is the common length.
WallSpec walls_from_json(const Json& j);

Json to_json(const Decoration& x);
Decoration decoration_from_json(const Json& j);

Json to_json(const ConservativeMap& m);
/// Accepts the object form or a shorthand string such as "walls" or
/// "preset:tamari".
ConservativeMap map_from_json(const Json& j);

Json to_json(const DecoratedPermutation& k);
DecoratedPermutation decorated_permutation_from_json(const Json& j);
Json to_json(const DecoratedDiagram& k);
DecoratedDiagram decorated_diagram_from_json(const Json& j);

template <class Key>
Json to_json(const LinComb<Key>& c) {
  Json out = Json::array();
  for (const auto& [k, coeff] : c) out.push_back(Json{{"coeff", coeff}, {"key", to_json(k)}});
  return out;
}

template <class Key>
Json to_json(const TensorComb<Key>& c) {
  Json out = Json::array();
  for (const auto& [t, coeff] : c) {
    out.push_back(Json{{"coeff", coeff}, {"left", to_json(t.left)}, {"right", to_json(t.right)}});
  }
  return out;
}

Json to_json(const CheckReport& r);
Json to_json(const CongruenceClass& c);
Json to_json(const CongruenceReport& r);

}  // namespace arcalg
