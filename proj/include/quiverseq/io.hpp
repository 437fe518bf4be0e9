#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quiverseq/admissible.hpp"
#include "quiverseq/graph.hpp"
#include "quiverseq/linalg.hpp"
#include "quiverseq/rep.hpp"
#include "quiverseq/weyl.hpp"

namespace quiverseq::io {

using nlohmann::json;

// {"n": 3, "arrows": [[1,2],[2,3]]} or {"cartan": [[...]], "arrows": [...]}.
// In the second form the arrows must realize the Cartan matrix exactly.
Quiver quiver_from_json(const json& j);
json to_json(const Quiver& q);

// {"cartan": [[...]]}; a quiver document is accepted as well.
CartanMatrix cartan_from_json(const json& j);
json cartan_to_json(const CartanMatrix& a);

// Integers stay JSON numbers, everything else becomes a "p/q" string.
Rational rational_from_json(const json& j);
json to_json(const Rational& x);

// {"quiver": {...}, "dims": [...], "maps": [{"arrow": i, "matrix": [[...]]}]}
// with 0-based arrow indices into the quiver's "arrows" list.  Arrows left out
// of "maps" get zero matrices.
Representation representation_from_json(const json& j);
json to_json(const Representation& m);

json to_json(const RootVector& v);

json read_json_file(const std::string& path);

// "3,2,3"; the empty string is the empty list.
std::vector<Vertex> parse_vertex_list(std::string_view text);
std::string format_vertex_list(const std::vector<Vertex>& xs);
std::string format_vertex_set(const VertexSet& xs);
// "3,2,1 | 3"; the empty sequence renders as "()".
std::string format_canonical(const CanonicalForm& c);
std::string format_canonical(const AdmissibleSeq& s);
std::string format_root(const RootVector& v);
std::string format_dims(const DimVector& d);

}  // namespace quiverseq::io
