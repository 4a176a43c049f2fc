#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "twistpost/brace.hpp"
#include "twistpost/lie.hpp"
#include "twistpost/rota_baxter.hpp"
#include "twistpost/tpg.hpp"
#include "twistpost/truss.hpp"

namespace twistpost {

using Json = nlohmann::json;

/// Reads a whole file. Throws IoError, or ParseError with line and column.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// {"n", "mul", "labels"?}; identity and inverses are recomputed on load.
/// On load a string such as "cyclic(4)" is accepted as a builtin spec.
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const OpTable& t);
Json to_json(const MapTable& m);
OpTable table_from_json(const Json& j, std::size_t n, const std::string& field);
MapTable map_from_json(const Json& j, std::size_t n, const std::string& field);

/// Unverified tables as read from a file; callers classify.
struct TpgDocument {
  FiniteGroup group;
  std::optional<OpTable> tri;
  std::optional<OpTable> tri_right;
  MapTable phi;
  bool hopf = false;
};

/// {"group", "tri"?, "tri_right"?, "phi", "hopf"?}
Json to_json(const TwistedPostGroup& t, bool hopf = false);
TpgDocument tpg_from_json(const Json& j);

struct TrussDocument {
  FiniteGroup group;
  OpTable circ;
  std::optional<MapTable> phi;  // absent: infer from o
  bool two_sided = false;
};

/// {"group", "circ", "phi", "two_sided"}
Json to_json(const SkewTruss& s);
TrussDocument truss_from_json(const Json& j);

/// {"group", "b1", "b2"}
Json to_json(const RotaBaxterSystem& r);
RotaBaxterSystem rbs_from_json_unchecked(const Json& j);

/// {"group", "circ", "side": "left|right|two_sided"}
Json to_json(const SkewBrace& b);
SkewBrace brace_from_json_unchecked(const Json& j);

struct RingDocument {
  OpTable add;
  OpTable star;
};

/// {"n", "add", "star"}
Json to_json(const RadicalRing& r);
RingDocument ring_from_json(const Json& j);

/// {"n", "r": [[[x, y], ...], ...]}
Json to_json(const YBESolution& s);
YBESolution ybe_from_json(const Json& j);

/// {"dim", "bracket", "tri", "phi"} with rationals as "p/q" strings.
Json to_json(const TwistedPostLieAlgebra& L);
TwistedPostLieAlgebra lie_from_json(const Json& j);

Json to_json(const Report& r);

enum class DocumentType { Group, Tpg, Truss, Rbs, Brace, Ring, Ybe, Lie };
const char* to_string(DocumentType d);

/// Decides the schema from the keys present. Throws ParseError.
DocumentType detect_document(const Json& j);

}  // namespace twistpost
