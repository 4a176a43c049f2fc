#include "twistpost/json_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "twistpost/error.hpp"

namespace twistpost {

namespace {

// Runs f, turning library-level JSON type errors into ParseError.
template <typename F>
auto guarded(const std::string& what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, fmt::format("{}: {}", what, e.what()));
  }
}

const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorCode::ParseError, fmt::format("missing field '{}'", name));
  return j.at(name);
}

// nlohmann reports a byte offset; convert it to line and column.
std::string parse_location(const std::string& text, const Json::parse_error& e) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::string what = e.what();
  const auto cut = what.find(": ");
  if (cut != std::string::npos) what = what.substr(cut + 2);
  return fmt::format("line {}, column {}: {}", line, col, what);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, parse_location(text, e));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, fmt::format("{}: {}", path, parse_location(text, e)));
  }
}

Json to_json(const OpTable& t) { return t.rows(); }
Json to_json(const MapTable& m) { return m.values(); }

OpTable table_from_json(const Json& j, std::size_t n, const std::string& name) {
  return guarded(name, [&] {
    const auto rows = j.get<std::vector<std::vector<Elem>>>();
    if (rows.size() != n) throw Error(ErrorCode::DimensionMismatch, fmt::format("'{}' has {} rows, expected {}", name, rows.size(), n));
    try {
      return OpTable::from_rows(rows);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("'{}': {}", name, e.what()));
    }
  });
}

MapTable map_from_json(const Json& j, std::size_t n, const std::string& name) {
  return guarded(name, [&] {
    auto v = j.get<std::vector<Elem>>();
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, fmt::format("'{}' has {} entries, expected {}", name, v.size(), n));
    try {
      return MapTable::checked(std::move(v), n);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("'{}': {}", name, e.what()));
    }
  });
}

Json to_json(const FiniteGroup& g) {
  Json j{{"n", g.order()}, {"mul", to_json(g.mul())}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  return guarded("group", [&] {
    const std::size_t n = field(j, "n").get<std::size_t>();
    OpTable mul = table_from_json(field(j, "mul"), n, "mul");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return make_group(mul, std::move(labels));
  });
}

Json to_json(const TwistedPostGroup& t, bool hopf) {
  Json j{{"group", to_json(t.group())}};
  if (t.has_left()) j["tri"] = to_json(t.tri());
  if (t.has_right()) j["tri_right"] = to_json(t.tri_right());
  j["phi"] = to_json(t.phi());
  if (hopf) j["hopf"] = true;
  return j;
}

TpgDocument tpg_from_json(const Json& j) {
  TpgDocument d;
  d.group = group_from_json(field(j, "group"));
  const std::size_t n = d.group.order();
  if (j.contains("tri")) d.tri = table_from_json(j.at("tri"), n, "tri");
  if (j.contains("tri_right")) d.tri_right = table_from_json(j.at("tri_right"), n, "tri_right");
  if (!d.tri && !d.tri_right) throw Error(ErrorCode::ParseError, "need 'tri' or 'tri_right'");
  d.phi = map_from_json(field(j, "phi"), n, "phi");
  d.hopf = guarded("hopf", [&] { return j.value("hopf", false); });
  return d;
}

Json to_json(const SkewTruss& s) {
  return {{"group", to_json(s.group)}, {"circ", to_json(s.circ)}, {"phi", to_json(s.phi)}, {"two_sided", s.two_sided}};
}

TrussDocument truss_from_json(const Json& j) {
  TrussDocument d;
  d.group = group_from_json(field(j, "group"));
  const std::size_t n = d.group.order();
  d.circ = table_from_json(field(j, "circ"), n, "circ");
  if (j.contains("phi")) d.phi = map_from_json(j.at("phi"), n, "phi");
  d.two_sided = guarded("two_sided", [&] { return j.value("two_sided", false); });
  return d;
}

Json to_json(const RotaBaxterSystem& r) {
  return {{"group", to_json(r.group)}, {"b1", to_json(r.b1)}, {"b2", to_json(r.b2)}};
}

RotaBaxterSystem rbs_from_json_unchecked(const Json& j) {
  RotaBaxterSystem r;
  r.group = group_from_json(field(j, "group"));
  r.b1 = map_from_json(field(j, "b1"), r.group.order(), "b1");
  r.b2 = map_from_json(field(j, "b2"), r.group.order(), "b2");
  return r;
}

Json to_json(const SkewBrace& b) {
  return {{"group", to_json(b.group)}, {"circ", to_json(b.circ)}, {"side", to_string(b.side)}};
}

SkewBrace brace_from_json_unchecked(const Json& j) {
  SkewBrace b;
  b.group = group_from_json(field(j, "group"));
  b.circ = table_from_json(field(j, "circ"), b.group.order(), "circ");
  const std::string side = guarded("side", [&] { return j.value("side", std::string("left")); });
  const auto s = brace_side_from_string(side);
  if (!s) throw Error(ErrorCode::ParseError, "side must be left, right or two_sided, got '" + side + "'");
  b.side = *s;
  return b;
}

Json to_json(const RadicalRing& r) {
  return {{"n", r.add.order()}, {"add", to_json(r.add.mul())}, {"star", to_json(r.star)}};
}

RingDocument ring_from_json(const Json& j) {
  const std::size_t n = guarded("n", [&] { return field(j, "n").get<std::size_t>(); });
  return {table_from_json(field(j, "add"), n, "add"), table_from_json(field(j, "star"), n, "star")};
}

Json to_json(const YBESolution& s) {
  Json rows = Json::array();
  for (Elem a = 0; a < s.n; ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < s.n; ++b) row.push_back({s(a, b).first, s(a, b).second});
    rows.push_back(std::move(row));
  }
  return {{"n", s.n}, {"r", std::move(rows)}};
}

YBESolution ybe_from_json(const Json& j) {
  return guarded("r", [&] {
    YBESolution s;
    s.n = field(j, "n").get<std::size_t>();
    const auto rows = field(j, "r").get<std::vector<std::vector<std::pair<Elem, Elem>>>>();
    if (rows.size() != s.n) throw Error(ErrorCode::DimensionMismatch, "'r' must have n rows");
    for (const auto& row : rows) {
      if (row.size() != s.n) throw Error(ErrorCode::DimensionMismatch, "'r' rows must have n entries");
      for (const auto& p : row) {
        if (p.first >= s.n || p.second >= s.n) throw Error(ErrorCode::InvalidTable, "'r' entry out of range");
        s.r.push_back(p);
      }
    }
    return s;
  });
}

namespace {

Json tensor_to_json(const StructureTensor& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < t.dim(); ++k) row.push_back(to_string(t(i, j, k)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

StructureTensor tensor_from_json(const Json& j, std::size_t d, const std::string& name) {
  return guarded(name, [&] {
    StructureTensor t(d);
    if (!j.is_array() || j.size() != d) throw Error(ErrorCode::DimensionMismatch, fmt::format("'{}' must be {}x{}x{}", name, d, d, d));
    for (std::size_t i = 0; i < d; ++i) {
      if (!j[i].is_array() || j[i].size() != d) throw Error(ErrorCode::DimensionMismatch, fmt::format("'{}' plane {} has wrong size", name, i));
      for (std::size_t k = 0; k < d; ++k) {
        if (!j[i][k].is_array() || j[i][k].size() != d)
          throw Error(ErrorCode::DimensionMismatch, fmt::format("'{}' row {},{} has wrong size", name, i, k));
        for (std::size_t l = 0; l < d; ++l) t.at(i, k, l) = rational_from_json(j[i][k][l]);
      }
    }
    return t;
  });
}

}  // namespace

Json to_json(const TwistedPostLieAlgebra& L) {
  Json phi = Json::array();
  for (const auto& row : L.phi) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    phi.push_back(std::move(r));
  }
  return {{"dim", L.dim}, {"bracket", tensor_to_json(L.bracket)}, {"tri", tensor_to_json(L.tri)}, {"phi", std::move(phi)}};
}

TwistedPostLieAlgebra lie_from_json(const Json& j) {
  TwistedPostLieAlgebra L;
  L.dim = guarded("dim", [&] { return field(j, "dim").get<std::size_t>(); });
  L.bracket = tensor_from_json(field(j, "bracket"), L.dim, "bracket");
  L.tri = tensor_from_json(field(j, "tri"), L.dim, "tri");
  const Json& phi = field(j, "phi");
  guarded("phi", [&] {
    if (!phi.is_array() || phi.size() != L.dim) throw Error(ErrorCode::DimensionMismatch, "'phi' must be dim x dim");
    for (const auto& row : phi) {
      if (!row.is_array() || row.size() != L.dim) throw Error(ErrorCode::DimensionMismatch, "'phi' must be dim x dim");
      Vec v;
      for (const auto& q : row) v.push_back(rational_from_json(q));
      L.phi.push_back(std::move(v));
    }
    return 0;
  });
  return L;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"ok", c.ok}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return {{"ok", r.ok()}, {"checks", std::move(checks)}};
}

const char* to_string(DocumentType d) {
  switch (d) {
    case DocumentType::Group: return "group";
    case DocumentType::Tpg: return "tpg";
    case DocumentType::Truss: return "truss";
    case DocumentType::Rbs: return "rbs";
    case DocumentType::Brace: return "brace";
    case DocumentType::Ring: return "ring";
    case DocumentType::Ybe: return "ybe";
    case DocumentType::Lie: return "lie";
  }
  return "?";
}

DocumentType detect_document(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "document must be a JSON object");
  if (j.contains("dim")) return DocumentType::Lie;
  if (j.contains("r")) return DocumentType::Ybe;
  if (j.contains("star")) return DocumentType::Ring;
  if (j.contains("b1") || j.contains("b2")) return DocumentType::Rbs;
  if (j.contains("tri") || j.contains("tri_right")) return DocumentType::Tpg;
  if (j.contains("circ") && j.contains("side")) return DocumentType::Brace;
  if (j.contains("circ")) return DocumentType::Truss;
  if (j.contains("mul")) return DocumentType::Group;
  throw Error(ErrorCode::ParseError, "unrecognized document: no known schema keys");
}

}  // namespace twistpost
