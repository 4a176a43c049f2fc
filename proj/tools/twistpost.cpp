#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "twistpost/brace.hpp"
#include "twistpost/catalog.hpp"
#include "twistpost/enumerate.hpp"
#include "twistpost/error.hpp"
#include "twistpost/hopf.hpp"
#include "twistpost/json_io.hpp"
#include "twistpost/lie.hpp"
#include "twistpost/rota_baxter.hpp"
#include "twistpost/selftest.hpp"
#include "twistpost/truss.hpp"

using namespace twistpost;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool g_json = false;

// Input and environment problems are usage errors; everything else the
// library raises means the input does not have the claimed structure.
int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::InvalidTable:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnsupportedOrder:
    case ErrorCode::BoundExceeded:
      return kUsage;
    default:
      return kFail;
  }
}

struct Outcome {
  bool ok = true;
  Json doc;
  std::string text;
};

void add_report(Outcome& o, const std::string& key, const Report& r) {
  o.ok = o.ok && r.ok();
  o.doc["reports"][key] = to_json(r);
  o.text += fmt::format("{}: {}\n{}", key, r.ok() ? "ok" : "FAILED", r.summary());
}

// Bijectivity failing only demotes a side to weak, so the section header
// shows the kind reached rather than a bare pass/fail.
void add_side(Outcome& o, const std::string& key, const SideReport& s) {
  o.doc["reports"][key] = to_json(s.axioms);
  const char* status = s.twisted() ? "twisted" : s.weak() ? "weak" : "FAILED";
  o.text += fmt::format("{}: {}\n{}", key, status, s.axioms.summary());
}

// Objects one key per line, arrays of scalars on a single line.
void pretty(const Json& j, std::string& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + "  " + Json(it.key()).dump() + ": ";
      pretty(it.value(), out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad + "  ";
      pretty(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string pretty(const Json& j) {
  std::string out;
  pretty(j, out, 0);
  return out + "\n";
}

std::string kind_label(Kind k, const MapTable& phi) {
  std::string s = to_string(k);
  if (phi == MapTable::identity(phi.size()) && (k == Kind::LeftTwisted || k == Kind::RightTwisted || k == Kind::TwoSidedTwisted))
    s += " (post group)";
  return s;
}

int emit(const Outcome& o) {
  if (g_json)
    std::cout << pretty(o.doc);
  else
    std::cout << o.text;
  return o.ok ? kPass : kFail;
}

std::optional<Kind> side_kind(const SideReport& s) {
  if (s.twisted()) return s.left ? Kind::LeftTwisted : Kind::RightTwisted;
  if (s.weak()) return s.left ? Kind::LeftWeak : Kind::RightWeak;
  return std::nullopt;
}

TwistedPostGroup load_tpg(const Json& j) {
  if (detect_document(j) != DocumentType::Tpg) throw Error(ErrorCode::ParseError, "expected a twisted post group document");
  TpgDocument d = tpg_from_json(j);
  return TwistedPostGroup::from_tables(std::move(d.group), std::move(d.tri), std::move(d.tri_right), std::move(d.phi));
}

Outcome verify_tpg(const TpgDocument& d, const std::string& kind) {
  Outcome o;
  o.doc["type"] = "tpg";
  std::string want = kind;
  if (want == "auto") want = d.tri && d.tri_right ? "two-sided" : d.tri ? "left" : "right";
  std::optional<Kind> found;
  if (want == "two-sided") {
    if (!d.tri || !d.tri_right) throw Error(ErrorCode::ParseError, "two-sided verification needs 'tri' and 'tri_right'");
    const TwoSidedReport r = classify_two_sided(d.group, *d.tri, *d.tri_right, d.phi);
    add_side(o, "left", r.left);
    add_side(o, "right", r.right);
    Report same;
    same.checks.push_back(r.same_circ);
    add_report(o, "two_sided", same);
    found = r.kind;
    o.ok = r.kind.has_value();
  } else if (want == "left" || want == "right") {
    const bool left = want == "left";
    const auto& table = left ? d.tri : d.tri_right;
    if (!table) throw Error(ErrorCode::ParseError, fmt::format("{} verification needs '{}'", want, left ? "tri" : "tri_right"));
    const SideReport s = left ? classify(d.group, *table, d.phi) : classify_right(d.group, *table, d.phi);
    add_side(o, want, s);
    found = side_kind(s);
    o.ok = found.has_value();
  } else {
    throw Error(ErrorCode::ParseError, "unknown kind " + kind);
  }
  if (found) {
    o.doc["kind"] = to_string(*found);
    o.text = kind_label(*found, d.phi) + "\n" + o.text;
    if (d.hopf) {
      const TwistedPostGroup t = TwistedPostGroup::from_tables(d.group, d.tri, d.tri_right, d.phi);
      add_report(o, "hopf", linearize(t).checks());
    }
  } else {
    o.doc["kind"] = nullptr;
    o.text = "not a twisted post group\n" + o.text;
  }
  o.doc["ok"] = o.ok;
  return o;
}

Outcome verify_document(const Json& j, const std::string& kind) {
  const DocumentType type = detect_document(j);
  if (type == DocumentType::Tpg) return verify_tpg(tpg_from_json(j), kind);
  if (kind != "auto") throw Error(ErrorCode::ParseError, "--kind applies to twisted post group documents only");
  Outcome o;
  o.doc["type"] = to_string(type);
  switch (type) {
    case DocumentType::Group: {
      try {
        const FiniteGroup g = group_from_json(j);
        o.text = fmt::format("group of order {}\n", g.order());
      } catch (const Error& e) {
        if (exit_code_for(e.code()) == kUsage) throw;
        Report r;
        r.add("group_axioms", false, {}, e.what());
        add_report(o, "group", r);
      }
      break;
    }
    case DocumentType::Truss: {
      const TrussDocument d = truss_from_json(j);
      const MapTable phi = d.phi ? *d.phi : infer_cocycle(d.group, d.circ);
      add_report(o, "truss", verify_truss(d.group, d.circ, phi, d.two_sided));
      break;
    }
    case DocumentType::Rbs: {
      const RotaBaxterSystem r = rbs_from_json_unchecked(j);
      add_report(o, "rbs", verify_rbs(r.group, r.b1, r.b2));
      break;
    }
    case DocumentType::Brace: {
      const SkewBrace b = brace_from_json_unchecked(j);
      add_report(o, "brace", verify_brace(b.group, b.circ, b.side));
      break;
    }
    case DocumentType::Ring: {
      const RingDocument d = ring_from_json(j);
      add_report(o, "ring", verify_radical_ring(d.add, d.star));
      break;
    }
    case DocumentType::Ybe:
      add_report(o, "ybe", verify_ybe(ybe_from_json(j)));
      break;
    case DocumentType::Lie:
      add_report(o, "tpla", verify_tpla(lie_from_json(j)));
      break;
    case DocumentType::Tpg:
      break;
  }
  o.doc["ok"] = o.ok;
  o.text = (o.ok ? std::string("verified ") : std::string("FAILED ")) + to_string(type) + "\n" + o.text;
  return o;
}

Outcome convert_document(const Json& j, const std::string& to) {
  const DocumentType type = detect_document(j);
  Outcome o;
  auto out = [&](Json doc) {
    o.doc = std::move(doc);
    o.text = pretty(o.doc);
  };
  if (to == "tpg") {
    switch (type) {
      case DocumentType::Tpg: out(to_json(load_tpg(j))); break;
      case DocumentType::Truss: {
        TrussDocument d = truss_from_json(j);
        MapTable phi = d.phi ? *d.phi : infer_cocycle(d.group, d.circ);
        out(to_json(truss_to_weak_tpg(make_truss(std::move(d.group), std::move(d.circ), std::move(phi), d.two_sided))));
        break;
      }
      case DocumentType::Rbs: {
        RotaBaxterSystem r = rbs_from_json_unchecked(j);
        out(to_json(rbs_to_tpg(make_rbs(std::move(r.group), std::move(r.b1), std::move(r.b2)))));
        break;
      }
      case DocumentType::Brace: {
        SkewBrace b = brace_from_json_unchecked(j);
        out(to_json(brace_to_tpg(make_brace(std::move(b.group), std::move(b.circ), b.side))));
        break;
      }
      default: throw Error(ErrorCode::ParseError, fmt::format("cannot convert a {} document to tpg", to_string(type)));
    }
    return o;
  }
  const TwistedPostGroup t = load_tpg(j);
  if (to == "truss") {
    out(to_json(tpg_to_truss(t)));
  } else if (to == "rbs") {
    const Reconstruction rec = reconstruct_rbs(t);
    if (rec.not_inner) throw Error(ErrorCode::NotInner, fmt::format("L_{} is not an inner automorphism", *rec.not_inner));
    out(to_json(rec.solutions.front()));
  } else if (to == "brace") {
    out(to_json(t.kind() == Kind::TwoSidedTwisted ? two_sided_brace(t) : to_skew_brace(t)));
  } else if (to == "ring") {
    out(to_json(to_radical_ring(t)));
  } else if (to == "hopf") {
    const GroupAlgebraTPHA h = linearize(t);
    if (!h.checks().ok()) throw Error(ErrorCode::InternalInconsistency, h.checks().failure_message());
    out(to_json(t, true));
  } else if (to == "ybe") {
    out(to_json(yang_baxter_map(t)));
  } else {
    throw Error(ErrorCode::ParseError, "unknown target " + to);
  }
  return o;
}

Outcome decompose_document(const Json& j) {
  const TwistedPostGroup t = load_tpg(j);
  const Decomposition d = decompose(t);
  Outcome o;
  o.doc = {{"components", d.components},
           {"idempotents", d.idempotents},
           {"sub_adjacent_group", d.sub_adjacent_group},
           {"psi_group", to_json(d.psi_group)},
           {"psi_idempotent", to_json(d.psi_idempotent)}};
  o.text = fmt::format("{} component(s), |G_1| = {}, |K| = {}\n", d.components.size(), d.sub_adjacent_group.size(),
                       d.idempotents.size());
  for (const auto& c : d.components) o.text += fmt::format("  {{{}}}\n", fmt::join(c, ", "));
  add_report(o, "decomposition", d.checks);
  o.doc["ok"] = o.ok;
  return o;
}

// Every suite whose preconditions the structure meets; skipped suites are
// listed with the reason.
Outcome laws_document(const Json& j) {
  Outcome o;
  auto skip = [&](const std::string& suite, const std::string& why) {
    o.doc["skipped"][suite] = why;
    o.text += fmt::format("{}: skipped ({})\n", suite, why);
  };
  if (detect_document(j) == DocumentType::Lie) {
    const TwistedPostLieAlgebra L = lie_from_json(j);
    const Report base = verify_tpla(L);
    add_report(o, "tpla", base);
    if (base.ok()) {
      add_report(o, "sub_adjacent_bracket", sub_adjacent_bracket(L).checks);
      add_report(o, "phi_image", phi_image_subalgebra(L).checks);
    }
    o.doc["ok"] = o.ok;
    return o;
  }
  const TwistedPostGroup t = load_tpg(j);
  o.text = kind_label(t.kind(), t.phi()) + "\n";
  o.doc["kind"] = to_string(t.kind());
  const bool left_twisted = t.kind() == Kind::LeftTwisted || t.kind() == Kind::TwoSidedTwisted;
  if (t.is_left_kind()) {
    Report rt;
    rt.add("truss_roundtrip", roundtrip_check(t));
    const auto div = is_right_divisible(tpg_to_truss(t));
    rt.add("right_divisible_iff_twisted", div.ok == t.is_twisted(), div.witness ? std::vector<Elem>{*div.witness} : std::vector<Elem>{});
    add_report(o, "truss", rt);
  }
  if (!left_twisted) {
    skip("subadjacent_laws", "needs a twisted left structure");
  } else {
    add_report(o, "subadjacent_laws", check_subadjacent_laws(t));
    add_report(o, "decomposition", decompose(t).checks);
    add_report(o, "cocycle_lemmas", cocycle_lemmas(t));
    const Reconstruction rec = reconstruct_rbs(t);
    if (rec.not_inner) {
      skip("rota_baxter", fmt::format("L_{} is not inner", *rec.not_inner));
    } else {
      Report rr;
      for (std::size_t i = 0; i < rec.solutions.size(); ++i) {
        const auto& s = rec.solutions[i];
        const TwistedPostGroup back = rbs_to_tpg(s);
        rr.add(fmt::format("solution_{}", i), verify_rbs(s.group, s.b1, s.b2).ok() && back.tri() == t.tri() && back.phi() == t.phi());
      }
      add_report(o, "rota_baxter", rr);
    }
    const TwistedPostGroup u = idempotent_transform(t);
    Report tr;
    tr.add("psi_idempotent", u.phi().after(u.phi()) == u.phi());
    tr.add("left_twisted", u.kind() == Kind::LeftTwisted);
    add_report(o, "idempotent_transform", tr);
    if (t.phi().image_size() != t.order()) {
      skip("brace", "Phi is not surjective");
      skip("ybe", "Phi is not surjective");
    } else {
      const SkewBrace b = t.kind() == Kind::TwoSidedTwisted ? two_sided_brace(t) : to_skew_brace(t);
      add_report(o, "brace", verify_brace(b.group, b.circ, b.side));
      add_report(o, "ybe", verify_ybe(yang_baxter_map(t)));
    }
    if (t.phi()[t.group().identity()] != t.group().identity()) {
      skip("hopf", "Phi(1) != 1");
    } else {
      const GroupAlgebraTPHA h = linearize(t);
      add_report(o, "hopf", h.checks());
      add_report(o, "hopf_truss", hopf_truss_roundtrip(h));
      add_report(o, "sub_adjacent_hopf", sub_adjacent_hopf(h).checks);
      add_report(o, "group_likes", group_likes(h).checks);
    }
  }
  if (t.is_two_sided() && t.group().is_abelian()) {
    add_report(o, "trivial_cocycle", trivial_cocycle_check(t));
    if (t.kind() == Kind::TwoSidedTwisted) {
      const RadicalRing ring = to_radical_ring(t);
      add_report(o, "radical_ring", verify_radical_ring(ring.add.mul(), ring.star));
    }
  }
  o.doc["ok"] = o.ok;
  return o;
}

Outcome enumerate_command(EnumerationTask task, const std::string& out_path) {
  const EnumerationResult r = enumerate_tpg(task);
  Outcome o;
  const std::size_t written = out_path.empty() ? 0 : catalog_store(out_path, r.entries);
  o.doc = {{"group", task.group},      {"two_sided", task.two_sided}, {"weak", task.weak},
           {"classes", r.entries.size()}, {"labeled", r.labeled_count}, {"nodes", r.nodes},
           {"truncated", r.truncated},  {"written", written}};
  o.doc["ids"] = Json::array();
  for (const auto& e : r.entries) o.doc["ids"].push_back(e.id);
  o.text = fmt::format("{}: {} classes ({} labeled), {} nodes{}\n", task.group, r.entries.size(), r.labeled_count, r.nodes,
                       r.truncated ? ", TRUNCATED at budget" : "");
  if (!out_path.empty()) o.text += fmt::format("{} new entries written to {}\n", written, out_path);
  if (r.truncated) std::cerr << "warning: search budget exhausted; results are partial\n";
  return o;
}

Outcome catalog_list(const std::string& path) {
  Outcome o;
  o.doc = Json::array();
  for (const auto& e : catalog_load(path)) {
    o.doc.push_back({{"id", e.id}, {"kind", to_string(e.kind)}, {"order", e.order}, {"provenance", e.provenance}});
    o.text += fmt::format("{}  {:<16} n={}  {}\n", e.id, to_string(e.kind), e.order, e.provenance);
  }
  return o;
}

Outcome catalog_show(const std::string& path, const std::string& id) {
  for (const auto& e : catalog_load(path)) {
    if (e.id != id) continue;
    Outcome o;
    o.doc = to_json(e);
    o.text = pretty(o.doc);
    return o;
  }
  throw Error(ErrorCode::IoError, fmt::format("no entry {} in {}", id, path));
}

Outcome selftest_command() {
  const Report r = run_selftest();
  Outcome o;
  o.ok = r.ok();
  o.doc = to_json(r);
  o.text = r.summary() + fmt::format("{} of {} checks passed\n", r.checks.size() - [&] {
                                       std::size_t f = 0;
                                       for (const auto& c : r.checks) f += !c.ok;
                                       return f;
                                     }(),
                                     r.checks.size());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted post groups: verification, conversion, enumeration"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output");

  std::string file, kind = "auto", target, group_spec, out_path, catalog_path = "catalog.ndjson", entry_id;
  EnumerationTask task;
  std::string enum_kind = "left";

  auto* verify = app.add_subcommand("verify", "Classify a structure and check its axioms");
  verify->add_option("file", file, "JSON document")->required();
  verify->add_option("--kind", kind, "Chirality to verify")->check(CLI::IsMember({"auto", "left", "right", "two-sided"}));

  auto* convert = app.add_subcommand("convert", "Convert between equivalent structures");
  convert->add_option("file", file, "JSON document")->required();
  convert->add_option("--to", target, "Target structure")
      ->required()
      ->check(CLI::IsMember({"truss", "tpg", "rbs", "brace", "ring", "hopf", "ybe"}));

  auto* decomp = app.add_subcommand("decompose", "Component decomposition of a twisted post group");
  decomp->add_option("file", file, "JSON document")->required();

  auto* laws = app.add_subcommand("laws", "Run every applicable invariant suite");
  laws->add_option("file", file, "JSON document")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures on a builtin group up to isomorphism");
  enumerate->add_option("--group", task.group, "Group spec, e.g. cyclic(3) or klein_four")->required();
  enumerate->add_option("--kind", enum_kind, "left or two-sided")->check(CLI::IsMember({"left", "two-sided"}));
  enumerate->add_flag("--weak", task.weak, "Include weak structures");
  enumerate->add_option("--out", out_path, "Catalog file to append to");
  enumerate->add_option("--max-candidates", task.max_candidates, "Search node budget")->check(CLI::PositiveNumber);
  enumerate->add_option("--time-budget", task.time_budget_seconds, "Seconds")->check(CLI::PositiveNumber);
  enumerate->add_option("--jobs", task.parallelism, "Worker threads")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "Inspect a catalog file");
  catalog->add_option("--catalog", catalog_path, "Catalog file");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries");
  auto* show = catalog->add_subcommand("show", "Show one entry");
  show->add_option("id", entry_id, "Entry id")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) return emit(verify_document(read_json_file(file), kind));
    if (convert->parsed()) return emit(convert_document(read_json_file(file), target));
    if (decomp->parsed()) return emit(decompose_document(read_json_file(file)));
    if (laws->parsed()) return emit(laws_document(read_json_file(file)));
    if (enumerate->parsed()) {
      task.two_sided = enum_kind == "two-sided";
      return emit(enumerate_command(task, out_path));
    }
    if (list->parsed()) return emit(catalog_list(catalog_path));
    if (show->parsed()) return emit(catalog_show(catalog_path, entry_id));
    if (selftest->parsed()) return emit(selftest_command());
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    if (g_json)
      std::cout << pretty(Json{{"ok", false}, {"error", to_string(e.code())}, {"message", e.what()}});
    else
      std::cerr << "error: " << e.what() << '\n';
    return code;
  }
  return kUsage;
}
