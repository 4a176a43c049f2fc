#include "doctest.h"
#include "twistpost/brace.hpp"
#include "twistpost/corpus.hpp"
#include "twistpost/error.hpp"
#include "twistpost/json_io.hpp"
#include "twistpost/rota_baxter.hpp"
#include "twistpost/truss.hpp"

using namespace twistpost;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("parse errors carry a location") {
    try {
      parse_json("{\n  \"n\": 2,\n  \"mul\": [[0,1],[1,0]\n}");
      FAIL("parsed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("line 4") != std::string::npos);
      CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
    CHECK(code_of([] { read_json_file("/nonexistent/twistpost.json"); }) == ErrorCode::IoError);
  }

  TEST_CASE("document detection") {
    CHECK(detect_document(to_json(cyclic_group(3))) == DocumentType::Group);
    CHECK(detect_document(to_json(klein_projection())) == DocumentType::Tpg);
    CHECK(detect_document(to_json(tpg_to_truss(z4_brace()))) == DocumentType::Truss);
    CHECK(detect_document(to_json(to_skew_brace(z4_brace()))) == DocumentType::Brace);
    CHECK(detect_document(to_json(to_radical_ring(z4_brace()))) == DocumentType::Ring);
    CHECK(detect_document(to_json(yang_baxter_map(z4_brace()))) == DocumentType::Ybe);
    const auto s3 = symmetric_group(3);
    CHECK(detect_document(to_json(make_rbs(s3, MapTable::identity(6), MapTable(std::vector<Elem>(6, 0))))) ==
          DocumentType::Rbs);
    CHECK(code_of([] { detect_document(Json::array()); }) == ErrorCode::ParseError);
    CHECK(code_of([] { detect_document(Json{{"foo", 1}}); }) == ErrorCode::ParseError);
  }

  TEST_CASE("roundtrips") {
    for (const auto& e : builtin_corpus()) {
      CAPTURE(e.name);
      const auto d = tpg_from_json(parse_json(to_json(e.t).dump()));
      CHECK(TwistedPostGroup::from_tables(d.group, d.tri, d.tri_right, d.phi) == e.t);
    }
    const auto g = symmetric_group(3);
    CHECK(group_from_json(to_json(g)) == g);
    CHECK(group_from_json(Json("cyclic(4)")) == cyclic_group(4));

    const auto s = tpg_to_truss(klein_projection());
    const auto sd = truss_from_json(to_json(s));
    CHECK(sd.circ == s.circ);
    CHECK(sd.phi == s.phi);
    CHECK(sd.two_sided == s.two_sided);

    const auto b = to_skew_brace(z4_brace());
    CHECK(brace_from_json_unchecked(to_json(b)) == b);
    const auto r = make_rbs(g, MapTable::identity(6), MapTable(std::vector<Elem>(6, 0)));
    CHECK(rbs_from_json_unchecked(to_json(r)) == r);
    const auto ring = to_radical_ring(z4_brace());
    const auto rd = ring_from_json(to_json(ring));
    CHECK(rd.add == ring.add.mul());
    CHECK(rd.star == ring.star);
    const auto y = yang_baxter_map(z4_brace());
    CHECK(ybe_from_json(to_json(y)) == y);
  }

  TEST_CASE("malformed tables") {
    const auto bad_row = Json::parse(R"j({"group": "cyclic(2)", "tri": [[0,1],[0]], "phi": [0,1]})j");
    CHECK(code_of([&] { tpg_from_json(bad_row); }) == ErrorCode::InvalidTable);
    const auto out_of_range = Json::parse(R"j({"group": "cyclic(2)", "tri": [[0,1],[0,2]], "phi": [0,1]})j");
    CHECK(code_of([&] { tpg_from_json(out_of_range); }) == ErrorCode::InvalidTable);
    const auto short_phi = Json::parse(R"j({"group": "cyclic(2)", "tri": [[0,1],[0,1]], "phi": [0]})j");
    const auto c = code_of([&] { tpg_from_json(short_phi); });
    CHECK((c == ErrorCode::DimensionMismatch || c == ErrorCode::InvalidTable));
    const auto not_group = Json::parse(R"j({"n": 2, "mul": [[0,0],[0,0]]})j");
    CHECK(code_of([&] { group_from_json(not_group); }) != ErrorCode::ParseError);
    const auto wrong_type = Json::parse(R"j({"group": "cyclic(2)", "tri": "x", "phi": [0,1]})j");
    CHECK_THROWS_AS(tpg_from_json(wrong_type), Error);
  }

  TEST_CASE("reports serialize witnesses") {
    Report r;
    r.add("L3", false, {2, 1, 2}, "");
    const auto j = to_json(r);
    CHECK(j.dump().find("L3") != std::string::npos);
    CHECK(j.dump().find("[2,1,2]") != std::string::npos);
  }
}
