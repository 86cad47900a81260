#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nagata/json_io.hpp"
#include "nagata/report.hpp"
#include "test_helpers.hpp"

using namespace nagata;
using testutil::sample_spaces;

TEST_CASE("space json round trip is exact in both modes") {
  SeededRng rng(12);
  for (const auto& X : sample_spaces<Rational>(1410, 6)) {
    auto j = space_to_json(X);
    auto back = space_from_json<Rational>(j);
    CHECK(back.labels() == X.labels());
    CHECK(tables_equal(back.table(), X.table()));
  }
  auto Xd = path_space<double>(5);
  auto jd = space_to_json(Xd);
  auto backd = space_from_json<double>(jd);
  CHECK(tables_equal(backd.table(), Xd.table()));
}

TEST_CASE("rational scalars parse from p/q, integers and decimals") {
  CHECK(parse_scalar<Rational>("3/2") == Rational(3) / Rational(2));
  CHECK(parse_scalar<Rational>("7") == Rational(7));
  CHECK(parse_scalar<Rational>("1.25") == Rational(5) / Rational(4));
  CHECK_THROWS(parse_scalar<Rational>("1/0"));
  CHECK(parse_scalar<double>("3/2") == 1.5);
  CHECK(format_rational(Rational(3) / Rational(2)) == "3/2");
  CHECK(format_rational(Rational(7)) == "7");
}

TEST_CASE("malformed space json raises structural errors") {
  CHECK_THROWS_AS(space_from_json<double>(json::parse(R"({"labels": ["a"]})")), StructuralError);
  CHECK_THROWS_AS(
      space_from_json<double>(json::parse(R"({"labels": ["a","b"], "dist": [[0,1],[1]]})")),
      StructuralError);
  CHECK_THROWS_AS(space_from_json<double>(json::parse(R"({"labels": [], "dist": []})")),
                  StructuralError);
}

TEST_CASE("cover json round trip with families and r") {
  auto X = path_space<Rational>(6);
  std::vector<std::vector<int>> elems{{0, 1}, {2, 3}, {4, 5}};
  FamilyDecomposition<Rational> D{make_cover(X, elems), {0, 1, 0}, 2, Rational(2)};
  auto j = decomposition_to_json(D);
  auto back = decomposition_from_json<Rational>(j, X);
  CHECK(back.cover.elements == D.cover.elements);
  CHECK(back.family_of == D.family_of);
  CHECK(back.r == D.r);
  // plain cover without families parses as a cover
  auto U = cover_from_json<Rational>(cover_to_json(D.cover), X);
  CHECK(U.elements == D.cover.elements);
}

TEST_CASE("cover json with unknown labels or bad families is rejected") {
  auto X = path_space<double>(3);
  CHECK_THROWS(cover_from_json<double>(json::parse(R"({"elements": [["zap"]]})"), X));
  CHECK_THROWS(decomposition_from_json<double>(
      json::parse(R"({"elements": [["0"],["1"],["2"]], "families": [[0,5]], "r": 1})"), X));
  CHECK_THROWS(decomposition_from_json<double>(
      json::parse(R"({"elements": [["0"],["1"],["2"]], "families": [[0,1]], "r": 1})"), X));
}

TEST_CASE("map json parses every target kind") {
  auto X = path_space<double>(4);
  auto real = map_from_json<double>(
      json::parse(R"({"domain": ["x0","x3"], "target": {"kind": "real"},
                     "values": {"x0": 1.5, "x3": "1/2"}, "lambda": 1})"),
      X);
  CHECK(real.kind == TargetKind::Real);
  CHECK(real.real_values[1] == 0.5);

  auto vec = map_from_json<double>(
      json::parse(R"({"domain": ["x1"], "target": {"kind": "vector", "n": 2, "norm": "l2"},
                     "values": {"x1": [0.25, 0.75]}, "lambda": 2})"),
      X);
  CHECK(vec.kind == TargetKind::Vector);
  CHECK(vec.tag == NormTag::L2);
  CHECK(vec.vector_values(0, 1) == 0.75);

  auto bnd = map_from_json<double>(
      json::parse(R"({"domain": ["x0"], "target": {"kind": "simplex_boundary", "vertices": 3},
                     "values": {"x0": [1, 0, 0]}, "lambda": 1})"),
      X);
  CHECK(bnd.kind == TargetKind::SimplexBoundary);
  CHECK(bnd.ambient == 3);

  auto sp = map_from_json<double>(
      json::parse(R"({"domain": ["x0","x1"],
                     "target": {"kind": "space", "space": {"labels": ["u","v"], "dist": [[0,1],[1,0]]}},
                     "values": {"x0": "u", "x1": "v"}, "lambda": 1})"),
      X);
  CHECK(sp.kind == TargetKind::Space);
  CHECK(sp.space_values == std::vector<int>{0, 1});
  CHECK_THROWS(map_from_json<double>(json::parse(R"({"domain": [], "target": {"kind": "warp"},
                                                    "values": {}})"),
                                     X));
}

TEST_CASE("point cloud csv parses, skips comments, rejects ragged rows") {
  auto pts = points_from_csv<double>("# comment\n0, 0\n3,4\n\n0,4\n");
  CHECK(pts.rows() == 3);
  CHECK(pts(1, 1) == 4.0);
  CHECK_THROWS_AS(points_from_csv<double>("1,2\n3\n"), StructuralError);
  CHECK_THROWS_AS(points_from_csv<double>("# nothing\n"), StructuralError);
  auto exact = points_from_csv<Rational>("1/2, 3\n0, 1/4\n");
  CHECK(exact(0, 0) == Rational(1) / Rational(2));
}

TEST_CASE("infinity serializes as the string inf") {
  CHECK(ext_to_json(ExtValue<Rational>::inf()) == json("inf"));
  CHECK(ext_to_json(ExtValue<double>::of(2.5)) == json(2.5));
  CHECK(scalar_to_json(std::numeric_limits<double>::infinity()) == json("inf"));
}

TEST_CASE("report json carries the schema's required fields and stable digests") {
  RunReport rep;
  rep.command = "validate";
  rep.add_input("space", "payload-bytes");
  rep.assertions.add("something_holds", true, 1.0, 2.0);
  auto j = rep.to_json();
  for (const char* key : {"command", "inputs", "seed", "assertions", "all_pass", "results"})
    CHECK(j.contains(key));
  CHECK(j["assertions"][0].contains("name"));
  CHECK(j["assertions"][0].contains("pass"));
  CHECK(j["all_pass"] == true);
  // digest is a function of the bytes only
  CHECK(digest_bytes("payload-bytes") == digest_bytes("payload-bytes"));
  CHECK(digest_bytes("payload-bytes") != digest_bytes("payload-bytes2"));
  CHECK(j["inputs"]["space"].get<std::string>().size() == 16);
}

TEST_CASE("scalar json accepts numbers and strings in exact mode") {
  CHECK(scalar_from_json<Rational>(json(3)) == Rational(3));
  CHECK(scalar_from_json<Rational>(json("5/4")) == Rational(5) / Rational(4));
  CHECK(scalar_from_json<double>(json(0.25)) == 0.25);
  CHECK_THROWS(scalar_from_json<double>(json::parse("[1]")));
}
