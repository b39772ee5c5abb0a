#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pogroup/error.hpp"
#include "pogroup/io.hpp"
#include "support.hpp"

using namespace pogroup;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const std::string& name) { return std::string(POGROUP_TEST_DATA) + "/" + name; }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("downset files round-trip byte for byte") {
  for (const char* name : {"E1.json", "E2.json", "hyperbola.json"}) {
    CAPTURE(name);
    std::string text = slurp(data(name));
    DownsetExpr d = io::downset_from_json(io::parse_text(text));
    CHECK(io::dump(io::to_json(d)) == text);
  }
  std::string hull = slurp(data("hull_E2.json"));
  CHECK(io::dump(io::to_json(io::hull_from_json(io::parse_text(hull)))) == hull);
}

TEST_CASE("rationals are normalized") {
  CHECK(io::to_json(io::rational_from_json("2/4", "x")) == io::Json("1/2"));
  CHECK(io::to_json(io::rational_from_json("-6/3", "x")) == io::Json(-2));
  CHECK(io::to_json(io::rational_from_json(7, "x")) == io::Json(7));
  CHECK_THROWS_AS(io::rational_from_json("1/0", "x"), Error);
  CHECK_THROWS_AS(io::rational_from_json("abc", "x"), Error);
  CHECK_THROWS_AS(io::rational_from_json(1.5, "x"), Error);
}

TEST_CASE("diagnostics name the offending field") {
  io::Json j = io::parse_text(slurp(data("E2.json")));
  j["pieces"][1]["face"][0] = 5;
  CHECK(error_of([&] { io::downset_from_json(j); }).find("pieces[1].face[0]") != std::string::npos);

  j = io::parse_text(slurp(data("E2.json")));
  j["pieces"][2]["apex"] = {1};
  CHECK(error_of([&] { io::downset_from_json(j); }).find("pieces[2].apex") != std::string::npos);

  j = io::parse_text(slurp(data("E2.json")));
  j["group"]["kind"] = "torsion";
  CHECK(error_of([&] { io::downset_from_json(j); }).find("group.kind") != std::string::npos);

  std::string syntax = error_of([] { io::parse_text("{\n  \"a\": [1,\n}", "f.json"); });
  CHECK(syntax.find("f.json") != std::string::npos);
  CHECK(syntax.find("f.json:3:") != std::string::npos);
}

TEST_CASE("rational downsets and regions round-trip") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    for (EndpointMode mode : {EndpointMode::Integer, EndpointMode::Rational}) {
      Region r = testing::random_region(rng, 2, mode);
      Region back = io::region_from_json(io::parse_text(io::dump(io::to_json(r))));
      CHECK(region_equals(r, back));
      CHECK(io::dump(io::to_json(back)) == io::dump(io::to_json(r)));
    }
  }
  DownsetExpr d{ConePresentation::orthant_rat(2), {}};
  CoprincipalPiece p;
  p.apex = {Rational(1, 2), Rational(-3)};
  p.strict = {true, false};
  d.pieces.push_back(p);
  d = normalize(d);
  DownsetExpr back = io::downset_from_json(io::to_json(d));
  CHECK(region_equals(to_region(back), to_region(d)));
  CHECK(io::to_json(back) == io::to_json(d));
}

TEST_CASE("cones and general downsets") {
  ConePresentation square = io::cone_from_json(io::parse_text(slurp(data("square_cone.json"))));
  CHECK(square.n == 3);
  FaceLattice lattice = enumerate_faces(square);
  io::Json lj = io::to_json(square, lattice);
  CHECK(lj["faces"].size() == 10);
  CHECK(lj["closed"] == "proven");

  io::Json g = {{"group", io::to_json(square)},
                {"pieces", {{{"apex", {0, 0, 1}}, {"face", 1}}, {{"apex", {1, 1, 1}}, {"face", 0}}}}};
  GeneralDownset d = io::general_downset_from_json(g);
  CHECK(d.pieces.size() == 2);
  CHECK(io::to_json(d) == g);
  CHECK(std::holds_alternative<GeneralDownset>(io::any_downset_from_json(g)));

  g["pieces"][0]["face"] = 99;
  CHECK(error_of([&] { io::general_downset_from_json(g); }).find("pieces[0].face") != std::string::npos);

  io::Json inconsistent = {{"kind", "cone-int"},
                           {"n", 2},
                           {"generators", {{1, 0}, {0, 1}}},
                           {"halfspaces", {{1, 0}, {1, 1}}}};
  CHECK_THROWS_AS(io::cone_from_json(inconsistent), Error);
}

TEST_CASE("boxes and point lists") {
  GridBox box = io::box_from_json(io::Json{{"lo", {-1, 0}}, {"hi", {1, 2}}});
  CHECK(box.size() == 9);
  CHECK(io::box_from_json(io::to_json(box)) == box);
  CHECK_THROWS_AS(io::box_from_json(io::Json{{"lo", {2}}, {"hi", {1}}}), Error);
  GridSet s(box);
  s.set(box.index({0, 1}));
  CHECK(io::points_to_json(s) == io::Json::array({{0, 1}}));
  GridModule m = indicator_module(box, [](const IntVec& q) { return q[0] + q[1] <= 0; });
  CHECK(io::dims_to_json(m).size() == 3);
}
