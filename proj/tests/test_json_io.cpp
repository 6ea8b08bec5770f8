// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spinhol/errors.hpp"
#include "spinhol/gates_lab.hpp"
#include "spinhol/json_io.hpp"
#include "support.hpp"

using namespace spinhol;
using spinhol::test::Gen;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("complex, vector and matrix round trips are exact") {
  Gen g(81);
  const Matrix m = g.gaussian(3, 4);
  CHECK(matrix_from_json(Json::parse(dump(matrix_to_json(m)))) == m);
  const Vector v = g.ket(6);
  CHECK(vector_from_json(Json::parse(dump(vector_to_json(v)))) == v);
  CHECK(complex_from_json(Json::array({1.5, -2.0})) == Complex(1.5, -2.0));
  CHECK_THROWS_AS(complex_from_json(Json::array({1.0})), ParseError);
  CHECK_THROWS_AS(complex_from_json(Json::array({1.0, "x"})), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[[1,0]],[[1,0],[0,0]]]")), ParseError);
}

TEST_CASE("plane files: round trip and error classes") {
  PlaneFile f;
  f.twice_s = 2;
  f.name = "test";
  Gen g(82);
  f.kets = {g.ket(3), g.ket(3)};
  const PlaneFile back = parse_plane_file(dump(plane_file_to_json(f)));
  CHECK(back.twice_s == 2);
  CHECK(back.name == f.name);
  REQUIRE(back.kets.size() == 2);
  CHECK(back.kets[0] == f.kets[0]);
  CHECK(back.kets[1] == f.kets[1]);
  CHECK_FALSE(back.is_state());

  CHECK_THROWS_AS(parse_plane_file("{"), ParseError);
  CHECK_THROWS_AS(parse_plane_file("[]"), ParseError);
  CHECK_THROWS_AS(parse_plane_file(R"({"kets": [[[1,0]]]})"), ParseError);
  CHECK_THROWS_AS(parse_plane_file(R"({"twice_s": 0.5, "kets": [[[1,0]]]})"), ParseError);
  CHECK_THROWS_AS(parse_plane_file(R"({"twice_s": 0, "kets": [[[1,0]]], "name": 3})"), ParseError);
  CHECK_THROWS_AS(parse_plane_file(R"({"twice_s": -1, "kets": [[[1,0]]]})"), DataError);
  CHECK_THROWS_AS(parse_plane_file(R"({"twice_s": 1, "kets": []})"), DataError);
  CHECK_THROWS_AS(parse_plane_file(R"({"twice_s": 1, "kets": [[[1,0]]]})"), DataError);
  CHECK(parse_plane_file(R"({"twice_s": 1, "kets": [[[1,0],[0,0]]]})").is_state());
}

TEST_CASE("constellation round trip") {
  const Constellation c(std::vector<Star>{{Vec3(0, 0, 1), 2}, {Vec3(1, 0, 0), 1}});
  const Constellation back = constellation_from_json(Json::parse(dump(constellation_to_json(c))));
  REQUIRE(back.stars().size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.stars()[i].direction == c.stars()[i].direction);
    CHECK(back.stars()[i].multiplicity == c.stars()[i].multiplicity);
  }
  CHECK_THROWS_AS(constellation_from_json(Json::parse(R"([{"x":0,"y":0,"z":1,"mult":0}])")), ParseError);
  CHECK_THROWS_AS(constellation_from_json(Json::parse(R"([{"x":0,"y":0,"mult":1}])")), ParseError);
}

TEST_CASE("rotation_to_json uses a unit axis and falls back to z for the identity") {
  const Json j = rotation_to_json(Rotation::about(Vec3(0, 1, 0), 1.0));
  CHECK(j["angle"].get<double>() == doctest::Approx(1.0));
  CHECK(j["axis"][1].get<double>() == doctest::Approx(1.0));
  const Json id = rotation_to_json(Rotation());
  CHECK(id["axis"][2].get<double>() == 1.0);
  CHECK(id["angle"].get<double>() == 0.0);
}

TEST_CASE("shipped data matches the in-code catalog") {
  const std::string dir = SPINHOL_DATA_DIR;
  CHECK(slurp(dir + "/catalog.json") == dump(catalog_to_json(catalog())));
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    const PlaneFile f = parse_plane_file(slurp(dir + "/" + e.name + ".json"));
    CHECK(f.twice_s == e.s.twice_s);
    REQUIRE(f.kets.size() == e.kets.size());
    for (std::size_t i = 0; i < e.kets.size(); ++i) CHECK(f.kets[i] == e.kets[i]);
    CHECK(f.is_state() == e.is_state);
  }
}
