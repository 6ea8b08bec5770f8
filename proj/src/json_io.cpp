// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/json_io.hpp"

#include "spinhol/errors.hpp"

namespace spinhol {

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex numbers are [re, im] pairs");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a vector must be a list of [re, im] pairs");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a matrix must be a non-empty list of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Vector row = vector_from_json(j[r]);
    if (static_cast<std::size_t>(row.size()) != cols) throw ParseError("matrix rows differ in length");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

Json vec3_to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json rotation_to_json(const Rotation& r) {
  const double angle = r.angle();
  const Vec3 axis = angle > 1e-12 ? Vec3(r.axis_angle() / angle) : Vec3(Vec3::UnitZ());
  return Json{{"axis", vec3_to_json(axis)}, {"angle", angle}, {"axis_angle", vec3_to_json(r.axis_angle())}};
}

PlaneFile parse_plane_file(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  PlaneFile f;
  const Json& twice = field(j, "twice_s");
  if (!twice.is_number_integer()) throw ParseError("'twice_s' must be an integer");
  f.twice_s = twice.get<int>();
  if (f.twice_s < 0) throw DataError("'twice_s' must be non-negative");
  const Json& kets = field(j, "kets");
  if (!kets.is_array()) throw ParseError("'kets' must be a list");
  if (kets.empty()) throw DataError("'kets' is empty");
  for (const Json& k : kets) {
    Vector v = vector_from_json(k);
    if (v.size() != f.twice_s + 1) {
      throw DataError("ket of length " + std::to_string(v.size()) + " does not match N = twice_s + 1 = " +
                      std::to_string(f.twice_s + 1));
    }
    f.kets.push_back(std::move(v));
  }
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ParseError("'name' must be a string");
    f.name = it->get<std::string>();
  }
  return f;
}

Json plane_file_to_json(const PlaneFile& f) {
  Json kets = Json::array();
  for (const Vector& k : f.kets) kets.push_back(vector_to_json(k));
  Json out{{"twice_s", f.twice_s}, {"kets", kets}};
  if (f.name) out["name"] = *f.name;
  return out;
}

Json constellation_to_json(const Constellation& c) {
  Json out = Json::array();
  for (const Star& s : c.stars()) {
    out.push_back(Json{{"x", s.direction.x()}, {"y", s.direction.y()}, {"z", s.direction.z()}, {"mult", s.multiplicity}});
  }
  return out;
}

Constellation constellation_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a constellation must be a list of stars");
  std::vector<Star> stars;
  for (const Json& s : j) {
    const Json& mult = field(s, "mult");
    if (!mult.is_number_integer() || mult.get<int>() < 1) throw ParseError("'mult' must be a positive integer");
    stars.push_back(Star{Vec3(number(field(s, "x"), "x"), number(field(s, "y"), "y"), number(field(s, "z"), "z")),
                         mult.get<int>()});
  }
  return Constellation(std::move(stars));
}

Json star_file_to_json(const MultiConstellation& mc) {
  Json multiplets = Json::array();
  for (const WeightedConstellation& w : mc.multiplets) {
    multiplets.push_back(Json{{"j", w.j.value()},
                              {"weight", complex_to_json(w.weight)},
                              {"stars", w.constellation ? constellation_to_json(*w.constellation) : Json::array()}});
  }
  return Json{{"multiplets", multiplets}, {"spectator", constellation_to_json(mc.spectator)}};
}

Json star_file_to_json(SpinQuantum j, const Constellation& c) {
  Json multiplet{{"j", j.value()}, {"weight", complex_to_json(1.0)}, {"stars", constellation_to_json(c)}};
  return Json{{"multiplets", Json::array({multiplet})}, {"spectator", Json::array()}};
}

Json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  Json out = Json::array();
  for (const CatalogEntry& e : entries) {
    Json kets = Json::array();
    for (const Vector& k : e.kets) kets.push_back(vector_to_json(k));
    Json symmetries = Json::array();
    for (const Rotation& r : e.symmetries) symmetries.push_back(rotation_to_json(r));
    Json curves = Json::array();
    for (const ReferenceCurve& c : e.curves) {
      curves.push_back(Json{{"name", c.name},
                            {"axis", vec3_to_json(c.axis)},
                            {"angle", c.angle},
                            {"expected_holonomy", matrix_to_json(c.expected)},
                            {"source", c.source}});
    }
    out.push_back(Json{{"name", e.name},
                       {"description", e.description},
                       {"twice_s", e.s.twice_s},
                       {"kind", e.is_state ? "state" : "plane"},
                       {"kets", kets},
                       {"symmetries", symmetries},
                       {"curves", curves},
                       {"source", e.source}});
  }
  return Json{{"entries", out}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spinhol
