// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinhol/gates_lab.hpp"
#include "spinhol/linalg.hpp"
#include "spinhol/rotation.hpp"
#include "spinhol/stellar.hpp"

namespace spinhol {

using Json = nlohmann::json;

// Complex numbers are [re, im]; matrices are row-major lists of rows. Doubles are written
// with the shortest decimal that reads back to the same value.

Json complex_to_json(Complex z);
/// Throws ParseError unless j is a pair of numbers.
Complex complex_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
/// Throws ParseError on ragged or non-numeric input.
Matrix matrix_from_json(const Json& j);
Json vec3_to_json(const Vec3& v);
/// {"axis": [x,y,z], "angle": θ, "axis_angle": [x,y,z]·θ}
Json rotation_to_json(const Rotation& r);

/// {"twice_s": int, "kets": [[[re,im], …], …], "name": optional string}
struct PlaneFile {
  int twice_s = 0;
  std::vector<Vector> kets;
  std::optional<std::string> name;

  SpinQuantum spin() const { return SpinQuantum::from_twice(twice_s); }
  /// One ket is read as a state.
  bool is_state() const { return kets.size() == 1; }
};

/// ParseError for malformed JSON or schema violations; DataError for a negative twice_s,
/// no kets, or a ket whose length is not twice_s + 1.
PlaneFile parse_plane_file(std::string_view text);
Json plane_file_to_json(const PlaneFile& f);

/// [{"x", "y", "z", "mult"}, …]
Json constellation_to_json(const Constellation& c);
Constellation constellation_from_json(const Json& j);

/// Star file: {"multiplets": [{"j", "weight": [re,im], "stars": […]}], "spectator": […]}.
/// Vanishing multiplets carry an empty star list.
Json star_file_to_json(const MultiConstellation& mc);
/// Star file of a single state: one multiplet with weight 1 and no spectator stars.
Json star_file_to_json(SpinQuantum j, const Constellation& c);

Json catalog_to_json(const std::vector<CatalogEntry>& entries);

/// Pretty-printed, key-sorted serialisation with a trailing newline.
std::string dump(const Json& j);

}  // namespace spinhol
