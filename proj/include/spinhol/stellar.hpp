// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "spinhol/grassmann.hpp"
#include "spinhol/linalg.hpp"
#include "spinhol/rotation.hpp"
#include "spinhol/spin_core.hpp"

namespace spinhol {

inline constexpr double kStarMergeTol = 1e-6;
inline constexpr double kCongruenceTol = 1e-6;

struct Star {
  Vec3 direction;
  int multiplicity = 1;
};

/// A multiset of points on the unit sphere.
class Constellation {
 public:
  Constellation() = default;
  explicit Constellation(std::vector<Star> stars);

  const std::vector<Star>& stars() const { return stars_; }
  /// Sum of multiplicities (2j for a spin-j state).
  int count() const;
  bool empty() const { return stars_.empty(); }
  /// One direction per unit of multiplicity.
  std::vector<Vec3> expanded() const;
  Constellation rotated(const Rotation& r) const;

 private:
  std::vector<Star> stars_;
};

/// Coefficients (ascending powers of z) of
/// p(z) = Σ_m (−1)^{s−m} √C(2s, s−m) ψ_m z^{s+m}.
std::vector<Complex> majorana_polynomial(const Vector& psi);

/// Roots of Σ c_k z^k via eigenvalues of the balanced companion matrix, polished by Newton
/// steps. The leading coefficient must be non-zero.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// Stereographic map z ↦ unit vector, z = 0 at the north pole (projection from the south pole).
Vec3 star_from_root(Complex z);

/// Majorana constellation of a spin-s state (s = (len − 1)/2). Coefficients below 1e-12 of the
/// largest are treated as zero; missing top-degree terms become stars at the south pole,
/// missing low-degree terms stars at the north pole. Stars within merge_tol (chordal) merge.
/// Throws DomainError for the zero vector.
Constellation majorana_constellation(const Vector& psi, double merge_tol = kStarMergeTol);

/// Normalised k×k minors of the frame, one per k-subset of basis rows in lexicographic order
/// (row order is m = s, s−1, …, so subsets are listed by decreasing m-tuples).
struct PluckerVector {
  SpinQuantum s;
  int k = 0;
  std::vector<std::vector<int>> subsets;
  Vector components;
};

PluckerVector plucker_coordinates(const KPlane& p);

/// The su(2) action on Λ^k C^N: S^∧ (e_{r1}∧…∧e_{rk}) = Σ_i e_{r1}∧…∧S e_{ri}∧…∧e_{rk}.
struct InducedSpinOperators {
  SpinQuantum s;
  int k = 0;
  std::vector<std::vector<int>> subsets;
  Matrix sx, sy, sz;

  Matrix raising() const { return sx + kI * sy; }
  Matrix lowering() const { return sx - kI * sy; }
  Matrix casimir() const { return sx * sx + sy * sy + sz * sz; }
};

InducedSpinOperators induced_spin_operators(SpinQuantum s, int k);

/// Number of spin-j copies in Λ^k C^N, keyed by 2j, read off the Casimir spectrum.
std::map<int, int> casimir_multiplet_content(SpinQuantum s, int k);

struct Multiplet {
  SpinQuantum j;
  int copy = 0;      // index among multiplets sharing this j
  Vector component;  // coefficients on |j, m⟩, m = j … −j
};

/// Projects a Plücker vector onto the spin-j multiplets, ordered by decreasing j then copy.
/// Each copy's basis is built by lowering (Condon–Shortley) from a highest-weight vector
/// chosen as the normalised projection of the first wedge basis vector (lexicographic order)
/// that has a non-negligible projection onto the remaining highest-weight space. That vector's
/// phase makes its overlap with the chosen wedge vector real and positive.
std::vector<Multiplet> multiplet_decomposition(const PluckerVector& v);

struct WeightedConstellation {
  SpinQuantum j;
  int copy = 0;
  Complex weight;                              // ‖c‖·e^{iα}, α the phase of c's first non-zero entry
  Vector component;                            // c·e^{−iα}/‖c‖, or the raw (zero) component
  std::optional<Constellation> constellation;  // empty when the weight vanishes
};

struct MultiConstellation {
  std::vector<WeightedConstellation> multiplets;
  /// Constellation of the weights read as a spin-(n−1)/2 state, first weight ↔ m = (n−1)/2.
  Constellation spectator;

  /// Highest-j multiplet with non-zero weight.
  const WeightedConstellation& principal() const;
};

MultiConstellation multiconstellation(const KPlane& p);

/// Checks R(c1) == c2 as multisets: optimal assignment on chordal distance, then every
/// matched pair within tol. Different star counts never match.
bool check_congruence(const Constellation& c1, const Constellation& c2, const Rotation& r,
                      double tol = kCongruenceTol);

struct SymmetrySearch {
  std::vector<Rotation> rotations;
  /// Set instead of `rotations` when every star lies on one axis (continuous symmetry).
  std::optional<Vec3> continuous_axis;
};

/// Finite rotation group of a constellation: candidates map a reference star pair onto
/// every pair with matching multiplicities and angle, then pass check_congruence.
/// Constellations larger than 50 stars raise DomainError.
SymmetrySearch symmetry_candidates(const Constellation& c, double tol = kCongruenceTol);

/// True when every multiplet constellation is congruent to itself under R and the rotated
/// components D^(j)(R)·c_j agree with c_j up to one common phase.
bool multiconstellation_symmetric(const MultiConstellation& mc, const Rotation& r, double tol = kCongruenceTol);

/// Candidates from the principal constellation that keep the whole multiconstellation.
SymmetrySearch multiconstellation_symmetries(const MultiConstellation& mc, double tol = kCongruenceTol);

}  // namespace spinhol
