#pragma once

#include <utility>
#include <vector>

#include "hurwitz/datum.hpp"

namespace hurwitz {

enum class DegenerationKind { Split, Dihedral };

std::string_view to_string(DegenerationKind kind);

/// A codimension-1 boundary point of a Hurwitz family: either the line
/// splits into two lines meeting in a node (`split_k` points on the first),
/// or point `index` becomes a dihedral point with involution `s`.
struct Degeneration {
  DegenerationKind kind = DegenerationKind::Split;
  int split_k = 0;
  int index = 0;
  element_id s = 0;
  BoundaryDatum datum;
};

/// One degeneration per k in [2, n-2]: (g_1..g_k, h) + (h^-1, g_{k+1}..g_n)
/// with h = (g_1 ... g_k)^-1. Throws TooFewPoints for n < 3; n = 3 has none.
std::vector<Degeneration> split_degenerations(const HurwitzTuple& t);

/// One degeneration per involution s outside <g_i> inverting g_i, in element
/// id order. Throws TooFewPoints for n < 3.
std::vector<Degeneration> dihedral_degenerations(const HurwitzTuple& t, int index);

/// Replaces the dihedral point (m, s) by the two involutions (s, s m).
HurwitzTuple smooth_dihedral(const Degeneration& d);

/// Replaces entries i and i+1 by their product.
HurwitzTuple merge_adjacent(const HurwitzTuple& t, int index);

/// Replaces a dihedral point (m, s) by a node to a new line carrying the
/// cyclic points s and s m; all stabilizers of the resulting cover are cyclic.
BoundaryDatum blow_up_dihedral(const BoundaryDatum& d, PointRef dihedral_point);

/// One representative per canonical_form class, first seen kept.
std::vector<Degeneration> dedup(const std::vector<Degeneration>& list);

/// Orbit count of dihedral-involution fixpoints on a smoothing as predicted
/// from the stabilizer order 2N: 4 if 4 divides it, otherwise 2.
/// Throws OddOrder.
int fdef_predicted_orbits(int stabilizer_order);

/// Exact model of a smoothing xy = 1 of a dihedral node with stabilizer of
/// order 2N. Coordinates are exponents of a primitive 4N-th root of unity;
/// the fixpoints of the branch-swapping involutions are the pairs
/// (4k + e, e) with 2e = -4k mod 4N. The rotation acts by (a + 4, b - 4),
/// the involution by swapping a and b.
struct FdefLocalModel {
  int modulus = 0;                          // 4N
  std::vector<std::pair<int, int>> points;  // 2N exponent pairs
  std::vector<int> orbit_sizes;             // descending

  int orbit_count() const noexcept { return static_cast<int>(orbit_sizes.size()); }
};

FdefLocalModel fdef_local_model(int n);
int fdef_local_oracle(int n);

}  // namespace hurwitz
