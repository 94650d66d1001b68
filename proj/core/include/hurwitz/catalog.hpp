#pragma once

#include <optional>

#include "hurwitz/datum.hpp"
#include "hurwitz/group.hpp"

namespace hurwitz::catalog {

Group symmetric(int n);
/// Dihedral group of order 2n acting on the vertices of an n-gon.
Group dihedral(int n);
/// A5 generated by (0 1 2 3 4) and (0 1 2).
Group alternating5();
/// PSL(2,7) acting on the projective line over F_7 (points 0..6, infinity = 7),
/// generated by z -> z + 1 and z -> -1/z.
Group psl27();

/// First (in element id order) g1 of order `order1` with g2 = (g0 g1)^-1 of
/// order `order2` such that g0, g1, g2 generate the whole group.
std::optional<HurwitzTuple> complete_generating_triple(const Group& group, element_id g0, int order1,
                                                       int order2);

/// The icosahedral family: m = (0 1 2 3 4), s = (1 4)(2 3), a generating
/// triple (m, g1, g2) of orders (5, 2, 3), the smooth 4-point tuple
/// (s, s m, g1, g2), its dihedral boundary datum and its split datum
/// (s, s m, m^-1) + (m, g1, g2).
struct IcosahedralFamily {
  Group group;
  element_id m = 0;
  element_id s = 0;
  HurwitzTuple triple;
  HurwitzTuple quadruple;
  BoundaryDatum dihedral;
  BoundaryDatum split;
};

IcosahedralFamily icosahedral_family();

/// The Klein quartic family: u = (z -> z + 1) of order 7 completed to a
/// generating triple of orders (7, 2, 3) in PSL(2,7).
struct KleinFamily {
  Group group;
  element_id u = 0;
  HurwitzTuple triple;
};

KleinFamily klein_family();

}  // namespace hurwitz::catalog
