#include "hurwitz/catalog.hpp"

#include <stdexcept>

#include "hurwitz/degen.hpp"

namespace hurwitz::catalog {

Group symmetric(int n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
    gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return PermGroup::generate(n, std::move(gens));
}

Group dihedral(int n) {
  std::vector<int> rotation(static_cast<std::size_t>(n));
  std::vector<int> reflection(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rotation[static_cast<std::size_t>(i)] = (i + 1) % n;
    reflection[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return PermGroup::generate(n, {Perm(rotation), Perm(reflection)});
}

Group alternating5() {
  return PermGroup::generate(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})});
}

Group psl27() {
  constexpr int kInfinity = 7;
  std::vector<int> translate(8);
  std::vector<int> invert(8);
  for (int z = 0; z < 7; ++z) translate[static_cast<std::size_t>(z)] = (z + 1) % 7;
  translate[kInfinity] = kInfinity;
  invert[0] = kInfinity;
  invert[kInfinity] = 0;
  for (int z = 1; z < 7; ++z) {
    int inverse = 1;
    while ((inverse * z) % 7 != 1) ++inverse;
    invert[static_cast<std::size_t>(z)] = (7 - inverse) % 7;
  }
  return PermGroup::generate(8, {Perm(translate), Perm(invert)});
}

std::optional<HurwitzTuple> complete_generating_triple(const Group& group, element_id g0, int order1,
                                                       int order2) {
  const PermGroup& g = *group;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto g1 = static_cast<element_id>(x);
    if (g.element_order(g1) != order1) continue;
    const element_id g2 = g.inv(g.mul(g0, g1));
    if (g.element_order(g2) != order2) continue;
    const element_id gens[] = {g0, g1, g2};
    if (Subgroup::generated_by(group, gens).order() != g.order()) continue;
    return HurwitzTuple{group, {g0, g1, g2}};
  }
  return std::nullopt;
}

IcosahedralFamily icosahedral_family() {
  IcosahedralFamily f;
  f.group = alternating5();
  const PermGroup& g = *f.group;
  f.m = g.index_of(Perm::from_cycles(5, {{0, 1, 2, 3, 4}}));
  f.s = g.index_of(Perm::from_cycles(5, {{1, 4}, {2, 3}}));
  auto triple = complete_generating_triple(f.group, f.m, 2, 3);
  if (!triple) throw std::logic_error("A5 has no (5, 2, 3) generating triple through m");
  f.triple = *triple;

  Degeneration boundary;
  boundary.kind = DegenerationKind::Dihedral;
  boundary.index = 0;
  boundary.s = f.s;
  boundary.datum = hurwitz_to_datum(f.triple);
  boundary.datum.components[0].points[0] = MarkedPoint::dihedral(f.m, f.s);
  f.dihedral = boundary.datum;
  f.quadruple = smooth_dihedral(boundary);
  f.split = split_degenerations(f.quadruple).at(0).datum;
  return f;
}

KleinFamily klein_family() {
  KleinFamily f;
  f.group = psl27();
  std::vector<int> translate{1, 2, 3, 4, 5, 6, 0, 7};
  f.u = f.group->index_of(Perm(translate));
  auto triple = complete_generating_triple(f.group, f.u, 2, 3);
  if (!triple) throw std::logic_error("PSL(2,7) has no (7, 2, 3) generating triple through u");
  f.triple = *triple;
  return f;
}

}  // namespace hurwitz::catalog
