#include "hurwitz/datum.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view to_string(PointKind kind) {
  switch (kind) {
    case PointKind::Cyclic: return "cyclic";
    case PointKind::Dihedral: return "dihedral";
    case PointKind::NodeEnd: return "node";
  }
  return "?";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SurfaceRelation: return "SurfaceRelation";
    case ViolationKind::NodePairing: return "NodePairing";
    case ViolationKind::DihedralInvolution: return "DihedralInvolution";
    case ViolationKind::HandleCount: return "HandleCount";
  }
  return "?";
}

std::string_view to_string(WarningKind kind) {
  switch (kind) {
    case WarningKind::UnramifiedMarking: return "UnramifiedMarking";
    case WarningKind::UnstableQuotient: return "UnstableQuotient";
  }
  return "?";
}

namespace {

std::map<int, std::vector<PointRef>> collect_node_ends(const BoundaryDatum& d) {
  std::map<int, std::vector<PointRef>> ends;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& points = d.components[c].points;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (points[p].kind == PointKind::NodeEnd) {
        ends[points[p].node_id].push_back({static_cast<int>(c), static_cast<int>(p)});
      }
    }
  }
  return ends;
}

std::vector<element_id> id_sequence(const BoundaryDatum& d) {
  std::vector<element_id> seq;
  for (const auto& comp : d.components) {
    for (const auto& [a, b] : comp.handles) {
      seq.push_back(a);
      seq.push_back(b);
    }
    for (const auto& p : comp.points) {
      seq.push_back(p.m);
      if (p.kind == PointKind::Dihedral) seq.push_back(p.s);
    }
  }
  return seq;
}

}  // namespace

std::vector<QuotientNode> quotient_nodes(const BoundaryDatum& d) {
  std::vector<QuotientNode> nodes;
  for (const auto& [id, ends] : collect_node_ends(d)) {
    if (ends.size() != 2) {
      throw Error(ErrorCode::InvalidDatum, "node " + std::to_string(id) + " has " +
                                               std::to_string(ends.size()) + " ends");
    }
    nodes.push_back({id, ends[0], ends[1]});
  }
  return nodes;
}

element_id surface_product(const BoundaryDatum& d, int component) {
  const PermGroup& g = *d.group;
  const auto& comp = d.components[static_cast<std::size_t>(component)];
  element_id acc = PermGroup::identity();
  for (const auto& [a, b] : comp.handles) {
    element_id commutator = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
    acc = g.mul(acc, commutator);
  }
  for (const auto& p : comp.points) acc = g.mul(acc, p.m);
  return acc;
}

Subgroup image_subgroup(const BoundaryDatum& d, int component) {
  const auto& comp = d.components[static_cast<std::size_t>(component)];
  std::vector<element_id> gens;
  for (const auto& [a, b] : comp.handles) {
    gens.push_back(a);
    gens.push_back(b);
  }
  for (const auto& p : comp.points) gens.push_back(p.m);
  return Subgroup::generated_by(d.group, gens);
}

bool quotient_stability(const BoundaryDatum& d) {
  return std::all_of(d.components.begin(), d.components.end(), [](const MarkedComponent& c) {
    const auto special = c.points.size();
    if (c.genus == 0) return special >= 3;
    if (c.genus == 1) return special >= 1;
    return true;
  });
}

ValidationResult validate(const BoundaryDatum& d) {
  ValidationResult result;
  const PermGroup& g = *d.group;
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto c = static_cast<int>(ci);
    const auto& comp = d.components[ci];
    if (comp.genus < 0 || comp.handles.size() != static_cast<std::size_t>(comp.genus)) {
      result.violations.push_back({ViolationKind::HandleCount, c, -1, -1,
                                   "genus " + std::to_string(comp.genus) + " with " +
                                       std::to_string(comp.handles.size()) + " handle pairs"});
      continue;
    }
    if (surface_product(d, c) != PermGroup::identity()) {
      result.violations.push_back({ViolationKind::SurfaceRelation, c, -1, -1,
                                   "product of commutators and point monodromies is " +
                                       g.element(surface_product(d, c)).cycle_string()});
    }
    for (std::size_t pi = 0; pi < comp.points.size(); ++pi) {
      const auto& p = comp.points[pi];
      const auto pt = static_cast<int>(pi);
      if (p.kind == PointKind::Dihedral && !is_inverting_involution(g, p.m, p.s)) {
        result.violations.push_back({ViolationKind::DihedralInvolution, c, pt, -1,
                                     g.element(p.s).cycle_string() + " is not an involution outside <m> inverting m = " +
                                         g.element(p.m).cycle_string()});
      }
      if (p.kind == PointKind::Cyclic && p.m == PermGroup::identity()) {
        result.warnings.push_back({WarningKind::UnramifiedMarking, c, pt, "cyclic point with trivial monodromy"});
      }
    }
  }
  for (const auto& [id, ends] : collect_node_ends(d)) {
    if (ends.size() != 2) {
      result.violations.push_back({ViolationKind::NodePairing, ends.front().component, ends.front().point, id,
                                   "node id occurs on " + std::to_string(ends.size()) + " points"});
      continue;
    }
    element_id ma = d.point(ends[0]).m;
    element_id mb = d.point(ends[1]).m;
    if (mb != g.inv(ma)) {
      result.violations.push_back({ViolationKind::NodePairing, ends[1].component, ends[1].point, id,
                                   "branch monodromies " + g.element(ma).cycle_string() + " and " +
                                       g.element(mb).cycle_string() + " are not inverse"});
    }
  }
  if (!quotient_stability(d)) {
    result.warnings.push_back({WarningKind::UnstableQuotient, -1, -1, "pointed quotient curve is not stable"});
  }
  return result;
}

void check_product_one(const HurwitzTuple& t) {
  if (t.group->product(t.entries) != PermGroup::identity()) {
    throw Error(ErrorCode::ProductNotOne, "tuple product is " + t.group->element(t.group->product(t.entries)).cycle_string());
  }
}

BoundaryDatum hurwitz_to_datum(const HurwitzTuple& t) {
  check_product_one(t);
  MarkedComponent comp;
  for (element_id g : t.entries) comp.points.push_back(MarkedPoint::cyclic(g));
  return {t.group, {std::move(comp)}};
}

DualGraphOfGroups dual_graph_of_groups(const BoundaryDatum& d) {
  if (!validate(d).ok()) throw Error(ErrorCode::InvalidDatum, "datum does not validate");
  DualGraphOfGroups out;
  std::vector<OrientedEdge> edges;
  std::vector<int> opp;
  for (const auto& node : quotient_nodes(d)) {
    const int e = static_cast<int>(edges.size());
    // The edge of a branch ends on that branch's component.
    edges.push_back({node.b.component, node.a.component});
    edges.push_back({node.a.component, node.b.component});
    opp.push_back(e + 1);
    opp.push_back(e);
    const int order = d.group->element_order(d.point(node.a).m);
    out.edge_group_order.insert(out.edge_group_order.end(), {order, order});
    out.edge_point.push_back(node.a);
    out.edge_point.push_back(node.b);
  }
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& points = d.components[c].points;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (points[p].kind != PointKind::Dihedral) continue;
      const int e = static_cast<int>(edges.size());
      edges.push_back({static_cast<int>(c), static_cast<int>(c)});
      opp.push_back(e);
      out.edge_group_order.push_back(d.group->element_order(points[p].m));
      out.edge_point.push_back({static_cast<int>(c), static_cast<int>(p)});
    }
  }
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    out.vertex_group_order.push_back(image_subgroup(d, static_cast<int>(c)).order());
  }
  out.graph = GenGraph(static_cast<int>(d.components.size()), std::move(edges), std::move(opp));
  return out;
}

BoundaryDatum conjugate(const BoundaryDatum& d, element_id g) {
  const PermGroup& grp = *d.group;
  BoundaryDatum out = d;
  for (auto& comp : out.components) {
    for (auto& [a, b] : comp.handles) {
      a = grp.conj(a, g);
      b = grp.conj(b, g);
    }
    for (auto& p : comp.points) {
      p.m = grp.conj(p.m, g);
      if (p.kind == PointKind::Dihedral) p.s = grp.conj(p.s, g);
    }
  }
  return out;
}

BoundaryDatum canonical_form(const BoundaryDatum& d) {
  if (!validate(d).ok()) throw Error(ErrorCode::InvalidDatum, "datum does not validate");
  BoundaryDatum best = d;
  std::vector<element_id> best_seq = id_sequence(d);
  for (std::size_t x = 1; x < d.group->order(); ++x) {
    BoundaryDatum candidate = conjugate(d, static_cast<element_id>(x));
    std::vector<element_id> seq = id_sequence(candidate);
    if (seq < best_seq) {
      best_seq = std::move(seq);
      best = std::move(candidate);
    }
  }
  return best;
}

bool equivalent(const BoundaryDatum& a, const BoundaryDatum& b) {
  if (a.group != b.group) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hurwitz
