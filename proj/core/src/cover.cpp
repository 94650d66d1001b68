#include "hurwitz/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

int rh_genus(std::size_t subgroup_order, int base_genus, std::span<const int> ramification_orders) {
  const auto n = static_cast<long long>(subgroup_order);
  long long twice_g_minus_2 = n * (2LL * base_genus - 2);
  for (int order : ramification_orders) {
    if (order < 1 || n % order != 0) {
      throw Error(ErrorCode::NonIntegralGenus, "ramification order " + std::to_string(order) +
                                                   " does not divide " + std::to_string(n));
    }
    twice_g_minus_2 += n - n / order;
  }
  const long long twice_g = twice_g_minus_2 + 2;
  if (twice_g % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus, "2g - 2 = " + std::to_string(twice_g_minus_2) + " is odd");
  }
  if (twice_g < 0) throw Error(ErrorCode::NegativeGenus, "genus " + std::to_string(twice_g / 2));
  return static_cast<int>(twice_g / 2);
}

int nodal_arithmetic_genus(int genus_sum, int node_count, int component_count) {
  return genus_sum + node_count - component_count + 1;
}

namespace {

std::vector<int> point_orders(const BoundaryDatum& d, const MarkedComponent& comp) {
  std::vector<int> orders;
  for (const auto& p : comp.points) orders.push_back(d.group->element_order(p.m));
  return orders;
}

struct PointCosets {
  Subgroup cyclic;
  CosetPartition cosets;
  std::vector<int> edge_of_coset;  // oriented edge whose branch is this coset
};

}  // namespace

CoverCurve build_cover(const BoundaryDatum& d) {
  if (!validate(d).ok()) throw Error(ErrorCode::InvalidDatum, "datum does not validate");
  const Group& group = d.group;
  const PermGroup& g = *group;

  CoverCurve out;
  out.datum = d;

  std::vector<int> component_base;
  std::vector<CosetPartition> component_cosets;
  for (std::size_t y = 0; y < d.components.size(); ++y) {
    const auto& comp = d.components[y];
    Subgroup h = image_subgroup(d, static_cast<int>(y));
    const int genus = rh_genus(h.order(), comp.genus, point_orders(d, comp));
    CosetPartition cosets = left_cosets(h);
    component_base.push_back(static_cast<int>(out.components.size()));
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      out.components.push_back({static_cast<int>(y), static_cast<int>(i), cosets.representative(i), h.order(), genus});
    }
    component_cosets.push_back(std::move(cosets));
  }
  auto component_of = [&](int y, element_id x) {
    return component_base[static_cast<std::size_t>(y)] +
           component_cosets[static_cast<std::size_t>(y)].cell_of[static_cast<std::size_t>(x)];
  };

  std::map<PointRef, PointCosets> point_cosets;
  auto cosets_at = [&](PointRef ref) -> PointCosets& {
    auto it = point_cosets.find(ref);
    if (it == point_cosets.end()) {
      const element_id gens[] = {d.point(ref).m};
      Subgroup cyc = Subgroup::generated_by(group, gens);
      CosetPartition cosets = left_cosets(cyc);
      std::vector<int> edges(cosets.size(), -1);
      it = point_cosets.emplace(ref, PointCosets{std::move(cyc), std::move(cosets), std::move(edges)}).first;
    }
    return it->second;
  };
  auto make_branch = [&](PointRef ref, element_id x) {
    PointCosets& pc = cosets_at(ref);
    Branch b;
    b.point = ref;
    b.coset = pc.cosets.cell_of[static_cast<std::size_t>(x)];
    b.representative = pc.cosets.representative(static_cast<std::size_t>(b.coset));
    b.component = component_of(ref.component, x);
    return b;
  };
  auto register_node = [&](CoverNode node) {
    const int e = static_cast<int>(2 * out.nodes.size());
    cosets_at(node.a.point).edge_of_coset[static_cast<std::size_t>(node.a.coset)] = e;
    cosets_at(node.b.point).edge_of_coset[static_cast<std::size_t>(node.b.coset)] = e + 1;
    out.nodes.push_back(std::move(node));
  };

  for (const auto& qn : quotient_nodes(d)) {
    const CosetPartition cosets = cosets_at(qn.a).cosets;
    for (std::size_t j = 0; j < cosets.size(); ++j) {
      const element_id rep = cosets.representative(j);
      CoverNode node;
      node.a = make_branch(qn.a, rep);
      node.b = make_branch(qn.b, rep);
      node.origin = NodeOrigin::QuotientNode;
      node.quotient_node = qn.id;
      register_node(std::move(node));
    }
  }
  for (std::size_t y = 0; y < d.components.size(); ++y) {
    const auto& points = d.components[y].points;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (points[p].kind != PointKind::Dihedral) continue;
      const PointRef ref{static_cast<int>(y), static_cast<int>(p)};
      const element_id gens[] = {points[p].m, points[p].s};
      const CosetPartition dihedral_cosets = left_cosets(Subgroup::generated_by(group, gens));
      for (std::size_t j = 0; j < dihedral_cosets.size(); ++j) {
        const element_id rep = dihedral_cosets.representative(j);
        CoverNode node;
        node.a = make_branch(ref, rep);
        node.b = make_branch(ref, g.mul(rep, points[p].s));
        node.origin = NodeOrigin::DihedralPoint;
        node.dihedral_point = ref;
        register_node(std::move(node));
      }
    }
  }

  std::vector<OrientedEdge> edges;
  std::vector<int> opp;
  for (const auto& node : out.nodes) {
    const int e = static_cast<int>(edges.size());
    edges.push_back({node.b.component, node.a.component});
    edges.push_back({node.a.component, node.b.component});
    opp.push_back(e + 1);
    opp.push_back(e);
  }
  GenGraph graph(static_cast<int>(out.components.size()), std::move(edges), std::move(opp));

  std::vector<std::vector<int>> vertex_images(g.order());
  std::vector<std::vector<int>> edge_images(g.order());
  for (std::size_t xi = 0; xi < g.order(); ++xi) {
    const auto x = static_cast<element_id>(xi);
    auto& vimg = vertex_images[xi];
    vimg.reserve(out.components.size());
    for (const auto& comp : out.components) {
      vimg.push_back(component_of(comp.quotient_component, g.mul(x, comp.representative)));
    }
    auto& eimg = edge_images[xi];
    eimg.reserve(2 * out.nodes.size());
    for (const auto& node : out.nodes) {
      for (const Branch* b : {&node.a, &node.b}) {
        const PointCosets& pc = cosets_at(b->point);
        const int target = pc.cosets.cell_of[static_cast<std::size_t>(g.mul(x, b->representative))];
        eimg.push_back(pc.edge_of_coset[static_cast<std::size_t>(target)]);
      }
    }
  }
  out.action = GraphAction(std::move(graph), group, std::move(vertex_images), std::move(edge_images));
  if (!check_equivariance(out)) throw std::logic_error("cover action violates orbit-stabilizer counts");
  return out;
}

bool check_equivariance(const CoverCurve& c) {
  const GraphAction& action = c.action;
  const std::size_t order = action.group()->order();
  const int nv = action.graph().vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(nv), 0);
  for (int v = 0; v < nv; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::size_t orbit = 0;
    std::size_t stab = 0;
    for (std::size_t x = 0; x < order; ++x) {
      int w = action.vertex_image(static_cast<element_id>(x), v);
      if (w == v) ++stab;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++orbit;
      }
    }
    if (orbit * stab != order) return false;
  }
  for (const auto& orbit : edge_orbit_data(action)) {
    if (orbit.edges.size() * orbit.stabilizer.order() != order) return false;
  }
  return true;
}

bool is_connected(const CoverCurve& c) {
  const auto labels = c.action.graph().component_labels();
  return !labels.empty() &&
         std::all_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
}

std::vector<int> branch_counts(const CoverCurve& c) {
  std::vector<int> counts(c.components.size(), 0);
  for (const auto& node : c.nodes) {
    ++counts[static_cast<std::size_t>(node.a.component)];
    ++counts[static_cast<std::size_t>(node.b.component)];
  }
  return counts;
}

std::vector<int> connected_arithmetic_genera(const CoverCurve& c) {
  const auto labels = c.action.graph().component_labels();
  int pieces = 0;
  for (int l : labels) pieces = std::max(pieces, l + 1);
  std::vector<int> genus_sum(static_cast<std::size_t>(pieces), 0);
  std::vector<int> comps(static_cast<std::size_t>(pieces), 0);
  std::vector<int> nodes(static_cast<std::size_t>(pieces), 0);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    genus_sum[static_cast<std::size_t>(labels[i])] += c.components[i].genus;
    ++comps[static_cast<std::size_t>(labels[i])];
  }
  for (const auto& node : c.nodes) ++nodes[static_cast<std::size_t>(labels[static_cast<std::size_t>(node.a.component)])];
  std::vector<int> out;
  for (std::size_t p = 0; p < genus_sum.size(); ++p) {
    out.push_back(nodal_arithmetic_genus(genus_sum[p], nodes[p], comps[p]));
  }
  return out;
}

int arithmetic_genus(const CoverCurve& c) {
  if (!is_connected(c)) throw Error(ErrorCode::Disconnected, "cover is not connected");
  return connected_arithmetic_genera(c).front();
}

bool is_stable(const CoverCurve& c) {
  if (!is_connected(c) || arithmetic_genus(c) < 2) return false;
  const auto counts = branch_counts(c);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (c.components[i].genus == 0 && counts[i] < 3) return false;
    if (c.components[i].genus == 1 && counts[i] < 1) return false;
  }
  return true;
}

NodeClass classify_node(const CoverCurve& c, std::size_t node) {
  const int ea = static_cast<int>(2 * node);
  const int eb = ea + 1;
  const GraphAction& action = c.action;
  NodeClass out;
  std::vector<element_id> stab;
  for (std::size_t x = 0; x < action.group()->order(); ++x) {
    const int image = action.edge_image(static_cast<element_id>(x), ea);
    if (image == ea || image == eb) stab.push_back(static_cast<element_id>(x));
    if (image == eb) out.kind = NodeKind::DihedralNode;
  }
  out.stabilizer = Subgroup::from_members(action.group(), std::move(stab));
  return out;
}

SubcoverSummary subcover(const CoverCurve& c, const Subgroup& k) {
  const BoundaryDatum& d = c.datum;
  const PermGroup& g = *d.group;
  const CosetPartition rc = right_cosets(k);

  SubcoverSummary out;
  out.degree = rc.size();

  // Subcover component of each (quotient component, right coset of K).
  std::vector<std::vector<int>> component_of_coset(d.components.size());
  for (std::size_t y = 0; y < d.components.size(); ++y) {
    const Subgroup h = image_subgroup(d, static_cast<int>(y));
    auto& label = component_of_coset[y];
    label.assign(rc.size(), -1);
    for (std::size_t start = 0; start < rc.size(); ++start) {
      if (label[start] >= 0) continue;
      const int id = static_cast<int>(out.components.size());
      SubcoverComponent comp;
      comp.quotient_component = static_cast<int>(y);
      comp.double_coset_rep = rc.representative(start);
      std::vector<std::size_t> orbit{start};
      label[start] = id;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        const element_id rep = rc.representative(orbit[head]);
        for (element_id hm : h.members()) {
          const auto next = static_cast<std::size_t>(rc.cell_of[static_cast<std::size_t>(g.mul(rep, hm))]);
          if (label[next] < 0) {
            label[next] = id;
            orbit.push_back(next);
          }
        }
      }
      for (std::size_t cell : orbit) comp.double_coset_rep = std::min(comp.double_coset_rep, rc.representative(cell));
      comp.degree = static_cast<int>(orbit.size());
      out.components.push_back(std::move(comp));
    }
  }

  // Cycle types of each marked point's monodromy acting on K\G from the right.
  std::vector<long long> ramification(out.components.size(), 0);
  for (std::size_t y = 0; y < d.components.size(); ++y) {
    const auto& points = d.components[y].points;
    for (std::size_t p = 0; p < points.size(); ++p) {
      SubcoverPoint sp;
      sp.point = {static_cast<int>(y), static_cast<int>(p)};
      std::vector<char> seen(rc.size(), 0);
      for (std::size_t start = 0; start < rc.size(); ++start) {
        if (seen[start]) continue;
        int length = 0;
        std::size_t cell = start;
        while (!seen[cell]) {
          seen[cell] = 1;
          ++length;
          cell = static_cast<std::size_t>(rc.cell_of[static_cast<std::size_t>(g.mul(rc.representative(cell), points[p].m))]);
        }
        sp.cycle_type.push_back(length);
        ramification[static_cast<std::size_t>(component_of_coset[y][start])] += length - 1;
      }
      std::sort(sp.cycle_type.rbegin(), sp.cycle_type.rend());
      out.points.push_back(std::move(sp));
    }
  }
  for (std::size_t z = 0; z < out.components.size(); ++z) {
    auto& comp = out.components[z];
    const int h = d.components[static_cast<std::size_t>(comp.quotient_component)].genus;
    const long long twice_g_minus_2 = static_cast<long long>(comp.degree) * (2LL * h - 2) + ramification[z];
    if ((twice_g_minus_2 + 2) % 2 != 0) throw Error(ErrorCode::NonIntegralGenus, "subcover component genus");
    if (twice_g_minus_2 + 2 < 0) throw Error(ErrorCode::NegativeGenus, "subcover component genus");
    comp.genus = static_cast<int>((twice_g_minus_2 + 2) / 2);
  }

  auto subcover_component = [&](int cover_component) {
    const auto& cc = c.components[static_cast<std::size_t>(cover_component)];
    const int cell = rc.cell_of[static_cast<std::size_t>(cc.representative)];
    return component_of_coset[static_cast<std::size_t>(cc.quotient_component)][static_cast<std::size_t>(cell)];
  };
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    out.components[static_cast<std::size_t>(subcover_component(static_cast<int>(i)))].cover_components.push_back(
        static_cast<int>(i));
  }

  std::vector<char> node_done(c.nodes.size(), 0);
  for (std::size_t n = 0; n < c.nodes.size(); ++n) {
    if (node_done[n]) continue;
    SubcoverNode sn;
    const int ea = static_cast<int>(2 * n);
    for (element_id x : k.members()) {
      const int image = c.action.edge_image(x, ea);
      const auto other = static_cast<std::size_t>(image / 2);
      if (!node_done[other]) {
        node_done[other] = 1;
        sn.cover_nodes.push_back(static_cast<int>(other));
      }
      if (image == ea + 1) sn.branches_identified = true;
    }
    std::sort(sn.cover_nodes.begin(), sn.cover_nodes.end());
    sn.a_component = subcover_component(c.nodes[n].a.component);
    sn.b_component = subcover_component(c.nodes[n].b.component);
    out.nodes.push_back(std::move(sn));
  }

  std::vector<int> parent(out.components.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int true_nodes = 0;
  for (const auto& sn : out.nodes) {
    if (sn.branches_identified) continue;
    ++true_nodes;
    parent[static_cast<std::size_t>(find(sn.a_component))] = find(sn.b_component);
  }
  int roots = 0;
  int genus_sum = 0;
  for (std::size_t z = 0; z < out.components.size(); ++z) {
    if (find(static_cast<int>(z)) == static_cast<int>(z)) ++roots;
    genus_sum += out.components[z].genus;
  }
  out.connected = roots == 1;
  if (out.connected) {
    out.arithmetic_genus =
        nodal_arithmetic_genus(genus_sum, true_nodes, static_cast<int>(out.components.size()));
  }
  return out;
}

}  // namespace hurwitz
