#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/egraph.hpp"
#include "hurwitz/group.hpp"

namespace hurwitz {

enum class PointKind { Cyclic, Dihedral, NodeEnd };

std::string_view to_string(PointKind kind);

/// A special point on a component of the quotient curve. `m` is the image of
/// the local monodromy; dihedral points also carry the branch involution `s`,
/// node ends carry the id of the node they belong to.
struct MarkedPoint {
  PointKind kind = PointKind::Cyclic;
  element_id m = 0;
  element_id s = 0;
  int node_id = -1;

  static MarkedPoint cyclic(element_id m) { return {PointKind::Cyclic, m, 0, -1}; }
  static MarkedPoint dihedral(element_id m, element_id s) { return {PointKind::Dihedral, m, s, -1}; }
  static MarkedPoint node_end(element_id m, int node) { return {PointKind::NodeEnd, m, 0, node}; }

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

struct MarkedComponent {
  int genus = 0;
  std::vector<std::pair<element_id, element_id>> handles;  // (a_i, b_i), one per handle
  std::vector<MarkedPoint> points;

  friend bool operator==(const MarkedComponent&, const MarkedComponent&) = default;
};

struct PointRef {
  int component = 0;
  int point = 0;
  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

/// Pointed quotient curve with its homomorphism to G, described by the
/// images of the standard generators of each component's fundamental group.
struct BoundaryDatum {
  Group group;
  std::vector<MarkedComponent> components;

  const MarkedPoint& point(PointRef ref) const {
    return components[static_cast<std::size_t>(ref.component)].points[static_cast<std::size_t>(ref.point)];
  }

  friend bool operator==(const BoundaryDatum& a, const BoundaryDatum& b) {
    return a.group == b.group && a.components == b.components;
  }
};

struct QuotientNode {
  int id = 0;
  PointRef a;  // first end in (component, point) order
  PointRef b;
};

/// Nodes of the datum in increasing id order. Throws Error(InvalidDatum) if
/// some node id does not occur on exactly two NodeEnd points.
std::vector<QuotientNode> quotient_nodes(const BoundaryDatum& d);

/// prod_i [a_i, b_i] * prod_points m: the identity for a valid component.
element_id surface_product(const BoundaryDatum& d, int component);

/// <handles, point monodromies> of a component.
Subgroup image_subgroup(const BoundaryDatum& d, int component);

enum class ViolationKind { SurfaceRelation, NodePairing, DihedralInvolution, HandleCount };
enum class WarningKind { UnramifiedMarking, UnstableQuotient };

std::string_view to_string(ViolationKind kind);
std::string_view to_string(WarningKind kind);

struct Violation {
  ViolationKind kind;
  int component = -1;
  int point = -1;
  int node = -1;
  std::string message;
};

struct DatumWarning {
  WarningKind kind;
  int component = -1;
  int point = -1;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  std::vector<DatumWarning> warnings;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the surface relations, node pairings (m_b == m_a^-1) and dihedral
/// involutions. A datum is valid iff the action it describes is admissible.
ValidationResult validate(const BoundaryDatum& d);

/// Every genus-0 component has >= 3 special points, every genus-1 component >= 1.
bool quotient_stability(const BoundaryDatum& d);

/// Monodromy data of a smooth cover of the line: g_1 * ... * g_n == e.
struct HurwitzTuple {
  Group group;
  std::vector<element_id> entries;

  friend bool operator==(const HurwitzTuple& a, const HurwitzTuple& b) {
    return a.group == b.group && a.entries == b.entries;
  }
};

/// Throws Error(ProductNotOne).
void check_product_one(const HurwitzTuple& t);

/// One genus-0 component with every entry a cyclic point. Throws ProductNotOne.
BoundaryDatum hurwitz_to_datum(const HurwitzTuple& t);

/// Dual generalized graph of the pointed quotient curve with its labels.
/// Oriented edges 2i and 2i+1 are the two branches of the i-th node (in id
/// order); self-opposite edges for dihedral points follow.
struct DualGraphOfGroups {
  GenGraph graph;
  std::vector<std::size_t> vertex_group_order;  // |image subgroup| per component
  std::vector<int> edge_group_order;            // ord(m) per oriented edge
  std::vector<PointRef> edge_point;             // marked point behind each oriented edge
};

/// Throws Error(InvalidDatum) unless d validates.
DualGraphOfGroups dual_graph_of_groups(const BoundaryDatum& d);

/// Simultaneous conjugation of every element of the datum by g.
BoundaryDatum conjugate(const BoundaryDatum& d, element_id g);

/// Conjugate of d whose element-id sequence is lexicographically smallest.
/// Throws Error(InvalidDatum) unless d validates.
BoundaryDatum canonical_form(const BoundaryDatum& d);
bool equivalent(const BoundaryDatum& a, const BoundaryDatum& b);

}  // namespace hurwitz
