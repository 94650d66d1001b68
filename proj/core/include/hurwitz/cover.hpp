#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/egraph.hpp"
#include "hurwitz/group.hpp"

namespace hurwitz {

/// Riemann-Hurwitz: the genus g of a connected H-cover of a genus-h curve
/// with 2g - 2 = |H|(2h - 2) + sum (|H| - |H|/ord). Orders of 1 contribute
/// nothing. Throws NonIntegralGenus (including when an order does not divide
/// |H|) or NegativeGenus.
int rh_genus(std::size_t subgroup_order, int base_genus, std::span<const int> ramification_orders);

/// sum g_i + #nodes - #components + 1.
int nodal_arithmetic_genus(int genus_sum, int node_count, int component_count);

// Fibers over the quotient are copies of G: deck transformations act by left
// multiplication, monodromy by right multiplication. Cover components over a
// quotient component Y are the left cosets g H_Y; points over a marked point
// with monodromy m are the left cosets g<m>.

struct CoverComponent {
  int quotient_component = 0;
  int coset = 0;                    // index into left_cosets(H_Y)
  element_id representative = 0;    // smallest element of the coset
  std::size_t stabilizer_order = 0; // |H_Y|
  int genus = 0;
};

struct Branch {
  PointRef point;               // the quotient point below
  int coset = 0;                // index into left_cosets(<m>)
  element_id representative = 0;
  int component = 0;            // cover component the branch lies on
};

enum class NodeOrigin { QuotientNode, DihedralPoint };

struct CoverNode {
  Branch a;
  Branch b;
  NodeOrigin origin = NodeOrigin::QuotientNode;
  int quotient_node = -1;  // node id, for QuotientNode
  PointRef dihedral_point; // for DihedralPoint
};

/// The covering curve with its dual graph and deck action. Oriented edges 2i
/// and 2i+1 of action.graph() are the branches a and b of nodes[i].
struct CoverCurve {
  BoundaryDatum datum;
  std::vector<CoverComponent> components;
  std::vector<CoverNode> nodes;
  GraphAction action;
};

/// Throws Error(InvalidDatum) unless d validates; genus errors propagate.
CoverCurve build_cover(const BoundaryDatum& d);

/// Orbit size times stabilizer order equals |G| for every component and
/// every node.
bool check_equivariance(const CoverCurve& c);

bool is_connected(const CoverCurve& c);
/// Connected, arithmetic genus >= 2, and every genus-0 (genus-1) component
/// carries at least 3 (1) node branches.
bool is_stable(const CoverCurve& c);

/// Throws Error(Disconnected).
int arithmetic_genus(const CoverCurve& c);
/// Arithmetic genus of each connected piece, in order of first component.
std::vector<int> connected_arithmetic_genera(const CoverCurve& c);

/// Node branches lying on each component; a node with both branches on one
/// component counts twice.
std::vector<int> branch_counts(const CoverCurve& c);

enum class NodeKind { CyclicNode, DihedralNode };

struct NodeClass {
  NodeKind kind = NodeKind::CyclicNode;
  Subgroup stabilizer;  // setwise stabilizer of the branch pair
};

NodeClass classify_node(const CoverCurve& c, std::size_t node);

struct SubcoverComponent {
  int quotient_component = 0;
  element_id double_coset_rep = 0;  // smallest element of K g H_Y
  int degree = 0;                   // degree over the quotient component
  int genus = 0;
  std::vector<int> cover_components;
};

struct SubcoverPoint {
  PointRef point;
  std::vector<int> cycle_type;  // cycle lengths of m on the cosets of K, descending
};

struct SubcoverNode {
  int a_component = 0;  // subcover components of the two branch images
  int b_component = 0;
  bool branches_identified = false;  // K swaps the branches: a smooth point below
  std::vector<int> cover_nodes;      // the K-orbit
};

struct SubcoverSummary {
  std::size_t degree = 0;  // [G : K]
  std::vector<SubcoverComponent> components;
  std::vector<SubcoverPoint> points;
  std::vector<SubcoverNode> nodes;  // K-orbits of cover nodes
  bool connected = false;
  std::optional<int> arithmetic_genus;
};

/// Quotient of the cover by a subgroup K: a degree-[G:K] cover of the
/// pointed quotient curve. Genus errors signal a broken invariant.
SubcoverSummary subcover(const CoverCurve& c, const Subgroup& k);

}  // namespace hurwitz
