#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hurwitz/class_function.hpp"
#include "hurwitz/group.hpp"

namespace hurwitz {

struct OrientedEdge {
  int source = 0;
  int target = 0;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

/// A graph in Serre's sense, except that `opp` may have fixed points
/// (self-opposite edges). Such graphs are "generalized"; graphs whose `opp`
/// is fixpoint free are "strict" and are the only ones with a chain complex.
class GenGraph {
 public:
  GenGraph() = default;
  /// Throws Error(InvalidGraph) unless opp is an involution with
  /// source(opp(e)) == target(e).
  GenGraph(int vertex_count, std::vector<OrientedEdge> edges, std::vector<int> opp);

  int vertex_count() const noexcept { return vertex_count_; }
  int oriented_edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int source(int e) const { return edges_[static_cast<std::size_t>(e)].source; }
  int target(int e) const { return edges_[static_cast<std::size_t>(e)].target; }
  int opp(int e) const { return opp_[static_cast<std::size_t>(e)]; }
  bool is_self_opposite(int e) const { return opp(e) == e; }
  bool is_strict() const noexcept { return strict_; }

  /// One id per edge {e, opp(e)}: the smaller of the two, ascending.
  const std::vector<int>& unoriented_edges() const noexcept { return unoriented_; }
  int edge_count() const noexcept { return static_cast<int>(unoriented_.size()); }

  /// Connected component label per vertex, labels 0.. in order of first vertex.
  std::vector<int> component_labels() const;

 private:
  int vertex_count_ = 0;
  std::vector<OrientedEdge> edges_;
  std::vector<int> opp_;
  std::vector<int> unoriented_;
  bool strict_ = true;
};

/// A group acting on a GenGraph. The images are indexed by element id.
class GraphAction {
 public:
  GraphAction() = default;
  /// Throws Error(InvalidAction) if some element fails to commute with
  /// source, target and opp, or the assignment is not a homomorphism.
  GraphAction(GenGraph graph, Group group, std::vector<std::vector<int>> vertex_images,
              std::vector<std::vector<int>> edge_images);

  const GenGraph& graph() const noexcept { return graph_; }
  const Group& group() const noexcept { return group_; }
  int vertex_image(element_id g, int v) const {
    return vertex_images_[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)];
  }
  int edge_image(element_id g, int e) const {
    return edge_images_[static_cast<std::size_t>(g)][static_cast<std::size_t>(e)];
  }
  const std::vector<std::vector<int>>& vertex_images() const noexcept { return vertex_images_; }
  const std::vector<std::vector<int>>& edge_images() const noexcept { return edge_images_; }

 private:
  GenGraph graph_;
  Group group_;
  std::vector<std::vector<int>> vertex_images_;
  std::vector<std::vector<int>> edge_images_;
};

struct Betti {
  int b0 = 0;
  int b1 = 0;
  friend bool operator==(const Betti&, const Betti&) = default;
};

/// b0 = number of components, b1 = E - V + b0. Throws NotStrict.
Betti betti(const GenGraph& graph);

struct EdgeOrbit {
  int representative = 0;  // smallest unoriented edge id in the orbit
  std::vector<int> edges;  // unoriented edge ids in the orbit, ascending
  Subgroup stabilizer;     // setwise stabilizer of {e, opp(e)}
  std::vector<int> signum; // aligned with stabilizer.members(): +1 fixes e, -1 swaps
  bool orientable = true;
};

/// Orbits of the group on unoriented edges, ordered by representative.
/// Throws NotStrict.
std::vector<EdgeOrbit> edge_orbit_data(const GraphAction& action);

ClassFunction vertex_permutation_character(const GraphAction& action);

/// Sum over edge orbits of the signum character induced from the stabilizer.
ClassFunction edge_chain_character(const GraphAction& action);

/// Character of the graph chain complex: permutation character on vertices
/// minus the edge chain character. Throws NotStrict.
ClassFunction graph_virtual_character(const GraphAction& action);

/// Optional decorations for DOT output. Empty vectors mean defaults.
struct DotStyle {
  std::string name = "G";
  std::vector<std::string> vertex_labels;  // per vertex, default "v{i}"
  std::vector<std::string> edge_labels;    // per unoriented edge (order of unoriented_edges())
  std::vector<bool> dashed;                // per unoriented edge; self-opposite edges are always dashed
};

/// Undirected DOT, one line per vertex then one per unoriented edge.
void write_dot(std::ostream& os, const GenGraph& graph, const DotStyle& style = {});

}  // namespace hurwitz
