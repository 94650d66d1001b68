#include "hurwitz/egraph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void require_strict(const GenGraph& graph) {
  if (!graph.is_strict()) {
    throw Error(ErrorCode::NotStrict, "graph has self-opposite edges; no chain complex");
  }
}

}  // namespace

GenGraph::GenGraph(int vertex_count, std::vector<OrientedEdge> edges, std::vector<int> opp)
    : vertex_count_(vertex_count), edges_(std::move(edges)), opp_(std::move(opp)) {
  if (vertex_count_ < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
  if (opp_.size() != edges_.size()) throw Error(ErrorCode::InvalidGraph, "opp must cover every edge");
  const int n = static_cast<int>(edges_.size());
  for (int e = 0; e < n; ++e) {
    const auto& edge = edges_[static_cast<std::size_t>(e)];
    if (edge.source < 0 || edge.source >= vertex_count_ || edge.target < 0 ||
        edge.target >= vertex_count_) {
      throw Error(ErrorCode::InvalidGraph, "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    int o = opp_[static_cast<std::size_t>(e)];
    if (o < 0 || o >= n || opp_[static_cast<std::size_t>(o)] != e) {
      throw Error(ErrorCode::InvalidGraph, "opp is not an involution at edge " + std::to_string(e));
    }
    if (source(o) != target(e) || target(o) != source(e)) {
      throw Error(ErrorCode::InvalidGraph, "opposite of edge " + std::to_string(e) + " is not reversed");
    }
    if (o == e) strict_ = false;
    if (o >= e) unoriented_.push_back(e);
  }
}

std::vector<int> GenGraph::component_labels() const {
  DisjointSets sets(vertex_count_);
  for (const auto& edge : edges_) sets.unite(edge.source, edge.target);
  std::vector<int> label(static_cast<std::size_t>(vertex_count_), -1);
  std::vector<int> root_label(static_cast<std::size_t>(vertex_count_), -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    int r = sets.find(v);
    auto& rl = root_label[static_cast<std::size_t>(r)];
    if (rl < 0) rl = next++;
    label[static_cast<std::size_t>(v)] = rl;
  }
  return label;
}

GraphAction::GraphAction(GenGraph graph, Group group, std::vector<std::vector<int>> vertex_images,
                         std::vector<std::vector<int>> edge_images)
    : graph_(std::move(graph)),
      group_(std::move(group)),
      vertex_images_(std::move(vertex_images)),
      edge_images_(std::move(edge_images)) {
  const PermGroup& g = *group_;
  if (vertex_images_.size() != g.order() || edge_images_.size() != g.order()) {
    throw Error(ErrorCode::InvalidAction, "need images for every group element");
  }
  const auto nv = static_cast<std::size_t>(graph_.vertex_count());
  const auto ne = static_cast<std::size_t>(graph_.oriented_edge_count());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (vertex_images_[x].size() != nv || edge_images_[x].size() != ne) {
      throw Error(ErrorCode::InvalidAction, "image list has the wrong length");
    }
    for (int e = 0; e < graph_.oriented_edge_count(); ++e) {
      int ge = edge_images_[x][static_cast<std::size_t>(e)];
      if (graph_.source(ge) != vertex_images_[x][static_cast<std::size_t>(graph_.source(e))] ||
          graph_.target(ge) != vertex_images_[x][static_cast<std::size_t>(graph_.target(e))] ||
          graph_.opp(ge) != edge_images_[x][static_cast<std::size_t>(graph_.opp(e))]) {
        throw Error(ErrorCode::InvalidAction,
                    "element " + std::to_string(x) + " does not commute with the graph structure");
      }
    }
  }
  auto is_identity = [](const std::vector<int>& images) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] != static_cast<int>(i)) return false;
    }
    return true;
  };
  if (!is_identity(vertex_images_[0]) || !is_identity(edge_images_[0])) {
    throw Error(ErrorCode::InvalidAction, "identity does not act trivially");
  }
  // act(s * x) == act(s) o act(x) for generators s and all x makes the
  // assignment a homomorphism.
  for (element_id s : g.generator_ids()) {
    const auto& vs = vertex_images_[static_cast<std::size_t>(s)];
    const auto& es = edge_images_[static_cast<std::size_t>(s)];
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto sx = static_cast<std::size_t>(g.mul(s, static_cast<element_id>(x)));
      for (std::size_t v = 0; v < nv; ++v) {
        if (vertex_images_[sx][v] != vs[static_cast<std::size_t>(vertex_images_[x][v])]) {
          throw Error(ErrorCode::InvalidAction, "vertex action is not a homomorphism");
        }
      }
      for (std::size_t e = 0; e < ne; ++e) {
        if (edge_images_[sx][e] != es[static_cast<std::size_t>(edge_images_[x][e])]) {
          throw Error(ErrorCode::InvalidAction, "edge action is not a homomorphism");
        }
      }
    }
  }
}

Betti betti(const GenGraph& graph) {
  require_strict(graph);
  auto labels = graph.component_labels();
  int b0 = 0;
  for (int l : labels) b0 = std::max(b0, l + 1);
  return {b0, graph.edge_count() - graph.vertex_count() + b0};
}

std::vector<EdgeOrbit> edge_orbit_data(const GraphAction& action) {
  const GenGraph& graph = action.graph();
  require_strict(graph);
  const PermGroup& g = *action.group();
  auto unoriented = [&](int e) { return std::min(e, graph.opp(e)); };

  std::vector<char> done(static_cast<std::size_t>(graph.oriented_edge_count()), 0);
  std::vector<EdgeOrbit> orbits;
  for (int e : graph.unoriented_edges()) {
    if (done[static_cast<std::size_t>(e)]) continue;
    EdgeOrbit orbit;
    orbit.representative = e;
    std::vector<element_id> stab;
    for (std::size_t x = 0; x < g.order(); ++x) {
      int image = action.edge_image(static_cast<element_id>(x), e);
      int u = unoriented(image);
      if (!done[static_cast<std::size_t>(u)]) {
        done[static_cast<std::size_t>(u)] = 1;
        orbit.edges.push_back(u);
      }
      if (u == e) stab.push_back(static_cast<element_id>(x));
    }
    std::sort(orbit.edges.begin(), orbit.edges.end());
    orbit.stabilizer = Subgroup::from_members(action.group(), std::move(stab));
    for (element_id h : orbit.stabilizer.members()) {
      int sign = action.edge_image(h, e) == e ? 1 : -1;
      orbit.signum.push_back(sign);
      if (sign < 0) orbit.orientable = false;
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

ClassFunction vertex_permutation_character(const GraphAction& action) {
  return ClassFunction::permutation_character(action.group(), action.vertex_images());
}

ClassFunction edge_chain_character(const GraphAction& action) {
  ClassFunction sum = ClassFunction::zero(action.group());
  for (const auto& orbit : edge_orbit_data(action)) {
    sum += induced_character(orbit.stabilizer, orbit.signum);
  }
  return sum;
}

ClassFunction graph_virtual_character(const GraphAction& action) {
  return vertex_permutation_character(action) - edge_chain_character(action);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void write_dot(std::ostream& os, const GenGraph& graph, const DotStyle& style) {
  os << "graph " << style.name << " {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < graph.vertex_count(); ++v) {
    std::string label = static_cast<std::size_t>(v) < style.vertex_labels.size()
                            ? style.vertex_labels[static_cast<std::size_t>(v)]
                            : "v" + std::to_string(v);
    os << "  v" << v << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  const auto& edges = graph.unoriented_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int e = edges[i];
    os << "  v" << graph.source(e) << " -- v" << graph.target(e);
    std::vector<std::string> attrs;
    if (i < style.edge_labels.size()) attrs.push_back("label=\"" + dot_escape(style.edge_labels[i]) + "\"");
    bool dashed = graph.is_self_opposite(e) || (i < style.dashed.size() && style.dashed[i]);
    if (dashed) attrs.push_back("style=dashed");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t a = 0; a < attrs.size(); ++a) os << (a ? ", " : "") << attrs[a];
      os << ']';
    }
    os << ";\n";
  }
  os << "}\n";
}

}  // namespace hurwitz
