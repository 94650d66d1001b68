#include "hurwitz/degen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string_view to_string(DegenerationKind kind) {
  return kind == DegenerationKind::Split ? "split" : "dihedral";
}

std::vector<Degeneration> split_degenerations(const HurwitzTuple& t) {
  check_product_one(t);
  const int n = static_cast<int>(t.entries.size());
  if (n < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 points, got " + std::to_string(n));
  const PermGroup& g = *t.group;
  std::vector<Degeneration> out;
  for (int k = 2; k <= n - 2; ++k) {
    const auto split = t.entries.begin() + k;
    const element_id h = g.inv(g.product(std::span(t.entries.begin(), split)));
    MarkedComponent left;
    for (auto it = t.entries.begin(); it != split; ++it) left.points.push_back(MarkedPoint::cyclic(*it));
    left.points.push_back(MarkedPoint::node_end(h, 0));
    MarkedComponent right;
    right.points.push_back(MarkedPoint::node_end(g.inv(h), 0));
    for (auto it = split; it != t.entries.end(); ++it) right.points.push_back(MarkedPoint::cyclic(*it));
    Degeneration d;
    d.kind = DegenerationKind::Split;
    d.split_k = k;
    d.datum = {t.group, {std::move(left), std::move(right)}};
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Degeneration> dihedral_degenerations(const HurwitzTuple& t, int index) {
  check_product_one(t);
  const int n = static_cast<int>(t.entries.size());
  if (n < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 points, got " + std::to_string(n));
  if (index < 0 || index >= n) throw std::out_of_range("dihedral index out of range");
  const PermGroup& g = *t.group;
  const element_id m = t.entries[static_cast<std::size_t>(index)];
  const BoundaryDatum base = hurwitz_to_datum(t);
  std::vector<Degeneration> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto s = static_cast<element_id>(x);
    if (!is_inverting_involution(g, m, s)) continue;
    Degeneration d;
    d.kind = DegenerationKind::Dihedral;
    d.index = index;
    d.s = s;
    d.datum = base;
    d.datum.components[0].points[static_cast<std::size_t>(index)] = MarkedPoint::dihedral(m, s);
    out.push_back(std::move(d));
  }
  return out;
}

HurwitzTuple smooth_dihedral(const Degeneration& d) {
  if (d.kind != DegenerationKind::Dihedral) throw std::invalid_argument("not a dihedral degeneration");
  const PermGroup& g = *d.datum.group;
  HurwitzTuple t{d.datum.group, {}};
  const auto& points = d.datum.components.at(0).points;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(i) == d.index) {
      t.entries.push_back(points[i].s);
      t.entries.push_back(g.mul(points[i].s, points[i].m));
    } else {
      t.entries.push_back(points[i].m);
    }
  }
  check_product_one(t);
  return t;
}

HurwitzTuple merge_adjacent(const HurwitzTuple& t, int index) {
  if (index < 0 || index + 1 >= static_cast<int>(t.entries.size())) {
    throw std::out_of_range("merge index out of range");
  }
  HurwitzTuple out{t.group, {}};
  for (int i = 0; i < static_cast<int>(t.entries.size()); ++i) {
    if (i == index) {
      out.entries.push_back(t.group->mul(t.entries[static_cast<std::size_t>(i)], t.entries[static_cast<std::size_t>(i + 1)]));
      ++i;
    } else {
      out.entries.push_back(t.entries[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

BoundaryDatum blow_up_dihedral(const BoundaryDatum& d, PointRef dihedral_point) {
  const MarkedPoint& p = d.point(dihedral_point);
  if (p.kind != PointKind::Dihedral) throw std::invalid_argument("point is not dihedral");
  const PermGroup& g = *d.group;
  int node = 0;
  for (const auto& comp : d.components) {
    for (const auto& q : comp.points) {
      if (q.kind == PointKind::NodeEnd) node = std::max(node, q.node_id + 1);
    }
  }
  MarkedComponent line;
  line.points = {MarkedPoint::cyclic(p.s), MarkedPoint::cyclic(g.mul(p.s, p.m)),
                 MarkedPoint::node_end(g.inv(p.m), node)};
  BoundaryDatum out{d.group, {std::move(line)}};
  for (const auto& comp : d.components) out.components.push_back(comp);
  out.components[static_cast<std::size_t>(dihedral_point.component) + 1]
      .points[static_cast<std::size_t>(dihedral_point.point)] = MarkedPoint::node_end(p.m, node);
  return out;
}

std::vector<Degeneration> dedup(const std::vector<Degeneration>& list) {
  std::vector<Degeneration> out;
  std::vector<BoundaryDatum> seen;
  for (const auto& d : list) {
    BoundaryDatum canon = canonical_form(d.datum);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
    seen.push_back(std::move(canon));
    out.push_back(d);
  }
  return out;
}

int fdef_predicted_orbits(int stabilizer_order) {
  if (stabilizer_order <= 0 || stabilizer_order % 2 != 0) {
    throw Error(ErrorCode::OddOrder, "stabilizer order " + std::to_string(stabilizer_order) + " is not even");
  }
  return stabilizer_order % 4 == 0 ? 4 : 2;
}

FdefLocalModel fdef_local_model(int n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  FdefLocalModel model;
  const int q = 4 * n;
  model.modulus = q;
  auto mod = [q](int v) { return ((v % q) + q) % q; };
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < n; ++k) {
    for (int e = 0; e < q; ++e) {
      if (mod(2 * e + 4 * k) != 0) continue;
      std::pair<int, int> point{mod(4 * k + e), e};
      index.emplace(point, static_cast<int>(model.points.size()));
      model.points.push_back(point);
    }
  }

  std::vector<int> parent(model.points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (std::size_t i = 0; i < model.points.size(); ++i) {
    const auto [a, b] = model.points[i];
    unite(static_cast<int>(i), index.at({mod(a + 4), mod(b - 4)}));
    unite(static_cast<int>(i), index.at({b, a}));
  }
  std::map<int, int> sizes;
  for (std::size_t i = 0; i < model.points.size(); ++i) ++sizes[find(static_cast<int>(i))];
  for (const auto& [root, size] : sizes) model.orbit_sizes.push_back(size);
  std::sort(model.orbit_sizes.rbegin(), model.orbit_sizes.rend());
  return model;
}

int fdef_local_oracle(int n) { return fdef_local_model(n).orbit_count(); }

}  // namespace hurwitz
