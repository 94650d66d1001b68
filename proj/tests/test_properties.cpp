#include <gtest/gtest.h>

#include <random>

#include "hurwitz/catalog.hpp"
#include "hurwitz/cohomology.hpp"
#include "hurwitz/degen.hpp"
#include "hurwitz/error.hpp"

using namespace hurwitz;

namespace {

constexpr int kCasesPerGroup = 160;

class RandomData {
 public:
  RandomData(Group g, unsigned seed) : g_(std::move(g)), rng_(seed) {}

  element_id any() { return std::uniform_int_distribution<element_id>(0, static_cast<element_id>(g_->order()) - 1)(rng_); }
  int coin(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  /// Points closing the surface relation: random entries, the last one forced.
  std::vector<element_id> closing(std::vector<element_id> prefix, element_id lead, int extra) {
    for (int i = 0; i < extra; ++i) prefix.push_back(any());
    element_id prod = lead;
    for (element_id x : prefix) prod = g_->mul(prod, x);
    prefix.push_back(g_->inv(prod));
    return prefix;
  }

  std::optional<std::pair<element_id, element_id>> dihedral_pair() {
    std::vector<std::pair<element_id, element_id>> pairs;
    for (element_id m = 0; m < static_cast<element_id>(g_->order()); ++m) {
      for (element_id s = 0; s < static_cast<element_id>(g_->order()); ++s) {
        if (is_inverting_involution(*g_, m, s)) pairs.push_back({m, s});
      }
    }
    if (pairs.empty()) return std::nullopt;
    return pairs[static_cast<std::size_t>(coin(static_cast<int>(pairs.size())))];
  }

  /// One or two components; optional handle, dihedral point and node.
  BoundaryDatum datum() {
    const int shape = coin(4);
    MarkedComponent first;
    std::vector<MarkedPoint> head;
    element_id lead = PermGroup::identity();
    if (shape == 1) {
      first.genus = 1;
      const element_id a = any(), b = any();
      first.handles.push_back({a, b});
      lead = g_->mul(g_->mul(a, b), g_->mul(g_->inv(a), g_->inv(b)));
    }
    if (shape == 2) {
      if (auto p = dihedral_pair()) {
        head.push_back(MarkedPoint::dihedral(p->first, p->second));
        lead = p->first;
      }
    }
    if (shape == 3) {
      // two lines joined by one node with monodromies h, h^-1
      const auto left = closing({}, PermGroup::identity(), 1 + coin(2));
      const element_id h = left.back();
      MarkedComponent a, b;
      for (std::size_t i = 0; i + 1 < left.size(); ++i) a.points.push_back(MarkedPoint::cyclic(left[i]));
      a.points.push_back(MarkedPoint::node_end(h, 0));
      const auto right = closing({}, g_->inv(h), 1 + coin(2));
      b.points.push_back(MarkedPoint::node_end(g_->inv(h), 0));
      for (element_id x : right) b.points.push_back(MarkedPoint::cyclic(x));
      return BoundaryDatum{g_, {a, b}};
    }
    first.points = head;
    std::vector<element_id> rest = closing({}, lead, 1 + coin(3));
    for (element_id x : rest) first.points.push_back(MarkedPoint::cyclic(x));
    return BoundaryDatum{g_, {first}};
  }

  const Group& group() const { return g_; }

 private:
  Group g_;
  std::mt19937 rng_;
};

class Properties : public ::testing::TestWithParam<int> {};

Group group_for(int which) {
  switch (which) {
    case 0: return catalog::symmetric(3);
    case 1: return catalog::symmetric(4);
    case 2: return catalog::dihedral(4);
    default: return catalog::dihedral(5);
  }
}

}  // namespace

TEST_P(Properties, RandomValidData) {
  RandomData gen(group_for(GetParam()), 1000u + static_cast<unsigned>(GetParam()));
  const Group& g = gen.group();
  int rational_connected = 0;
  for (int i = 0; i < kCasesPerGroup; ++i) {
    const BoundaryDatum d = gen.datum();
    ASSERT_TRUE(validate(d).ok()) << "case " << i;

    CoverCurve c;
    ASSERT_NO_THROW(c = build_cover(d)) << "case " << i;
    for (const auto& comp : c.components) ASSERT_GE(comp.genus, 0);

    // orbit-stabilizer for components and nodes (independent of check_equivariance)
    ASSERT_TRUE(check_equivariance(c));
    std::vector<int> orbit_size(c.components.size(), 0);
    for (std::size_t v = 0; v < c.components.size(); ++v) {
      std::set<int> orbit;
      for (element_id x = 0; x < static_cast<element_id>(g->order()); ++x) orbit.insert(c.action.vertex_image(x, static_cast<int>(v)));
      ASSERT_EQ(orbit.size() * c.components[v].stabilizer_order, g->order());
    }
    for (std::size_t n = 0; n < c.nodes.size(); ++n) {
      std::set<std::pair<int, int>> orbit;
      for (element_id x = 0; x < static_cast<element_id>(g->order()); ++x) {
        int a = c.action.edge_image(x, static_cast<int>(2 * n));
        int b = c.action.edge_image(x, static_cast<int>(2 * n + 1));
        orbit.insert({std::min(a, b), std::max(a, b)});
      }
      ASSERT_EQ(orbit.size() * classify_node(c, n).stabilizer.order(), g->order());
    }

    // node kinds follow the quotient
    for (std::size_t n = 0; n < c.nodes.size(); ++n) {
      const NodeKind expected =
          c.nodes[n].origin == NodeOrigin::DihedralPoint ? NodeKind::DihedralNode : NodeKind::CyclicNode;
      ASSERT_EQ(classify_node(c, n).kind, expected);
    }

    if (is_connected(c)) {
      const int ga = arithmetic_genus(c);
      const DevissageReport rep = de_rham_character(c);
      ASSERT_EQ(rep.degree, 2 - 2 * ga);
      bool rational = true;
      for (const auto& comp : c.components) rational = rational && comp.genus == 0;
      if (rational) {
        ++rational_connected;
        ASSERT_TRUE(rep.chi_dR);
        ASSERT_EQ(rep.chi_dR->degree(), 2 - 2 * ga);
        const ClassFunction h1 = h1_character(c);
        ASSERT_EQ(h1.degree(), 2 * ga);
        // invariants of H1 are H1 of the quotient: a nonnegative dimension
        ASSERT_GE(inner_product(h1, ClassFunction::trivial(g)), 0);
      }
    }

    // canonical form: idempotent and constant on the conjugation orbit
    const BoundaryDatum canon = canonical_form(d);
    ASSERT_EQ(canonical_form(canon), canon);
    const BoundaryDatum moved = conjugate(d, gen.any());
    ASSERT_TRUE(validate(moved).ok());
    ASSERT_EQ(canonical_form(moved), canon);
  }
  EXPECT_GT(rational_connected, 0);
}

TEST_P(Properties, SmoothDegenerateConstancy) {
  RandomData gen(group_for(GetParam()), 2000u + static_cast<unsigned>(GetParam()));
  const Group& g = gen.group();
  for (int i = 0; i < 40; ++i) {
    const std::vector<element_id> entries = gen.closing({}, PermGroup::identity(), 3 + gen.coin(2));
    const HurwitzTuple t{g, entries};
    const CoverCurve smooth = build_cover(hurwitz_to_datum(t));
    const auto genera = connected_arithmetic_genera(smooth);
    for (const auto& d : split_degenerations(t)) {
      ASSERT_TRUE(validate(d.datum).ok());
      ASSERT_TRUE(quotient_stability(d.datum));
      ASSERT_EQ(connected_arithmetic_genera(build_cover(d.datum)), genera);
    }
    for (int k = 0; k < static_cast<int>(entries.size()); ++k) {
      for (const auto& d : dihedral_degenerations(t, k)) {
        ASSERT_TRUE(validate(d.datum).ok());
        ASSERT_TRUE(quotient_stability(d.datum));
        const HurwitzTuple back = smooth_dihedral(d);
        ASSERT_NO_THROW(check_product_one(back));
        const CoverCurve boundary = build_cover(d.datum);
        const CoverCurve smoothed = build_cover(hurwitz_to_datum(back));
        ASSERT_EQ(connected_arithmetic_genera(boundary), connected_arithmetic_genera(smoothed));
      }
    }
  }
}

std::string group_name(const ::testing::TestParamInfo<int>& info) {
  static const char* names[] = {"S3", "S4", "D4", "D5"};
  return names[info.param];
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, Properties, ::testing::Values(0, 1, 2, 3), group_name);
