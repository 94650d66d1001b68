#include <gtest/gtest.h>

#include "hurwitz/catalog.hpp"
#include "hurwitz/cohomology.hpp"
#include "hurwitz/error.hpp"

using namespace hurwitz;

namespace {

struct A5Characters {
  catalog::IcosahedralFamily fam = catalog::icosahedral_family();
  Subgroup c5;
  Subgroup d10;
  std::vector<int> sgn;

  A5Characters() {
    const element_id cg[] = {fam.m};
    const element_id dg[] = {fam.m, fam.s};
    c5 = Subgroup::generated_by(fam.group, cg);
    d10 = Subgroup::generated_by(fam.group, dg);
    for (auto x : d10.members()) sgn.push_back(c5.contains(x) ? 1 : -1);
  }
};

}  // namespace

TEST(DeRham, TrivialGroupLine) {
  const Group g = PermGroup::generate(1, {Perm::identity(1)});
  const CoverCurve c = build_cover(BoundaryDatum{g, {MarkedComponent{}}});
  const DevissageReport r = de_rham_character(c);
  ASSERT_TRUE(r.chi_dR);
  EXPECT_EQ(*r.chi_dR, 2 * ClassFunction::trivial(g));
  EXPECT_EQ(r.degree, 2);
  EXPECT_EQ(h1_character(c), ClassFunction::zero(g));
}

TEST(DeRham, IcosahedralDihedral) {
  const A5Characters a;
  const CoverCurve c = build_cover(a.fam.dihedral);
  const DevissageReport r = de_rham_character(c);
  const ClassFunction ind_sgn = induced_character(a.d10, a.sgn);
  ASSERT_TRUE(r.chi_dR);
  EXPECT_EQ(*r.chi_dR, 2 * ClassFunction::trivial(a.fam.group) - 2 * ind_sgn);
  EXPECT_EQ(r.chi_dR->degree(), -10);
  EXPECT_EQ(r.degree, -10);
  EXPECT_EQ(r.edge_induction_sum, ind_sgn);
  ASSERT_TRUE(r.chi_normalization);
  EXPECT_EQ(*r.chi_dR, *r.chi_normalization - 2 * r.edge_induction_sum);
  // the literal variant is off by twice the number of components
  ASSERT_TRUE(r.literal_chi_dR);
  EXPECT_EQ(r.literal_chi_dR->degree(), -8);
  const ClassFunction h1 = h1_character(c);
  EXPECT_EQ(h1, 2 * ind_sgn);
  EXPECT_EQ(h1.degree(), 12);
}

TEST(DeRham, IcosahedralSplit) {
  const A5Characters a;
  const CoverCurve c = build_cover(a.fam.split);
  const DevissageReport r = de_rham_character(c);
  const ClassFunction triv = ClassFunction::trivial(a.fam.group);
  const ClassFunction expected =
      2 * (triv + induced_character(a.d10, trivial_on(a.d10))) - 2 * induced_character(a.c5, trivial_on(a.c5));
  ASSERT_TRUE(r.chi_dR);
  EXPECT_EQ(*r.chi_dR, expected);
  EXPECT_EQ(r.chi_dR->degree(), -10);
  EXPECT_EQ(h1_character(c), 2 * induced_character(a.d10, a.sgn));
}

TEST(DeRham, DegenerationsAgree) {
  const A5Characters a;
  EXPECT_EQ(h1_character(build_cover(a.fam.dihedral)), h1_character(build_cover(a.fam.split)));
}

TEST(DeRham, PositiveGenusWithholdsCharacter) {
  const Group g = catalog::symmetric(3);
  const element_id c = g->index_of(Perm::from_cycles(3, {{0, 1, 2}}));
  const element_id t = g->index_of(Perm::from_cycles(3, {{0, 1}}));
  // branch orders (3, 3, 2, 2): a genus-2 cover
  const element_id last = g->inv(g->product(std::vector<element_id>{c, c, t}));
  const CoverCurve cover = build_cover(hurwitz_to_datum(HurwitzTuple{g, {c, c, t, last}}));
  ASSERT_GT(cover.components[0].genus, 0);
  const DevissageReport r = de_rham_character(cover);
  EXPECT_TRUE(r.positive_genus_components);
  EXPECT_FALSE(r.chi_dR);
  EXPECT_EQ(r.degree, 2 - 2 * arithmetic_genus(cover));
  try {
    h1_character(cover);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PositiveGenusComponents);
  }
}

TEST(DeRham, DisconnectedH1Throws) {
  // <t> in S3 with two branch points: three rational components
  const Group g = catalog::symmetric(3);
  const element_id t = g->index_of(Perm::from_cycles(3, {{0, 1}}));
  const CoverCurve cover = build_cover(hurwitz_to_datum(HurwitzTuple{g, {t, t}}));
  ASSERT_EQ(cover.components.size(), 3u);
  try {
    h1_character(cover);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}
