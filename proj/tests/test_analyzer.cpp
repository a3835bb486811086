#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bodycad/analyzer.hpp"
#include "bodycad/error.hpp"
#include "bodycad/fixtures.hpp"
#include "bodycad/io.hpp"

using namespace bodycad;

TEST(Analyze, TwoBodyFrameworkRigidAndAgrees) {
  for (FieldChoice field : {FieldChoice::Prime, FieldChoice::Rational}) {
    const auto r = analyze(two_body_framework(), 1, field);
    ASSERT_FALSE(r.withheld());
    EXPECT_EQ(r.combinatorial->status, VerdictStatus::MinimallyRigid);
    EXPECT_EQ(r.embedding.dof, 0);
    EXPECT_EQ(r.generic->dof, 0);
    EXPECT_EQ(r.cross_check, CrossCheck::Agree);
    EXPECT_EQ(r.angular_rows, 2);
    EXPECT_EQ(r.blind_rows, 4);
    EXPECT_EQ(exit_code(r), kExitRigid);
    for (const auto& p : r.primitives) EXPECT_TRUE(p.tree.has_value());
  }
}

TEST(Analyze, FlexibleVariantOneDegreeOfFreedom) {
  const auto r = analyze(two_body_framework_flexible(), 1);
  EXPECT_EQ(r.combinatorial->status, VerdictStatus::Underconstrained);
  EXPECT_EQ(r.combinatorial->deficiency, 1);
  EXPECT_EQ(r.embedding.dof, 1);
  EXPECT_EQ(r.cross_check, CrossCheck::Agree);
  EXPECT_EQ(exit_code(r), kExitFlexible);
}

TEST(Analyze, DoubleBananaWithheld) {
  const auto r = analyze(double_banana(), 1);
  EXPECT_TRUE(r.withheld());
  EXPECT_FALSE(r.withheld_reason.empty());
  EXPECT_EQ(r.embedding.rank, 5);
  EXPECT_EQ(r.embedding.dof, 1);
  EXPECT_EQ(r.cross_check, CrossCheck::NotApplicable);
  EXPECT_EQ(exit_code(r), kExitWithheld);
}

TEST(Analyze, WithheldIffPointPointCoincidence) {
  auto fw = two_body_framework();
  EXPECT_FALSE(analyze(fw, 1).withheld());
  CadConstraint pp;
  pp.id = "weld";
  pp.kind = ConstraintKind::PointPointCoincidence;
  pp.i = 0;
  pp.j = 1;
  pp.geometry.p = Vec3{1, 1, 1};
  fw.constraints.push_back(pp);
  EXPECT_TRUE(analyze(fw, 1).withheld());
}

TEST(Analyze, DependentReportsCircuitsMappedToConstraints) {
  auto fw = two_body_framework();
  // A second, differently placed point-plane coincidence makes 7 rows on 2 bodies.
  CadConstraint extra = fw.constraints[1];
  extra.id = "iv";
  extra.geometry.p_i = Vec3{3, -1, 9};
  fw.constraints.push_back(extra);
  const auto r = analyze(fw, 1);
  EXPECT_EQ(r.combinatorial->status, VerdictStatus::NotCounted);
  ASSERT_FALSE(r.circuits.empty());
  const auto& c = r.circuits.front();
  EXPECT_FALSE(c.constraints.empty());
  EXPECT_TRUE(std::count(c.constraints.begin(), c.constraints.end(), "iv"));
  EXPECT_EQ(exit_code(r), kExitDependent);
  EXPECT_EQ(r.cross_check, CrossCheck::Agree);
}

TEST(Analyze, Deterministic) {
  const auto a = analyze(build_pappus(false), 4);
  const auto b = analyze(build_pappus(false), 4);
  EXPECT_EQ(a, b);
  EXPECT_EQ(report_to_json(a), report_to_json(b));
}

TEST(Pappus, StructureAndRanks) {
  const auto exact = build_pappus(false);
  EXPECT_EQ(exact.bodies.size(), 18u);
  EXPECT_EQ(exact.constraints.size(), 27u);
  const auto re = analyze(exact, 1);
  EXPECT_EQ(re.blind_rows, 54);
  EXPECT_EQ(re.combinatorial->rank, 54);
  EXPECT_LT(re.embedding.rank, 54);
  EXPECT_TRUE(re.embedding_nongeneric);

  const auto rg = analyze(build_pappus(true), 1);
  EXPECT_EQ(rg.embedding.rank, 54);
  EXPECT_EQ(rg.combinatorial->rank, 54);
}

TEST(Pappus, ExactPointsLieOnTheirLines) {
  for (const auto& c : build_pappus(false).constraints) {
    const Vec3 off = *c.geometry.p_i - *c.geometry.p_j;
    EXPECT_TRUE(is_zero(cross(off, c.geometry.d->vec()))) << c.id;
  }
}

TEST(RandomFrame, TwoVerticesForcedShape) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_counted_frame<ModP>({2, 6, 3, 0.5, seed, RandomShape::UniformPairs});
    EXPECT_EQ(f.graph.m(), 6u);
    EXPECT_LE(f.graph.m_red(), 3u);
    EXPECT_TRUE(f.connected);
    EXPECT_TRUE(is_kg_counted(f.graph, {6, 3}));
  }
}

TEST(RandomFrame, InfeasibleRedFraction) {
  try {
    random_counted_graph({3, 6, 3, 0.9, 1, RandomShape::UniformPairs});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleSpec);
  }
}

TEST(RandomFrame, DeterministicAndCounted) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const RandomFrameSpec spec{static_cast<int>(uniform_int(rng, 1, 7)), 6, 3, 0.25, rng(),
                               static_cast<RandomShape>(t % 3)};
    const auto a = random_counted_graph(spec);
    EXPECT_EQ(a.edges(), random_counted_graph(spec).edges());
    EXPECT_TRUE(is_kg_counted(a, {6, 3}));
  }
}

TEST(RandomFrame, TreeUnionIsRigid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = random_counted_graph({5, 6, 3, 0.3, seed, RandomShape::TreeUnion});
    EXPECT_EQ(decide(h, {6, 3}).status, VerdictStatus::MinimallyRigid);
  }
}

TEST(CrossValidate, SmallRunAllAgreeWithMixedOutcomes) {
  const auto s = crossvalidate(60, 6, {6, 3}, 2);
  EXPECT_EQ(s.trials, 60);
  EXPECT_EQ(s.agreements, 60);
  EXPECT_GT(s.rigid, 0);
  EXPECT_LT(s.rigid, 60);
}

TEST(CircuitSoundness, RemovingACircuitEdgeRestoresIndependence) {
  // Rank drops by |C| - 1 when C alone is added to an independent set.
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(uniform_int(rng, 2, 4));
    const auto h = random_counted_graph({n, 6, 3, 0.25, rng(), RandomShape::UniformPairs});
    const auto v = decide(h, {6, 3});
    const auto lab = random_generic_labeling<ModP>(h, {6, 3}, rng());
    for (const EdgeSet& c : v.circuits) {
      ++checked;
      const auto sub = h.subgraph(c);
      Matrix<ModP> m = assemble(sub, lab).rows;
      EXPECT_EQ(rank(m), c.size() - 1);
      for (EdgeId drop : c) {
        EdgeSet rest;
        for (EdgeId id : c) if (id != drop) rest.push_back(id);
        EXPECT_EQ(rank(assemble(h.subgraph(rest), lab).rows), rest.size());
      }
    }
  }
  EXPECT_GT(checked, 0);
}
