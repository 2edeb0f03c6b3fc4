#include <gtest/gtest.h>

#include "facenum/classify.hpp"
#include "facenum/constructions.hpp"
#include "facenum/error.hpp"

using namespace facenum;

TEST(Classify, SphereIsNonsingularThroughout) {
  const ClassificationReport c = classify(pillow(4));
  EXPECT_TRUE(c.pseudomanifold);
  EXPECT_EQ(c.nonsingular_from, 0);
  EXPECT_TRUE(c.monotone);
  EXPECT_EQ(c.levels[0].certainty, Certainty::HomologyCertified);
  EXPECT_EQ(c.levels[1].certainty, Certainty::Exact);
  EXPECT_EQ(c.delta, Rational(4));
}

TEST(Classify, CounterexamplesAreExactlyTwoNonsingular) {
  for (const Triangulation& t : {p3(4), p3_nl(4), p2(4), p4(2)}) {
    const ClassificationReport c = classify(t);
    EXPECT_TRUE(c.pseudomanifold);
    EXPECT_EQ(c.nonsingular_from, 2);
    EXPECT_EQ(c.non_sphere_links(1).size(), 1u);
    EXPECT_EQ(c.non_sphere_links(0).size(), 1u);
    EXPECT_FALSE(c.levels[1].holds);
    EXPECT_EQ(c.levels[1].certainty, Certainty::Exact);
  }
}

TEST(Classify, NonSphereEdgeLinkGenus) {
  const auto p3_edges = classify(p3(4)).non_sphere_links(1);
  ASSERT_EQ(p3_edges.size(), 1u);
  ASSERT_TRUE(p3_edges[0].surface.has_value());
  EXPECT_EQ(p3_edges[0].surface->genus, 3);
  EXPECT_TRUE(p3_edges[0].surface->orientable);

  const auto nl_edges = classify(p3_nl(4)).non_sphere_links(1);
  ASSERT_EQ(nl_edges.size(), 1u);
  EXPECT_EQ(nl_edges[0].surface->genus, 3);

  EXPECT_EQ(classify(p2(4)).non_sphere_links(1)[0].surface->genus, 6);
  EXPECT_EQ(classify(p4(2)).non_sphere_links(1)[0].surface->genus, 6);
}

TEST(Classify, TorusEdgeLinkIsOnlyTwoNonsingular) {
  const ClassificationReport c = classify(p4(1));
  EXPECT_EQ(c.nonsingular_from, 2);
  const auto edges = c.non_sphere_links(1);
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].surface->genus, 1);
}

TEST(Classify, SingularVertexLinkFailsHomologyTest) {
  const auto vertices = classify(p3(4)).non_sphere_links(0);
  ASSERT_EQ(vertices.size(), 1u);
  EXPECT_EQ(vertices[0].link_dim, 3);
  EXPECT_FALSE(vertices[0].sphere);
  EXPECT_FALSE(vertices[0].homology.empty());
}

TEST(Classify, LowerDimensions) {
  const ClassificationReport c = classify(sphere_odd(3, 4));
  EXPECT_EQ(c.nonsingular_from, 0);
  EXPECT_EQ(c.levels[0].certainty, Certainty::Exact);
}

TEST(Classify, RequiresClosedConnected) {
  EXPECT_THROW(classify(ds2()), InvalidArgument);
  Triangulation two = pillow(3);
  two.insert(pillow(3));
  EXPECT_THROW(classify(two), InvalidArgument);
}

TEST(Classify, InvalidFaceIsNotPseudomanifold) {
  Triangulation t(3, 1);
  t.join(0, 3, 0, Permutation{1, 0, 3, 2});
  t.join(0, 0, 0, Permutation{1, 0, 3, 2});
  ASSERT_TRUE(t.is_closed());
  const ClassificationReport c = classify(t);
  EXPECT_FALSE(c.pseudomanifold);
  EXPECT_TRUE(c.links.empty());
  EXPECT_FALSE(c.nonsingular_from.has_value());
}
