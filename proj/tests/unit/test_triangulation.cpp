#include <gtest/gtest.h>

#include "facenum/error.hpp"
#include "facenum/triangulation.hpp"

using facenum::Permutation;
using facenum::Triangulation;

TEST(Triangulation, JoinStoresBothSides) {
  Triangulation t(3, 2);
  const Permutation p{1, 0, 2, 3};
  t.join(0, 2, 1, p);
  ASSERT_TRUE(t.is_glued(0, 2));
  ASSERT_TRUE(t.is_glued(1, 2));
  EXPECT_EQ(t.adjacent(0, 2)->facet, 1);
  EXPECT_EQ(t.adjacent(1, 2)->correspondence, p.inverse());
  EXPECT_EQ(t.gluings().size(), 1u);
  EXPECT_EQ(t.free_slots().size(), 6u);
}

TEST(Triangulation, JoinRejectsTakenSlotsAndSelfRidge) {
  Triangulation t(2, 2);
  t.join(0, 0, 1, Permutation::identity(3));
  EXPECT_THROW(t.join(0, 0, 1, Permutation::transposition(3, 1, 2)), facenum::InvalidArgument);
  EXPECT_THROW(t.join(0, 1, 0, Permutation::transposition(3, 0, 2)), facenum::InvalidArgument);
  EXPECT_THROW(t.join(1, 1, 1, Permutation::identity(3)), facenum::InvalidArgument);
  EXPECT_THROW(t.join(0, 1, 1, Permutation::identity(4)), facenum::InvalidArgument);
}

TEST(Triangulation, JoinImagesMatchesPermutation) {
  Triangulation a(4, 1);
  Triangulation b(4, 1);
  const int images[] = {0, 3, 2, 4};
  a.join_images(0, 3, 0, images);
  b.join(0, 3, 0, Permutation{0, 3, 2, 1, 4});
  EXPECT_EQ(a, b);
}

TEST(Triangulation, UnjoinRestores) {
  Triangulation t(2, 2);
  const Triangulation empty = t;
  t.join(0, 1, 1, Permutation::identity(3));
  t.unjoin(1, 1);
  EXPECT_EQ(t, empty);
  EXPECT_THROW(t.unjoin(0, 1), facenum::InvalidArgument);
}

TEST(Triangulation, ConnectivityAndComponents) {
  Triangulation t(2, 3);
  EXPECT_FALSE(t.is_connected());
  EXPECT_EQ(t.component_count(), 3);
  t.join(0, 0, 2, Permutation::identity(3));
  EXPECT_EQ(t.component_count(), 2);
  t.join(2, 1, 1, Permutation::identity(3));
  EXPECT_TRUE(t.is_connected());
  EXPECT_TRUE(Triangulation(3, 0).is_connected());
}

TEST(Triangulation, RemoveFacetsKeepsOrder) {
  Triangulation t(2, 3);
  t.join(0, 0, 1, Permutation::identity(3));
  t.join(1, 1, 2, Permutation::identity(3));
  t.remove_facets(std::vector<int>{0});
  EXPECT_EQ(t.facet_count(), 2);
  ASSERT_TRUE(t.is_glued(0, 1));
  EXPECT_EQ(t.adjacent(0, 1)->facet, 1);
  EXPECT_FALSE(t.is_glued(0, 0));
}

TEST(Triangulation, RelabelKeepsGluedPairs) {
  Triangulation t(2, 2);
  t.join(0, 0, 1, Permutation::identity(3));
  t.relabel_facet(1, Permutation{2, 0, 1});
  // Old vertex 0 of facet 1 is now vertex 2, so the gluing lands on ridge 2.
  ASSERT_TRUE(t.is_glued(0, 0));
  EXPECT_EQ(t.adjacent(0, 0)->facet, 1);
  EXPECT_EQ(t.adjacent(0, 0)->correspondence[0], 2);
  EXPECT_TRUE(t.is_glued(1, 2));
}

TEST(Triangulation, InsertOffsetsFacets) {
  Triangulation a(2, 1);
  Triangulation b(2, 2);
  b.join(0, 0, 1, Permutation::identity(3));
  EXPECT_EQ(a.insert(b), 1);
  EXPECT_EQ(a.facet_count(), 3);
  EXPECT_EQ(a.adjacent(1, 0)->facet, 2);
}

TEST(Triangulation, RejectsBadArguments) {
  EXPECT_THROW(Triangulation(0, 1), facenum::InvalidArgument);
  EXPECT_THROW(Triangulation(2, -1), facenum::InvalidArgument);
  Triangulation t(2, 1);
  EXPECT_THROW(t.is_glued(1, 0), facenum::InvalidArgument);
  EXPECT_THROW(t.is_glued(0, 3), facenum::InvalidArgument);
}
