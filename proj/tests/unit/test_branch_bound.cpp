#include <gtest/gtest.h>

#include "facenum/branch_bound.hpp"
#include "facenum/constructions.hpp"
#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/moves.hpp"

using namespace facenum;

TEST(BranchBound, PillowMeetsBoundWithEquality) {
  const BranchBoundReport r = theorem_bound_check(pillow(4));
  EXPECT_EQ(r.branch, 2);
  EXPECT_EQ(r.bound, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.equality);
  EXPECT_EQ(r.loops_expanded, 0);
  EXPECT_EQ(r.crit, 2);
}

TEST(BranchBound, CounterexampleNeedsManyBranches) {
  const BranchBoundReport r = theorem_bound_check(p3(4));
  EXPECT_EQ(r.delta, Rational(5));
  EXPECT_EQ(r.branch, 24);
  EXPECT_EQ(r.bound, 4 + (24 - 2) / 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.loops_expanded, 24);
  EXPECT_EQ(r.expanded_branch, 24);
  EXPECT_EQ(r.expanded_delta, r.delta);
}

TEST(BranchBound, ReplayInvariants) {
  for (const Triangulation& t : {p3(2), p2(2), p4(2), p3_nl(1), sphere_even(4, 10), sphere_even(2, 8), pillow(6)}) {
    const BranchBoundReport r = theorem_bound_check(t);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.crit, r.expanded_branch);
    EXPECT_EQ(r.sources, 1);
    EXPECT_TRUE(r.final_cut_zero);
    EXPECT_TRUE(r.profile.telescopes);
    EXPECT_TRUE(r.prefix_vertices_consistent);
    EXPECT_EQ(static_cast<int>(r.sequence.size()), r.expanded_graph.node_count());
  }
}

TEST(BranchBound, RejectsOddOpenOrDisconnected) {
  EXPECT_THROW(theorem_bound_check(pillow(3)), InvalidArgument);
  EXPECT_THROW(theorem_bound_check(ds2()), InvalidArgument);
  Triangulation two = pillow(2);
  two.insert(pillow(2));
  EXPECT_THROW(theorem_bound_check(two), InvalidArgument);
}

TEST(BranchBound, PrefixTriangulation) {
  const Triangulation t = p3(1);
  const std::vector<int> order{3, 0, 1, 2};
  const Triangulation first = prefix_triangulation(t, order, 1);
  EXPECT_EQ(first.facet_count(), 1);
  EXPECT_EQ(f_vector(prefix_triangulation(t, order, 4)), f_vector(t));
  std::size_t among_first_two = 0;
  for (const Gluing& g : t.gluings()) {
    const bool a = g.source.facet == 3 || g.source.facet == 0;
    const bool b = g.target.facet == 3 || g.target.facet == 0;
    among_first_two += a && b ? 1 : 0;
  }
  EXPECT_EQ(prefix_triangulation(t, order, 2).gluings().size(), among_first_two);
}
