#include <gtest/gtest.h>

#include "facenum/analysis.hpp"
#include "facenum/constructions.hpp"
#include "facenum/dual_graph.hpp"
#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/homology.hpp"
#include "facenum/moves.hpp"

using namespace facenum;

TEST(ZeroTwo, AddsTwoFacetsAndOneVertex) {
  for (const Triangulation& t : {pillow(4), p3(1), sphere_odd(3, 3), ds2(), pillow(2)}) {
    const FVector before = f_vector(t);
    for (const Gluing& g : t.gluings()) {
      const Triangulation moved = zero_two(t, g.source.facet, g.source.ridge);
      const FVector after = f_vector(moved);
      const int d = t.dim();
      EXPECT_EQ(after[d], before[d] + 2);
      EXPECT_EQ(after[0], before[0] + 1);
      EXPECT_EQ(after.euler_characteristic(), before.euler_characteristic());
      EXPECT_EQ(moved.free_slots(), t.free_slots());
    }
  }
}

TEST(ZeroTwo, PreservesHomologyAndOrientability) {
  for (const Triangulation& t : {p3(2), sphere_odd(5, 2), p2(1)}) {
    const Triangulation moved = zero_two(t, 0, 1);
    EXPECT_EQ(homology(moved), homology(t));
    EXPECT_EQ(is_orientable(moved), is_orientable(t));
  }
}

TEST(ZeroTwo, RejectsUngluedSlotAndDimensionOne) {
  EXPECT_THROW(zero_two(Triangulation(3, 1), 0, 0), InvalidArgument);
  EXPECT_THROW(zero_two(pillow(1), 0, 0), InvalidArgument);
}

TEST(TwoZero, UndoesZeroTwoExactly) {
  for (const Triangulation& t : {pillow(4), p3(1), sphere_odd(3, 4), pillow(3)}) {
    for (const Gluing& g : t.gluings()) {
      const Triangulation moved = zero_two(t, g.source.facet, g.source.ridge);
      const int n = t.facet_count();
      const auto site = find_two_zero_site(moved, n, g.source.ridge);
      ASSERT_TRUE(site.has_value());
      EXPECT_EQ(two_zero(moved, *site), t);
      const auto from_second = find_two_zero_site(moved, n + 1, g.source.ridge);
      ASSERT_TRUE(from_second.has_value());
      EXPECT_EQ(from_second->first, n + 1);
      EXPECT_EQ(two_zero(moved, *from_second), t);
    }
  }
}

TEST(TwoZero, PillowHasNoSite) {
  EXPECT_TRUE(two_zero_sites(pillow(4)).empty());
  EXPECT_FALSE(find_two_zero_site(pillow(4), 0, 0).has_value());
}

TEST(TwoZero, SitesAfterOneMove) {
  const Triangulation moved = zero_two(p3(1), 0, 0);
  const auto sites = two_zero_sites(moved);
  ASSERT_FALSE(sites.empty());
  for (const TwoZeroSite& s : sites) {
    EXPECT_LT(s.first, s.second);
    EXPECT_EQ(f_vector(two_zero(moved, s))[0], f_vector(moved)[0] - 1);
  }
  TwoZeroSite bogus = sites.front();
  bogus.outer_ridge = (bogus.outer_ridge + 1) % 5;
  EXPECT_THROW(two_zero(moved, bogus), InvalidArgument);
}

TEST(RemoveLoops, LeavesLooplessGraphWithSameDelta) {
  for (int k = 1; k <= 4; ++k) {
    const Triangulation t = p3(k);
    const Triangulation out = remove_loops(t);
    const Multigraph g_in = dual_graph(t);
    const Multigraph g_out = dual_graph(out);
    EXPECT_FALSE(g_out.has_loops());
    int loops = 0;
    for (const auto& [u, v] : g_in.arcs()) loops += u == v ? 1 : 0;
    EXPECT_EQ(loops, k == 1 ? 7 : 6 * k);
    EXPECT_EQ(out.facet_count(), t.facet_count() + 2 * loops);
    EXPECT_EQ(delta(out), delta(t));
    EXPECT_EQ(branching_number(g_out), branching_number(g_in));
    EXPECT_TRUE(
        trees_isomorphic(block_decompositions(g_out).cut.tree, block_decompositions(g_in).separating.tree));
  }
}

TEST(RemoveLoops, MatchesLooplessFamily) {
  EXPECT_EQ(remove_loops(p3(4)), p3_nl(4));
  // For k = 1 the central pentachoron closes onto itself, an extra loop the
  // loopless family leaves in place.
  EXPECT_EQ(f_vector(remove_loops(p3(1)))[4], f_vector(p3_nl(1))[4] + 2);
}

TEST(RemoveLoops, RequiresClosed) {
  EXPECT_THROW(remove_loops(ds2()), InvalidArgument);
  EXPECT_EQ(remove_loops(pillow(4)), pillow(4));
}
