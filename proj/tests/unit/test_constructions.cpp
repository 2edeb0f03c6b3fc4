#include <gtest/gtest.h>

#include "facenum/analysis.hpp"
#include "facenum/constructions.hpp"
#include "facenum/dual_graph.hpp"
#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/homology.hpp"

using namespace facenum;

namespace {

int loop_count(const Triangulation& t) {
  const Multigraph g = dual_graph(t);
  int loops = 0;
  for (const auto& [u, v] : g.arcs()) loops += u == v ? 1 : 0;
  return loops;
}

bool is_homology_sphere(const Triangulation& t) {
  const HomologyProfile h = homology(t);
  for (int i = 0; i <= t.dim(); ++i) {
    const bool expected_z = i == 0 || i == t.dim();
    const auto& g = h.groups[static_cast<std::size_t>(i)];
    if (g.betti != (expected_z ? 1 : 0) || !g.torsion.empty()) return false;
  }
  return true;
}

}  // namespace

TEST(Constructions, DoubleLoopBalls) {
  EXPECT_EQ(f_vector(ds1()), FVector({2, 3, 4, 3, 1}));
  EXPECT_EQ(f_vector(ds2()), FVector({3, 5, 5, 3, 1}));
  for (const Triangulation& t : {ds1(), ds2()}) {
    EXPECT_EQ(t.facet_count(), 1);
    EXPECT_EQ(loop_count(t), 2);
    EXPECT_EQ(t.free_slots().size(), 1u);
  }
}

TEST(Constructions, SnappedBalls) {
  for (int d = 1; d <= 7; ++d) {
    for (int l = 1; l <= (d + 1) / 2; ++l) {
      const Triangulation t = snapped_ball(d, l);
      EXPECT_EQ(f_vector(t)[0], d + 1 - l);
      EXPECT_EQ(loop_count(t), l);
    }
  }
  EXPECT_EQ(f_vector(snapped_ball(4, 2)), f_vector(ds2()));
  EXPECT_THROW(snapped_ball(4, 3), InvalidArgument);
  EXPECT_THROW(snapped_ball(4, 0), InvalidArgument);
}

TEST(Constructions, Tripod) {
  const Triangulation t = tripod();
  EXPECT_EQ(t.facet_count(), 4);
  EXPECT_EQ(loop_count(t), 6);
  EXPECT_EQ(t.free_slots().size(), 2u);
}

TEST(Constructions, EvenSpheresMeetTheBound) {
  for (int d : {2, 4, 6}) {
    for (int f = 2; f <= 16; f += 2) {
      const Triangulation t = sphere_even(d, f);
      EXPECT_EQ(t.facet_count(), f);
      EXPECT_EQ(f_vector(t)[0], f / 2 + d);
      EXPECT_TRUE(is_homology_sphere(t));
    }
  }
  EXPECT_THROW(sphere_even(4, 5), InvalidArgument);
  EXPECT_THROW(sphere_even(1, 4), InvalidArgument);
}

TEST(Constructions, OddSpheresMeetTheBound) {
  for (int d : {1, 3, 5, 7}) {
    for (int f = 1; f <= 8; ++f) {
      const Triangulation t = sphere_odd(d, f);
      EXPECT_TRUE(t.is_closed());
      EXPECT_EQ(f_vector(t)[0], f + (d - 1) / 2);
      EXPECT_TRUE(is_homology_sphere(t)) << d << " " << f;
    }
  }
  EXPECT_THROW(sphere_odd(4, 3), InvalidArgument);
}

TEST(Constructions, PillowIsASphere) {
  for (int d = 1; d <= 6; ++d) EXPECT_TRUE(is_homology_sphere(pillow(d)));
}

TEST(Constructions, CounterexampleFamilies) {
  EXPECT_EQ(f_vector(p4(1)), FVector({6, 13, 18, 15, 6}));
  for (int k = 1; k <= 6; ++k) {
    const FVector a = f_vector(p3(k));
    EXPECT_EQ(a[4], 4 * k);
    EXPECT_EQ(a[0], 3 * k + 1);
    const FVector b = f_vector(p3_nl(k));
    EXPECT_EQ(b[4], 16 * k);
    EXPECT_EQ(b[0], 9 * k + 1);
    const FVector c = f_vector(p2(k));
    EXPECT_EQ(c[4], 6 * k);
    EXPECT_EQ(c[0], 4 * k + 1);
  }
  for (const Triangulation& t : {p3(3), p3_nl(2), p2(3), p4(2)}) {
    EXPECT_TRUE(t.is_closed());
    EXPECT_TRUE(t.is_connected());
    EXPECT_TRUE(compute_face_lattice(t).valid());
    EXPECT_TRUE(is_orientable(t));
  }
  EXPECT_THROW(p3(0), InvalidArgument);
  EXPECT_THROW(p4(0), InvalidArgument);
}

TEST(Constructions, LooplessFamilyHasNoLoops) {
  for (int k = 2; k <= 3; ++k) EXPECT_EQ(loop_count(p3_nl(k)), 0);
  EXPECT_EQ(loop_count(p3_nl(1)), 1);
  EXPECT_EQ(loop_count(p3(3)), 18);
}
