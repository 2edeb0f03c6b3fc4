#include <gtest/gtest.h>

#include <cstdint>
#include <tuple>

#include "../support/surfaces.hpp"
#include "facenum/constructions.hpp"
#include "facenum/face_lattice.hpp"

using namespace facenum;

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// Inclusion-exclusion: the shared ridge contributes each of its faces once.
TEST(FaceLattice, TwoSimplicesAlongOneRidge) {
  EXPECT_EQ(f_vector(fixtures::two_glued_simplices(4)), FVector({6, 14, 16, 9, 2}));
  for (int d = 1; d <= 6; ++d) {
    const FVector f = f_vector(fixtures::two_glued_simplices(d));
    for (int i = 0; i < d; ++i) EXPECT_EQ(f[i], 2 * binomial(d + 1, i + 1) - binomial(d, i + 1)) << d << " " << i;
    EXPECT_EQ(f[d], 2);
  }
}

TEST(FaceLattice, PillowHasBoundaryFacesOfOneSimplex) {
  for (int d = 1; d <= 7; ++d) {
    const FVector f = f_vector(pillow(d));
    for (int i = 0; i < d; ++i) EXPECT_EQ(f[i], binomial(d + 1, i + 1));
    EXPECT_EQ(f[d], 2);
    EXPECT_EQ(f.euler_characteristic(), d % 2 == 0 ? 2 : 0);
  }
}

TEST(FaceLattice, SingleSimplex) {
  const FVector f = f_vector(Triangulation(3, 1));
  EXPECT_EQ(f, FVector({4, 6, 4, 1}));
  EXPECT_EQ(boundary_ridges(Triangulation(3, 1)).size(), 4u);
}

TEST(FaceLattice, TwoTriangleSurfaces) {
  EXPECT_EQ(f_vector(fixtures::torus()), FVector({1, 3, 2}));
  EXPECT_EQ(f_vector(fixtures::klein_bottle()), FVector({1, 3, 2}));
  EXPECT_EQ(f_vector(fixtures::projective_plane()), FVector({2, 3, 2}));
  EXPECT_EQ(euler_characteristic(fixtures::projective_plane()), 1);
}

// Ridge {0,1,2} onto ridge {1,0,3} swaps vertices 0 and 1, so edge {0,1}
// is identified with itself reversed.
TEST(FaceLattice, SelfReversedEdgeIsInvalid) {
  Triangulation t(3, 1);
  t.join(0, 3, 0, Permutation{1, 0, 3, 2});
  const FaceLattice lattice = compute_face_lattice(t);
  EXPECT_FALSE(lattice.valid());
  const FaceRef edge = lattice.locate(0, std::vector<int>{0, 1});
  EXPECT_FALSE(lattice.face(1, edge.face).valid);
  EXPECT_TRUE(lattice.face(0, 0).valid);
}

TEST(FaceLattice, EmbeddingCountsAddUp) {
  for (const Triangulation& t : {p3(2), p4(1), sphere_odd(3, 5), ds2(), fixtures::klein_bottle()}) {
    const FaceLattice lattice = compute_face_lattice(t);
    const int d = t.dim();
    for (int i = 0; i <= d; ++i) {
      std::int64_t embeddings = 0;
      for (const FaceClass& c : lattice.faces(i)) embeddings += c.degree();
      EXPECT_EQ(embeddings, t.facet_count() * binomial(d + 1, i + 1));
    }
  }
}

TEST(FaceLattice, LocateFindsEveryEmbedding) {
  const Triangulation t = p3(1);
  const FaceLattice lattice = compute_face_lattice(t);
  for (int i = 0; i < t.dim(); ++i) {
    for (std::size_t k = 0; k < lattice.faces(i).size(); ++k) {
      const FaceClass& c = lattice.faces(i)[k];
      for (std::size_t e = 0; e < c.embeddings.size(); ++e) {
        const FaceRef ref = lattice.locate(c.embeddings[e].facet, c.embeddings[e].corners);
        EXPECT_EQ(ref.face, static_cast<int>(k));
        EXPECT_EQ(ref.embedding, static_cast<int>(e));
      }
    }
  }
}

TEST(FaceLattice, ClassesOrderedByRepresentative) {
  const FaceLattice lattice = compute_face_lattice(p2(2));
  for (int i = 0; i <= 4; ++i) {
    const auto& faces = lattice.faces(i);
    for (std::size_t k = 1; k < faces.size(); ++k) {
      const auto& a = faces[k - 1].representative();
      const auto& b = faces[k].representative();
      EXPECT_TRUE(std::tie(a.facet, a.corners) < std::tie(b.facet, b.corners));
    }
  }
}

TEST(FaceLattice, LexicographicSubsets) {
  const auto subsets = lexicographic_subsets(4, 2);
  ASSERT_EQ(subsets.size(), 6u);
  EXPECT_EQ(mask_elements(subsets.front()), (std::vector<int>{0, 1}));
  EXPECT_EQ(mask_elements(subsets[2]), (std::vector<int>{0, 3}));
  EXPECT_EQ(mask_elements(subsets.back()), (std::vector<int>{2, 3}));
}
