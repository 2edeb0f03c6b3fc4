#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "../support/surfaces.hpp"
#include "facenum/constructions.hpp"
#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/homology.hpp"

using namespace facenum;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

std::int64_t determinant(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * determinant(minor);
  }
  return det;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors as quotients of successive gcds of k x k minors.
std::vector<std::int64_t> invariants_from_minors(const Dense& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::int64_t> out;
  std::int64_t previous = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Dense sub;
        for (int i : r) {
          std::vector<std::int64_t> row;
          for (int j : c) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          sub.push_back(row);
        }
        g = std::gcd(g, determinant(sub));
      }
    }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

IntegerMatrix to_integer(const Dense& m) {
  IntegerMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

std::string profile(const HomologyProfile& h) {
  std::string s;
  for (const auto& g : h.groups) s += (s.empty() ? "" : " | ") + g.to_string();
  return s;
}

}  // namespace

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    Dense m(static_cast<std::size_t>(size(rng)), std::vector<std::int64_t>(static_cast<std::size_t>(size(rng))));
    for (auto& row : m) {
      for (auto& x : row) x = entry(rng);
    }
    const std::vector<Integer> snf = smith_invariants(to_integer(m));
    const std::vector<std::int64_t> expected = invariants_from_minors(m);
    ASSERT_EQ(snf.size(), expected.size());
    for (std::size_t i = 0; i < snf.size(); ++i) EXPECT_EQ(snf[i], Integer(expected[i]));
  }
}

TEST(Smith, KnownForms) {
  EXPECT_EQ(smith_invariants(to_integer({{2, 4}, {6, 8}})), (std::vector<Integer>{2, 4}));
  EXPECT_TRUE(smith_invariants(to_integer({{0, 0}, {0, 0}})).empty());
  EXPECT_TRUE(smith_invariants({}).empty());
}

TEST(Homology, BoundaryOfBoundaryVanishes) {
  for (const Triangulation& t : {p3(2), p4(1), sphere_odd(5, 3), fixtures::klein_bottle(), ds2()}) {
    const FaceLattice lattice = compute_face_lattice(t);
    for (int i = 2; i <= t.dim(); ++i) {
      const auto outer = boundary_matrix(lattice, i - 1);
      const auto inner = boundary_matrix(lattice, i);
      for (std::size_t r = 0; r < outer.size(); ++r) {
        for (std::size_t c = 0; c < inner.front().size(); ++c) {
          std::int64_t sum = 0;
          for (std::size_t k = 0; k < inner.size(); ++k) sum += outer[r][k] * inner[k][c];
          EXPECT_EQ(sum, 0);
        }
      }
    }
  }
}

TEST(Homology, Surfaces) {
  EXPECT_EQ(profile(homology(fixtures::torus())), "Z | Z^2 | Z");
  EXPECT_EQ(profile(homology(fixtures::klein_bottle())), "Z | Z + Z_2 | 0");
  EXPECT_EQ(profile(homology(fixtures::projective_plane())), "Z | Z_2 | 0");
  EXPECT_EQ(profile(homology(pillow(2))), "Z | 0 | Z");
}

TEST(Homology, SpheresAndBalls) {
  EXPECT_EQ(profile(homology(pillow(4))), "Z | 0 | 0 | 0 | Z");
  EXPECT_EQ(profile(homology(ds2())), "Z | 0 | 0 | 0 | 0");
  EXPECT_EQ(profile(homology(sphere_odd(3, 4))), "Z | 0 | 0 | Z");
}

TEST(Homology, EulerCharacteristicAgreesWithFaceCounts) {
  for (const Triangulation& t : {p3(3), p2(2), p4(2), fixtures::projective_plane(), sphere_odd(7, 2)}) {
    EXPECT_EQ(homology(t).euler_characteristic(), euler_characteristic(t));
  }
}

TEST(Homology, CounterexampleSecondBetti) {
  EXPECT_EQ(homology(p3(4)).betti(2), 3);
  EXPECT_EQ(homology(p4(3)).betti(2), 25);
}

TEST(Homology, Orientability) {
  EXPECT_TRUE(is_orientable(fixtures::torus()));
  EXPECT_FALSE(is_orientable(fixtures::klein_bottle()));
  EXPECT_FALSE(is_orientable(fixtures::projective_plane()));
  EXPECT_TRUE(is_orientable(p3(2)));
  const auto signs = orientation(pillow(3));
  ASSERT_TRUE(signs.has_value());
  EXPECT_EQ((*signs)[0], 1);
  EXPECT_EQ((*signs)[1], -1);
}

TEST(Homology, InvalidInputThrows) {
  Triangulation bad(3, 1);
  bad.join(0, 3, 0, Permutation{1, 0, 3, 2});
  EXPECT_THROW(homology(bad), InvalidArgument);
  EXPECT_THROW(is_orientable(bad), InvalidArgument);
}
