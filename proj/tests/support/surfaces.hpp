#pragma once

#include "facenum/triangulation.hpp"

namespace facenum::fixtures {

// Two triangles A = (a, b, c) and B = (a, c, d) of a square abcd, glued
// along the diagonal ac; the square's sides are then paired up.
inline Triangulation square(const Permutation& bottom_to_top, const Permutation& right_to_left) {
  Triangulation t(2, 2);
  t.join(0, 1, 1, Permutation{0, 2, 1});
  t.join(0, 2, 1, bottom_to_top);
  t.join(0, 0, 1, right_to_left);
  return t;
}

inline Triangulation torus() { return square(Permutation{2, 1, 0}, Permutation{1, 0, 2}); }
inline Triangulation klein_bottle() { return square(Permutation{2, 1, 0}, Permutation{1, 2, 0}); }
inline Triangulation projective_plane() { return square(Permutation{1, 2, 0}, Permutation{1, 2, 0}); }

// Two d-simplices glued along a single ridge by the identity.
inline Triangulation two_glued_simplices(int d) {
  Triangulation t(d, 2);
  t.join(0, d, 1, Permutation::identity(d + 1));
  return t;
}

}  // namespace facenum::fixtures
