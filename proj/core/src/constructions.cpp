#include "facenum/constructions.hpp"

#include <array>
#include <string>

#include "facenum/error.hpp"
#include "facenum/moves.hpp"

namespace facenum {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

// Ridges 0 -> 2 and 1 -> 3 of a pentachoron glued to itself; ridge 4 stays free.
void add_double_loop(Triangulation& t, int p) {
  t.join(p, 0, p, Permutation{2, 1, 0, 3, 4});
  t.join(p, 1, p, Permutation{0, 3, 2, 1, 4});
}

int branch_size(int k) {
  int size = 1;
  for (int i = 0; i < k; ++i) size *= 4;
  return (size - 1) / 3;
}

Triangulation full_branch(int k) {
  Triangulation t(4, 1);
  if (k == 2) {
    t.add_facets(4);
    for (int i = 1; i < 5; ++i) add_double_loop(t, i);
  } else {
    for (int i = 0; i < 4; ++i) t.insert(full_branch(k - 1));
  }
  const int child = branch_size(k - 1);
  t.join(0, 3, 1, Permutation{0, 1, 2, 4, 3});
  t.join(0, 2, 1 + child, Permutation{0, 1, 4, 3, 2});
  t.join(0, 1, 1 + 2 * child, Permutation{0, 4, 2, 3, 1});
  t.join(0, 0, 1 + 3 * child, Permutation{4, 1, 2, 3, 0});
  return t;
}

}  // namespace

Triangulation pillow(int d) {
  require(d >= 1, "pillow needs dimension >= 1");
  Triangulation t(d, 2);
  for (int r = 0; r <= d; ++r) t.join(0, r, 1, Permutation::identity(d + 1));
  return t;
}

Triangulation sphere_even(int d, int facets) {
  require(facets >= 2 && facets % 2 == 0, "sphere_even needs an even facet count >= 2");
  require(d >= 2 || facets == 2, "in dimension 1 only the 2-facet pillow is available");
  Triangulation t = pillow(d);
  while (t.facet_count() < facets) t = zero_two(t, t.facet_count() - 1, 0);
  return t;
}

Triangulation snapped_ball(int d, int snaps) {
  require(d >= 1, "snapped_ball needs dimension >= 1");
  require(snaps >= 1 && snaps <= (d + 1) / 2,
          "snapped_ball needs 1 <= snaps <= " + std::to_string((d + 1) / 2));
  Triangulation t(d, 1);
  for (int j = 0; j < snaps; ++j) {
    t.join(0, 2 * j + 1, 0, Permutation::transposition(d + 1, 2 * j, 2 * j + 1));
  }
  return t;
}

Triangulation sphere_odd(int d, int facets) {
  require(d >= 1 && d % 2 == 1, "sphere_odd needs odd dimension");
  require(facets >= 1, "sphere_odd needs at least one facet");
  const int snaps = (d - 1) / 2;
  Triangulation t(d, 0);
  for (int j = 0; j < facets; ++j) {
    const int f = t.add_facets(1);
    for (int s = 0; s < snaps; ++s) {
      t.join(f, 2 * s + 1, f, Permutation::transposition(d + 1, 2 * s, 2 * s + 1));
    }
  }
  const Permutation swap = Permutation::transposition(d + 1, d - 1, d);
  for (int j = 0; j < facets; ++j) t.join(j, d, (j + 1) % facets, swap);
  return t;
}

Triangulation ds1() {
  Triangulation t(4, 1);
  t.join_images(0, 3, 0, std::array{0, 3, 2, 4});
  t.join_images(0, 2, 0, std::array{3, 2, 1, 4});
  return t;
}

Triangulation ds2() {
  Triangulation t(4, 1);
  t.join_images(0, 3, 0, std::array{0, 3, 2, 4});
  t.join_images(0, 2, 0, std::array{2, 1, 3, 4});
  return t;
}

Triangulation tripod() {
  Triangulation t(4, 4);
  for (int i = 0; i < 3; ++i) add_double_loop(t, i);
  t.join(0, 4, 3, Permutation{0, 1, 2, 4, 3});
  t.join(1, 4, 3, Permutation{0, 1, 4, 3, 2});
  t.join(2, 4, 3, Permutation{0, 3, 2, 4, 1});
  return t;
}

Triangulation p4(int k) {
  require(k >= 1, "p4 needs k >= 1");
  Triangulation t(4, 1);
  if (k == 1) {
    t.add_facets(5);
    for (int i = 1; i < 6; ++i) add_double_loop(t, i);
  } else {
    for (int i = 0; i < 5; ++i) t.insert(full_branch(k));
  }
  const int child = branch_size(k);
  t.join(0, 4, 1, Permutation::identity(5));
  t.join(0, 3, 1 + child, Permutation{0, 1, 2, 4, 3});
  t.join(0, 2, 1 + 2 * child, Permutation{0, 1, 4, 3, 2});
  t.join(0, 1, 1 + 3 * child, Permutation{0, 4, 2, 3, 1});
  t.join(0, 0, 1 + 4 * child, Permutation{4, 1, 2, 3, 0});
  return t;
}

Triangulation p3(int k) {
  require(k >= 1, "p3 needs k >= 1");
  const Permutation closing = k % 2 == 0 ? Permutation{2, 1, 4, 3, 0} : Permutation{4, 1, 2, 3, 0};
  Triangulation t(4, 0);
  for (int i = 0; i < k; ++i) t.insert(tripod());
  for (int i = 1; i < k; ++i) t.join(4 * i - 1, 4, 4 * i + 3, Permutation{2, 1, 4, 3, 0});
  t.join(4 * k - 1, 4, 3, closing);
  return t;
}

Triangulation p3_nl(int k) {
  Triangulation t = p3(k);
  const int original = t.facet_count();
  for (int i = 0; i < original; ++i) {
    if ((i - 3) % 4 != 0) {
      t = zero_two(t, i, 0);
      t = zero_two(t, i, 1);
    }
  }
  return t;
}

Triangulation p2(int k) {
  require(k >= 1, "p2 needs k >= 1");
  const int n = 6 * k;
  Triangulation t(4, 0);
  for (int i = 0; i < n; i += 3) {
    t.add_facets(3);
    add_double_loop(t, i + 1);
    add_double_loop(t, i + 2);
    t.join(i, 1, i + 1, Permutation{0, 4, 2, 3, 1});
    t.join(i, 0, i + 2, Permutation{4, 1, 2, 3, 0});
  }
  for (int i = 0; i < n; i += 6) {
    t.join(i, 2, (i + 3) % n, Permutation{0, 1, 2, 3, 4});
    t.join(i, 3, (i + 3) % n, Permutation{0, 1, 2, 3, 4});
    t.join(i, 4, (i - 3 + n) % n, Permutation{0, 1, 2, 3, 4});
  }
  return t;
}

}  // namespace facenum
