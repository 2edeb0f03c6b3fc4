#pragma once

#include "facenum/triangulation.hpp"

namespace facenum {

/// Two d-simplices glued along all d+1 ridges by the identity.
Triangulation pillow(int d);

/// Pillow followed by (facets - 2) / 2 zero_two moves, each at the first
/// glued ridge of the newest facet. f_0 = facets / 2 + d.
/// Throws for odd or too small `facets`, and for d == 1 with facets > 2.
Triangulation sphere_even(int d, int facets);

/// One d-simplex with `snaps` fold gluings: snap j glues ridge 2j+1 onto
/// ridge 2j, swapping vertices 2j and 2j+1. f_0 = d + 1 - snaps.
/// Requires 1 <= snaps <= (d + 1) / 2.
Triangulation snapped_ball(int d, int snaps);

/// Odd d only. `facets` copies of snapped_ball(d, (d-1)/2) in a cycle: ridge
/// d of copy j is glued to ridge d-1 of copy j+1 by swapping d-1 and d. For
/// d == 1 this is the `facets`-gon. f_0 = facets + (d-1)/2.
Triangulation sphere_odd(int d, int facets);

/// Single-pentachoron 4-balls with a double loop, from their gluing tables.
Triangulation ds1();
Triangulation ds2();

/// Central pentachoron 3 with three double-loop pentachora 0, 1, 2 attached
/// along its ridges 3, 2, 1; ridges 0 and 4 of pentachoron 3 stay free.
Triangulation tripod();

/// Tree of pentachora of depth k-1 around a root, capped with double-loop
/// pentachora; closed. Throws for k < 1.
Triangulation p4(int k);
/// Cycle of k tripods glued through their central pentachora.
Triangulation p3(int k);
/// p3(k) with 0-2 moves on both loops of every non-central pentachoron.
Triangulation p3_nl(int k);
/// Cycle of 2k three-pentachoron blocks, each a centre with two double-loop
/// pentachora, glued alternately along two ridges and one ridge.
Triangulation p2(int k);

}  // namespace facenum
