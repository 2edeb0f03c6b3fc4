#pragma once

#include <vector>

#include "facenum/face_lattice.hpp"
#include "facenum/triangulation.hpp"

namespace facenum {

struct LinkOrigin {
  int facet = 0;      ///< facet of t the link simplex was cut from
  int embedding = 0;  ///< embedding index within the face class
};

/// Link of an i-face: one (d-i-1)-simplex per embedding of the face.
///
/// Ridge links are 0-dimensional (a set of points); for those `dim` is 0 and
/// `triangulation` is an empty 1-dimensional placeholder, so only
/// facet_origin carries information.
struct LinkResult {
  int dim = 0;
  Triangulation triangulation{1, 0};
  std::vector<LinkOrigin> facet_origin;

  int facet_count() const noexcept { return static_cast<int>(facet_origin.size()); }
};

/// Builds the link of face class `face` of dimension `face_dim`.
///
/// Link facet j is the face opposite the j-th embedding, with its corners
/// relabelled 0..d-i-1 in ascending order. Every gluing of t whose ridge
/// contains the face induces one link gluing; unglued ridges leave the
/// matching link ridges unglued. Throws InvalidArgument for an invalid face
/// class, out-of-range indices, or face_dim == d.
LinkResult link(const Triangulation& t, const FaceLattice& lattice, int face_dim, int face);
LinkResult link(const Triangulation& t, int face_dim, int face);

}  // namespace facenum
