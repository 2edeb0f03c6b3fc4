#include "facenum/links.hpp"

#include <algorithm>
#include <string>

#include "facenum/error.hpp"

namespace facenum {

namespace {

std::vector<int> complement(int d, const std::vector<int>& corners) {
  std::vector<int> out;
  for (int v = 0; v <= d; ++v) {
    if (!std::binary_search(corners.begin(), corners.end(), v)) out.push_back(v);
  }
  return out;
}

int local_label(const std::vector<int>& opposite, int v) {
  return static_cast<int>(std::lower_bound(opposite.begin(), opposite.end(), v) - opposite.begin());
}

}  // namespace

LinkResult link(const Triangulation& t, const FaceLattice& lattice, int face_dim, int face) {
  const int d = t.dim();
  if (face_dim < 0 || face_dim >= d) {
    throw InvalidArgument("links are defined for faces of dimension 0.." + std::to_string(d - 1));
  }
  if (face < 0 || face >= static_cast<int>(lattice.faces(face_dim).size())) {
    throw InvalidArgument("face index out of range");
  }
  const FaceClass& cls = lattice.face(face_dim, face);
  if (!cls.valid) throw InvalidArgument("the link of an invalid face is not defined");

  const int link_dim = d - face_dim - 1;
  LinkResult result;
  result.dim = link_dim;
  result.facet_origin.reserve(cls.embeddings.size());
  for (std::size_t e = 0; e < cls.embeddings.size(); ++e) {
    result.facet_origin.push_back(LinkOrigin{cls.embeddings[e].facet, static_cast<int>(e)});
  }
  if (link_dim == 0) return result;
  result.triangulation = Triangulation(link_dim, cls.degree());

  Triangulation& out = result.triangulation;
  for (std::size_t e = 0; e < cls.embeddings.size(); ++e) {
    const FaceEmbedding& emb = cls.embeddings[e];
    const std::vector<int> opposite = complement(d, emb.corners);
    for (int v : opposite) {
      const int link_ridge = local_label(opposite, v);
      if (out.is_glued(static_cast<int>(e), link_ridge)) continue;
      const auto& adj = t.adjacent(emb.facet, v);
      if (!adj) continue;
      std::vector<int> image_corners;
      image_corners.reserve(emb.corners.size());
      for (int c : emb.corners) image_corners.push_back(adj->correspondence[c]);
      const FaceRef target = lattice.locate(adj->facet, image_corners);
      const FaceEmbedding& target_emb = cls.embeddings[static_cast<std::size_t>(target.embedding)];
      const std::vector<int> target_opposite = complement(d, target_emb.corners);
      std::vector<int> images(opposite.size());
      for (int u : opposite) {
        images[static_cast<std::size_t>(local_label(opposite, u))] =
            local_label(target_opposite, adj->correspondence[u]);
      }
      out.join(static_cast<int>(e), link_ridge, target.embedding, Permutation(std::move(images)));
    }
  }
  return result;
}

LinkResult link(const Triangulation& t, int face_dim, int face) {
  return link(t, compute_face_lattice(t), face_dim, face);
}

}  // namespace facenum
