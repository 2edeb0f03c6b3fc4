#include "facenum/classify.hpp"

#include "facenum/error.hpp"
#include "facenum/homology.hpp"
#include "facenum/links.hpp"

namespace facenum {

std::string to_string(Certainty c) {
  return c == Certainty::Exact ? "exact" : "homology-certified";
}

std::vector<LinkSummary> ClassificationReport::non_sphere_links(int face_dim) const {
  std::vector<LinkSummary> out;
  for (const auto& l : links) {
    if (l.face_dim == face_dim && !l.sphere) out.push_back(l);
  }
  return out;
}

void classify_closed_link(const Triangulation& link, LinkSummary& out) {
  const int n = link.dim();
  out.link_dim = n;
  out.link_facets = link.facet_count();
  out.connected = link.is_connected();
  const FaceLattice lattice = compute_face_lattice(link);
  out.euler = lattice.f_vector().euler_characteristic();
  out.certainty = Certainty::Exact;
  if (!lattice.valid()) {
    out.sphere = false;
    return;
  }
  out.orientable = orientation(link).has_value();
  if (n == 1) {
    out.sphere = out.connected;
    return;
  }
  if (n == 2) {
    if (out.connected) out.surface = surface_type(link);
    out.sphere = out.connected && *out.euler == 2;
    return;
  }
  const HomologyProfile h = homology(link, lattice);
  bool sphere_homology = out.connected;
  for (int i = 0; i <= n; ++i) {
    const HomologyGroup& g = h.groups[static_cast<std::size_t>(i)];
    out.homology.push_back(g.to_string());
    const std::int64_t expected = (i == 0 || i == n) ? 1 : 0;
    if (g.betti != expected || !g.torsion.empty()) sphere_homology = false;
  }
  out.sphere = sphere_homology;
  if (sphere_homology) out.certainty = Certainty::HomologyCertified;
}

ClassificationReport classify(const Triangulation& t) {
  if (!t.is_closed()) throw InvalidArgument("classification needs a closed triangulation");
  if (t.facet_count() == 0 || !t.is_connected()) {
    throw InvalidArgument("classification needs a connected triangulation");
  }
  const int d = t.dim();
  const FaceLattice lattice = compute_face_lattice(t);
  ClassificationReport r;
  r.dim = d;
  r.f_vector = lattice.f_vector();
  r.delta = delta(r.f_vector);
  r.pseudomanifold = lattice.valid();
  if (!r.pseudomanifold) {
    for (int s = 0; s < d; ++s) r.levels.push_back(NonsingularLevel{s, false, Certainty::Exact, 0});
    return r;
  }

  for (int s = 0; s < d; ++s) {
    NonsingularLevel level{s, true, Certainty::Exact, 0};
    for (int face = 0; face < static_cast<int>(lattice.faces(s).size()); ++face) {
      LinkSummary summary;
      summary.face_dim = s;
      summary.face = face;
      const LinkResult lk = link(t, lattice, s, face);
      if (lk.dim == 0) {
        summary.link_dim = 0;
        summary.link_facets = lk.facet_count();
        summary.sphere = lk.facet_count() == 2;
        summary.connected = lk.facet_count() == 1;
      } else {
        classify_closed_link(lk.triangulation, summary);
      }
      if (!summary.sphere) ++level.non_sphere_count;
      if (summary.certainty == Certainty::HomologyCertified) level.certainty = summary.certainty;
      r.links.push_back(std::move(summary));
    }
    level.holds = level.non_sphere_count == 0;
    // A failed level is certain: some link is provably not a sphere.
    if (!level.holds) level.certainty = Certainty::Exact;
    r.levels.push_back(level);
  }
  for (int s = d - 1; s >= 0 && r.levels[static_cast<std::size_t>(s)].holds; --s) {
    r.nonsingular_from = s;
  }
  for (int s = 0; s < d; ++s) {
    if (s + 1 < d && r.levels[static_cast<std::size_t>(s)].holds &&
        !r.levels[static_cast<std::size_t>(s + 1)].holds) {
      r.monotone = false;
    }
  }
  return r;
}

}  // namespace facenum
