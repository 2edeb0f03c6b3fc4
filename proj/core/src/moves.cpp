#include "facenum/moves.hpp"

#include <array>

#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"

namespace facenum {

Triangulation zero_two(const Triangulation& t, int facet, int ridge) {
  const int d = t.dim();
  if (d < 2) throw InvalidArgument("0-2 moves need dimension at least 2");
  const auto adj = t.adjacent(facet, ridge);
  if (!adj) throw InvalidArgument("0-2 move on an unglued ridge");

  Triangulation out = t;
  out.unjoin(facet, ridge);
  const int new1 = out.add_facets(2);
  const int new2 = new1 + 1;
  const Permutation id = Permutation::identity(d + 1);
  out.join(facet, ridge, new1, id);
  out.join(new2, ridge, adj->facet, adj->correspondence);
  for (int i = 0; i <= d; ++i) {
    if (i != ridge) out.join(new1, i, new2, id);
  }
  return out;
}

namespace {

std::optional<TwoZeroSite> site_from(const Triangulation& t, int a, int ra) {
  const int d = t.dim();
  if (d < 2 || a < 0 || a >= t.facet_count() || ra < 0 || ra > d) return std::nullopt;
  const auto& outer = t.adjacent(a, ra);
  if (!outer) return std::nullopt;

  int b = -1;
  const Permutation* phi = nullptr;
  for (int i = 0; i <= d; ++i) {
    if (i == ra) continue;
    const auto& adj = t.adjacent(a, i);
    if (!adj || adj->facet == a) return std::nullopt;
    if (b < 0) {
      b = adj->facet;
      phi = &adj->correspondence;
    } else if (adj->facet != b || adj->correspondence != *phi) {
      return std::nullopt;
    }
  }
  const int rb = (*phi)[ra];
  if (outer->facet == a || outer->facet == b) return std::nullopt;
  const auto& other_outer = t.adjacent(b, rb);
  if (!other_outer || other_outer->facet == a || other_outer->facet == b) return std::nullopt;

  const FaceLattice lattice = compute_face_lattice(t);
  const FaceRef v = lattice.locate(a, std::array{ra});
  const FaceClass& cls = lattice.face(0, v.face);
  if (!cls.valid || cls.degree() != 2) return std::nullopt;

  return TwoZeroSite{a, ra, b, rb, *phi};
}

}  // namespace

std::optional<TwoZeroSite> find_two_zero_site(const Triangulation& t, int facet, int ridge) {
  if (auto site = site_from(t, facet, ridge)) return site;
  // `facet` may be the second facet of the pair.
  if (facet < 0 || facet >= t.facet_count() || ridge < 0 || ridge > t.dim()) return std::nullopt;
  const auto& adj = t.adjacent(facet, ridge == 0 ? 1 : 0);
  if (!adj) return std::nullopt;
  auto site = site_from(t, adj->facet, adj->correspondence[ridge]);
  if (site && site->second == facet) return site;
  return std::nullopt;
}

std::vector<TwoZeroSite> two_zero_sites(const Triangulation& t) {
  std::vector<TwoZeroSite> out;
  for (int a = 0; a < t.facet_count(); ++a) {
    for (int r = 0; r <= t.dim(); ++r) {
      auto site = site_from(t, a, r);
      if (site && site->first < site->second) out.push_back(std::move(*site));
    }
  }
  return out;
}

Triangulation two_zero(const Triangulation& t, const TwoZeroSite& site) {
  const auto found = site_from(t, site.first, site.outer_ridge);
  if (!found || found->second != site.second || found->correspondence != site.correspondence) {
    throw InvalidArgument("no 2-0 site at facet " + std::to_string(site.first) + " ridge " +
                          std::to_string(site.outer_ridge));
  }
  if (t.facet_count() <= 2) throw InvalidArgument("2-0 move would leave no facets");

  const Adjacency x = *t.adjacent(site.first, site.outer_ridge);
  const Adjacency y = *t.adjacent(site.second, site.second_outer_ridge);
  const int x_ridge = x.correspondence[site.outer_ridge];
  const Permutation map = y.correspondence * site.correspondence * x.correspondence.inverse();

  Triangulation out = t;
  out.unjoin(site.first, site.outer_ridge);
  out.unjoin(site.second, site.second_outer_ridge);
  out.join(x.facet, x_ridge, y.facet, map);

  const std::array removed{site.first, site.second};
  out.remove_facets(removed);
  return out;
}

Triangulation remove_loops(const Triangulation& t) {
  if (!t.is_closed()) throw InvalidArgument("loop removal needs a closed triangulation");
  Triangulation out = t;
  for (const Gluing& g : t.gluings()) {
    if (g.source.facet == g.target.facet) out = zero_two(out, g.source.facet, g.source.ridge);
  }
  return out;
}

}  // namespace facenum
