#pragma once

#include <optional>
#include <vector>

#include "facenum/triangulation.hpp"

namespace facenum {

/// Inserts a two-facet pillow with one interior vertex into the glued ridge
/// `ridge` of `facet`.
///
/// The slot is unglued; two facets n, n+1 are appended; (facet, ridge) is
/// glued to n by the identity, n+1's ridge `ridge` takes over the old
/// partner with the old correspondence, and n, n+1 are glued by the identity
/// along every other ridge. Adds two facets and one vertex.
///
/// Throws InvalidArgument for an unglued slot or dimension 1.
Triangulation zero_two(const Triangulation& t, int facet, int ridge);

/// Two facets glued to each other along all ridges but one, with the same
/// vertex correspondence each time, whose remaining ridges are glued
/// elsewhere. Vertex `outer_ridge` of `first` is then interior to the pair.
struct TwoZeroSite {
  int first = 0;
  int outer_ridge = 0;
  int second = 0;
  int second_outer_ridge = 0;
  Permutation correspondence;  ///< first's vertices onto second's

  friend bool operator==(const TwoZeroSite&, const TwoZeroSite&) = default;
};

/// The site with `facet` as either facet and `ridge` as its outer ridge, if
/// one exists. The interior vertex must have degree 2 and a valid class.
std::optional<TwoZeroSite> find_two_zero_site(const Triangulation& t, int facet, int ridge);

/// All sites, each reported once with first < second.
std::vector<TwoZeroSite> two_zero_sites(const Triangulation& t);

/// Removes the two facets of a site and glues their outer partners to each
/// other. Surviving facets keep their relative order, so undoing zero_two at
/// the two facets it appended restores the input exactly.
///
/// Throws InvalidArgument if `site` does not describe a site of t.
Triangulation two_zero(const Triangulation& t, const TwoZeroSite& site);

/// Applies zero_two once per dual-graph loop, at the loop's canonical
/// (smaller) slot, in gluing order. The result has a loopless dual graph and
/// the same value of f_0 - f_d / 2.
///
/// Throws InvalidArgument for a triangulation that is not closed.
Triangulation remove_loops(const Triangulation& t);

}  // namespace facenum
