#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "facenum/permutation.hpp"

namespace facenum {

/// A ridge slot: ridge `ridge` (the face opposite vertex `ridge`) of facet `facet`.
struct Slot {
  int facet = 0;
  int ridge = 0;

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// The partner of a glued slot. Vertex v of the source facet is identified
/// with vertex `correspondence[v]` of `facet`.
struct Adjacency {
  int facet = 0;
  Permutation correspondence;

  friend bool operator==(const Adjacency&, const Adjacency&) = default;
};

/// One gluing, reported from its lexicographically smaller side.
struct Gluing {
  Slot source;
  Slot target;
  Permutation correspondence;  ///< correspondence[source.ridge] == target.ridge

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// A generalised triangulation: `facet_count` abstract d-simplices with
/// vertices labelled 0..d, plus affine ridge gluings given by vertex maps.
///
/// Each gluing is held from both sides; the reverse side always carries the
/// inverse correspondence.
class Triangulation {
 public:
  /// Throws InvalidArgument for dim < 1 or facet_count < 0.
  Triangulation(int dim, int facet_count);

  int dim() const noexcept { return dim_; }
  int facet_count() const noexcept { return facet_count_; }

  /// Appends `count` unglued facets and returns the index of the first.
  int add_facets(int count);

  /// Appends a copy of `other` (same dimension); returns the index offset.
  int insert(const Triangulation& other);

  /// Glues ridge `ridge` of `facet` to ridge correspondence[ridge] of
  /// `other_facet`. Throws InvalidArgument if either slot is taken, the
  /// ridge would be glued to itself, or the permutation has the wrong size.
  void join(int facet, int ridge, int other_facet, const Permutation& correspondence);

  /// Same as join(), with the vertex map given Table-style: `ridge_images`
  /// lists the target labels of the ridge's corners in increasing order and
  /// the opposite vertex maps to the one label left over.
  void join_images(int facet, int ridge, int other_facet, std::span<const int> ridge_images);

  /// Removes the gluing at a slot (and its reverse). Throws if unglued.
  void unjoin(int facet, int ridge);

  bool is_glued(int facet, int ridge) const;
  const std::optional<Adjacency>& adjacent(int facet, int ridge) const;

  /// All gluings from their canonical side, sorted by source slot.
  std::vector<Gluing> gluings() const;
  std::vector<Slot> free_slots() const;

  bool is_closed() const;
  /// Connectivity of |T| (equivalently of the dual graph); an empty
  /// triangulation counts as connected.
  bool is_connected() const;
  int component_count() const;

  /// Deletes the given facets (and every gluing touching them); surviving
  /// facets keep their relative order.
  void remove_facets(std::span<const int> facets);

  /// Vertex relabelling of one facet: facet `facet`'s vertex v becomes
  /// vertex relabel[v]. Gluings are rewritten so |T| is unchanged.
  void relabel_facet(int facet, const Permutation& relabel);

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::size_t slot_index(int facet, int ridge) const;
  void check_slot(int facet, int ridge) const;

  int dim_;
  int facet_count_;
  std::vector<std::optional<Adjacency>> slots_;
};

}  // namespace facenum
