#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "facenum/triangulation.hpp"

namespace facenum {

/// Face counts f_0..f_d after identification.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {}

  int dim() const noexcept { return static_cast<int>(counts_.size()) - 1; }
  std::int64_t operator[](int i) const { return counts_.at(static_cast<std::size_t>(i)); }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }

  /// Alternating sum f_0 - f_1 + f_2 - ...
  std::int64_t euler_characteristic() const noexcept;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

/// One copy of a face inside a facet: the face's corners, ascending, and for
/// each corner position the position of the matching corner of the class
/// representative.
struct FaceEmbedding {
  int facet = 0;
  std::vector<int> corners;
  std::vector<int> to_representative;
};

/// An equivalence class of sub-simplices under the gluings. The first
/// embedding is the representative: the lexicographically least
/// (facet, ascending corners) pair of the class.
struct FaceClass {
  std::vector<FaceEmbedding> embeddings;
  /// False when some chain of gluings maps the face onto itself by a
  /// non-identity corner bijection.
  bool valid = true;

  int degree() const noexcept { return static_cast<int>(embeddings.size()); }
  const FaceEmbedding& representative() const { return embeddings.front(); }
};

/// Position of a sub-simplex within the lattice.
struct FaceRef {
  int face = -1;       ///< class index within its dimension
  int embedding = -1;  ///< index into FaceClass::embeddings
};

/// The identified face structure of a triangulation, per dimension 0..d.
/// Classes are ordered by their representatives, so the numbering is a pure
/// function of the gluing data.
class FaceLattice {
 public:
  int dim() const noexcept { return dim_; }
  int facet_count() const noexcept { return facet_count_; }

  const std::vector<FaceClass>& faces(int i) const { return faces_.at(static_cast<std::size_t>(i)); }
  const FaceClass& face(int i, int index) const {
    return faces(i).at(static_cast<std::size_t>(index));
  }

  /// Finds the class and embedding of facet `facet`'s sub-simplex spanned by
  /// `corners` (any order, distinct labels).
  FaceRef locate(int facet, std::span<const int> corners) const;
  FaceRef locate_mask(int facet, std::uint64_t mask) const;

  FVector f_vector() const;
  /// True when every face class of every dimension is valid.
  bool valid() const;

  friend FaceLattice compute_face_lattice(const Triangulation& t);

 private:
  struct Level {
    std::vector<std::uint64_t> masks;                     // lexicographic order of corner tuples
    std::unordered_map<std::uint64_t, int> rank_of_mask;  // inverse of masks
    std::vector<FaceRef> element_ref;                     // facet * masks.size() + rank
  };

  int dim_ = 0;
  int facet_count_ = 0;
  std::vector<std::vector<FaceClass>> faces_;
  std::vector<Level> levels_;
};

FaceLattice compute_face_lattice(const Triangulation& t);

FVector f_vector(const Triangulation& t);
std::int64_t euler_characteristic(const Triangulation& t);

/// Unglued slots; each is one ridge class of degree 1.
std::vector<Slot> boundary_ridges(const Triangulation& t);

/// All (k)-subsets of {0..n-1} as bitmasks, ordered lexicographically by
/// their ascending element tuples.
std::vector<std::uint64_t> lexicographic_subsets(int n, int k);
std::vector<int> mask_elements(std::uint64_t mask);

}  // namespace facenum
