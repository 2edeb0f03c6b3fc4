#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "facenum/face_lattice.hpp"
#include "facenum/triangulation.hpp"

namespace facenum {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Nonzero diagonal entries of the Smith normal form, positive and each
/// dividing the next. The length is the rank.
std::vector<Integer> smith_invariants(IntegerMatrix matrix);

/// Cellular boundary map from i-faces to (i-1)-faces, rows indexed by
/// (i-1)-face classes and columns by i-face classes. For the representative
/// corners v_0 < ... < v_i, the face without v_j contributes (-1)^j times
/// the sign of its corner bijection onto that face's representative.
/// Requires 1 <= i <= d.
std::vector<std::vector<std::int64_t>> boundary_matrix(const FaceLattice& lattice, int i);

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1, ascending by divisibility

  /// e.g. "Z^2 + Z_2", or "0".
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyProfile {
  std::vector<HomologyGroup> groups;  ///< H_0 .. H_d

  std::int64_t betti(int i) const { return groups.at(static_cast<std::size_t>(i)).betti; }
  std::vector<std::int64_t> betti_numbers() const;
  std::int64_t euler_characteristic() const;
  bool has_torsion() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Integral homology of |t| from the cell structure of its face classes.
/// Throws InvalidArgument when some face class is invalid.
HomologyProfile homology(const Triangulation& t);
HomologyProfile homology(const Triangulation& t, const FaceLattice& lattice);

/// Orientation signs o(facet) with o(B) = -sign(pi) * o(A) across every
/// gluing A -> B with correspondence pi, if such signs exist. Components are
/// handled independently; each starts from +1 at its least facet.
std::optional<std::vector<int>> orientation(const Triangulation& t);

/// Throws InvalidArgument when some face class is invalid.
bool is_orientable(const Triangulation& t);
bool is_orientable(const Triangulation& t, const FaceLattice& lattice);

}  // namespace facenum
