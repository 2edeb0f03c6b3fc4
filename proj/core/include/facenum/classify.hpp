#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facenum/analysis.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/triangulation.hpp"

namespace facenum {

/// How far a sphere verdict can be trusted. Links of dimension <= 2 are
/// recognised exactly; in higher dimensions a positive verdict only means
/// the link has the homology of a sphere.
enum class Certainty { Exact, HomologyCertified };

std::string to_string(Certainty c);

struct LinkSummary {
  int face_dim = 0;
  int face = 0;
  int link_dim = 0;
  int link_facets = 0;
  bool connected = true;
  bool sphere = false;
  Certainty certainty = Certainty::Exact;
  std::optional<std::int64_t> euler;  ///< links of dimension >= 1
  std::optional<bool> orientable;     ///< links of dimension >= 1
  /// Surface links only.
  std::optional<SurfaceType> surface;
  /// Links of dimension >= 3: H_0 .. H_n rendered as strings.
  std::vector<std::string> homology;
};

/// Verdict for "every s-face has a sphere link".
struct NonsingularLevel {
  int s = 0;
  bool holds = false;
  Certainty certainty = Certainty::Exact;
  int non_sphere_count = 0;
};

struct ClassificationReport {
  int dim = 0;
  FVector f_vector;
  /// No face is identified with itself by a non-identity map.
  bool pseudomanifold = false;
  std::vector<LinkSummary> links;       ///< faces of dimension 0..d-1; empty unless pseudomanifold
  std::vector<NonsingularLevel> levels;  ///< s = 0..d-1
  /// Least s such that every level from s up holds, if any.
  std::optional<int> nonsingular_from;
  /// levels[s].holds implies levels[s+1].holds throughout.
  bool monotone = true;
  Rational delta;

  std::vector<LinkSummary> non_sphere_links(int face_dim) const;
};

/// Link classification of a closed connected triangulation. Throws
/// InvalidArgument for open or disconnected input.
ClassificationReport classify(const Triangulation& t);

/// Sphere test for a closed triangulation of dimension n >= 1 (the link of
/// some face); fills the link-dependent fields of `out`.
void classify_closed_link(const Triangulation& link, LinkSummary& out);

}  // namespace facenum
