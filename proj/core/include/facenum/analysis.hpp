#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "facenum/face_lattice.hpp"
#include "facenum/homology.hpp"
#include "facenum/triangulation.hpp"

namespace facenum {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// Residuals of the three face-count identities of closed 4-dimensional
/// triangulations. All vanish when every edge link is a 2-sphere; the
/// second one measures the edge-link deficit otherwise.
struct DehnSommervilleResiduals {
  std::int64_t euler = 0;      ///< f0 - f1 + f2 - f3 + f4 - chi
  std::int64_t edge_link = 0;  ///< 2 f1 - 3 f2 + 4 f3 - 5 f4
  std::int64_t ridge = 0;      ///< 2 f3 - 5 f4
  /// chi came from homology (valid input) rather than the f-vector.
  bool euler_from_homology = false;

  bool all_zero() const noexcept { return euler == 0 && edge_link == 0 && ridge == 0; }
};

/// Throws InvalidArgument unless t is closed and 4-dimensional.
DehnSommervilleResiduals dehn_sommerville_check(const Triangulation& t);

/// f_0 - f_d / 2.
Rational delta(const FVector& f);
Rational delta(const Triangulation& t);

/// Whether an inequality of the vertex-bound family is proved for the
/// parameters at hand or still conjectural.
enum class BoundStatus { Proven, Open };

struct ConjectureCheck {
  int dim = 0;
  std::int64_t vertices = 0;
  std::int64_t facets = 0;
  Rational bound;
  /// "f_d/2 + d" or "f_d + (d-1)/2".
  std::string branch;
  bool satisfied = false;
  bool equality = false;
  BoundStatus status = BoundStatus::Open;
};

/// The conjectured vertex bound for closed connected triangulations of
/// manifolds: f_d/2 + d for even d, and for odd d with even f_d < d;
/// f_d + (d-1)/2 otherwise. The status says whether the bound is proved for
/// this (d, f_d); a violation by a non-manifold input is still reported.
/// Throws InvalidArgument for open or disconnected input.
ConjectureCheck conjecture_check(const Triangulation& t);
ConjectureCheck conjecture_check(int dim, const FVector& f);

/// Parameters of an assumed vertex bound f_0 <= a f_4 + b; a in (0, 1].
struct BoundHypothesis {
  Rational a{1, 2};
  Rational b{4};
};

struct InequalityCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;  ///< lhs >= rhs, or lhs == rhs for identities
};

/// Face-number consequences for a closed 4-dimensional triangulation of a
/// simply connected manifold.
struct BettiBoundReport {
  bool simply_connected = false;  ///< as asserted by the caller
  std::int64_t beta1 = 0;
  std::int64_t beta2 = 0;
  /// simply_connected was asserted but beta1 != 0.
  bool contradiction = false;

  InequalityCheck euler_identity;     ///< 3 f0 - f1 + f4/2 == 6 + 3 beta2
  InequalityCheck vertex_edge;        ///< f1 >= f0
  InequalityCheck spanning_tree;      ///< f4 + 4 >= f0
  InequalityCheck combined;           ///< f4 + 4 f0 >= 12 + 6 beta2
  InequalityCheck facet_lower;        ///< f4 >= (6 beta2 - 4) / 5
  BoundHypothesis hypothesis;
  bool hypothesis_holds = false;      ///< f0 <= a f4 + b
  InequalityCheck general;            ///< f4 >= (6 beta2 + 12 - 4b) / (4a + 1)
  InequalityCheck conjectural;        ///< f4 >= 2 beta2 (from a = 1/2, b = 4)
};

/// Throws InvalidArgument when `simply_connected` is absent, t is not a
/// closed valid 4-dimensional triangulation, or a is outside (0, 1].
BettiBoundReport betti_bound_report(const Triangulation& t, std::optional<bool> simply_connected,
                                    const BoundHypothesis& hypothesis = {});

struct SurfaceType {
  bool orientable = true;
  /// Handles when orientable, cross-caps otherwise.
  std::int64_t genus = 0;
  std::int64_t euler = 0;

  std::string to_string() const;
};

/// Throws InvalidArgument unless t is a closed, connected, valid surface.
SurfaceType surface_type(const Triangulation& t);

/// Largest number of loops at a single dual-graph node.
int max_loops_at_node(const Triangulation& t);

/// Vertex bounds proved for closed connected triangulations, evaluated on t.
struct ProvedBounds {
  InequalityCheck spanning_tree;    ///< f_d + d >= f_0
  /// Odd d and (f_d >= d or f_d == 1): f_d + (d-1)/2 >= f_0.
  std::optional<InequalityCheck> odd;
  /// Odd d and 2 <= f_d <= d: floor(f_d/2) + d >= f_0.
  std::optional<InequalityCheck> odd_small;
  /// (d+1)/(2(d-l)) f_d + (d-l) - 1/(d-l) >= f_0 with l loops at a node; only
  /// when l < d.
  std::optional<InequalityCheck> loops;

  bool all_hold() const;
};

/// Throws InvalidArgument for open or disconnected input.
ProvedBounds proved_bounds(const Triangulation& t);

}  // namespace facenum
