#pragma once

#include <vector>

#include "facenum/analysis.hpp"
#include "facenum/dual_graph.hpp"
#include "facenum/multigraph.hpp"
#include "facenum/triangulation.hpp"

namespace facenum {

/// Check of delta <= d + floor((branch - 2) / (d - 1)) for a closed connected
/// even-dimensional triangulation, replaying the counting argument: loops
/// are expanded by zero_two, a one-source sequence with branch critical
/// points is built, and the triangulation is reassembled facet by facet.
struct BranchBoundReport {
  int dim = 0;
  Rational delta;
  int branch = 0;
  std::int64_t bound = 0;  ///< d + floor((branch - 2) / (d - 1))
  bool holds = false;
  bool equality = false;

  Multigraph graph;           ///< dual graph of the input
  int loops_expanded = 0;
  Multigraph expanded_graph;  ///< dual graph after loop removal
  int expanded_branch = 0;
  Rational expanded_delta;

  std::vector<int> sequence;  ///< nodes of expanded_graph
  int crit = 0;
  int sources = 0;
  CutProfile profile;
  bool final_cut_zero = false;
  /// Vertices of the prefix triangulations: Single steps add exactly one,
  /// other steps add none.
  std::vector<std::int64_t> prefix_vertices;
  bool prefix_vertices_consistent = false;
};

/// Throws InvalidArgument for odd dimension, open or disconnected input.
BranchBoundReport theorem_bound_check(const Triangulation& t);

/// The first k facets of `order` with the gluings among them, in that order.
Triangulation prefix_triangulation(const Triangulation& t, const std::vector<int>& order, int k);

}  // namespace facenum
