#pragma once

#include <span>
#include <vector>

#include "facenum/multigraph.hpp"
#include "facenum/triangulation.hpp"

namespace facenum {

/// One node per facet, one arc per gluing. Arc i is gluing i of
/// t.gluings(); self-gluings of a facet become loops.
Multigraph dual_graph(const Triangulation& t);

enum class DecompositionKind {
  /// Cut nodes and 2-connected components of the loopless part.
  BlockCut,
  /// Separating nodes and non-separable components; loops are components.
  BlockSeparating,
};

struct GraphComponent {
  std::vector<int> nodes;  ///< ascending
  std::vector<int> arcs;   ///< arc ids, ascending
};

struct BlockDecomposition {
  DecompositionKind kind = DecompositionKind::BlockCut;
  /// Cut nodes (BlockCut) or separating nodes (BlockSeparating), ascending.
  std::vector<int> articulation_nodes;
  std::vector<GraphComponent> components;
  /// Bipartite tree: node c < components.size() is component c, node
  /// components.size() + j is articulation_nodes[j].
  Multigraph tree;

  int leaf_count() const;
  /// Components containing exactly one articulation node.
  std::vector<int> leaf_components() const;
};

struct BlockDecompositions {
  BlockDecomposition cut;
  BlockDecomposition separating;
};

/// Both decompositions of a connected graph. Throws InvalidArgument for a
/// disconnected or empty graph.
///
/// In the BlockCut decomposition loops are ignored; a one-node graph has a
/// single component with no arcs.
BlockDecompositions block_decompositions(const Multigraph& g);

/// 1 for a non-separable one-node graph, 2 for a non-separable graph with
/// more nodes, otherwise the leaf count of the block-separating tree.
int branching_number(const Multigraph& g);

/// Sources, sinks and critical points of a node sequence.
///
/// Loops are ignored. A node with no neighbour in the sequence is both a
/// source and a sink and is counted once as a critical point.
struct SequenceAnalysis {
  std::vector<int> sources;  ///< in sequence order
  std::vector<int> sinks;
  int crit = 0;
};

/// Throws InvalidArgument for repeated or out-of-range nodes.
SequenceAnalysis analyze_sequence(const Multigraph& g, std::span<const int> sequence);
int crit_of_sequence(const Multigraph& g, std::span<const int> sequence);

/// Minimum crit over all orderings of all nodes, by exhaustive search.
/// Throws GuardExceeded when the graph has more than `max_nodes` nodes.
int crit_bruteforce(const Multigraph& g, int max_nodes = 9);

/// An ordering of every node of a 2-connected graph (>= 2 nodes) that starts
/// at `first`, ends at `last` and has exactly two critical points. Built from
/// a shortest path by repeatedly splicing in ears.
std::vector<int> two_connected_sequence(const Multigraph& g, int first, int last);

/// An ordering of all nodes of a loopless connected graph with
/// crit == branching_number(g) and a single source. Throws InvalidArgument
/// for graphs with loops or that are disconnected.
std::vector<int> construct_low_crit_sequence(const Multigraph& g);

/// Step classification while adding nodes in sequence order, by the number
/// B of arcs back to earlier nodes.
enum class CutCase {
  Start,     ///< the first node
  Source,    ///< B == 0 after the first node
  Single,    ///< B == 1
  Multiple,  ///< 2 <= B <= d
  Closing,   ///< B == d + 1
};

struct CutStep {
  int backward = 0;  ///< B_k
  int forward = 0;   ///< F_k
  int cut = 0;       ///< C_k, arcs from the first k nodes to the rest
  CutCase kind = CutCase::Start;
};

struct CutProfile {
  std::vector<CutStep> steps;
  int single_count = 0;    ///< X
  int multiple_count = 0;  ///< Y
  int closing_count = 0;   ///< Z
  int source_count = 0;    ///< sources after the first node
  /// C_k == C_{k-1} + F_k - B_k at every step.
  bool telescopes = true;
};

/// Cut profile of a full node sequence; `dim` sets the Closing threshold
/// (B == dim + 1). Loops are ignored.
CutProfile cut_profile(const Multigraph& g, std::span<const int> sequence, int dim);

}  // namespace facenum
