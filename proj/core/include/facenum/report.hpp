#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facenum/multigraph.hpp"
#include "facenum/triangulation.hpp"

namespace facenum {

struct DotAnnotations {
  /// Fill separating nodes and colour each arc by its non-separable
  /// component; loops are drawn bold red.
  bool separating = false;
  /// Label nodes with their position in this sequence.
  std::vector<int> sequence;
};

/// Graphviz description, one `graph` edge per arc (loops as self-edges).
std::string export_dot(const Multigraph& g, const DotAnnotations& annotations = {});

struct ReportOptions {
  /// Include per-face link classification (closed connected input only).
  bool classification = true;
};

/// Deterministic JSON analysis report ("schema": "facenum.analysis/1"):
/// f-vector, Euler characteristic, validity, orientability, homology, delta,
/// dual-graph data, and for closed connected input the vertex-bound checks,
/// face-count identities (d = 4), the branching bound (even d) and the
/// classification. Keys are sorted; output ends with a newline.
std::string analysis_report_json(const Triangulation& t, const ReportOptions& options = {});

}  // namespace facenum
