#pragma once

#include <span>
#include <utility>
#include <vector>

namespace facenum {

/// Undirected multigraph with loops. Nodes are 0..node_count-1; arcs keep
/// their insertion ids.
class Multigraph {
 public:
  explicit Multigraph(int node_count = 0);

  int add_node();
  int add_arc(int u, int v);

  int node_count() const noexcept { return static_cast<int>(incident_.size()); }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::pair<int, int>& arc(int id) const { return arcs_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::pair<int, int>>& arcs() const noexcept { return arcs_; }

  /// Arc ids at a node; a loop is listed once.
  std::span<const int> incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }
  /// Endpoint of arc `id` other than `v` (v itself for loops).
  int other_end(int id, int v) const;

  /// Loops count twice.
  int degree(int v) const;
  int loop_count(int v) const;
  bool has_loops() const;
  /// Distinct neighbours other than v itself, ascending.
  std::vector<int> neighbours(int v) const;

  bool is_connected() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> incident_;
};

/// Number of arcs joining u and v (loops at u when u == v).
int arc_multiplicity(const Multigraph& g, int u, int v);

/// Isomorphism of two unrooted trees (centre-rooted canonical encodings).
bool trees_isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace facenum
