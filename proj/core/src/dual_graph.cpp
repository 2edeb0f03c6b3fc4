#include "facenum/dual_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "facenum/error.hpp"

namespace facenum {

Multigraph dual_graph(const Triangulation& t) {
  Multigraph g(t.facet_count());
  for (const Gluing& gl : t.gluings()) g.add_arc(gl.source.facet, gl.target.facet);
  return g;
}

int BlockDecomposition::leaf_count() const {
  int leaves = 0;
  for (int v = 0; v < tree.node_count(); ++v) leaves += tree.degree(v) == 1 ? 1 : 0;
  return leaves;
}

std::vector<int> BlockDecomposition::leaf_components() const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    if (tree.degree(c) == 1) out.push_back(c);
  }
  return out;
}

namespace {

// Tarjan's edge-stack biconnectivity on the loopless part; parallel arcs are
// distinguished by id, so a doubled arc forms a 2-node component.
class Biconnectivity {
 public:
  explicit Biconnectivity(const Multigraph& g)
      : g_(g),
        disc_(static_cast<std::size_t>(g.node_count()), 0),
        low_(static_cast<std::size_t>(g.node_count()), 0),
        cut_(static_cast<std::size_t>(g.node_count()), false) {
    for (int v = 0; v < g.node_count(); ++v) {
      if (disc_[static_cast<std::size_t>(v)] == 0) visit(v, -1, true);
    }
  }

  std::vector<std::vector<int>> arc_components;
  std::vector<bool> cut_nodes() const { return cut_; }

 private:
  void visit(int u, int parent_arc, bool root) {
    disc_[static_cast<std::size_t>(u)] = low_[static_cast<std::size_t>(u)] = ++clock_;
    int children = 0;
    for (int id : g_.incident(u)) {
      const int w = g_.other_end(id, u);
      if (w == u || id == parent_arc) continue;
      if (disc_[static_cast<std::size_t>(w)] == 0) {
        ++children;
        stack_.push_back(id);
        visit(w, id, false);
        low_[static_cast<std::size_t>(u)] =
            std::min(low_[static_cast<std::size_t>(u)], low_[static_cast<std::size_t>(w)]);
        if (low_[static_cast<std::size_t>(w)] >= disc_[static_cast<std::size_t>(u)]) {
          if (!root) cut_[static_cast<std::size_t>(u)] = true;
          std::vector<int> comp;
          while (true) {
            const int top = stack_.back();
            stack_.pop_back();
            comp.push_back(top);
            if (top == id) break;
          }
          arc_components.push_back(std::move(comp));
        }
      } else if (disc_[static_cast<std::size_t>(w)] < disc_[static_cast<std::size_t>(u)]) {
        stack_.push_back(id);
        low_[static_cast<std::size_t>(u)] =
            std::min(low_[static_cast<std::size_t>(u)], disc_[static_cast<std::size_t>(w)]);
      }
    }
    if (root && children > 1) cut_[static_cast<std::size_t>(u)] = true;
  }

  const Multigraph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<bool> cut_;
  std::vector<int> stack_;
  int clock_ = 0;
};

GraphComponent make_component(const Multigraph& g, std::vector<int> arcs) {
  GraphComponent c;
  std::sort(arcs.begin(), arcs.end());
  for (int id : arcs) {
    c.nodes.push_back(g.arc(id).first);
    c.nodes.push_back(g.arc(id).second);
  }
  std::sort(c.nodes.begin(), c.nodes.end());
  c.nodes.erase(std::unique(c.nodes.begin(), c.nodes.end()), c.nodes.end());
  c.arcs = std::move(arcs);
  return c;
}

void finish(BlockDecomposition& dec) {
  std::sort(dec.components.begin(), dec.components.end(),
            [](const GraphComponent& a, const GraphComponent& b) {
              return std::tie(a.nodes, a.arcs) < std::tie(b.nodes, b.arcs);
            });
  const int nc = static_cast<int>(dec.components.size());
  dec.tree = Multigraph(nc + static_cast<int>(dec.articulation_nodes.size()));
  for (int j = 0; j < static_cast<int>(dec.articulation_nodes.size()); ++j) {
    const int v = dec.articulation_nodes[static_cast<std::size_t>(j)];
    for (int c = 0; c < nc; ++c) {
      const auto& nodes = dec.components[static_cast<std::size_t>(c)].nodes;
      if (std::binary_search(nodes.begin(), nodes.end(), v)) dec.tree.add_arc(c, nc + j);
    }
  }
}

void require_connected(const Multigraph& g) {
  if (g.node_count() == 0) throw InvalidArgument("graph has no nodes");
  if (!g.is_connected()) throw InvalidArgument("graph is disconnected");
}

}  // namespace

BlockDecompositions block_decompositions(const Multigraph& g) {
  require_connected(g);
  const int n = g.node_count();
  BlockDecompositions out;
  out.cut.kind = DecompositionKind::BlockCut;
  out.separating.kind = DecompositionKind::BlockSeparating;

  Biconnectivity bic(g);
  const std::vector<bool> cut = bic.cut_nodes();
  for (int v = 0; v < n; ++v) {
    if (cut[static_cast<std::size_t>(v)]) out.cut.articulation_nodes.push_back(v);
  }
  if (n == 1) {
    out.cut.components.push_back(GraphComponent{{0}, {}});
  } else {
    for (auto& arcs : bic.arc_components) out.cut.components.push_back(make_component(g, arcs));
  }
  finish(out.cut);

  if (n == 1) {
    std::vector<int> loops(static_cast<std::size_t>(g.arc_count()));
    std::iota(loops.begin(), loops.end(), 0);
    out.separating.components.push_back(GraphComponent{{0}, std::move(loops)});
  } else {
    out.separating.components = out.cut.components;
    for (int id = 0; id < g.arc_count(); ++id) {
      if (g.arc(id).first == g.arc(id).second) {
        out.separating.components.push_back(GraphComponent{{g.arc(id).first}, {id}});
      }
    }
    for (int v = 0; v < n; ++v) {
      const bool looped_with_other = g.loop_count(v) > 0 && g.degree(v) > 2 * g.loop_count(v);
      if (cut[static_cast<std::size_t>(v)] || looped_with_other) {
        out.separating.articulation_nodes.push_back(v);
      }
    }
  }
  finish(out.separating);
  return out;
}

int branching_number(const Multigraph& g) {
  const BlockDecompositions dec = block_decompositions(g);
  if (dec.separating.articulation_nodes.empty()) return g.node_count() == 1 ? 1 : 2;
  return dec.separating.leaf_count();
}

SequenceAnalysis analyze_sequence(const Multigraph& g, std::span<const int> sequence) {
  std::vector<int> position(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const int v = sequence[k];
    if (v < 0 || v >= g.node_count()) throw InvalidArgument("sequence node out of range");
    if (position[static_cast<std::size_t>(v)] >= 0) {
      throw InvalidArgument("node " + std::to_string(v) + " repeated in sequence");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  SequenceAnalysis out;
  for (int v : sequence) {
    bool source = true;
    bool sink = true;
    const int pv = position[static_cast<std::size_t>(v)];
    for (int id : g.incident(v)) {
      const int w = g.other_end(id, v);
      const int pw = position[static_cast<std::size_t>(w)];
      if (w == v || pw < 0) continue;
      if (pw < pv) source = false;
      if (pw > pv) sink = false;
    }
    if (source) out.sources.push_back(v);
    if (sink) out.sinks.push_back(v);
    if (source || sink) ++out.crit;
  }
  return out;
}

int crit_of_sequence(const Multigraph& g, std::span<const int> sequence) {
  return analyze_sequence(g, sequence).crit;
}

int crit_bruteforce(const Multigraph& g, int max_nodes) {
  require_connected(g);
  const int n = g.node_count();
  if (n > max_nodes) {
    throw GuardExceeded("exhaustive crit search limited to " + std::to_string(max_nodes) +
                        " nodes, graph has " + std::to_string(n));
  }
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbrs[static_cast<std::size_t>(v)] = g.neighbours(v);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> position(static_cast<std::size_t>(n));
  const int floor_value = n == 1 ? 1 : 2;
  int best = n + 1;
  do {
    for (int k = 0; k < n; ++k) position[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    int crit = 0;
    for (int v = 0; v < n && crit < best; ++v) {
      bool earlier = false;
      bool later = false;
      for (int w : nbrs[static_cast<std::size_t>(v)]) {
        if (position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(v)]) earlier = true;
        else later = true;
      }
      if (!earlier || !later) ++crit;
    }
    best = std::min(best, crit);
  } while (best > floor_value && std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Lexicographically least among shortest paths from `from` to `to`, moving
// only through nodes with allowed[v].
std::vector<int> least_shortest_path(const Adjacency& adj, const std::vector<bool>& allowed,
                                     int from, int to) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{to};
  dist[static_cast<std::size_t>(to)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (allowed[static_cast<std::size_t>(w)] && dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  if (dist[static_cast<std::size_t>(from)] < 0) throw InvalidArgument("no path between nodes");
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    for (int w : adj[static_cast<std::size_t>(cur)]) {  // ascending
      if (allowed[static_cast<std::size_t>(w)] &&
          dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(cur)] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

// Ear insertion on the subgraph spanned by `nodes`, whose adjacency lists
// are already restricted to it.
std::vector<int> ear_sequence(const Adjacency& adj, const std::vector<int>& nodes, int first,
                              int last) {
  const std::size_t n = adj.size();
  std::vector<bool> member(n, false);
  for (int v : nodes) member[static_cast<std::size_t>(v)] = true;
  if (first == last || !member[static_cast<std::size_t>(first)] ||
      !member[static_cast<std::size_t>(last)]) {
    throw InvalidArgument("sequence endpoints must be two distinct nodes of the component");
  }

  std::vector<int> seq = least_shortest_path(adj, member, first, last);
  std::vector<bool> in_seq(n, false);
  for (int v : seq) in_seq[static_cast<std::size_t>(v)] = true;
  auto remaining = [&](int v) {
    return member[static_cast<std::size_t>(v)] && !in_seq[static_cast<std::size_t>(v)];
  };
  auto position = [&](int v) {
    return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), v) - seq.begin());
  };

  while (seq.size() < nodes.size()) {
    int v = -1;
    int w = -1;
    for (int cand : nodes) {  // ascending
      if (!remaining(cand)) continue;
      for (int x : adj[static_cast<std::size_t>(cand)]) {
        if (in_seq[static_cast<std::size_t>(x)]) {
          v = cand;
          w = x;
          break;
        }
      }
      if (v >= 0) break;
    }
    if (v < 0) throw InvalidArgument("component is disconnected");

    // Breadth-first through the remaining nodes from v; the first node found
    // with a sequence neighbour other than w closes the ear.
    std::vector<bool> rest(n, false);
    for (int x : nodes) rest[static_cast<std::size_t>(x)] = remaining(x);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{v};
    seen[static_cast<std::size_t>(v)] = true;
    int v_end = -1;
    int w_end = -1;
    while (!queue.empty() && v_end < 0) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (in_seq[static_cast<std::size_t>(y)] && y != w) {
          v_end = x;
          w_end = y;
          break;
        }
      }
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (rest[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          queue.push_back(y);
        }
      }
    }
    if (v_end < 0) {
      throw InvalidArgument("node " + std::to_string(w) + " separates the component");
    }

    std::vector<int> ear = least_shortest_path(adj, rest, v, v_end);
    std::size_t anchor = 0;
    if (position(w_end) > position(w)) {
      anchor = position(w);
    } else {
      std::reverse(ear.begin(), ear.end());
      anchor = position(w_end);
    }
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(anchor + 1), ear.begin(), ear.end());
    for (int x : ear) in_seq[static_cast<std::size_t>(x)] = true;
  }
  return seq;
}

Adjacency restricted_adjacency(const Multigraph& g, const std::vector<int>& nodes) {
  std::vector<bool> member(static_cast<std::size_t>(g.node_count()), false);
  for (int v : nodes) member[static_cast<std::size_t>(v)] = true;
  Adjacency adj(static_cast<std::size_t>(g.node_count()));
  for (int v : nodes) {
    for (int w : g.neighbours(v)) {
      if (member[static_cast<std::size_t>(w)]) adj[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  return adj;
}

}  // namespace

std::vector<int> two_connected_sequence(const Multigraph& g, int first, int last) {
  require_connected(g);
  std::vector<int> nodes(static_cast<std::size_t>(g.node_count()));
  std::iota(nodes.begin(), nodes.end(), 0);
  if (first < 0 || last < 0 || first >= g.node_count() || last >= g.node_count()) {
    throw InvalidArgument("sequence endpoint out of range");
  }
  return ear_sequence(restricted_adjacency(g, nodes), nodes, first, last);
}

std::vector<int> construct_low_crit_sequence(const Multigraph& g) {
  require_connected(g);
  if (g.has_loops()) throw InvalidArgument("construct_low_crit_sequence needs a loopless graph");
  const int n = g.node_count();
  if (n == 1) return {0};

  const BlockDecomposition dec = block_decompositions(g).cut;
  if (dec.articulation_nodes.empty()) return two_connected_sequence(g, 0, n - 1);

  const int nc = static_cast<int>(dec.components.size());
  auto cut_nodes_of = [&](int c) {
    std::vector<int> out;
    for (int id : dec.tree.incident(c)) {
      out.push_back(dec.articulation_nodes[static_cast<std::size_t>(dec.tree.other_end(id, c) - nc)]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto comps_at = [&](int cut_node) {
    const int tree_node =
        nc + static_cast<int>(std::lower_bound(dec.articulation_nodes.begin(),
                                               dec.articulation_nodes.end(), cut_node) -
                              dec.articulation_nodes.begin());
    std::vector<int> out;
    for (int id : dec.tree.incident(tree_node)) out.push_back(dec.tree.other_end(id, tree_node));
    std::sort(out.begin(), out.end());
    return out;
  };

  const int root = dec.leaf_components().front();
  std::vector<int> parent_cut(static_cast<std::size_t>(nc), -1);
  std::vector<bool> visited(static_cast<std::size_t>(nc), false);
  std::vector<int> order;
  std::deque<int> queue{root};
  visited[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    order.push_back(c);
    for (int cn : cut_nodes_of(c)) {
      if (cn == parent_cut[static_cast<std::size_t>(c)]) continue;
      for (int next : comps_at(cn)) {
        if (visited[static_cast<std::size_t>(next)]) continue;
        visited[static_cast<std::size_t>(next)] = true;
        parent_cut[static_cast<std::size_t>(next)] = cn;
        queue.push_back(next);
      }
    }
  }

  std::vector<int> seq;
  for (int c : order) {
    const auto& nodes = dec.components[static_cast<std::size_t>(c)].nodes;
    const std::vector<int> cuts = cut_nodes_of(c);
    int first = -1;
    int last = -1;
    if (c == root) {
      last = cuts.front();
      first = *std::find_if(nodes.begin(), nodes.end(), [&](int v) { return v != last; });
    } else if (cuts.size() == 1) {
      first = parent_cut[static_cast<std::size_t>(c)];
      last = *std::find_if(nodes.begin(), nodes.end(), [&](int v) { return v != first; });
    } else {
      first = parent_cut[static_cast<std::size_t>(c)];
      last = *std::find_if(cuts.begin(), cuts.end(), [&](int v) { return v != first; });
    }
    const std::vector<int> part = ear_sequence(restricted_adjacency(g, nodes), nodes, first, last);
    if (c == root) {
      seq = part;
    } else {
      const auto at = std::find(seq.begin(), seq.end(), first);
      seq.insert(at + 1, part.begin() + 1, part.end());
    }
  }
  return seq;
}

CutProfile cut_profile(const Multigraph& g, std::span<const int> sequence, int dim) {
  const int n = g.node_count();
  if (static_cast<int>(sequence.size()) != n) {
    throw InvalidArgument("cut profile needs a sequence covering every node");
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const int v = sequence[k];
    if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] >= 0) {
      throw InvalidArgument("cut profile sequence must list each node once");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }

  CutProfile profile;
  int previous_cut = 0;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const int v = sequence[k];
    CutStep step;
    for (int id : g.incident(v)) {
      const int w = g.other_end(id, v);
      if (w == v) continue;
      if (position[static_cast<std::size_t>(w)] < static_cast<int>(k)) ++step.backward;
      else ++step.forward;
    }
    // Direct count of C_k, independent of the recurrence checked below.
    for (const auto& [a, b] : g.arcs()) {
      const int pa = position[static_cast<std::size_t>(a)];
      const int pb = position[static_cast<std::size_t>(b)];
      if (std::min(pa, pb) <= static_cast<int>(k) && std::max(pa, pb) > static_cast<int>(k)) ++step.cut;
    }
    if (step.cut != previous_cut + step.forward - step.backward) profile.telescopes = false;
    previous_cut = step.cut;

    if (k == 0) {
      step.kind = CutCase::Start;
    } else if (step.backward == 0) {
      step.kind = CutCase::Source;
      ++profile.source_count;
    } else if (step.backward == 1) {
      step.kind = CutCase::Single;
      ++profile.single_count;
    } else if (step.backward <= dim) {
      step.kind = CutCase::Multiple;
      ++profile.multiple_count;
    } else {
      step.kind = CutCase::Closing;
      ++profile.closing_count;
    }
    profile.steps.push_back(step);
  }
  return profile;
}

}  // namespace facenum
