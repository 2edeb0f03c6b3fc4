#include "facenum/multigraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "facenum/error.hpp"

namespace facenum {

Multigraph::Multigraph(int node_count) {
  if (node_count < 0) throw InvalidArgument("negative node count");
  incident_.resize(static_cast<std::size_t>(node_count));
}

int Multigraph::add_node() {
  incident_.emplace_back();
  return node_count() - 1;
}

int Multigraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) {
    throw InvalidArgument("arc endpoint out of range");
  }
  const int id = arc_count();
  arcs_.emplace_back(u, v);
  incident_[static_cast<std::size_t>(u)].push_back(id);
  if (u != v) incident_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

int Multigraph::other_end(int id, int v) const {
  const auto& [a, b] = arc(id);
  return a == v ? b : a;
}

int Multigraph::degree(int v) const {
  int deg = 0;
  for (int id : incident(v)) deg += (arc(id).first == arc(id).second) ? 2 : 1;
  return deg;
}

int Multigraph::loop_count(int v) const {
  int loops = 0;
  for (int id : incident(v)) loops += (arc(id).first == arc(id).second) ? 1 : 0;
  return loops;
}

bool Multigraph::has_loops() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const auto& a) { return a.first == a.second; });
}

std::vector<int> Multigraph::neighbours(int v) const {
  std::vector<int> out;
  for (int id : incident(v)) {
    const int w = other_end(id, v);
    if (w != v) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Multigraph::is_connected() const {
  if (node_count() <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(node_count()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int id : incident(v)) {
      const int w = other_end(id, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == node_count();
}

int arc_multiplicity(const Multigraph& g, int u, int v) {
  int count = 0;
  for (int id : g.incident(u)) {
    const auto& [a, b] = g.arc(id);
    if ((a == u && b == v) || (a == v && b == u)) ++count;
  }
  return count;
}

namespace {

std::string encode_rooted(const Multigraph& g, int v, int parent) {
  std::vector<std::string> children;
  for (int w : g.neighbours(v)) {
    if (w != parent) children.push_back(encode_rooted(g, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

// Centres of a tree by repeated leaf stripping.
std::vector<int> tree_centres(const Multigraph& g) {
  const int n = g.node_count();
  if (n <= 2) {
    std::vector<int> all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = static_cast<int>(g.neighbours(v).size());
    if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : g.neighbours(v)) {
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

bool is_tree(const Multigraph& g) {
  return !g.has_loops() && g.is_connected() && g.arc_count() == g.node_count() - 1;
}

}  // namespace

bool trees_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (!is_tree(a) || !is_tree(b)) throw InvalidArgument("tree isomorphism needs two trees");
  if (a.node_count() != b.node_count()) return false;
  if (a.node_count() == 0) return true;
  auto canonical = [](const Multigraph& g) {
    std::string best;
    for (int c : tree_centres(g)) {
      std::string enc = encode_rooted(g, c, -1);
      if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
  };
  return canonical(a) == canonical(b);
}

}  // namespace facenum
