#include "facenum/report.hpp"

#include <sstream>

#include <json.hpp>

#include "facenum/analysis.hpp"
#include "facenum/branch_bound.hpp"
#include "facenum/classify.hpp"
#include "facenum/dual_graph.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/homology.hpp"

namespace facenum {

namespace {

using nlohmann::json;

const char* const palette[] = {"blue", "darkgreen", "purple", "orange", "brown", "teal", "magenta",
                               "olive"};

json inequality(const InequalityCheck& c) {
  return json{{"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}, {"holds", c.holds}};
}

json link_json(const LinkSummary& l) {
  json j{{"face_dim", l.face_dim},   {"face", l.face},       {"link_dim", l.link_dim},
         {"link_facets", l.link_facets}, {"connected", l.connected}, {"sphere", l.sphere},
         {"certainty", to_string(l.certainty)}};
  if (l.euler) j["euler_characteristic"] = *l.euler;
  if (l.orientable) j["orientable"] = *l.orientable;
  if (l.surface) j["surface"] = l.surface->to_string();
  if (!l.homology.empty()) j["homology"] = l.homology;
  return j;
}

}  // namespace

std::string export_dot(const Multigraph& g, const DotAnnotations& annotations) {
  std::vector<bool> separating(static_cast<std::size_t>(g.node_count()), false);
  std::vector<int> component(static_cast<std::size_t>(g.arc_count()), -1);
  if (annotations.separating && g.node_count() > 0 && g.is_connected()) {
    const BlockDecomposition dec = block_decompositions(g).separating;
    for (int v : dec.articulation_nodes) separating[static_cast<std::size_t>(v)] = true;
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
      for (int a : dec.components[c].arcs) component[static_cast<std::size_t>(a)] = static_cast<int>(c);
    }
  }
  std::vector<int> position(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t k = 0; k < annotations.sequence.size(); ++k) {
    const int v = annotations.sequence[k];
    if (v >= 0 && v < g.node_count()) position[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }

  std::ostringstream out;
  out << "graph dual {\n  node [shape=circle];\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (position[static_cast<std::size_t>(v)] >= 0) out << "\\n#" << position[static_cast<std::size_t>(v)] + 1;
    out << "\"";
    if (separating[static_cast<std::size_t>(v)]) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (int a = 0; a < g.arc_count(); ++a) {
    const auto& [u, v] = g.arc(a);
    out << "  " << u << " -- " << v;
    const int c = component[static_cast<std::size_t>(a)];
    if (c >= 0) {
      if (u == v) {
        out << " [color=red, penwidth=2, label=\"c" << c << "\"]";
      } else {
        out << " [color=" << palette[static_cast<std::size_t>(c) % std::size(palette)] << ", label=\"c"
            << c << "\"]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string analysis_report_json(const Triangulation& t, const ReportOptions& options) {
  const FaceLattice lattice = compute_face_lattice(t);
  const FVector f = lattice.f_vector();
  const bool closed = t.is_closed();
  const bool connected = t.facet_count() > 0 && t.is_connected();
  const bool valid = lattice.valid();

  json r;
  r["schema"] = "facenum.analysis/1";
  r["dim"] = t.dim();
  r["facets"] = t.facet_count();
  r["closed"] = closed;
  r["connected"] = connected;
  r["valid"] = valid;
  r["f_vector"] = std::vector<std::int64_t>(f.counts().begin(), f.counts().end());
  r["euler_characteristic"] = f.euler_characteristic();
  r["boundary_ridges"] = t.free_slots().size();
  r["delta"] = to_string(delta(f));

  if (valid) {
    r["orientable"] = orientation(t).has_value();
    const HomologyProfile h = homology(t, lattice);
    json groups = json::array();
    for (const auto& g : h.groups) groups.push_back(g.to_string());
    r["homology"] = {{"betti", h.betti_numbers()}, {"groups", groups}};
  }

  const Multigraph g = dual_graph(t);
  json dg{{"nodes", g.node_count()}, {"arcs", g.arc_count()}};
  int loops = 0;
  for (int v = 0; v < g.node_count(); ++v) loops += g.loop_count(v);
  dg["loops"] = loops;
  if (connected) dg["branching_number"] = branching_number(g);
  r["dual_graph"] = dg;

  if (closed && connected) {
    const ConjectureCheck c = conjecture_check(t.dim(), f);
    r["vertex_bound"] = {{"bound", to_string(c.bound)},
                         {"form", c.branch},
                         {"satisfied", c.satisfied},
                         {"equality", c.equality},
                         {"status", c.status == BoundStatus::Proven ? "proven" : "open"}};
    const ProvedBounds pb = proved_bounds(t);
    json proved{{"spanning_tree", inequality(pb.spanning_tree)}};
    if (pb.odd) proved["odd"] = inequality(*pb.odd);
    if (pb.odd_small) proved["odd_small"] = inequality(*pb.odd_small);
    if (pb.loops) proved["loops"] = inequality(*pb.loops);
    r["proved_bounds"] = proved;

    if (t.dim() == 4) {
      const DehnSommervilleResiduals ds = dehn_sommerville_check(t);
      r["face_identities"] = {{"euler", ds.euler}, {"edge_link", ds.edge_link}, {"ridge", ds.ridge}};
    }
    if (t.dim() % 2 == 0) {
      const BranchBoundReport b = theorem_bound_check(t);
      r["branching_bound"] = {{"branch", b.branch},
                              {"bound", b.bound},
                              {"holds", b.holds},
                              {"equality", b.equality},
                              {"loops_expanded", b.loops_expanded},
                              {"sequence_crit", b.crit},
                              {"final_cut_zero", b.final_cut_zero},
                              {"prefix_vertices_consistent", b.prefix_vertices_consistent}};
    }
    if (options.classification) {
      const ClassificationReport c = classify(t);
      json cls{{"pseudomanifold", c.pseudomanifold}, {"monotone", c.monotone}};
      json levels = json::array();
      for (const auto& l : c.levels) {
        levels.push_back({{"s", l.s},
                          {"holds", l.holds},
                          {"certainty", to_string(l.certainty)},
                          {"non_sphere_links", l.non_sphere_count}});
      }
      cls["levels"] = levels;
      if (c.nonsingular_from) cls["nonsingular_from"] = *c.nonsingular_from;
      json odd_links = json::array();
      for (const auto& l : c.links) {
        if (!l.sphere) odd_links.push_back(link_json(l));
      }
      cls["non_sphere_links"] = odd_links;
      r["classification"] = cls;
    }
  }
  return r.dump(2) + "\n";
}

}  // namespace facenum
