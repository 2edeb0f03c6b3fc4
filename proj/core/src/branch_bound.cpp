#include "facenum/branch_bound.hpp"

#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/moves.hpp"

namespace facenum {

namespace {

// floor(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace

Triangulation prefix_triangulation(const Triangulation& t, const std::vector<int>& order, int k) {
  std::vector<int> position(static_cast<std::size_t>(t.facet_count()), -1);
  for (int i = 0; i < k; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  Triangulation out(t.dim(), k);
  for (const Gluing& g : t.gluings()) {
    const int a = position[static_cast<std::size_t>(g.source.facet)];
    const int b = position[static_cast<std::size_t>(g.target.facet)];
    if (a >= 0 && b >= 0) out.join(a, g.source.ridge, b, g.correspondence);
  }
  return out;
}

BranchBoundReport theorem_bound_check(const Triangulation& t) {
  const int d = t.dim();
  if (d % 2 != 0) throw InvalidArgument("the branching bound is for even dimension");
  if (!t.is_closed()) throw InvalidArgument("triangulation is not closed");
  if (t.facet_count() == 0 || !t.is_connected()) throw InvalidArgument("triangulation is not connected");

  BranchBoundReport r;
  r.dim = d;
  r.delta = delta(t);
  r.graph = dual_graph(t);
  r.branch = branching_number(r.graph);
  r.bound = d + floor_div(r.branch - 2, d - 1);
  r.holds = r.delta <= Rational(r.bound);
  r.equality = r.delta == Rational(r.bound);

  const Triangulation expanded = remove_loops(t);
  r.loops_expanded = (expanded.facet_count() - t.facet_count()) / 2;
  r.expanded_graph = dual_graph(expanded);
  r.expanded_branch = branching_number(r.expanded_graph);
  r.expanded_delta = delta(expanded);

  r.sequence = construct_low_crit_sequence(r.expanded_graph);
  const SequenceAnalysis seq = analyze_sequence(r.expanded_graph, r.sequence);
  r.crit = seq.crit;
  r.sources = static_cast<int>(seq.sources.size());
  r.profile = cut_profile(r.expanded_graph, r.sequence, d);
  r.final_cut_zero = !r.profile.steps.empty() && r.profile.steps.back().cut == 0;

  r.prefix_vertices_consistent = true;
  for (int k = 1; k <= expanded.facet_count(); ++k) {
    const std::int64_t f0 = f_vector(prefix_triangulation(expanded, r.sequence, k))[0];
    if (k >= 2) {
      const std::int64_t step = f0 - r.prefix_vertices.back();
      const bool ok = r.profile.steps[static_cast<std::size_t>(k - 1)].kind == CutCase::Single
                          ? step == 1
                          : step <= 0;
      if (!ok) r.prefix_vertices_consistent = false;
    }
    r.prefix_vertices.push_back(f0);
  }
  return r;
}

}  // namespace facenum
