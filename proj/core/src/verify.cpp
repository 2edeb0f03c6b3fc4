#include "facenum/verify.hpp"

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "facenum/analysis.hpp"
#include "facenum/branch_bound.hpp"
#include "facenum/census.hpp"
#include "facenum/classify.hpp"
#include "facenum/constructions.hpp"
#include "facenum/dual_graph.hpp"
#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/gluing_table.hpp"
#include "facenum/homology.hpp"
#include "facenum/links.hpp"
#include "facenum/moves.hpp"
#include "facenum/report.hpp"

namespace facenum {

namespace {

struct Named {
  std::string name;
  Triangulation t;
};

// Counts checks and keeps the first few failure descriptions.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 4) examples_.push_back(what);
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool ok() const noexcept { return failures_ == 0; }

  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failed";
    for (const auto& n : notes_) out << "; " << n;
    if (!examples_.empty()) {
      out << "; e.g.";
      for (const auto& e : examples_) out << " [" << e << "]";
    }
    return out.str();
  }

 private:
  std::int64_t checks_ = 0;
  std::int64_t failures_ = 0;
  std::vector<std::string> examples_;
  std::vector<std::string> notes_;
};

std::string fv_string(const FVector& f) {
  std::string s = "(";
  for (int i = 0; i <= f.dim(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

std::string call(const std::string& family, int k) { return family + "(" + std::to_string(k) + ")"; }

std::string call(const std::string& family, int a, int b) {
  return family + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Every triangulation reachable from pillow(4) by zero_two moves, up to
// `max_facets` facets (all glued slots at each step).
std::vector<Named> pillow_descendants(int max_facets) {
  std::vector<Named> out;
  std::vector<Named> frontier{{"pillow(4)", pillow(4)}};
  while (!frontier.empty()) {
    std::vector<Named> next;
    for (const auto& [name, t] : frontier) {
      if (t.facet_count() + 2 > max_facets) continue;
      for (int f = 0; f < t.facet_count(); ++f) {
        for (int r = 0; r <= t.dim(); ++r) {
          if (!t.is_glued(f, r)) continue;
          next.push_back({name + "+02" + call("", f, r), zero_two(t, f, r)});
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Closed valid 4-dimensional triangulations used by criteria 1 to 4.
std::vector<Named> closed_four_dimensional() {
  std::vector<Named> out{{"pillow(4)", pillow(4)}};
  for (int k = 1; k <= 3; ++k) out.push_back({call("p4", k), p4(k)});
  for (int k = 1; k <= 6; ++k) {
    out.push_back({call("p3", k), p3(k)});
    out.push_back({call("p3_nl", k), p3_nl(k)});
    out.push_back({call("p2", k), p2(k)});
  }
  for (int f = 2; f <= 40; f += 2) out.push_back({call("sphere_even", 4, f), sphere_even(4, f)});
  for (auto& n : pillow_descendants(8)) out.push_back(std::move(n));
  return out;
}

CriterionResult fvector_table() {
  CriterionResult r{1, "f-vector regression table", false, {}, 0.0, 1.0};
  Tally tally;
  auto full = [&](const std::string& name, const Triangulation& t, std::vector<std::int64_t> expected) {
    const FVector f = f_vector(t);
    tally.check(f == FVector(std::move(expected)), name + " = " + fv_string(f));
  };
  auto ends = [&](const std::string& name, const Triangulation& t, std::int64_t facets, std::int64_t vertices) {
    const FVector f = f_vector(t);
    tally.check(f[4] == facets && f[0] == vertices,
                name + " has f4=" + std::to_string(f[4]) + " f0=" + std::to_string(f[0]));
  };
  full("ds1", ds1(), {2, 3, 4, 3, 1});
  full("ds2", ds2(), {3, 5, 5, 3, 1});
  full("pillow(4)", pillow(4), {5, 10, 10, 5, 2});
  full("p4(1)", p4(1), {6, 13, 18, 15, 6});
  ends("p3(4)", p3(4), 16, 13);
  ends("p4(2)", p4(2), 26, 21);
  ends("p2(4)", p2(4), 24, 17);
  ends("p3_nl(4)", p3_nl(4), 64, 37);
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult closed_forms() {
  CriterionResult r{2, "series closed forms", false, {}, 0.0, 30.0};
  Tally tally;
  auto expect = [&](const std::string& name, const Triangulation& t, std::int64_t facets, std::int64_t vertices) {
    const FVector f = f_vector(t);
    tally.check(f[4] == facets && f[0] == vertices, name + " has (f4,f0)=(" + std::to_string(f[4]) + "," +
                                                        std::to_string(f[0]) + "), expected (" +
                                                        std::to_string(facets) + "," + std::to_string(vertices) + ")");
  };
  for (int k = 1; k <= 6; ++k) {
    expect(call("p3", k), p3(k), 4 * k, 3 * k + 1);
    expect(call("p3_nl", k), p3_nl(k), 16 * k, 9 * k + 1);
    expect(call("p2", k), p2(k), 6 * k, 4 * k + 1);
  }
  for (int k = 1; k <= 3; ++k) {
    std::int64_t sum = 0;
    for (int i = 0, power = 1; i <= k - 2; ++i, power *= 4) sum += power;
    expect(call("p4", k), p4(k), 6 + 20 * sum, 6 + 15 * sum);
  }
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult edge_link_genus() {
  CriterionResult r{3, "edge-link genus", false, {}, 0.0, 0.0};
  Tally tally;
  auto expect = [&](const std::string& name, const Triangulation& t, int edge, std::int64_t genus) {
    const FaceLattice lattice = compute_face_lattice(t);
    const LinkResult lk = link(t, lattice, 1, edge);
    const std::string where = name + " edge " + std::to_string(edge);
    if (!lk.triangulation.is_connected()) {
      tally.check(false, where + " link is disconnected");
      return;
    }
    const SurfaceType s = surface_type(lk.triangulation);
    tally.check(s.orientable && s.genus == genus, where + " link is " + s.to_string() + ", expected genus " +
                                                     std::to_string(genus));
  };
  for (int k = 2; k <= 6; ++k) expect(call("p3", k), p3(k), 0, k - 1);
  for (int k = 2; k <= 5; ++k) expect(call("p2", k), p2(k), 2, 2 * k - 2);
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult counterexample_verdicts() {
  CriterionResult r{4, "vertex-bound verdicts", false, {}, 0.0, 0.0};
  Tally tally;
  const std::vector<Named> violators{
      {"p3(4)", p3(4)}, {"p4(2)", p4(2)}, {"p2(4)", p2(4)}, {"p3_nl(4)", p3_nl(4)}};
  for (const auto& [name, t] : violators) {
    const ConjectureCheck c = conjecture_check(t);
    tally.check(!c.satisfied, name + " satisfies f0 <= " + to_string(c.bound));
  }
  auto satisfied_with_equality = [&](const std::string& name, const Triangulation& t) {
    const ConjectureCheck c = conjecture_check(t);
    tally.check(c.satisfied && c.equality && delta(t) == Rational(4),
                name + " has f0=" + std::to_string(c.vertices) + " against bound " + to_string(c.bound));
  };
  for (int f = 2; f <= 40; f += 2) satisfied_with_equality(call("sphere_even", 4, f), sphere_even(4, f));
  const std::vector<Named> descendants = pillow_descendants(8);
  for (const auto& [name, t] : descendants) satisfied_with_equality(name, t);
  tally.note(std::to_string(descendants.size()) + " move descendants of pillow(4)");
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult face_identities() {
  CriterionResult r{5, "face-count identity residuals", false, {}, 0.0, 0.0};
  Tally tally;
  int considered = 0;
  for (const auto& [name, t] : closed_four_dimensional()) {
    if (!compute_face_lattice(t).valid()) continue;
    ++considered;
    const DehnSommervilleResiduals res = dehn_sommerville_check(t);
    tally.check(res.all_zero(), name + " residuals (" + std::to_string(res.euler) + "," +
                                    std::to_string(res.edge_link) + "," + std::to_string(res.ridge) + ")");
  }
  tally.note(std::to_string(considered) + " valid closed 4-dimensional triangulations");
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult classification() {
  CriterionResult r{6, "link classification", false, {}, 0.0, 0.0};
  Tally tally;
  for (const auto& [name, t] : std::vector<Named>{{"p3(4)", p3(4)}, {"p3_nl(4)", p3_nl(4)}}) {
    const ClassificationReport c = classify(t);
    tally.check(c.pseudomanifold, name + " is not a pseudomanifold");
    const bool exact_n2 = c.nonsingular_from == 2 && c.levels.at(2).certainty == Certainty::Exact &&
                          c.levels.at(3).certainty == Certainty::Exact;
    tally.check(exact_n2, name + " is not exactly N2 from level 2");
    const auto bad_edges = c.non_sphere_links(1);
    tally.check(bad_edges.size() == 1, name + " has " + std::to_string(bad_edges.size()) + " non-sphere edge links");
    const auto bad_vertices = c.non_sphere_links(0);
    tally.check(bad_vertices.size() == 1,
                name + " has " + std::to_string(bad_vertices.size()) + " vertex links failing the sphere test");
  }
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

Multigraph random_loopless_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> node_count(1, 8);
  const int n = node_count(rng);
  Multigraph g(n);
  for (int v = 1; v < n; ++v) g.add_arc(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  if (n >= 2) {
    // Half the graphs stay close to trees so that large branching numbers occur.
    const int extra = std::uniform_int_distribution<int>(0, rng() % 2 ? 1 : n + 2)(rng);
    std::uniform_int_distribution<int> node(0, n - 1);
    for (int i = 0; i < extra; ++i) {
      const int u = node(rng);
      int v = node(rng);
      while (v == u) v = node(rng);
      g.add_arc(u, v);
    }
  }
  return g;
}

CriterionResult sequence_oracle() {
  CriterionResult r{7, "branching number equals minimum crit", false, {}, 0.0, 60.0};
  Tally tally;
  std::mt19937 rng(20230617u);
  for (int i = 0; i < 200; ++i) {
    const Multigraph g = random_loopless_graph(rng);
    const std::string name = "graph " + std::to_string(i) + " (" + std::to_string(g.node_count()) + " nodes, " +
                             std::to_string(g.arc_count()) + " arcs)";
    const int branch = branching_number(g);
    const int crit = crit_bruteforce(g, 8);
    tally.check(branch == crit, name + ": branch " + std::to_string(branch) + ", crit " + std::to_string(crit));
    const std::vector<int> sequence = construct_low_crit_sequence(g);
    const SequenceAnalysis a = analyze_sequence(g, sequence);
    tally.check(static_cast<int>(sequence.size()) == g.node_count() && a.crit == branch && a.sources.size() == 1,
                name + ": constructed sequence has crit " + std::to_string(a.crit) + " and " +
                    std::to_string(a.sources.size()) + " sources");
  }
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

void check_branch_bound(Tally& tally, const std::string& name, const Triangulation& t) {
  const BranchBoundReport b = theorem_bound_check(t);
  tally.check(b.holds, name + ": delta " + to_string(b.delta) + " exceeds " + std::to_string(b.bound));
  tally.check(b.crit == b.expanded_branch && b.sources == 1 && b.final_cut_zero && b.profile.telescopes &&
                  b.prefix_vertices_consistent && b.expanded_delta == b.delta,
              name + ": counting argument does not replay");
}

CriterionResult branch_bound_suite() {
  CriterionResult r{8, "branching bound property suite", false, {}, 0.0, 300.0};
  Tally tally;
  for (int d : {2, 4, 6}) {
    check_branch_bound(tally, call("pillow", d), pillow(d));
    for (int f = 4; f <= 20; f += 2) check_branch_bound(tally, call("sphere_even", d, f), sphere_even(d, f));
  }
  for (int k = 1; k <= 6; ++k) check_branch_bound(tally, call("p3", k), p3(k));
  for (int k = 1; k <= 4; ++k) check_branch_bound(tally, call("p3_nl", k), p3_nl(k));
  for (int k = 1; k <= 5; ++k) check_branch_bound(tally, call("p2", k), p2(k));
  for (int k = 1; k <= 3; ++k) check_branch_bound(tally, call("p4", k), p4(k));
  for (const auto& [name, t] : pillow_descendants(8)) check_branch_bound(tally, name, t);
  for (int k = 1; k <= 3; ++k) {
    const Triangulation base = p3(k);
    for (const Slot& s : std::vector<Slot>{{0, 0}, {1, 4}, {3, 0}}) {
      check_branch_bound(tally, call("p3", k) + "+02" + call("", s.facet, s.ridge), zero_two(base, s.facet, s.ridge));
    }
  }
  std::uint64_t census_checked = 0;
  for (int n = 1; n <= 4; ++n) {
    enumerate_closed(2, n, [&](const Triangulation& t) {
      if (!t.is_connected()) return;
      ++census_checked;
      check_branch_bound(tally, "census d=2 n=" + std::to_string(n) + " #" + std::to_string(census_checked), t);
    });
  }
  tally.note(std::to_string(census_checked) + " connected census surfaces");
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult odd_dimension_bounds() {
  CriterionResult r{9, "odd-dimension vertex bounds", false, {}, 0.0, 0.0};
  Tally tally;
  std::uint64_t outside_hypothesis = 0;
  std::uint64_t one_vertex_manifolds = 0;
  for (int n = 1; n <= 2; ++n) {
    enumerate_closed(3, n, [&](const Triangulation& t) {
      if (!t.is_connected()) return;
      const FaceLattice lattice = compute_face_lattice(t);
      const FVector f = lattice.f_vector();
      const std::string name = "census d=3 n=" + std::to_string(n) + " f=" + fv_string(f);
      if (f[3] >= 3 || f[3] == 1) {
        tally.check(f[0] <= f[3] + 1, name + " exceeds f3+1");
      } else {
        ++outside_hypothesis;
        tally.check(f[0] <= f[3] / 2 + 3, name + " exceeds floor(f3/2)+3");
      }
      if (f[0] != 1 || !lattice.valid()) return;
      const LinkResult lk = link(t, lattice, 0, 0);
      if (!lk.triangulation.is_connected() || euler_characteristic(lk.triangulation) != 2) return;
      ++one_vertex_manifolds;
      tally.check(f[1] == f[3] + 1 && f[2] == 2 * f[3], name + " one-vertex manifold");
    });
  }
  tally.note(std::to_string(outside_hypothesis) + " outputs with 2 <= f3 < 3 checked against floor(f3/2)+3");
  tally.note(std::to_string(one_vertex_manifolds) + " one-vertex manifold outputs");
  for (int d : {1, 3, 5, 7}) {
    for (int f = 1; f <= 8; ++f) {
      const Triangulation t = sphere_odd(d, f);
      const std::int64_t f0 = f_vector(t)[0];
      tally.check(f0 == f + (d - 1) / 2 && conjecture_check(t).satisfied,
                  call("sphere_odd", d, f) + " has f0=" + std::to_string(f0));
    }
  }
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult move_invariants() {
  CriterionResult r{10, "move invariants", false, {}, 0.0, 0.0};
  Tally tally;
  const std::vector<Named> pool{{"pillow(4)", pillow(4)},
                                {"pillow(3)", pillow(3)},
                                {"p3(2)", p3(2)},
                                {"p4(1)", p4(1)},
                                {"p2(1)", p2(1)},
                                {"p3_nl(1)", p3_nl(1)},
                                {"sphere_odd(3,4)", sphere_odd(3, 4)},
                                {"sphere_odd(5,3)", sphere_odd(5, 3)},
                                {"sphere_even(2,6)", sphere_even(2, 6)}};
  std::mt19937 rng(77u);
  for (int i = 0; i < 100; ++i) {
    const auto& [name, t] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    std::vector<Slot> glued;
    for (int f = 0; f < t.facet_count(); ++f) {
      for (int k = 0; k <= t.dim(); ++k) {
        if (t.is_glued(f, k)) glued.push_back({f, k});
      }
    }
    const Slot s = glued[std::uniform_int_distribution<std::size_t>(0, glued.size() - 1)(rng)];
    const Triangulation moved = zero_two(t, s.facet, s.ridge);
    const std::string site = name + " at " + call("", s.facet, s.ridge);
    const FVector before = f_vector(t);
    const FVector after = f_vector(moved);
    const int d = t.dim();
    tally.check(after[d] == before[d] + 2 && after[0] == before[0] + 1, site + ": f-vector " + fv_string(after));
    tally.check(after.euler_characteristic() == before.euler_characteristic(), site + ": Euler characteristic");
    tally.check(homology(moved) == homology(t), site + ": homology");
    tally.check(is_orientable(moved) == is_orientable(t), site + ": orientability");
  }
  for (int k = 1; k <= 4; ++k) {
    const Triangulation t = p3(k);
    const Triangulation out = remove_loops(t);
    const std::string name = call("p3", k);
    const Multigraph g_in = dual_graph(t);
    const Multigraph g_out = dual_graph(out);
    tally.check(!g_out.has_loops(), name + ": loops remain");
    tally.check(delta(out) == delta(t), name + ": delta changed");
    tally.check(branching_number(g_out) == branching_number(g_in), name + ": branching number changed");
    tally.check(trees_isomorphic(block_decompositions(g_out).cut.tree, block_decompositions(g_in).separating.tree),
                name + ": block-cut tree differs from block-separating tree");
  }
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

CriterionResult round_trip() {
  CriterionResult r{11, "serialization and report stability", false, {}, 0.0, 0.0};
  Tally tally;
  std::vector<Named> all{{"ds1", ds1()}, {"ds2", ds2()}, {"tripod", tripod()}};
  for (int d = 1; d <= 6; ++d) {
    all.push_back({call("pillow", d), pillow(d)});
    for (int s = 1; s <= (d + 1) / 2; ++s) all.push_back({call("snapped_ball", d, s), snapped_ball(d, s)});
    if (d % 2 == 1) {
      for (int f = 1; f <= 6; ++f) all.push_back({call("sphere_odd", d, f), sphere_odd(d, f)});
    } else {
      for (int f = 4; f <= 12; f += 2) all.push_back({call("sphere_even", d, f), sphere_even(d, f)});
    }
  }
  for (auto& n : closed_four_dimensional()) all.push_back(std::move(n));
  for (const auto& [name, t] : all) {
    const std::string text = serialize(t);
    const Triangulation back = parse_gluing_table(text);
    tally.check(back == t && serialize(back) == text, name + " does not round-trip");
  }
  tally.note(std::to_string(all.size()) + " triangulations round-tripped");
  const std::vector<Named> reported{{"pillow(4)", pillow(4)},     {"ds2", ds2()},         {"p3(2)", p3(2)},
                                    {"sphere_odd(3,3)", sphere_odd(3, 3)}, {"p3_nl(1)", p3_nl(1)},
                                    {"sphere_even(2,6)", sphere_even(2, 6)}};
  for (const auto& [name, t] : reported) {
    tally.check(analysis_report_json(t) == analysis_report_json(parse_gluing_table(serialize(t))),
                name + " report differs between runs");
  }
  r.passed = tally.ok();
  r.detail = tally.summary();
  return r;
}

using CriterionFn = CriterionResult (*)();

constexpr CriterionFn criteria[criterion_count] = {
    fvector_table,      closed_forms,         edge_link_genus, counterexample_verdicts,
    face_identities,    classification,       sequence_oracle, branch_bound_suite,
    odd_dimension_bounds, move_invariants,    round_trip,
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count) throw InvalidArgument("no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = criteria[id - 1]();
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += "; over the time budget";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << " ("
      << r.seconds << " s";
  if (r.budget_seconds > 0) out << " of " << r.budget_seconds << " s";
  out << "): " << r.detail;
  return out.str();
}

}  // namespace facenum
