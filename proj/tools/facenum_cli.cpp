// facenum: build, analyse and check generalised triangulations from the shell.
//
// Triangulations travel as gluing tables on stdin/stdout, so subcommands
// compose: `facenum build p3 4 | facenum analyze --json`.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

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
#include "facenum/verify.hpp"

namespace fn = facenum;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fn::Triangulation read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return fn::parse_gluing_table(text);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string fv_string(const fn::FVector& f) {
  std::string s = "(";
  for (int i = 0; i <= f.dim(); ++i) s += (i ? ", " : "") + std::to_string(f[i]);
  return s + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---- build ----

fn::Triangulation build_family(const std::string& family, const std::vector<int>& p) {
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw UsageError("usage: build " + family + " " + usage);
  };
  if (family == "pillow") return need(1, "<d>"), fn::pillow(p[0]);
  if (family == "sphere-even") return need(2, "<d> <facets>"), fn::sphere_even(p[0], p[1]);
  if (family == "sphere-odd") return need(2, "<d> <facets>"), fn::sphere_odd(p[0], p[1]);
  if (family == "snapped-ball") return need(2, "<d> <snaps>"), fn::snapped_ball(p[0], p[1]);
  if (family == "ds1") return need(0, ""), fn::ds1();
  if (family == "ds2") return need(0, ""), fn::ds2();
  if (family == "tripod") return need(0, ""), fn::tripod();
  if (family == "p4") return need(1, "<k>"), fn::p4(p[0]);
  if (family == "p3") return need(1, "<k>"), fn::p3(p[0]);
  if (family == "p3nl") return need(1, "<k>"), fn::p3_nl(p[0]);
  if (family == "p2") return need(1, "<k>"), fn::p2(p[0]);
  throw UsageError("unknown family " + family);
}

// ---- analyze ----

void print_analysis(const fn::Triangulation& t) {
  const fn::FaceLattice lattice = fn::compute_face_lattice(t);
  const fn::FVector f = lattice.f_vector();
  std::cout << "dimension      " << t.dim() << "\n"
            << "f-vector       " << fv_string(f) << "\n"
            << "euler          " << f.euler_characteristic() << "\n"
            << "closed         " << yes_no(t.is_closed()) << "\n"
            << "connected      " << yes_no(t.is_connected()) << "\n"
            << "valid          " << yes_no(lattice.valid()) << "\n";
  if (lattice.valid()) {
    const fn::HomologyProfile h = fn::homology(t, lattice);
    std::cout << "orientable     " << yes_no(fn::is_orientable(t, lattice)) << "\n";
    for (std::size_t i = 0; i < h.groups.size(); ++i) {
      std::cout << "H" << i << "             " << h.groups[i].to_string() << "\n";
    }
  }
  std::cout << "delta          " << fn::to_string(fn::delta(f)) << "\n";
  if (!t.is_closed() || !t.is_connected()) return;
  const fn::ClassificationReport c = fn::classify(t);
  std::cout << "pseudomanifold " << yes_no(c.pseudomanifold) << "\n";
  for (const auto& level : c.levels) {
    std::cout << "N" << level.s << " links       " << (level.holds ? "all spheres" : "not all spheres") << " ("
              << fn::to_string(level.certainty);
    if (!level.holds) std::cout << ", " << level.non_sphere_count << " non-sphere";
    std::cout << ")\n";
  }
  if (c.nonsingular_from) std::cout << "nonsingular    from s = " << *c.nonsingular_from << "\n";
}

// ---- links ----

std::string describe_link(const fn::LinkSummary& s) {
  std::ostringstream out;
  out << "face " << s.face << ": " << s.link_dim << "-dim link, " << s.link_facets << " facets, ";
  if (s.link_dim == 0) return out.str() + (s.sphere ? "two points" : "not two points");
  if (!s.connected) return out.str() + "disconnected";
  if (s.surface) {
    out << s.surface->to_string();
  } else {
    out << (s.sphere ? "sphere" : "not a sphere") << " (" << fn::to_string(s.certainty) << ")";
    if (s.euler) out << ", euler " << *s.euler;
  }
  return out.str();
}

int run_links(const fn::Triangulation& t, int dim, std::optional<int> face) {
  const fn::FaceLattice lattice = fn::compute_face_lattice(t);
  if (dim < 0 || dim >= t.dim()) throw UsageError("--dim must be in 0.." + std::to_string(t.dim() - 1));
  const int count = static_cast<int>(lattice.faces(dim).size());
  if (face) {
    if (*face < 0 || *face >= count) throw UsageError("--face must be in 0.." + std::to_string(count - 1));
    const fn::LinkResult lk = fn::link(t, lattice, dim, *face);
    if (lk.dim == 0) {
      std::cout << "# 0-dimensional link with " << lk.facet_origin.size() << " points\n";
      return exit_ok;
    }
    std::cout << fn::serialize(lk.triangulation);
    return exit_ok;
  }
  for (int j = 0; j < count; ++j) {
    fn::LinkSummary s;
    s.face_dim = dim;
    s.face = j;
    if (!lattice.face(dim, j).valid) {
      std::cout << "face " << j << ": invalid\n";
      continue;
    }
    const fn::LinkResult lk = fn::link(t, lattice, dim, j);
    s.link_dim = lk.dim;
    s.link_facets = static_cast<int>(lk.facet_origin.size());
    if (lk.dim == 0) {
      s.sphere = s.link_facets == 2;
    } else if (!lk.triangulation.is_closed()) {
      std::cout << "face " << j << ": " << lk.dim << "-dim link with boundary, " << s.link_facets << " facets\n";
      continue;
    } else {
      fn::classify_closed_link(lk.triangulation, s);
    }
    std::cout << describe_link(s) << "\n";
  }
  return exit_ok;
}

// ---- dualgraph ----

void print_component(const char* label, const fn::BlockDecomposition& b) {
  std::cout << label << ": " << b.components.size() << " components, articulation nodes {";
  for (std::size_t i = 0; i < b.articulation_nodes.size(); ++i) {
    std::cout << (i ? ", " : "") << b.articulation_nodes[i];
  }
  std::cout << "}, " << b.leaf_count() << " leaves\n";
  for (std::size_t c = 0; c < b.components.size(); ++c) {
    std::cout << "  " << c << ": nodes {";
    const auto& comp = b.components[c];
    for (std::size_t i = 0; i < comp.nodes.size(); ++i) std::cout << (i ? ", " : "") << comp.nodes[i];
    std::cout << "}, " << comp.arcs.size() << " arcs\n";
  }
}

int run_dualgraph(const fn::Triangulation& t, bool dot, bool decompose) {
  const fn::Multigraph g = fn::dual_graph(t);
  if (dot) {
    fn::DotAnnotations annotations;
    annotations.separating = decompose;
    std::cout << fn::export_dot(g, annotations);
    return exit_ok;
  }
  int loops = 0;
  for (const auto& [u, v] : g.arcs()) loops += u == v ? 1 : 0;
  std::cout << "nodes " << g.node_count() << "\narcs " << g.arc_count() << "\nloops " << loops << "\n";
  if (!g.is_connected() || g.node_count() == 0) {
    std::cout << "disconnected\n";
    return exit_ok;
  }
  std::cout << "branching number " << fn::branching_number(g) << "\n";
  if (decompose) {
    const fn::BlockDecompositions b = fn::block_decompositions(g);
    print_component("block-cut", b.cut);
    print_component("block-separating", b.separating);
  }
  return exit_ok;
}

// ---- move ----

fn::Triangulation run_move(const fn::Triangulation& t, const std::string& kind, int facet, int ridge) {
  if (kind == "02") return fn::zero_two(t, facet, ridge);
  if (kind == "20") {
    const auto site = fn::find_two_zero_site(t, facet, ridge);
    if (!site) throw fn::InvalidArgument("no 2-0 site at facet " + std::to_string(facet) + " ridge " +
                                         std::to_string(ridge));
    return fn::two_zero(t, *site);
  }
  throw UsageError("move kind must be 02 or 20");
}

// ---- check ----

std::string verdict(const fn::InequalityCheck& c) {
  return fn::to_string(c.lhs) + " >= " + fn::to_string(c.rhs) + (c.holds ? "  ok" : "  FAILS");
}

int run_check(const fn::Triangulation& t) {
  if (!t.is_closed() || !t.is_connected()) throw fn::InvalidArgument("check needs a closed connected triangulation");
  bool ok = true;
  const int d = t.dim();
  if (d == 4) {
    const fn::DehnSommervilleResiduals r = fn::dehn_sommerville_check(t);
    std::cout << "face identities: euler " << r.euler << ", edge links " << r.edge_link << ", ridges " << r.ridge
              << (r.all_zero() ? "  ok" : "  FAILS") << "\n";
    ok = ok && r.all_zero();
  }
  const fn::ConjectureCheck c = fn::conjecture_check(t);
  std::cout << "vertex bound: f0 = " << c.vertices << " <= " << c.branch << " = " << fn::to_string(c.bound)
            << (c.satisfied ? "  ok" : "  VIOLATED") << (c.equality ? " (equality)" : "") << " ["
            << (c.status == fn::BoundStatus::Proven ? "proven" : "conjectural") << "]\n";
  ok = ok && c.satisfied;

  const fn::ProvedBounds p = fn::proved_bounds(t);
  std::cout << "spanning tree bound: " << verdict(p.spanning_tree) << "\n";
  if (p.odd) std::cout << "odd-dimension bound: " << verdict(*p.odd) << "\n";
  if (p.odd_small) std::cout << "small odd bound: " << verdict(*p.odd_small) << "\n";
  if (p.loops) std::cout << "loop bound: " << verdict(*p.loops) << "\n";
  ok = ok && p.all_hold();

  if (d % 2 == 0) {
    const fn::BranchBoundReport b = fn::theorem_bound_check(t);
    std::cout << "branching bound: delta " << fn::to_string(b.delta) << " <= " << b.bound << " (branch " << b.branch
              << ")" << (b.holds ? "  ok" : "  FAILS") << (b.equality ? " (equality)" : "") << "\n";
    ok = ok && b.holds;
  }
  return ok ? exit_ok : exit_check_failed;
}

// ---- census ----

int run_census(int d, int n, bool force) {
  std::uint64_t connected = 0;
  std::uint64_t valid = 0;
  std::uint64_t violations = 0;
  std::uint64_t proved_failures = 0;
  std::uint64_t branch_failures = 0;
  std::map<std::string, std::uint64_t> distribution;
  const fn::CensusSummary summary = fn::enumerate_closed(
      d, n,
      [&](const fn::Triangulation& t) {
        if (!t.is_connected()) return;
        ++connected;
        const fn::FaceLattice lattice = fn::compute_face_lattice(t);
        const fn::FVector f = lattice.f_vector();
        if (!fn::proved_bounds(t).all_hold()) ++proved_failures;
        if (d % 2 == 0 && !fn::theorem_bound_check(t).holds) ++branch_failures;
        if (!lattice.valid()) return;
        ++valid;
        if (!fn::conjecture_check(d, f).satisfied) ++violations;
        if (d == 2) {
          ++distribution[fn::surface_type(t).to_string()];
        } else {
          ++distribution["f0 = " + std::to_string(f[0])];
        }
      },
      fn::CensusOptions{force});
  std::cout << "dimension " << d << ", facets " << n << "\n"
            << "labelled triangulations " << summary.visited << "\n"
            << "connected " << connected << "\n"
            << "valid connected " << valid << "\n";
  for (const auto& [key, count] : distribution) std::cout << "  " << key << ": " << count << "\n";
  std::cout << "vertex bound violations (valid) " << violations << "\n"
            << "proved bound failures " << proved_failures << "\n";
  if (d % 2 == 0) std::cout << "branching bound failures " << branch_failures << "\n";
  return proved_failures == 0 && branch_failures == 0 ? exit_ok : exit_check_failed;
}

// ---- verify-paper ----

int run_verify() {
  bool ok = true;
  for (int id = 1; id <= fn::criterion_count; ++id) {
    const fn::CriterionResult r = fn::run_criterion(id);
    std::cout << fn::format_result(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face numbers, links and dual graphs of generalised triangulations"};
  app.require_subcommand(1);

  std::string family;
  std::vector<int> params;
  std::string output;
  auto* build = app.add_subcommand("build", "Write the gluing table of a construction");
  build->add_option("family", family,
                    "pillow, sphere-even, sphere-odd, snapped-ball, ds1, ds2, tripod, p4, p3, p3nl, p2")
      ->required();
  build->add_option("params", params, "Integer parameters of the family");
  build->add_option("-o,--output", output, "Output file (default stdout)");

  std::string input = "-";
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "Face numbers, homology, delta and link classification");
  analyze->add_option("file", input, "Gluing table (default stdin)");
  analyze->add_flag("--json", json, "Machine-readable report");

  int link_dim = 0;
  std::optional<int> link_face;
  auto* links = app.add_subcommand("links", "Links of the faces of one dimension");
  links->add_option("file", input, "Gluing table (default stdin)");
  links->add_option("--dim", link_dim, "Face dimension")->required();
  links->add_option("--face", link_face, "Print the gluing table of this face's link");

  bool dot = false;
  bool decompose = false;
  auto* dualgraph = app.add_subcommand("dualgraph", "Dual graph summary, decompositions or DOT");
  dualgraph->add_option("file", input, "Gluing table (default stdin)");
  dualgraph->add_flag("--dot", dot, "Graphviz output");
  dualgraph->add_flag("--decompose", decompose, "Block decompositions (with --dot: highlight separating nodes)");

  std::string move_kind;
  int move_facet = 0;
  int move_ridge = 0;
  auto* move = app.add_subcommand("move", "Apply a 0-2 or 2-0 move");
  move->add_option("file", input, "Gluing table, or - for stdin")->required();
  move->add_option("kind", move_kind, "02 or 20")->required();
  move->add_option("facet", move_facet)->required();
  move->add_option("ridge", move_ridge)->required();

  auto* check = app.add_subcommand("check", "Face identities, vertex bounds and the branching bound");
  check->add_option("file", input, "Gluing table (default stdin)");

  int census_dim = 0;
  int census_facets = 0;
  bool force = false;
  auto* census = app.add_subcommand("census", "Enumerate all closed triangulations with n facets");
  census->add_option("d", census_dim)->required();
  census->add_option("n", census_facets)->required();
  census->add_flag("--force", force, "Run beyond the size guard");

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*build) {
      write_output(output, fn::serialize(build_family(family, params)));
      return exit_ok;
    }
    if (*analyze) {
      const fn::Triangulation t = read_input(input);
      if (json) {
        std::cout << fn::analysis_report_json(t);
      } else {
        print_analysis(t);
      }
      return exit_ok;
    }
    if (*links) return run_links(read_input(input), link_dim, link_face);
    if (*dualgraph) return run_dualgraph(read_input(input), dot, decompose);
    if (*move) {
      std::cout << fn::serialize(run_move(read_input(input), move_kind, move_facet, move_ridge));
      return exit_ok;
    }
    if (*check) return run_check(read_input(input));
    if (*census) return run_census(census_dim, census_facets, force);
    if (*verify) return run_verify();
  } catch (const fn::ParseError& e) {
    std::cerr << "facenum: parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const fn::GuardExceeded& e) {
    std::cerr << "facenum: " << e.what() << "; pass --force to run it anyway\n";
    return exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "facenum: " << e.what() << "\n";
    return exit_usage;
  } catch (const fn::InvalidArgument& e) {
    std::cerr << "facenum: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
