#include "facenum/analysis.hpp"

#include <algorithm>

#include "facenum/dual_graph.hpp"
#include "facenum/error.hpp"

namespace facenum {

namespace {

void require_closed_connected(const Triangulation& t) {
  if (!t.is_closed()) throw InvalidArgument("triangulation is not closed");
  if (t.facet_count() == 0 || !t.is_connected()) throw InvalidArgument("triangulation is not connected");
}

InequalityCheck at_least(Rational lhs, Rational rhs) {
  return InequalityCheck{lhs, rhs, lhs >= rhs};
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

DehnSommervilleResiduals dehn_sommerville_check(const Triangulation& t) {
  if (t.dim() != 4) throw InvalidArgument("face-count identities are for dimension 4");
  if (!t.is_closed()) throw InvalidArgument("triangulation is not closed");
  const FaceLattice lattice = compute_face_lattice(t);
  const FVector f = lattice.f_vector();
  DehnSommervilleResiduals r;
  std::int64_t chi = f.euler_characteristic();
  if (lattice.valid()) {
    chi = homology(t, lattice).euler_characteristic();
    r.euler_from_homology = true;
  }
  r.euler = f[0] - f[1] + f[2] - f[3] + f[4] - chi;
  r.edge_link = 2 * f[1] - 3 * f[2] + 4 * f[3] - 5 * f[4];
  r.ridge = 2 * f[3] - 5 * f[4];
  return r;
}

Rational delta(const FVector& f) { return Rational(f[0]) - Rational(f[f.dim()], 2); }

Rational delta(const Triangulation& t) { return delta(f_vector(t)); }

ConjectureCheck conjecture_check(const Triangulation& t) {
  require_closed_connected(t);
  return conjecture_check(t.dim(), f_vector(t));
}

ConjectureCheck conjecture_check(int dim, const FVector& f) {
  ConjectureCheck c;
  c.dim = dim;
  c.vertices = f[0];
  c.facets = f[dim];
  const std::int64_t d = dim;
  const std::int64_t fd = c.facets;
  const bool half_branch = d % 2 == 0 || (fd < d && fd % 2 == 0);
  if (half_branch) {
    c.bound = Rational(fd, 2) + d;
    c.branch = "f_d/2 + d";
  } else {
    c.bound = Rational(fd) + Rational(d - 1, 2);
    c.branch = "f_d + (d-1)/2";
  }
  c.satisfied = Rational(c.vertices) <= c.bound;
  c.equality = Rational(c.vertices) == c.bound;
  const bool proven = d <= 2 || (d % 2 == 1 && (fd >= d || fd % 2 == 0 || fd == 1));
  c.status = proven ? BoundStatus::Proven : BoundStatus::Open;
  return c;
}

BettiBoundReport betti_bound_report(const Triangulation& t, std::optional<bool> simply_connected,
                                    const BoundHypothesis& hypothesis) {
  if (!simply_connected) {
    throw InvalidArgument("simple connectivity must be asserted explicitly (true or false)");
  }
  if (t.dim() != 4) throw InvalidArgument("Betti-number bounds are for dimension 4");
  require_closed_connected(t);
  if (hypothesis.a <= 0 || hypothesis.a > 1) throw InvalidArgument("hypothesis needs 0 < a <= 1");
  const FaceLattice lattice = compute_face_lattice(t);
  if (!lattice.valid()) throw InvalidArgument("triangulation has an invalid face class");
  const FVector f = lattice.f_vector();
  const HomologyProfile h = homology(t, lattice);

  BettiBoundReport r;
  r.simply_connected = *simply_connected;
  r.beta1 = h.betti(1);
  r.beta2 = h.betti(2);
  r.contradiction = r.simply_connected && (r.beta1 != 0 || !h.groups[1].torsion.empty());

  const Rational f0(f[0]), f1(f[1]), f4(f[4]);
  const Rational b2(r.beta2);
  const Rational lhs = 3 * f0 - f1 + f4 / 2;
  const Rational rhs = 6 + 3 * b2;
  r.euler_identity = InequalityCheck{lhs, rhs, lhs == rhs};
  r.vertex_edge = at_least(f1, f0);
  r.spanning_tree = at_least(f4 + 4, f0);
  r.combined = at_least(f4 + 4 * f0, 12 + 6 * b2);
  r.facet_lower = at_least(f4, (6 * b2 - 4) / 5);
  r.hypothesis = hypothesis;
  r.hypothesis_holds = f0 <= hypothesis.a * f4 + hypothesis.b;
  r.general = at_least(f4, (6 * b2 + 12 - 4 * hypothesis.b) / (4 * hypothesis.a + 1));
  r.conjectural = at_least(f4, 2 * b2);
  return r;
}

std::string SurfaceType::to_string() const {
  if (orientable) return genus == 0 ? "sphere" : "orientable genus " + std::to_string(genus);
  return "non-orientable genus " + std::to_string(genus);
}

SurfaceType surface_type(const Triangulation& t) {
  if (t.dim() != 2) throw InvalidArgument("surface type needs a 2-dimensional triangulation");
  require_closed_connected(t);
  const FaceLattice lattice = compute_face_lattice(t);
  if (!lattice.valid()) throw InvalidArgument("triangulation has an invalid face class");
  SurfaceType s;
  s.euler = lattice.f_vector().euler_characteristic();
  s.orientable = orientation(t).has_value();
  s.genus = s.orientable ? (2 - s.euler) / 2 : 2 - s.euler;
  return s;
}

int max_loops_at_node(const Triangulation& t) {
  const Multigraph g = dual_graph(t);
  int best = 0;
  for (int v = 0; v < g.node_count(); ++v) best = std::max(best, g.loop_count(v));
  return best;
}

bool ProvedBounds::all_hold() const {
  return spanning_tree.holds && (!odd || odd->holds) && (!odd_small || odd_small->holds) &&
         (!loops || loops->holds);
}

ProvedBounds proved_bounds(const Triangulation& t) {
  require_closed_connected(t);
  const FVector f = f_vector(t);
  const std::int64_t d = t.dim();
  const std::int64_t fd = f[t.dim()];
  const Rational f0(f[0]);
  ProvedBounds b;
  b.spanning_tree = at_least(Rational(fd + d), f0);
  if (d % 2 == 1 && (fd >= d || fd == 1)) b.odd = at_least(Rational(fd) + Rational(d - 1, 2), f0);
  if (d % 2 == 1 && fd >= 2 && fd <= d) b.odd_small = at_least(Rational(fd / 2 + d), f0);
  const std::int64_t l = max_loops_at_node(t);
  if (l < d) {
    const Rational bound = Rational(d + 1, 2 * (d - l)) * fd + (d - l) - Rational(1, d - l);
    b.loops = at_least(bound, f0);
  }
  return b;
}

}  // namespace facenum
