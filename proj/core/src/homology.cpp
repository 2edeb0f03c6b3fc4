#include "facenum/homology.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

#include "facenum/error.hpp"

namespace facenum {

namespace {

using Row = std::vector<Integer>;

// Reduces the block below and right of (p, p) until entry (p, p) divides
// every other entry of its row and column, which are then cleared.
class SmithReducer {
 public:
  explicit SmithReducer(IntegerMatrix m) : a_(std::move(m)) {
    rows_ = a_.size();
    cols_ = rows_ == 0 ? 0 : a_.front().size();
  }

  std::vector<Integer> run() {
    std::vector<Integer> diagonal;
    for (std::size_t p = 0; p < std::min(rows_, cols_); ++p) {
      if (!place_pivot(p)) break;
      reduce(p);
      diagonal.push_back(abs(a_[p][p]));
    }
    return diagonal;
  }

 private:
  // Moves the entry of least absolute value in the trailing block to (p, p).
  bool place_pivot(std::size_t p) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = p; i < rows_; ++i) {
      for (std::size_t j = p; j < cols_; ++j) {
        if (a_[i][j].is_zero()) continue;
        Integer v = abs(a_[i][j]);
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = std::move(v);
          if (best_abs == 1) break;
        }
      }
      if (best && best_abs == 1) break;
    }
    if (!best) return false;
    std::swap(a_[p], a_[best->first]);
    if (best->second != p) {
      for (auto& row : a_) std::swap(row[p], row[best->second]);
    }
    return true;
  }

  void reduce(std::size_t p) {
    while (true) {
      bool changed = false;
      for (std::size_t i = p + 1; i < rows_; ++i) {
        if (a_[i][p].is_zero()) continue;
        const Integer q = a_[i][p] / a_[p][p];
        subtract_row(i, p, q);
        if (!a_[i][p].is_zero()) {
          std::swap(a_[i], a_[p]);
          changed = true;
        }
      }
      for (std::size_t j = p + 1; j < cols_; ++j) {
        if (a_[p][j].is_zero()) continue;
        const Integer q = a_[p][j] / a_[p][p];
        subtract_column(j, p, q);
        if (!a_[p][j].is_zero()) {
          for (auto& row : a_) std::swap(row[j], row[p]);
          changed = true;
        }
      }
      if (changed) continue;
      // Row and column are clear; enforce divisibility of the rest.
      bool fixed = true;
      for (std::size_t i = p + 1; i < rows_ && fixed; ++i) {
        for (std::size_t j = p + 1; j < cols_; ++j) {
          if (!a_[i][j].is_zero() && a_[i][j] % a_[p][p] != 0) {
            for (std::size_t k = p; k < cols_; ++k) a_[p][k] += a_[i][k];
            fixed = false;
            break;
          }
        }
      }
      if (fixed) return;
    }
  }

  void subtract_row(std::size_t target, std::size_t source, const Integer& q) {
    Row& dst = a_[target];
    const Row& src = a_[source];
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!src[k].is_zero()) dst[k] -= q * src[k];
    }
  }

  void subtract_column(std::size_t target, std::size_t source, const Integer& q) {
    for (auto& row : a_) {
      if (!row[source].is_zero()) row[target] -= q * row[source];
    }
  }

  IntegerMatrix a_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
};

void require_valid(const FaceLattice& lattice) {
  if (!lattice.valid()) throw InvalidArgument("triangulation has an invalid face class");
}

}  // namespace

std::vector<Integer> smith_invariants(IntegerMatrix matrix) {
  return SmithReducer(std::move(matrix)).run();
}

std::vector<std::vector<std::int64_t>> boundary_matrix(const FaceLattice& lattice, int i) {
  if (i < 1 || i > lattice.dim()) throw InvalidArgument("boundary map index out of range");
  const auto& cells = lattice.faces(i);
  const auto& faces = lattice.faces(i - 1);
  std::vector<std::vector<std::int64_t>> out(faces.size(),
                                              std::vector<std::int64_t>(cells.size(), 0));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const FaceEmbedding& rep = cells[c].representative();
    for (int j = 0; j <= i; ++j) {
      std::vector<int> corners;
      for (int k = 0; k <= i; ++k) {
        if (k != j) corners.push_back(rep.corners[static_cast<std::size_t>(k)]);
      }
      const FaceRef ref = lattice.locate(rep.facet, corners);
      const FaceEmbedding& emb =
          lattice.face(i - 1, ref.face).embeddings[static_cast<std::size_t>(ref.embedding)];
      const int sign = (j % 2 == 0 ? 1 : -1) * sorting_sign(emb.to_representative);
      out[static_cast<std::size_t>(ref.face)][c] += sign;
    }
  }
  return out;
}

std::string HomologyGroup::to_string() const {
  std::string out;
  if (betti > 0) out = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (const Integer& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + t.str();
  }
  return out.empty() ? "0" : out;
}

std::vector<std::int64_t> HomologyProfile::betti_numbers() const {
  std::vector<std::int64_t> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * groups[i].betti;
  return chi;
}

bool HomologyProfile::has_torsion() const {
  return std::any_of(groups.begin(), groups.end(), [](const auto& g) { return !g.torsion.empty(); });
}

HomologyProfile homology(const Triangulation& t) { return homology(t, compute_face_lattice(t)); }

HomologyProfile homology(const Triangulation& t, const FaceLattice& lattice) {
  (void)t;
  require_valid(lattice);
  const int d = lattice.dim();
  // invariants[i] are the invariant factors of the boundary map C_i -> C_{i-1}.
  std::vector<std::vector<Integer>> invariants(static_cast<std::size_t>(d + 2));
  for (int i = 1; i <= d; ++i) {
    const auto b = boundary_matrix(lattice, i);
    IntegerMatrix m(b.size());
    for (std::size_t r = 0; r < b.size(); ++r) m[r].assign(b[r].begin(), b[r].end());
    invariants[static_cast<std::size_t>(i)] = smith_invariants(std::move(m));
  }
  HomologyProfile out;
  for (int i = 0; i <= d; ++i) {
    HomologyGroup g;
    const auto cells = static_cast<std::int64_t>(lattice.faces(i).size());
    const auto rank_out = static_cast<std::int64_t>(invariants[static_cast<std::size_t>(i)].size());
    const auto& in = invariants[static_cast<std::size_t>(i + 1)];
    g.betti = cells - rank_out - static_cast<std::int64_t>(in.size());
    for (const Integer& f : in) {
      if (f > 1) g.torsion.push_back(f);
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

std::optional<std::vector<int>> orientation(const Triangulation& t) {
  const int n = t.facet_count();
  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (sign[static_cast<std::size_t>(start)] != 0) continue;
    sign[static_cast<std::size_t>(start)] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int r = 0; r <= t.dim(); ++r) {
        const auto& adj = t.adjacent(a, r);
        if (!adj) continue;
        const int want = -adj->correspondence.sign() * sign[static_cast<std::size_t>(a)];
        int& have = sign[static_cast<std::size_t>(adj->facet)];
        if (have == 0) {
          have = want;
          queue.push_back(adj->facet);
        } else if (have != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

bool is_orientable(const Triangulation& t) { return is_orientable(t, compute_face_lattice(t)); }

bool is_orientable(const Triangulation& t, const FaceLattice& lattice) {
  require_valid(lattice);
  return orientation(t).has_value();
}

}  // namespace facenum
