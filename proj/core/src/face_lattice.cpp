#include "facenum/face_lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "facenum/error.hpp"

namespace facenum {

std::int64_t FVector::euler_characteristic() const noexcept {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts_[i];
  return chi;
}

std::vector<std::uint64_t> lexicographic_subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int c : combo) mask |= std::uint64_t{1} << c;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

namespace {

std::uint64_t image_mask(std::uint64_t mask, const Permutation& p) {
  std::uint64_t out = 0;
  for (int v : mask_elements(mask)) out |= std::uint64_t{1} << p[v];
  return out;
}

int position_in(std::span<const int> sorted, int value) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

}  // namespace

FaceLattice compute_face_lattice(const Triangulation& t) {
  const int d = t.dim();
  const int n = t.facet_count();
  if (d + 1 > 64) throw InvalidArgument("dimension too large for the face lattice");

  FaceLattice lattice;
  lattice.dim_ = d;
  lattice.facet_count_ = n;
  lattice.faces_.resize(static_cast<std::size_t>(d + 1));
  lattice.levels_.resize(static_cast<std::size_t>(d + 1));

  for (int i = 0; i <= d; ++i) {
    auto& level = lattice.levels_[static_cast<std::size_t>(i)];
    auto& classes = lattice.faces_[static_cast<std::size_t>(i)];
    level.masks = lexicographic_subsets(d + 1, i + 1);
    const int per_facet = static_cast<int>(level.masks.size());
    for (int r = 0; r < per_facet; ++r) level.rank_of_mask.emplace(level.masks[static_cast<std::size_t>(r)], r);
    level.element_ref.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(per_facet), FaceRef{});

    auto element = [&](int facet, std::uint64_t mask) {
      return static_cast<std::size_t>(facet) * static_cast<std::size_t>(per_facet) +
             static_cast<std::size_t>(level.rank_of_mask.at(mask));
    };

    struct Pending {
      int facet;
      std::uint64_t mask;
    };
    std::deque<Pending> queue;

    // Scanning in (facet, lexicographic corner tuple) order makes each seed
    // the least element of its class.
    for (int facet = 0; facet < n; ++facet) {
      for (std::uint64_t seed : level.masks) {
        if (level.element_ref[element(facet, seed)].face >= 0) continue;
        const int class_index = static_cast<int>(classes.size());
        FaceClass& cls = classes.emplace_back();
        std::vector<int> corners = mask_elements(seed);
        std::vector<int> identity(corners.size());
        for (std::size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<int>(k);
        cls.embeddings.push_back(FaceEmbedding{facet, std::move(corners), std::move(identity)});
        level.element_ref[element(facet, seed)] = FaceRef{class_index, 0};
        queue.push_back(Pending{facet, seed});

        while (!queue.empty()) {
          const Pending cur = queue.front();
          queue.pop_front();
          const FaceRef cur_ref = level.element_ref[element(cur.facet, cur.mask)];
          // Copy: embeddings may reallocate below.
          const FaceEmbedding cur_emb = cls.embeddings[static_cast<std::size_t>(cur_ref.embedding)];
          for (int r = 0; r <= d; ++r) {
            if ((cur.mask >> r) & 1U) continue;
            const auto& adj = t.adjacent(cur.facet, r);
            if (!adj) continue;
            const std::uint64_t next_mask = image_mask(cur.mask, adj->correspondence);
            std::vector<int> next_corners = mask_elements(next_mask);
            std::vector<int> next_map(next_corners.size());
            for (std::size_t k = 0; k < cur_emb.corners.size(); ++k) {
              const int image = adj->correspondence[cur_emb.corners[k]];
              next_map[static_cast<std::size_t>(position_in(next_corners, image))] =
                  cur_emb.to_representative[k];
            }
            FaceRef& next_ref = level.element_ref[element(adj->facet, next_mask)];
            if (next_ref.face < 0) {
              next_ref = FaceRef{class_index, cls.degree()};
              cls.embeddings.push_back(
                  FaceEmbedding{adj->facet, std::move(next_corners), std::move(next_map)});
              queue.push_back(Pending{adj->facet, next_mask});
            } else if (cls.embeddings[static_cast<std::size_t>(next_ref.embedding)].to_representative !=
                       next_map) {
              cls.valid = false;
            }
          }
        }
      }
    }
  }
  return lattice;
}

FaceRef FaceLattice::locate_mask(int facet, std::uint64_t mask) const {
  const int i = std::popcount(mask) - 1;
  if (i < 0 || i > dim_ || facet < 0 || facet >= facet_count_) {
    throw InvalidArgument("no such sub-simplex");
  }
  const auto& level = levels_[static_cast<std::size_t>(i)];
  const auto it = level.rank_of_mask.find(mask);
  if (it == level.rank_of_mask.end()) throw InvalidArgument("corner labels out of range");
  return level.element_ref[static_cast<std::size_t>(facet) * level.masks.size() +
                           static_cast<std::size_t>(it->second)];
}

FaceRef FaceLattice::locate(int facet, std::span<const int> corners) const {
  std::uint64_t mask = 0;
  for (int c : corners) {
    if (c < 0 || c > dim_) throw InvalidArgument("corner label out of range");
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (mask & bit) throw InvalidArgument("repeated corner label");
    mask |= bit;
  }
  return locate_mask(facet, mask);
}

FVector FaceLattice::f_vector() const {
  std::vector<std::int64_t> counts;
  counts.reserve(faces_.size());
  for (const auto& level : faces_) counts.push_back(static_cast<std::int64_t>(level.size()));
  return FVector(std::move(counts));
}

bool FaceLattice::valid() const {
  for (const auto& level : faces_) {
    for (const auto& cls : level) {
      if (!cls.valid) return false;
    }
  }
  return true;
}

FVector f_vector(const Triangulation& t) { return compute_face_lattice(t).f_vector(); }

std::int64_t euler_characteristic(const Triangulation& t) {
  return f_vector(t).euler_characteristic();
}

std::vector<Slot> boundary_ridges(const Triangulation& t) { return t.free_slots(); }

}  // namespace facenum
