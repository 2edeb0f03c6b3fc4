#include "facenum/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "facenum/error.hpp"

namespace facenum {

Triangulation::Triangulation(int dim, int facet_count) : dim_(dim), facet_count_(0) {
  if (dim < 1) throw InvalidArgument("dimension must be at least 1");
  if (facet_count < 0) throw InvalidArgument("facet count must be non-negative");
  add_facets(facet_count);
}

int Triangulation::add_facets(int count) {
  if (count < 0) throw InvalidArgument("cannot add a negative number of facets");
  const int first = facet_count_;
  facet_count_ += count;
  slots_.resize(static_cast<std::size_t>(facet_count_) * static_cast<std::size_t>(dim_ + 1));
  return first;
}

int Triangulation::insert(const Triangulation& other) {
  if (other.dim_ != dim_) throw InvalidArgument("inserting a triangulation of another dimension");
  const int offset = add_facets(other.facet_count_);
  for (int f = 0; f < other.facet_count_; ++f) {
    for (int r = 0; r <= dim_; ++r) {
      if (const auto& adj = other.adjacent(f, r)) {
        slots_[slot_index(f + offset, r)] = Adjacency{adj->facet + offset, adj->correspondence};
      }
    }
  }
  return offset;
}

std::size_t Triangulation::slot_index(int facet, int ridge) const {
  return static_cast<std::size_t>(facet) * static_cast<std::size_t>(dim_ + 1) +
         static_cast<std::size_t>(ridge);
}

void Triangulation::check_slot(int facet, int ridge) const {
  if (facet < 0 || facet >= facet_count_) {
    throw InvalidArgument("facet index " + std::to_string(facet) + " out of range");
  }
  if (ridge < 0 || ridge > dim_) {
    throw InvalidArgument("ridge index " + std::to_string(ridge) + " out of range");
  }
}

void Triangulation::join(int facet, int ridge, int other_facet, const Permutation& correspondence) {
  check_slot(facet, ridge);
  if (correspondence.size() != dim_ + 1) {
    throw InvalidArgument("gluing permutation must act on " + std::to_string(dim_ + 1) + " labels");
  }
  const int other_ridge = correspondence[ridge];
  check_slot(other_facet, other_ridge);
  if (facet == other_facet && ridge == other_ridge) {
    throw InvalidArgument("a ridge cannot be glued to itself");
  }
  if (is_glued(facet, ridge)) {
    throw InvalidArgument("slot " + std::to_string(facet) + ":" + std::to_string(ridge) +
                          " is already glued");
  }
  if (is_glued(other_facet, other_ridge)) {
    throw InvalidArgument("slot " + std::to_string(other_facet) + ":" +
                          std::to_string(other_ridge) + " is already glued");
  }
  slots_[slot_index(facet, ridge)] = Adjacency{other_facet, correspondence};
  slots_[slot_index(other_facet, other_ridge)] = Adjacency{facet, correspondence.inverse()};
}

void Triangulation::join_images(int facet, int ridge, int other_facet,
                                std::span<const int> ridge_images) {
  check_slot(facet, ridge);
  if (static_cast<int>(ridge_images.size()) != dim_) {
    throw InvalidArgument("a ridge has " + std::to_string(dim_) + " corners, got " +
                          std::to_string(ridge_images.size()) + " images");
  }
  std::vector<bool> used(static_cast<std::size_t>(dim_ + 1), false);
  for (int label : ridge_images) {
    if (label < 0 || label > dim_ || used[static_cast<std::size_t>(label)]) {
      throw InvalidArgument("malformed image tuple for a ridge gluing");
    }
    used[static_cast<std::size_t>(label)] = true;
  }
  std::vector<int> images(static_cast<std::size_t>(dim_ + 1));
  std::size_t next = 0;
  for (int v = 0; v <= dim_; ++v) {
    if (v != ridge) images[static_cast<std::size_t>(v)] = ridge_images[next++];
  }
  images[static_cast<std::size_t>(ridge)] =
      static_cast<int>(std::find(used.begin(), used.end(), false) - used.begin());
  join(facet, ridge, other_facet, Permutation(std::move(images)));
}

void Triangulation::unjoin(int facet, int ridge) {
  check_slot(facet, ridge);
  auto& slot = slots_[slot_index(facet, ridge)];
  if (!slot) throw InvalidArgument("unjoin of an unglued slot");
  const int other_facet = slot->facet;
  const int other_ridge = slot->correspondence[ridge];
  slots_[slot_index(other_facet, other_ridge)].reset();
  slot.reset();
}

bool Triangulation::is_glued(int facet, int ridge) const {
  check_slot(facet, ridge);
  return slots_[slot_index(facet, ridge)].has_value();
}

const std::optional<Adjacency>& Triangulation::adjacent(int facet, int ridge) const {
  check_slot(facet, ridge);
  return slots_[slot_index(facet, ridge)];
}

std::vector<Gluing> Triangulation::gluings() const {
  std::vector<Gluing> out;
  for (int f = 0; f < facet_count_; ++f) {
    for (int r = 0; r <= dim_; ++r) {
      const auto& adj = slots_[slot_index(f, r)];
      if (!adj) continue;
      const Slot source{f, r};
      const Slot target{adj->facet, adj->correspondence[r]};
      if (source < target) out.push_back(Gluing{source, target, adj->correspondence});
    }
  }
  return out;
}

std::vector<Slot> Triangulation::free_slots() const {
  std::vector<Slot> out;
  for (int f = 0; f < facet_count_; ++f) {
    for (int r = 0; r <= dim_; ++r) {
      if (!slots_[slot_index(f, r)]) out.push_back(Slot{f, r});
    }
  }
  return out;
}

bool Triangulation::is_closed() const {
  return std::all_of(slots_.begin(), slots_.end(), [](const auto& s) { return s.has_value(); });
}

int Triangulation::component_count() const {
  std::vector<int> seen(static_cast<std::size_t>(facet_count_), 0);
  int components = 0;
  std::vector<int> stack;
  for (int start = 0; start < facet_count_; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++components;
    seen[static_cast<std::size_t>(start)] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (int r = 0; r <= dim_; ++r) {
        const auto& adj = slots_[slot_index(f, r)];
        if (adj && !seen[static_cast<std::size_t>(adj->facet)]) {
          seen[static_cast<std::size_t>(adj->facet)] = 1;
          stack.push_back(adj->facet);
        }
      }
    }
  }
  return components;
}

bool Triangulation::is_connected() const { return component_count() <= 1; }

void Triangulation::remove_facets(std::span<const int> facets) {
  std::vector<bool> doomed(static_cast<std::size_t>(facet_count_), false);
  for (int f : facets) {
    check_slot(f, 0);
    doomed[static_cast<std::size_t>(f)] = true;
  }
  std::vector<int> new_index(static_cast<std::size_t>(facet_count_), -1);
  int kept = 0;
  for (int f = 0; f < facet_count_; ++f) {
    if (!doomed[static_cast<std::size_t>(f)]) new_index[static_cast<std::size_t>(f)] = kept++;
  }
  std::vector<std::optional<Adjacency>> slots(static_cast<std::size_t>(kept) *
                                              static_cast<std::size_t>(dim_ + 1));
  for (int f = 0; f < facet_count_; ++f) {
    if (doomed[static_cast<std::size_t>(f)]) continue;
    for (int r = 0; r <= dim_; ++r) {
      const auto& adj = slots_[slot_index(f, r)];
      if (!adj || doomed[static_cast<std::size_t>(adj->facet)]) continue;
      slots[static_cast<std::size_t>(new_index[static_cast<std::size_t>(f)]) *
                static_cast<std::size_t>(dim_ + 1) +
            static_cast<std::size_t>(r)] =
          Adjacency{new_index[static_cast<std::size_t>(adj->facet)], adj->correspondence};
    }
  }
  facet_count_ = kept;
  slots_ = std::move(slots);
}

void Triangulation::relabel_facet(int facet, const Permutation& relabel) {
  check_slot(facet, 0);
  if (relabel.size() != dim_ + 1) throw InvalidArgument("relabelling has the wrong size");
  const Permutation back = relabel.inverse();
  std::vector<std::optional<Adjacency>> fresh(static_cast<std::size_t>(dim_ + 1));
  // Old ridge r becomes ridge relabel[r]; its map is precomposed with the inverse relabelling.
  for (int r = 0; r <= dim_; ++r) {
    const auto& adj = slots_[slot_index(facet, r)];
    if (!adj) continue;
    Permutation map = adj->correspondence * back;
    int partner = adj->facet;
    if (partner == facet) map = relabel * map;
    fresh[static_cast<std::size_t>(relabel[r])] = Adjacency{partner, std::move(map)};
  }
  // Partners elsewhere see the facet's vertices under the new labels.
  for (int f = 0; f < facet_count_; ++f) {
    if (f == facet) continue;
    for (int r = 0; r <= dim_; ++r) {
      auto& adj = slots_[slot_index(f, r)];
      if (adj && adj->facet == facet) adj->correspondence = relabel * adj->correspondence;
    }
  }
  for (int r = 0; r <= dim_; ++r) slots_[slot_index(facet, r)] = std::move(fresh[static_cast<std::size_t>(r)]);
}

}  // namespace facenum
