#include "facenum/permutation.hpp"

#include <algorithm>

#include "facenum/error.hpp"

namespace facenum {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= size() || seen[static_cast<std::size_t>(image)]) {
      throw InvalidArgument("permutation images are not a bijection of {0.." +
                            std::to_string(size() - 1) + "}");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::vector<int>(images)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  std::swap(images.at(static_cast<std::size_t>(a)), images.at(static_cast<std::size_t>(b)));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)[i])] = i;
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

int Permutation::sign() const { return sorting_sign(images_); }

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) images[static_cast<std::size_t>(i)] = p[q[i]];
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int image : images_) out.push_back(label_symbol(image));
  return out;
}

char label_symbol(int label) {
  if (label >= 0 && label < 10) return static_cast<char>('0' + label);
  if (label >= 10 && label < 36) return static_cast<char>('a' + (label - 10));
  throw InvalidArgument("vertex label " + std::to_string(label) + " has no symbol");
}

int label_value(char symbol) noexcept {
  if (symbol >= '0' && symbol <= '9') return symbol - '0';
  if (symbol >= 'a' && symbol <= 'z') return symbol - 'a' + 10;
  return -1;
}

int sorting_sign(std::span<const int> values) {
  // Parity by inversion count; the spans involved hold at most a few dozen entries.
  int inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace facenum
