#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace facenum {

/// A bijection of {0, ..., n-1}, stored by its images.
///
/// Composition follows function notation: (p * q)(i) == p[q[i]].
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidArgument unless `images` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const noexcept;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Images written as one symbol each (0-9, then a-z).
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// Symbol used for vertex label `label` in text output (0-9, then a-z).
char label_symbol(int label);

/// Inverse of label_symbol; returns -1 for characters that are not labels.
int label_value(char symbol) noexcept;

/// Sign of the bijection that sorts `values` (distinct integers) ascending.
int sorting_sign(std::span<const int> values);

}  // namespace facenum
