#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "facenum/error.hpp"
#include "facenum/permutation.hpp"

using facenum::Permutation;

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), facenum::InvalidArgument);
  EXPECT_THROW(Permutation({0, 3, 1}), facenum::InvalidArgument);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, CompositionIsFunctionNotation) {
  const Permutation p{1, 2, 0};
  const Permutation q{0, 2, 1};
  const Permutation pq = p * q;
  for (int i = 0; i < 3; ++i) EXPECT_EQ(pq[i], p[q[i]]);
}

TEST(Permutation, InverseComposesToIdentity) {
  std::vector<int> images(6);
  std::iota(images.begin(), images.end(), 0);
  do {
    const Permutation p(images);
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_TRUE((p.inverse() * p).is_identity());
  } while (std::next_permutation(images.begin(), images.end()));
}

// Sign from the inversion count, computed independently.
TEST(Permutation, SignMatchesInversionParity) {
  std::vector<int> images(5);
  std::iota(images.begin(), images.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) inversions += images[i] > images[j] ? 1 : 0;
    }
    EXPECT_EQ(Permutation(images).sign(), inversions % 2 == 0 ? 1 : -1);
    EXPECT_EQ(facenum::sorting_sign(images), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST(Permutation, SignIsMultiplicative) {
  const Permutation p{3, 1, 0, 2};
  const Permutation q{1, 0, 3, 2};
  EXPECT_EQ((p * q).sign(), p.sign() * q.sign());
}

TEST(Permutation, TranspositionAndIdentity) {
  const Permutation t = Permutation::transposition(4, 1, 3);
  EXPECT_EQ(t.to_string(), "0321");
  EXPECT_EQ(t.sign(), -1);
  EXPECT_EQ(Permutation::identity(4).to_string(), "0123");
}

TEST(Permutation, LabelSymbolsRoundTrip) {
  for (int v = 0; v < 36; ++v) EXPECT_EQ(facenum::label_value(facenum::label_symbol(v)), v);
  EXPECT_EQ(facenum::label_symbol(10), 'a');
  EXPECT_EQ(facenum::label_value('-'), -1);
}
