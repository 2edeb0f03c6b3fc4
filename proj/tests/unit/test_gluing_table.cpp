#include <gtest/gtest.h>

#include <string>

#include "facenum/constructions.hpp"
#include "facenum/error.hpp"
#include "facenum/face_lattice.hpp"
#include "facenum/gluing_table.hpp"
#include "facenum/moves.hpp"

using namespace facenum;

namespace {

int error_line(const std::string& text) {
  try {
    parse_gluing_table(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

int body_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n - 2;
}

}  // namespace

TEST(GluingTable, DoubleLoopBallFromFourLines) {
  const Triangulation t = parse_gluing_table(
      "dim 4\n"
      "facets 1\n"
      "0 3 -> 0 (0324)\n"
      "0 2 -> 0 (2134)\n"
      "0 1 -> 0 (0214)\n"
      "0 0 -> 0 (1034)\n");
  EXPECT_EQ(t.gluings().size(), 2u);
  EXPECT_EQ(f_vector(t), FVector({3, 5, 5, 3, 1}));
}

TEST(GluingTable, RedundantReverseLinesAccepted) {
  const Triangulation t = parse_gluing_table(
      "# two triangles\n"
      "dim 2\n"
      "facets 2\n"
      "0 0 -> 1 (12)  # shared edge\n"
      "1 0 -> 0 (12)\n");
  EXPECT_EQ(t.gluings().size(), 1u);
}

TEST(GluingTable, PillowSerialization) {
  const std::string text = serialize(pillow(4));
  EXPECT_EQ(body_lines(text), 5);
  EXPECT_EQ(text.substr(0, 18), "dim 4\nfacets 2\n0 0");
  EXPECT_NE(text.find("0 0 -> 1 (1234)"), std::string::npos);
}

TEST(GluingTable, RoundTripsGeneratedTriangulations) {
  for (const Triangulation& t : {p3(4), p3_nl(2), p2(3), p4(2), ds1(), tripod(), sphere_odd(7, 3),
                                 snapped_ball(6, 3), zero_two(pillow(5), 1, 2), Triangulation(3, 2)}) {
    const std::string text = serialize(t);
    EXPECT_EQ(parse_gluing_table(text), t);
    EXPECT_EQ(serialize(parse_gluing_table(text)), text);
  }
}

// Gluing order does not matter to the canonical text.
TEST(GluingTable, SerializationIndependentOfConstructionOrder) {
  Triangulation a(2, 2);
  a.join(0, 0, 1, Permutation::identity(3));
  a.join(0, 1, 1, Permutation::identity(3));
  Triangulation b(2, 2);
  b.join(1, 1, 0, Permutation::identity(3));
  b.join(1, 0, 0, Permutation::identity(3));
  EXPECT_EQ(serialize(a), serialize(b));
}

TEST(GluingTable, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("facets 1\n"), 1);
  EXPECT_EQ(error_line("dim 2\n"), 2);  // facets header missing at end of input
  EXPECT_EQ(error_line("dim 2\nfacets 1\n0 0 -> 0 (21)\n"), 3);           // ridge onto itself
  EXPECT_EQ(error_line("dim 2\nfacets 2\n0 0 -> 1 (13)\n"), 3);           // label out of range
  EXPECT_EQ(error_line("dim 2\nfacets 2\n0 0 -> 2 (12)\n"), 3);           // facet out of range
  EXPECT_EQ(error_line("dim 2\nfacets 2\n0 3 -> 1 (12)\n"), 3);           // ridge out of range
  EXPECT_EQ(error_line("dim 2\nfacets 2\n0 0 -> 1 (123)\n"), 3);          // label count
  EXPECT_EQ(error_line("dim 2\nfacets 2\n0 0 -> 1 (11)\n"), 3);           // repeated label
  EXPECT_EQ(error_line("dim 2\nfacets 2\n\n0 0 -> 1 (12)\n0 0 -> 1 (02)\n"), 5);  // slot reused
  EXPECT_EQ(error_line("dim 2\nfacets 2\n0 0 1 (12)\n"), 3);              // malformed
  EXPECT_EQ(error_line("dim 3\nfacets 2\n0 0 -> 1 (12)\n"), 3);           // labels for another dimension
}
